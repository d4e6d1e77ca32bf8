#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace evt {

// Validated ascending-sorted univariate sample. Nonpositive values are
// allowed here; log-based statistics check positivity at the point of use so
// the same container can hold shifted (PORT) data.
class OrderedSample {
  public:
    explicit OrderedSample(std::vector<double> values, std::string provenance = {});

    // For data already sorted ascending (checked).
    static OrderedSample from_sorted(std::vector<double> sorted, std::string provenance = {});

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }

    // 1-based order statistic X_{i:n}, i in [1, n].
    double order_stat(std::size_t i) const;

    const std::string& provenance() const noexcept { return provenance_; }

  private:
    OrderedSample() = default;
    void validate() const;

    std::vector<double> values_;
    std::string provenance_;
};

// Number k of top order statistics entering a tail statistic; valid when
// 1 <= k < n for the sample it is applied to.
struct TailLevel {
    std::size_t k;
};

}  // namespace evt
