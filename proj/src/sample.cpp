#include "evt/sample.hpp"

#include <algorithm>
#include <cmath>

#include "evt/errors.hpp"

namespace evt {

OrderedSample::OrderedSample(std::vector<double> values, std::string provenance)
    : values_(std::move(values)), provenance_(std::move(provenance)) {
    std::sort(values_.begin(), values_.end());
    validate();
}

OrderedSample OrderedSample::from_sorted(std::vector<double> sorted, std::string provenance) {
    if (!std::is_sorted(sorted.begin(), sorted.end())) {
        throw domain_error("OrderedSample::from_sorted: values not ascending");
    }
    OrderedSample s;
    s.values_ = std::move(sorted);
    s.provenance_ = std::move(provenance);
    s.validate();
    return s;
}

void OrderedSample::validate() const {
    if (values_.size() < 2) {
        throw domain_error("OrderedSample: need at least 2 observations");
    }
    for (double v : values_) {
        if (std::isnan(v)) throw domain_error("OrderedSample: NaN in data");
    }
}

double OrderedSample::order_stat(std::size_t i) const {
    if (i < 1 || i > values_.size()) {
        throw domain_error("OrderedSample::order_stat: index out of range");
    }
    return values_[i - 1];
}

}  // namespace evt
