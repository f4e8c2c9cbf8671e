#include "edm/region.hpp"

#include <algorithm>
#include <set>

namespace edm {

Region::Region(int dimension, std::vector<Site> sites, bool keep_order)
    : dimension_(dimension), sites_(std::move(sites)) {
    if (dimension_ < 1) throw InvalidParams("Region: dimension must be positive");
    if (sites_.empty()) throw InvalidParams("Region: must contain at least one site");
    for (const auto& s : sites_)
        if (static_cast<int>(s.size()) != dimension_)
            throw DimensionMismatch("Region: site dimension mismatch");
    if (!keep_order) std::sort(sites_.begin(), sites_.end());
    std::set<Site> uniq(sites_.begin(), sites_.end());
    if (uniq.size() != sites_.size())
        throw InvalidParams("Region: duplicate sites");
}

Region Region::translated(const Site& shift) const {
    std::vector<Site> out = sites_;
    for (auto& s : out)
        for (int k = 0; k < dimension_; ++k) s[k] += shift[k];
    return Region(dimension_, std::move(out));
}

Region Region::negated() const {
    std::vector<Site> out = sites_;
    for (auto& s : out)
        for (auto& c : s) c = -c;
    return Region(dimension_, std::move(out));
}

Site site_sub(const Site& a, const Site& b) {
    Site z(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) z[k] = a[k] - b[k];
    return z;
}

}  // namespace edm
