#pragma once

#include <cstdint>
#include <vector>

#include "edm/common.hpp"

namespace edm {

using Site = std::vector<int>;

// A finite set of n-dimensional lattice sites with a canonical ordering.
// The default ordering is lexicographic; constructions with a meaningful
// path order (the zigzag chains) pass ordered=true to keep it as given.
class Region {
  public:
    Region(int dimension, std::vector<Site> sites, bool keep_order = false);

    int dimension() const { return dimension_; }
    std::size_t size() const { return sites_.size(); }
    const std::vector<Site>& sites() const { return sites_; }
    const Site& site(std::size_t i) const { return sites_[i]; }

    Region translated(const Site& shift) const;
    Region negated() const;

  private:
    int dimension_;
    std::vector<Site> sites_;
};

Site site_sub(const Site& a, const Site& b);

}  // namespace edm
