#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <utility>
#include <vector>

#include "edm/potential.hpp"
#include "edm/region.hpp"

namespace edm {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationCap = 16;

// A partition of the region into dimers (site-index pairs) and monomers.
struct Configuration {
    std::vector<std::pair<std::size_t, std::size_t>> dimers;
    std::vector<std::size_t> monomers;
};

// Number of partitions of an n-set into pairs and singletons (telephone
// numbers): a(N) = a(N-1) + (N-1) a(N-2), a(0) = a(1) = 1.
BigInt configuration_count(std::size_t n_sites);

// Streams every configuration of the region exactly once, in the canonical
// order induced by "pair the first unmatched site or leave it a monomer".
void enumerate_configurations(const Region& region,
                              const std::function<void(const Configuration&)>& visit,
                              std::size_t cap = kDefaultEnumerationCap);

double config_energy(const Configuration& config, const Region& region,
                     const Potential& potential);

double exact_partition_function(const Region& region, const Potential& potential,
                                std::size_t cap = kDefaultEnumerationCap);

double free_energy(const Region& region, const Potential& potential,
                   std::size_t cap = kDefaultEnumerationCap);

}  // namespace edm
