#include "edm/edm_core.hpp"

#include <algorithm>
#include <cmath>

namespace edm {

BigInt configuration_count(std::size_t n_sites) {
    BigInt prev = 1, cur = 1;  // a(0), a(1)
    if (n_sites == 0) return prev;
    for (std::size_t n = 2; n <= n_sites; ++n) {
        BigInt next = cur + BigInt(n - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

void enumerate_rec(std::size_t n, std::vector<bool>& used, Configuration& cfg,
                   const std::function<void(const Configuration&)>& visit) {
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
        visit(cfg);
        return;
    }
    used[first] = true;
    // monomer branch first, then partners in ascending order
    cfg.monomers.push_back(first);
    enumerate_rec(n, used, cfg, visit);
    cfg.monomers.pop_back();
    for (std::size_t j = first + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        cfg.dimers.emplace_back(first, j);
        enumerate_rec(n, used, cfg, visit);
        cfg.dimers.pop_back();
        used[j] = false;
    }
    used[first] = false;
}

}  // namespace

void enumerate_configurations(const Region& region,
                              const std::function<void(const Configuration&)>& visit,
                              std::size_t cap) {
    const std::size_t n = region.size();
    if (n > cap) throw RegionTooLarge("enumerate_configurations: region exceeds cap");
    std::vector<bool> used(n, false);
    Configuration cfg;
    enumerate_rec(n, used, cfg, visit);
}

double config_energy(const Configuration& config, const Region& region,
                     const Potential& potential) {
    if (potential.dimension() != region.dimension())
        throw DimensionMismatch("config_energy: potential dimension mismatch");
    double total = 0.0;
    if (!config.monomers.empty()) {
        double v = potential.monomer_energy();
        if (std::isinf(v)) return kInf;
        total += static_cast<double>(config.monomers.size()) * v;
    }
    for (const auto& [i, j] : config.dimers) {
        double w = potential.dimer_energy(site_sub(region.site(i), region.site(j)));
        if (std::isinf(w)) return kInf;
        total += w;
    }
    return total;
}

double exact_partition_function(const Region& region, const Potential& potential,
                                std::size_t cap) {
    KahanSum z;
    const double beta = potential.beta();
    enumerate_configurations(
        region,
        [&](const Configuration& cfg) {
            z.add(boltzmann(beta, config_energy(cfg, region, potential)));
        },
        cap);
    return z.value();
}

double free_energy(const Region& region, const Potential& potential, std::size_t cap) {
    double z = exact_partition_function(region, potential, cap);
    if (z <= 0.0) throw InfeasibleSystem("free_energy: all configurations forbidden");
    return -std::log(z) / potential.beta();
}

}  // namespace edm
