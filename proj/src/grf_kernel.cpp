#include "edm/grf_kernel.hpp"

#include "edm/edm_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace edm {

GaussianKernel GaussianKernel::manhattan(std::vector<double> rho, double mu) {
    for (double r : rho)
        if (!(r > 0.0 && r < 1.0))
            throw InvalidParams("GaussianKernel: manhattan rho must be in (0,1)");
    GaussianKernel k;
    k.kind_ = Kind::Manhattan;
    k.dimension_ = static_cast<int>(rho.size());
    k.mu_ = mu;
    // canonical C(0) = prod_k sum_{z in Z} rho_k^|z| = prod_k (1+rho_k)/(1-rho_k)
    k.c0_ = 1.0;
    for (double r : rho) k.c0_ *= (1.0 + r) / (1.0 - r);
    k.rho_ = std::move(rho);
    return k;
}

GaussianKernel GaussianKernel::rigid(std::vector<double> rho, double mu) {
    for (double r : rho)
        if (!(r >= 0.0)) throw InvalidParams("GaussianKernel: rigid rho must be >= 0");
    GaussianKernel k;
    k.kind_ = Kind::Rigid;
    k.dimension_ = static_cast<int>(rho.size());
    k.mu_ = mu;
    k.c0_ = 0.0;
    for (double r : rho) k.c0_ += 2.0 * r;
    k.rho_ = std::move(rho);
    return k;
}

GaussianKernel GaussianKernel::table(int dimension, double mu, double c0,
                                     std::map<Site, double> support) {
    GaussianKernel k;
    k.kind_ = Kind::Table;
    k.dimension_ = dimension;
    k.mu_ = mu;
    k.c0_ = c0;
    k.support_ = std::move(support);
    return k;
}

double GaussianKernel::covariance(const Site& z) const {
    if (static_cast<int>(z.size()) != dimension_)
        throw DimensionMismatch("GaussianKernel: lag dimension mismatch");
    if (std::all_of(z.begin(), z.end(), [](int c) { return c == 0; })) return c0_;
    switch (kind_) {
        case Kind::Manhattan: {
            double c = 1.0;
            for (int k = 0; k < dimension_; ++k)
                c *= std::pow(rho_[k], std::abs(z[k]));
            return c;
        }
        case Kind::Rigid: {
            int axis = -1;
            for (int k = 0; k < dimension_; ++k) {
                if (z[k] == 0) continue;
                if (std::abs(z[k]) != 1 || axis >= 0) return 0.0;
                axis = k;
            }
            return rho_[axis];
        }
        case Kind::Table: {
            auto it = support_.find(z);
            return it == support_.end() ? 0.0 : it->second;
        }
    }
    return 0.0;
}

namespace {

// Builds the kernel without the Table admissibility gate; used by the
// diagnostic check_admissibility as well.
GaussianKernel kernel_from_potential_lenient(const Potential& potential) {
    const double beta = potential.beta();
    const double mu = boltzmann(beta, potential.monomer_energy());
    if (const auto* m = std::get_if<ManhattanDimer>(&potential.dimer())) {
        std::vector<double> rho;
        for (double a : m->alpha) rho.push_back(std::exp(-a * beta));
        return GaussianKernel::manhattan(std::move(rho), mu);
    }
    if (const auto* r = std::get_if<RigidDimer>(&potential.dimer())) {
        std::vector<double> rho;
        for (double a : r->alpha) rho.push_back(std::exp(-a * beta));
        return GaussianKernel::rigid(std::move(rho), mu);
    }
    const auto& t = std::get<TableDimer>(potential.dimer());
    std::map<Site, double> support;
    const Site origin(potential.dimension(), 0);
    double tail = 0.0;
    for (const auto& [z, w] : t.entries) {
        if (z == origin) continue;
        double c = boltzmann(beta, w);
        if (c != 0.0) support[z] = c;
        tail += c;
    }
    // C(0): the tabulated origin entry when present, otherwise the smallest
    // value satisfying the diagonal-dominance condition.
    double c0 = potential.has_origin_entry()
                    ? boltzmann(beta, t.entries.at(origin))
                    : tail;
    return GaussianKernel::table(potential.dimension(), mu, c0, std::move(support));
}

}  // namespace

GaussianKernel kernel_from_potential(const Potential& potential) {
    GaussianKernel kernel = kernel_from_potential_lenient(potential);
    if (kernel.kind() == GaussianKernel::Kind::Table) {
        double tail = 0.0;
        for (const auto& [z, c] : kernel.support()) tail += c;
        if (kernel.c0() < tail)
            throw InadmissiblePotential(
                "kernel_from_potential: C(0) < sum of off-origin covariances");
    }
    return kernel;
}

AdmissibilityReport check_admissibility(const Potential& potential, int radius) {
    const GaussianKernel kernel = kernel_from_potential_lenient(potential);
    double rhs = 0.0;
    if (kernel.kind() == GaussianKernel::Kind::Table) {
        for (const auto& [z, c] : kernel.support()) rhs += c;
    } else {
        // sum over the box |z|_inf <= radius, excluding the origin
        const int n = kernel.dimension();
        Site z(n, -radius);
        while (true) {
            if (!std::all_of(z.begin(), z.end(), [](int c) { return c == 0; }))
                rhs += kernel.covariance(z);
            int k = 0;
            while (k < n && ++z[k] > radius) z[k++] = -radius;
            if (k == n) break;
        }
    }
    const double lhs = kernel.c0();
    return {lhs >= rhs, lhs, rhs};
}

namespace {

// Recursion over the bitmask of unassigned sites: the lowest-indexed site
// either takes the mean or pairs with a remaining partner.  Memoized; the
// value depends only on the remaining set.
class MomentSolver {
  public:
    MomentSolver(const GaussianKernel& kernel, const Region& region)
        : n_(region.size()), mu_(kernel.mean()), cov_(n_ * n_, 0.0) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                double c = kernel.covariance(site_sub(region.site(i), region.site(j)));
                cov_[i * n_ + j] = cov_[j * n_ + i] = c;
            }
        if (n_ <= 20) dense_.assign(std::size_t(1) << n_, kUnset);
    }

    double solve() { return eval((std::uint32_t(1) << n_) - 1); }

  private:
    static constexpr double kUnset = -1.0;

    double eval(std::uint32_t mask) {
        if (mask == 0) return 1.0;
        if (!dense_.empty()) {
            double cached = dense_[mask];
            if (cached != kUnset) return cached;
        } else {
            auto it = memo_.find(mask);
            if (it != memo_.end()) return it->second;
        }
        const int i = __builtin_ctz(mask);
        const std::uint32_t rest = mask & (mask - 1);
        double value = mu_ * eval(rest);
        for (std::uint32_t m = rest; m != 0; m &= m - 1) {
            const int j = __builtin_ctz(m);
            double c = cov_[std::size_t(i) * n_ + j];
            if (c != 0.0) value += c * eval(rest & ~(std::uint32_t(1) << j));
        }
        if (!dense_.empty())
            dense_[mask] = value;
        else
            memo_[mask] = value;
        return value;
    }

    std::size_t n_;
    double mu_;
    std::vector<double> cov_;
    std::vector<double> dense_;
    std::unordered_map<std::uint32_t, double> memo_;
};

}  // namespace

double isserlis_product_moment(const GaussianKernel& kernel, const Region& region,
                               std::size_t cap) {
    if (kernel.dimension() != region.dimension())
        throw DimensionMismatch("isserlis_product_moment: dimension mismatch");
    if (region.size() > cap || region.size() > 31)
        throw RegionTooLarge("isserlis_product_moment: region exceeds cap");
    return MomentSolver(kernel, region).solve();
}

double moment_equivalence_residual(const Region& region, const Potential& potential) {
    const double z = exact_partition_function(region, potential);
    const double m = isserlis_product_moment(kernel_from_potential(potential), region);
    return std::abs(z - m) / std::max(z, 1e-300);
}

double spectral_density(const GaussianKernel& kernel, const std::vector<double>& point,
                        int radius) {
    if (static_cast<int>(point.size()) != kernel.dimension())
        throw DimensionMismatch("spectral_density: point dimension mismatch");
    KahanSum s;
    // origin term: the field's actual variance, which for the product-geometric
    // kernel is 1 (the closed form at lag 0), not the admissibility extension
    s.add(kernel.kind() == GaussianKernel::Kind::Manhattan ? 1.0 : kernel.c0());
    if (kernel.kind() == GaussianKernel::Kind::Table) {
        for (const auto& [z, c] : kernel.support()) {
            double phase = 0.0;
            for (std::size_t k = 0; k < z.size(); ++k) phase += point[k] * z[k];
            s.add(c * std::cos(phase));
        }
    } else {
        const int n = kernel.dimension();
        Site z(n, -radius);
        while (true) {
            if (!std::all_of(z.begin(), z.end(), [](int c) { return c == 0; })) {
                double phase = 0.0;
                for (int k = 0; k < n; ++k) phase += point[k] * z[k];
                s.add(kernel.covariance(z) * std::cos(phase));
            }
            int k = 0;
            while (k < n && ++z[k] > radius) z[k++] = -radius;
            if (k == n) break;
        }
    }
    return s.value();
}

double finite_size_mle(const GaussianKernel& kernel, const Region& region) {
    double m = isserlis_product_moment(kernel, region);
    if (!(m > 0.0)) throw NonpositiveMoment("finite_size_mle: product moment not positive");
    return std::log(m) / static_cast<double>(region.size());
}

}  // namespace edm
