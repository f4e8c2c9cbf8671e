#pragma once

#include <map>
#include <optional>
#include <vector>

#include "edm/potential.hpp"
#include "edm/region.hpp"

namespace edm {

// Auxiliary Gaussian kernel of an EDM potential: mean mu = e^{-beta V} and
// covariance C(z) = e^{-beta W(z)}.  The value C(0) corresponds to the
// extension of W to the origin and never enters product moments.
class GaussianKernel {
  public:
    enum class Kind { Manhattan, Rigid, Table };

    static GaussianKernel manhattan(std::vector<double> rho, double mu);
    static GaussianKernel rigid(std::vector<double> rho, double mu);
    static GaussianKernel table(int dimension, double mu, double c0,
                                std::map<Site, double> support);

    int dimension() const { return dimension_; }
    Kind kind() const { return kind_; }
    double mean() const { return mu_; }
    double c0() const { return c0_; }
    const std::vector<double>& rho() const { return rho_; }
    const std::map<Site, double>& support() const { return support_; }

    // Covariance C(z); C(0) returns the stored origin value.
    double covariance(const Site& z) const;

  private:
    GaussianKernel() = default;
    Kind kind_ = Kind::Table;
    int dimension_ = 0;
    double mu_ = 0.0;
    double c0_ = 0.0;
    std::vector<double> rho_;          // closed-form parameters (empty for Table)
    std::map<Site, double> support_;   // tabulated covariances (Table only)
};

struct AdmissibilityReport {
    bool ok;
    double lhs;  // e^{-beta W(0)}
    double rhs;  // sum of e^{-beta W(z)} over nonzero z within the radius
};

GaussianKernel kernel_from_potential(const Potential& potential);

AdmissibilityReport check_admissibility(const Potential& potential, int radius = 32);

// Exact product moment via the pair-partition (Isserlis/Wick) expansion:
// each site either contributes the mean or is paired with a later site.
double isserlis_product_moment(const GaussianKernel& kernel, const Region& region,
                               std::size_t cap = 24);

double moment_equivalence_residual(const Region& region, const Potential& potential);

double spectral_density(const GaussianKernel& kernel, const std::vector<double>& point,
                        int radius = 32);

double finite_size_mle(const GaussianKernel& kernel, const Region& region);

}  // namespace edm
