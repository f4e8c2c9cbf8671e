#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "edm/region.hpp"

namespace edm {

// Multivariate polynomial with double coefficients over variables indexed
// 0..n_vars-1; exponent vectors are the term keys, zero coefficients are
// dropped on construction.
class SparsePolynomial {
  public:
    using Exponents = std::vector<std::uint8_t>;

    explicit SparsePolynomial(int n_vars) : n_vars_(n_vars) {}

    int n_vars() const { return n_vars_; }
    std::size_t n_terms() const { return terms_.size(); }
    const std::map<Exponents, double>& terms() const { return terms_; }

    void add_term(const Exponents& exps, double coef);
    int degree() const;

    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial scaled(double factor) const;

    double evaluate(const std::vector<double>& point) const;

    static SparsePolynomial constant(int n_vars, double value);
    static SparsePolynomial variable(int n_vars, int index, double coef = 1.0);

  private:
    int n_vars_;
    std::map<Exponents, double> terms_;
};

// Zigzag boundary chain of level N with its alternating-AR covariance
// structure: 2N+1 sites from (0,-N) to (-N,0), consecutive covariances
// alternating rho_1, rho_2.
struct ZigzagChain {
    int level;
    std::vector<Site> sites;
    std::vector<std::vector<double>> covariance;  // (2N+1)^2
};

std::vector<Site> level_set(int ell);
ZigzagChain gamma_set(int level, double rho1, double rho2);
Region delta_region(int level);

SparsePolynomial r0_polynomial(double mu);

inline constexpr std::size_t kDefaultTermCap = 2'000'000;

// One step of the conditional-product-moment recursion: substitutes the
// previous chain's entries in terms of the current chain plus conditionally
// independent Gaussian noises, eliminates the noises by their even moments,
// and multiplies in the newly exposed boundary sites.
SparsePolynomial advance_R(const SparsePolynomial& r_prev, int level, double rho1,
                           double rho2, double mu,
                           std::size_t term_cap = kDefaultTermCap);

// E R_N(Sigma_N) under the joint zero-mean Gaussian law of the chain,
// monomial by monomial via pair-partition sums.
double expected_R(const SparsePolynomial& r, int level, double rho1, double rho2);

}  // namespace edm
