#pragma once

#include <vector>

#include "edm/common.hpp"

namespace edm {

// Probabilists' Hermite polynomial H_k via the three-term recurrence.
double hermite_polynomial(int k, double x);

// E H_k(X) for X ~ N(m, s^2), s^2 < 1: equals u^k H_k(m/u), u = sqrt(1-s^2).
double gauss_hermite_expectation(int k, double m, double s);

// Tridiagonal transfer matrix in the orthonormal Hermite basis.
// Column k holds (sqrt(k) rho^k, mu rho^k, sqrt(k+1) rho^k) at rows k-1,k,k+1.
struct TransferMatrix {
    int size;                  // K+1
    double mu, rho;
    std::vector<double> diag;  // [k][k]   = mu rho^k
    std::vector<double> sub;   // [k+1][k] = sqrt(k+1) rho^k
    std::vector<double> sup;   // [k-1][k] = sqrt(k) rho^k
};

TransferMatrix transfer_matrix(double mu, double rho, int truncation);

std::vector<double> apply(const TransferMatrix& g, const std::vector<double>& v);
std::vector<double> apply_transpose(const TransferMatrix& g, const std::vector<double>& v);

double largest_singular_value(const TransferMatrix& g, double tol = 1e-12,
                              int max_iter = 100000);

// Exact coefficient recursion: q'_k = sqrt(k) rho^{k-1} q_{k-1}
//                                    + mu rho^k q_k + sqrt(k+1) rho^{k+1} q_{k+1}.
// The support grows by exactly one index per application.
std::vector<double> advance_q(const std::vector<double>& q, double mu, double rho);

// M_N = q_{N,0} after N applications starting from (1, 0, ...).
double product_moment_1d(double mu, double rho, int n);

// ln M_N computed with per-step renormalization (safe for large N).
double log_product_moment_1d(double mu, double rho, int n);

// The ratio q_{N+1,0} / q_{N,0}, renormalized internally.
double moment_ratio_1d(double mu, double rho, int n);

struct EigenResult {
    double lambda;
    std::vector<double> eigvec;  // normalized so eigvec[0] == 1
    int iters;
    bool converged;
};

// Power iteration on the truncated transfer matrix, rescaled each step by
// the 0th coefficient so the scaling sequence is the free-term ratio.
EigenResult leading_eigenvalue(double mu, double rho, int truncation,
                               double tol = 1e-12, int max_iter = 100000);

struct SolverParams {
    int truncation = 64;
    double tol = 1e-12;
    int max_iter = 100000;
    bool adaptive = true;  // double K until the eigenvalue stabilizes
};

double mle_1d(double mu, double rho, const SolverParams& params = {});

struct UpperBound {
    double bound;
    double mutual_information_term;
};

// Closed-form bound: 1/2 ln(mu^2 + (1+rho^2)/(1-rho^2)) - 1/2 ln(1-rho^2);
// the last term is the mutual information of consecutive chain values.
UpperBound mle_upper_bound(double mu, double rho);

}  // namespace edm
