#include "edm/spectral1d.hpp"

#include <cmath>

namespace edm {

double hermite_polynomial(int k, double x) {
    if (k < 0) throw InvalidParams("hermite_polynomial: negative order");
    double prev = 1.0;  // H_0
    if (k == 0) return prev;
    double cur = x;  // H_1
    for (int j = 1; j < k; ++j) {
        double next = x * cur - j * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double gauss_hermite_expectation(int k, double m, double s) {
    if (s * s >= 1.0) throw InvalidVariance("gauss_hermite_expectation: need s^2 < 1");
    double u = std::sqrt(1.0 - s * s);
    return std::pow(u, k) * hermite_polynomial(k, m / u);
}

TransferMatrix transfer_matrix(double mu, double rho, int truncation) {
    if (truncation < 1) throw InvalidParams("transfer_matrix: K must be >= 1");
    if (!(mu >= 0.0) || !(rho > 0.0 && rho < 1.0))
        throw InvalidParams("transfer_matrix: need mu >= 0 and rho in (0,1)");
    TransferMatrix g;
    g.size = truncation + 1;
    g.mu = mu;
    g.rho = rho;
    g.diag.resize(g.size);
    g.sub.resize(g.size);   // sub[k] = G[k+1][k]
    g.sup.resize(g.size);   // sup[k] = G[k-1][k]
    double rk = 1.0;
    for (int k = 0; k < g.size; ++k) {
        g.diag[k] = mu * rk;
        g.sub[k] = std::sqrt(static_cast<double>(k + 1)) * rk;
        g.sup[k] = std::sqrt(static_cast<double>(k)) * rk;
        rk *= rho;
    }
    return g;
}

std::vector<double> apply(const TransferMatrix& g, const std::vector<double>& v) {
    const int n = g.size;
    std::vector<double> out(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double vk = v[k];
        if (vk == 0.0) continue;
        out[k] += g.diag[k] * vk;
        if (k + 1 < n) out[k + 1] += g.sub[k] * vk;
        if (k > 0) out[k - 1] += g.sup[k] * vk;
    }
    return out;
}

std::vector<double> apply_transpose(const TransferMatrix& g, const std::vector<double>& v) {
    const int n = g.size;
    std::vector<double> out(n, 0.0);
    for (int k = 0; k < n; ++k) {
        out[k] = g.diag[k] * v[k];
        if (k + 1 < n) out[k] += g.sub[k] * v[k + 1];
        if (k > 0) out[k] += g.sup[k] * v[k - 1];
    }
    return out;
}

double largest_singular_value(const TransferMatrix& g, double tol, int max_iter) {
    std::vector<double> v(g.size, 1.0);
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        std::vector<double> w = apply_transpose(g, apply(g, v));
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        double next = std::sqrt(norm);  // eigenvalue of G^T G is sigma^2
        for (auto& x : w) x /= norm;
        v.swap(w);
        if (it > 0 && std::abs(next - sigma) <= tol * next) return next;
        sigma = next;
    }
    return sigma;
}

std::vector<double> advance_q(const std::vector<double>& q, double mu, double rho) {
    const int n = static_cast<int>(q.size());
    std::vector<double> out(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double v = 0.0;
        if (k > 0 && k - 1 < n)
            v += std::sqrt(static_cast<double>(k)) * std::pow(rho, k - 1) * q[k - 1];
        if (k < n) v += mu * std::pow(rho, k) * q[k];
        if (k + 1 < n) v += std::sqrt(static_cast<double>(k + 1)) * std::pow(rho, k + 1) * q[k + 1];
        out[k] = v;
    }
    return out;
}

double product_moment_1d(double mu, double rho, int n) {
    if (n < 0) throw InvalidParams("product_moment_1d: N must be >= 0");
    std::vector<double> q{1.0};
    for (int i = 0; i < n; ++i) q = advance_q(q, mu, rho);
    return q[0];
}

namespace {

// Advances N steps with renormalization by q[0]; returns accumulated
// ln(scale) and the last step's q[0] ratio.
struct ChainResult {
    double log_m;
    double last_ratio;
};

ChainResult moment_chain(double mu, double rho, int n) {
    std::vector<double> q{1.0};
    double log_m = 0.0, ratio = mu;
    for (int i = 0; i < n; ++i) {
        q = advance_q(q, mu, rho);
        ratio = q[0];
        log_m += std::log(q[0]);
        for (auto& x : q) x /= ratio;
    }
    return {log_m, ratio};
}

}  // namespace

double log_product_moment_1d(double mu, double rho, int n) {
    if (n < 0) throw InvalidParams("log_product_moment_1d: N must be >= 0");
    return moment_chain(mu, rho, n).log_m;
}

double moment_ratio_1d(double mu, double rho, int n) {
    if (n < 0) throw InvalidParams("moment_ratio_1d: N must be >= 0");
    std::vector<double> q{1.0};
    double ratio = mu;
    for (int i = 0; i < n + 1; ++i) {
        q = advance_q(q, mu, rho);
        ratio = q[0];
        for (auto& x : q) x /= ratio;
    }
    return ratio;
}

EigenResult leading_eigenvalue(double mu, double rho, int truncation, double tol,
                               int max_iter) {
    if (!(mu > 0.0))
        throw InvalidParams("leading_eigenvalue: mu must be > 0 (cone argument)");
    if (!(rho > 0.0 && rho < 1.0))
        throw InvalidParams("leading_eigenvalue: rho must be in (0,1)");
    if (truncation < 8) throw InvalidParams("leading_eigenvalue: K must be >= 8");
    const TransferMatrix g = transfer_matrix(mu, rho, truncation);
    std::vector<double> q(g.size, 0.0);
    q[0] = 1.0;
    double lambda = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> v = apply(g, q);
        double next = v[0];  // q[0] == 1, so this is the free-term ratio
        // eigen-residual test: successive ratios can coincide exactly far
        // from convergence (e.g. the first ratios at mu = 1), so a Cauchy
        // criterion on the scaling sequence is not safe
        double res2 = 0.0, norm2 = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            const double d = v[k] - next * q[k];
            res2 += d * d;
            norm2 += q[k] * q[k];
        }
        for (auto& x : v) x /= next;
        q.swap(v);
        if (std::sqrt(res2) <= tol * std::abs(next) * std::sqrt(norm2))
            return {next, std::move(q), it, true};
        lambda = next;
    }
    return {lambda, std::move(q), max_iter, false};
}

double mle_1d(double mu, double rho, const SolverParams& params) {
    int k = params.truncation;
    if (rho >= 0.95 && k < 256) k = 256;  // spectral gap shrinks as rho -> 1
    EigenResult res = leading_eigenvalue(mu, rho, k, params.tol, params.max_iter);
    if (params.adaptive) {
        for (int iter = 0; iter < 6; ++iter) {
            EigenResult refined =
                leading_eigenvalue(mu, rho, 2 * k, params.tol, params.max_iter);
            if (std::abs(refined.lambda - res.lambda) < params.tol * refined.lambda) {
                res = std::move(refined);
                break;
            }
            k *= 2;
            res = std::move(refined);
        }
    }
    if (!res.converged) throw NotConverged("mle_1d: power iteration did not converge");
    return std::log(res.lambda);
}

UpperBound mle_upper_bound(double mu, double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw InvalidParams("mle_upper_bound: rho must be in (0,1)");
    const double one_minus = 1.0 - rho * rho;
    const double mi = -0.5 * std::log(one_minus);
    return {0.5 * std::log(mu * mu + (1.0 + rho * rho) / one_minus) + mi, mi};
}

}  // namespace edm
