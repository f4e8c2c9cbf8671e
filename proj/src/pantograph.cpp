#include "edm/pantograph.hpp"

#include <cmath>

namespace edm {

double poly_eval(const DensePolynomial1D& p, double t) {
    double v = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return v;
}

DensePolynomial1D poly_derivative(const DensePolynomial1D& p) {
    if (p.size() <= 1) return {0.0};
    DensePolynomial1D d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

DensePolynomial1D advance_T(const DensePolynomial1D& t_prev, double mu, double rho) {
    const std::size_t n = t_prev.size();  // degree n-1
    DensePolynomial1D out(n + 1, 0.0);
    double rk = 1.0;  // rho^k
    for (std::size_t k = 0; k < n; ++k) {
        const double scaled = t_prev[k] * rk;  // coefficient of t^k in T(rho t)
        out[k] += mu * scaled;                 // mu T(rho t)
        out[k + 1] += scaled;                  // t T(rho t)
        // rho T'(rho t): contributes k c_k rho^k t^{k-1}
        if (k >= 1) out[k - 1] += static_cast<double>(k) * scaled;
        rk *= rho;
    }
    return out;
}

DensePolynomial1D hermite_to_generating(const std::vector<double>& q) {
    DensePolynomial1D c(q.size());
    double fact = 1.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        c[k] = q[k] / std::sqrt(fact);
    }
    return c;
}

std::vector<double> value_at_zero_chain(double mu, double rho, int n_max) {
    if (n_max < 1) throw InvalidParams("value_at_zero_chain: need N_max >= 1");
    std::vector<double> out;
    DensePolynomial1D t{1.0};
    out.push_back(poly_eval(t, 0.0));
    for (int n = 1; n <= n_max; ++n) {
        t = advance_T(t, mu, rho);
        out.push_back(t[0]);
    }
    return out;
}

double pantograph_residual(const DensePolynomial1D& t_approx, double lambda,
                           double mu, double rho,
                           const std::vector<double>& sample_points) {
    if (!(rho > 0.0 && rho < 1.0))
        throw InvalidParams("pantograph_residual: rho must be in (0,1)");
    const DensePolynomial1D deriv = poly_derivative(t_approx);
    double worst = 0.0;
    for (double tau : sample_points) {
        double r = poly_eval(deriv, tau) - (lambda / rho) * poly_eval(t_approx, tau / rho) +
                   ((mu + tau / rho) / rho) * poly_eval(t_approx, tau);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

std::vector<double> default_residual_points() {
    std::vector<double> pts;
    for (int i = 0; i <= 100; ++i) pts.push_back(-2.0 + 0.04 * i);
    return pts;
}

}  // namespace edm
