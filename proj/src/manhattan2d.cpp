#include "edm/manhattan2d.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "edm/common.hpp"

namespace edm {

void SparsePolynomial::add_term(const Exponents& exps, double coef) {
    if (coef == 0.0) return;
    if (static_cast<int>(exps.size()) != n_vars_)
        throw InvalidParams("SparsePolynomial: exponent vector size mismatch");
    auto [it, inserted] = terms_.emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0.0) terms_.erase(it);
    }
}

int SparsePolynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int total = 0;
        for (auto x : e) total += x;
        d = std::max(d, total);
    }
    return d;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (n_vars_ != other.n_vars_)
        throw InvalidParams("SparsePolynomial: variable count mismatch");
    SparsePolynomial out(n_vars_);
    Exponents e(n_vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < n_vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (n_vars_ != other.n_vars_)
        throw InvalidParams("SparsePolynomial: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial SparsePolynomial::scaled(double factor) const {
    SparsePolynomial out(n_vars_);
    if (factor == 0.0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * factor;
    return out;
}

double SparsePolynomial::evaluate(const std::vector<double>& point) const {
    KahanSum sum;
    for (const auto& [e, c] : terms_) {
        double term = c;
        for (int i = 0; i < n_vars_; ++i)
            for (int p = 0; p < e[i]; ++p) term *= point[i];
        sum.add(term);
    }
    return sum.value();
}

SparsePolynomial SparsePolynomial::constant(int n_vars, double value) {
    SparsePolynomial p(n_vars);
    p.add_term(Exponents(n_vars, 0), value);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int n_vars, int index, double coef) {
    SparsePolynomial p(n_vars);
    Exponents e(n_vars, 0);
    e[index] = 1;
    p.add_term(e, coef);
    return p;
}

std::vector<Site> level_set(int ell) {
    if (ell < 0) throw InvalidParams("level_set: negative level");
    std::vector<Site> out;
    for (int j = 0; j <= ell; ++j) out.push_back({j, ell - j});
    return out;
}

namespace {

// Zigzag path of Gamma_N read off Fig.-2 style: even labels on the diagonal
// j+k = -N, odd labels on j+k = -(N+1), starting at (0,-N), ending at (-N,0).
std::vector<Site> gamma_sites(int n) {
    std::vector<Site> out;
    for (int label = 0; label <= 2 * n; ++label) {
        int m = label / 2;
        if (label % 2 == 0)
            out.push_back({-m, -(n - m)});
        else
            out.push_back({-(m + 1), -(n - m)});
    }
    return out;
}

}  // namespace

ZigzagChain gamma_set(int level, double rho1, double rho2) {
    if (level < 0) throw InvalidParams("gamma_set: negative level");
    ZigzagChain chain;
    chain.level = level;
    chain.sites = gamma_sites(level);
    const std::size_t n = chain.sites.size();
    chain.covariance.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int dx = std::abs(chain.sites[i][0] - chain.sites[j][0]);
            int dy = std::abs(chain.sites[i][1] - chain.sites[j][1]);
            chain.covariance[i][j] = std::pow(rho1, dx) * std::pow(rho2, dy);
        }
    return chain;
}

Region delta_region(int level) {
    if (level < 0) throw InvalidParams("delta_region: negative level");
    std::set<Site> sites;
    for (int ell = 0; ell <= level; ++ell)
        for (const auto& s : gamma_sites(ell)) sites.insert(s);
    return Region(2, std::vector<Site>(sites.begin(), sites.end()));
}

SparsePolynomial r0_polynomial(double mu) {
    if (mu < 0.0) throw InvalidParams("r0_polynomial: mu must be >= 0");
    SparsePolynomial p(1);
    p.add_term({0}, mu);
    p.add_term({1}, 1.0);
    return p;
}

namespace {

double double_factorial_odd_count(int m) {
    // (m-1)!! for even m; the even-order moments of a standard normal
    double v = 1.0;
    for (int i = m - 1; i > 1; i -= 2) v *= i;
    return v;
}

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

}  // namespace

SparsePolynomial advance_R(const SparsePolynomial& r_prev, int level, double rho1,
                           double rho2, double mu, std::size_t term_cap) {
    if (level < 1) throw InvalidParams("advance_R: level must be >= 1");
    const int old_vars = 2 * level - 1;
    const int new_vars = 2 * level + 1;
    if (r_prev.n_vars() != old_vars)
        throw InvalidParams("advance_R: previous polynomial has wrong arity");
    const double gg = std::sqrt((1.0 - rho1 * rho1) * (1.0 - rho2 * rho2));

    // Linear substitute for each even old position 2k:
    // L_k = rho2 s_{2k} - rho1 rho2 s_{2k+1} + rho1 s_{2k+2}  (+ gg * noise)
    auto linear_sub = [&](int k) {
        SparsePolynomial l(new_vars);
        SparsePolynomial::Exponents e(new_vars, 0);
        e[2 * k] = 1;
        l.add_term(e, rho2);
        e[2 * k] = 0;
        e[2 * k + 1] = 1;
        l.add_term(e, -rho1 * rho2);
        e[2 * k + 1] = 0;
        e[2 * k + 2] = 1;
        l.add_term(e, rho1);
        return l;
    };
    // cache of L_k^p
    std::vector<std::vector<SparsePolynomial>> lin_pow(level);
    auto linear_power = [&](int k, int p) -> const SparsePolynomial& {
        auto& cache = lin_pow[k];
        if (cache.empty()) cache.push_back(SparsePolynomial::constant(new_vars, 1.0));
        while (static_cast<int>(cache.size()) <= p)
            cache.push_back(cache.back() * linear_sub(k));
        return cache[p];
    };

    SparsePolynomial result(new_vars);
    SparsePolynomial::Exponents shared(new_vars, 0);
    for (const auto& [exps, coef] : r_prev.terms()) {
        // shared entries: old odd position 2k-1 maps to new variable 2k
        std::fill(shared.begin(), shared.end(), 0);
        for (int k = 1; k < level; ++k) shared[2 * k] = exps[2 * k - 1];
        SparsePolynomial mono(new_vars);
        mono.add_term(shared, coef);
        // even positions pick up the conditional-Gaussian substitution with
        // the noise eliminated immediately: E eps^m = (m-1)!! for even m
        for (int k = 0; k < level; ++k) {
            int a = exps[2 * k];
            if (a == 0) continue;
            SparsePolynomial expanded(new_vars);
            for (int m = 0; m <= a; m += 2) {
                double w = binomial(a, m) * std::pow(gg, m) * double_factorial_odd_count(m);
                expanded += linear_power(k, a - m).scaled(w);
            }
            mono = mono * expanded;
        }
        result += mono;
        if (result.n_terms() > term_cap)
            throw DegreeOverflow("advance_R: term cap exceeded");
    }

    // boundary factor (mu + s_0)(mu + s_{2N}) prod_k (mu + s_{2k+1})
    auto affine = [&](int idx) {
        SparsePolynomial p = SparsePolynomial::constant(new_vars, mu);
        p += SparsePolynomial::variable(new_vars, idx);
        return p;
    };
    result = result * affine(0);
    result = result * affine(2 * level);
    for (int k = 0; k < level; ++k) result = result * affine(2 * k + 1);
    if (result.n_terms() > term_cap)
        throw DegreeOverflow("advance_R: term cap exceeded");
    return result;
}

namespace {

// E prod_i s_i^{a_i} for zero-mean Gaussians: expand into variable slots and
// sum over pairings, pairing the first remaining slot with every partner.
double gaussian_monomial_moment(const SparsePolynomial::Exponents& exps,
                                const std::vector<std::vector<double>>& cov) {
    std::vector<int> slots;
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (int p = 0; p < exps[i]; ++p) slots.push_back(static_cast<int>(i));
    if (slots.size() % 2 != 0) return 0.0;
    if (slots.empty()) return 1.0;
    if (slots.size() > 24)
        throw DegreeOverflow("expected_R: monomial exceeds 24 slots");

    const std::uint32_t full = (std::uint32_t(1) << slots.size()) - 1;
    // recursion without memo: visits exactly the (d-1)!! pairings
    struct Rec {
        const std::vector<int>& slots;
        const std::vector<std::vector<double>>& cov;
        double eval(std::uint32_t mask) const {
            if (mask == 0) return 1.0;
            const int i = __builtin_ctz(mask);
            const std::uint32_t rest = mask & (mask - 1);
            double value = 0.0;
            for (std::uint32_t m = rest; m != 0; m &= m - 1) {
                const int j = __builtin_ctz(m);
                value += cov[slots[i]][slots[j]] *
                         eval(rest & ~(std::uint32_t(1) << j));
            }
            return value;
        }
    } rec{slots, cov};
    return rec.eval(full);
}

}  // namespace

double expected_R(const SparsePolynomial& r, int level, double rho1, double rho2) {
    if (r.n_vars() != 2 * level + 1)
        throw InvalidParams("expected_R: polynomial arity does not match level");
    const ZigzagChain chain = gamma_set(level, rho1, rho2);
    KahanSum sum;
    for (const auto& [exps, coef] : r.terms())
        sum.add(coef * gaussian_monomial_moment(exps, chain.covariance));
    return sum.value();
}

}  // namespace edm
