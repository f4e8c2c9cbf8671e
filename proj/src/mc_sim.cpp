#include "edm/mc_sim.hpp"

#include <cmath>

#include "edm/common.hpp"
#include "edm/rng.hpp"

namespace edm {

namespace {

constexpr std::uint64_t kStreamMA = 1;
constexpr std::uint64_t kStreamPK = 2;
constexpr std::uint64_t kStreamAR = 3;

std::uint64_t site_hash(std::uint64_t h, const Site& s) {
    for (int c : s) h = rng::fold(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(c)));
    return h;
}

}  // namespace

FieldSample sample_moving_average(const std::vector<double>& rho, double mu,
                                  const Region& region, std::uint64_t seed,
                                  std::uint64_t sample_index) {
    const int n = region.dimension();
    if (static_cast<int>(rho.size()) != n)
        throw DimensionMismatch("sample_moving_average: rho size mismatch");
    for (double r : rho)
        if (r < 0.0) throw InvalidParams("sample_moving_average: rho must be >= 0");
    const std::uint64_t base = rng::key(seed, {kStreamMA, sample_index});
    std::vector<double> values;
    values.reserve(region.size());
    Site mid(n);
    for (const auto& x : region.sites()) {
        double v = mu;
        for (int k = 0; k < n; ++k) {
            if (rho[k] == 0.0) continue;
            const double w = std::sqrt(rho[k]);
            // midpoint x +- e_k/2 keyed on the doubled lattice as 2x +- e_k
            for (int sign : {-1, +1}) {
                for (int j = 0; j < n; ++j) mid[j] = 2 * x[j] + (j == k ? sign : 0);
                v += w * rng::normal(site_hash(base, mid));
            }
        }
        values.push_back(v);
    }
    return {region, std::move(values), seed, SampleKind::MovingAverage};
}

FieldSample sample_pickard_2d(double rho1, double rho2, double mu, int width,
                              int height, std::uint64_t seed,
                              std::uint64_t sample_index) {
    if (!(rho1 > 0.0 && rho1 < 1.0 && rho2 > 0.0 && rho2 < 1.0))
        throw InvalidParams("sample_pickard_2d: rho must be in (0,1)");
    if (width < 1 || height < 1)
        throw InvalidParams("sample_pickard_2d: empty rectangle");
    const double g1 = std::sqrt(1.0 - rho1 * rho1);
    const double g2 = std::sqrt(1.0 - rho2 * rho2);
    const std::uint64_t base = rng::key(seed, {kStreamPK, sample_index});
    auto innovation = [&](int j, int k) {
        return rng::normal(rng::fold(rng::fold(base, std::uint64_t(j)), std::uint64_t(k)));
    };
    // sigma in row-major order, one unilateral pass
    std::vector<double> sigma(static_cast<std::size_t>(width) * height);
    auto at = [&](int j, int k) -> double& { return sigma[std::size_t(k) * width + j]; };
    for (int k = 0; k < height; ++k)
        for (int j = 0; j < width; ++j) {
            double w = innovation(j, k);
            if (j == 0 && k == 0)
                at(j, k) = w;
            else if (k == 0)
                at(j, k) = rho1 * at(j - 1, 0) + g1 * w;
            else if (j == 0)
                at(j, k) = rho2 * at(0, k - 1) + g2 * w;
            else
                at(j, k) = -rho1 * rho2 * at(j - 1, k - 1) + rho2 * at(j, k - 1) +
                           rho1 * at(j - 1, k) + g1 * g2 * w;
        }
    std::vector<Site> sites;
    std::vector<double> values;
    sites.reserve(sigma.size());
    values.reserve(sigma.size());
    for (int k = 0; k < height; ++k)
        for (int j = 0; j < width; ++j) {
            sites.push_back({j, k});
            values.push_back(mu + at(j, k));
        }
    return {Region(2, std::move(sites), true), std::move(values), seed,
            SampleKind::Pickard2D};
}

std::vector<double> sample_alternating_ar(double rho1, double rho2, int chain_n,
                                          std::uint64_t seed,
                                          std::uint64_t sample_index) {
    if (chain_n < 0) throw InvalidParams("sample_alternating_ar: N must be >= 0");
    const double g1 = std::sqrt(1.0 - rho1 * rho1);
    const double g2 = std::sqrt(1.0 - rho2 * rho2);
    const std::uint64_t base = rng::key(seed, {kStreamAR, sample_index});
    std::vector<double> out(2 * chain_n + 1);
    out[0] = rng::normal(rng::fold(base, 0));
    for (int j = 0; j + 1 < static_cast<int>(out.size()); ++j) {
        double w = rng::normal(rng::fold(base, std::uint64_t(j + 1)));
        out[j + 1] = (j % 2 == 0) ? rho1 * out[j] + g1 * w : rho2 * out[j] + g2 * w;
    }
    return out;
}

MCEstimate mc_product_moment(const SamplerSpec& spec, const Region& region,
                             std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 2) throw InvalidParams("mc_product_moment: need n_samples >= 2");
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        double product = 1.0;
        if (const auto* ma = std::get_if<MovingAverageSpec>(&spec)) {
            FieldSample s = sample_moving_average(ma->rho, ma->mu, region, seed, i);
            for (double v : s.values) product *= v;
        } else if (const auto* pk = std::get_if<Pickard2DSpec>(&spec)) {
            FieldSample s = sample_pickard_2d(pk->rho1, pk->rho2, pk->mu, pk->width,
                                              pk->height, seed, i);
            for (double v : s.values) product *= v;
        } else {
            const auto& ar = std::get<AlternatingARSpec>(spec);
            for (double v : sample_alternating_ar(ar.rho1, ar.rho2, ar.chain_n, seed, i))
                product *= (ar.mu + v);
        }
        // Welford update
        double delta = product - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (product - mean);
    }
    double var = m2 / static_cast<double>(n_samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(n_samples)), n_samples};
}

double predicted_relative_std_error(double second_moment, double first_moment,
                                    std::size_t n_samples) {
    double var = second_moment - first_moment * first_moment;
    if (var <= 0.0 || first_moment == 0.0) return 0.0;
    return std::sqrt(var / static_cast<double>(n_samples)) / std::abs(first_moment);
}

}  // namespace edm
