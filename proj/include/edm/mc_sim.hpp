#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "edm/region.hpp"

namespace edm {

enum class SampleKind { MovingAverage, Pickard2D, AlternatingAR };

struct FieldSample {
    Region region;
    std::vector<double> values;  // one per region site, in region order
    std::uint64_t seed;
    SampleKind kind;
};

struct MCEstimate {
    double mean;
    double std_error;
    std::size_t n_samples;
};

// Moving-average field of the rigid dimer system: independent standard
// normals at edge midpoints, xi_x = mu + sum_k sqrt(rho_k)(eta_{x-e_k/2} +
// eta_{x+e_k/2}).  Midpoints shared by neighbouring sites reuse one draw.
FieldSample sample_moving_average(const std::vector<double>& rho, double mu,
                                  const Region& region, std::uint64_t seed,
                                  std::uint64_t sample_index = 0);

// Unilateral single-pass Pickard sampler on {0..width-1}x{0..height-1}.
FieldSample sample_pickard_2d(double rho1, double rho2, double mu, int width,
                              int height, std::uint64_t seed,
                              std::uint64_t sample_index = 0);

// Alternating autoregressive zigzag chain: 2N+1 values, steps alternate
// rho_1 and rho_2.
std::vector<double> sample_alternating_ar(double rho1, double rho2, int chain_n,
                                          std::uint64_t seed,
                                          std::uint64_t sample_index = 0);

struct MovingAverageSpec {
    std::vector<double> rho;
    double mu;
};
struct Pickard2DSpec {
    double rho1, rho2, mu;
    int width, height;
};
struct AlternatingARSpec {
    double rho1, rho2;
    int chain_n;
    double mu;  // added to each chain value before taking products
};
using SamplerSpec = std::variant<MovingAverageSpec, Pickard2DSpec, AlternatingARSpec>;

// Monte-Carlo estimate of the product moment over the region (MovingAverage),
// the full rectangle (Pickard2D) or the whole chain (AlternatingAR).
// For MovingAverage the region argument selects the product sites; for the
// other samplers it is ignored.
MCEstimate mc_product_moment(const SamplerSpec& spec, const Region& region,
                             std::size_t n_samples, std::uint64_t seed);

// Predicted relative standard error of the product estimator; used by the
// CLI to warn about hopeless sample counts.
double predicted_relative_std_error(double second_moment, double first_moment,
                                    std::size_t n_samples);

}  // namespace edm
