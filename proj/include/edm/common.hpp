#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace edm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Errors follow the contract names used throughout the toolkit.
struct RegionTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InadmissiblePotential : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonpositiveMoment : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Neumaier compensated accumulator. Partition-function terms span many
// orders of magnitude and the enumeration/moment cross-checks ask for
// 1e-9 relative agreement.
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Boltzmann factor with the convention exp(-beta * inf) == 0 exactly.
inline double boltzmann(double beta, double energy) {
    if (std::isinf(energy)) return 0.0;
    return std::exp(-beta * energy);
}

}  // namespace edm
