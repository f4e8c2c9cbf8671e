// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Every expected value is recomputed here from an independent
// route (closed forms, exhaustive enumerators, cross-module oracles).

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "edm/edm_core.hpp"
#include "edm/grf_kernel.hpp"
#include "edm/manhattan2d.hpp"
#include "edm/mc_sim.hpp"
#include "edm/pantograph.hpp"
#include "edm/spectral1d.hpp"
#include "test_util.hpp"

using namespace edm;
using namespace edm::test;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %s%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

// 1. Partition function == Gaussian product moment on randomized potentials.
void criterion_equivalence() {
    double worst = 0.0;
    int cases = 0;
    for (int dim = 1; dim <= 3; ++dim)
        for (std::uint64_t s = 0; s < 7 && cases < 20; ++s, ++cases) {
            auto rc = random_table_case(dim, 100 * dim + s, 10);
            worst = std::max(worst, moment_equivalence_residual(rc.region, rc.potential));
        }
    report(1, "partition function equals Gaussian moment (20 random potentials)",
           worst <= 1e-9, "worst residual " + num(worst));
}

// 2. Enumeration stream lengths and the pair/singleton counting sequence.
void criterion_counting() {
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        long seen = 0;
        enumerate_configurations(interval_1d(n), [&](const Configuration&) { ++seen; });
        ok = ok && BigInt(seen) == configuration_count(n);
    }
    const long expect[] = {1, 2, 4, 10, 26, 76};
    for (int n = 1; n <= 6; ++n) ok = ok && configuration_count(n) == expect[n - 1];
    report(2, "configuration counts match enumeration and the known sequence", ok, "");
}

// 3. Product moments of the monomer-free rigid kernel count domino tilings.
void criterion_dominoes() {
    bool ok = true;
    std::string detail;
    auto kernel = GaussianKernel::rigid({1.0, 1.0}, 0.0);
    for (auto [w, h] : {std::pair{2, 2}, {2, 3}, {2, 4}, {4, 4}}) {
        const double m = isserlis_product_moment(kernel, board(w, h));
        const long tilings = count_domino_tilings(w, h);
        if (std::abs(m - double(tilings)) > 1e-6) ok = false;
        detail += std::to_string(w) + "x" + std::to_string(h) + "=" + num(m) + " ";
    }
    report(3, "domino tilings recovered from Gaussian moments (2,3,5,36)", ok, detail);
}

// 4. Three independent 1D computations agree.
void criterion_triple_agreement() {
    double worst = 0.0;
    for (double mu : {0.25, 1.0, 4.0})
        for (double rho : {0.1, 0.5, 0.9}) {
            auto kernel = GaussianKernel::manhattan({rho}, mu);
            const Potential pot = manhattan_potential_1d(mu, rho);
            for (int n = 1; n <= 12; ++n) {
                const double a = product_moment_1d(mu, rho, n);
                const double b = isserlis_product_moment(kernel, interval_1d(n));
                const double c = exact_partition_function(interval_1d(n), pot);
                worst = std::max(worst, std::abs(a - b) / c);
                worst = std::max(worst, std::abs(a - c) / c);
            }
        }
    report(4, "1D recursion = pairing sum = enumeration for N <= 12", worst <= 1e-9,
           "worst rel. deviation " + num(worst));
}

// 5. Eigenvalue solver consistency, bound, and limiting behavior.
void criterion_eigen() {
    bool ok = true;
    std::string detail;
    auto e32 = leading_eigenvalue(1.0, 0.5, 32);
    auto e64 = leading_eigenvalue(1.0, 0.5, 64);
    const double ratio = moment_ratio_1d(1.0, 0.5, 200);
    if (std::abs(ratio - e64.lambda) >= 1e-6) {
        ok = false;
        detail += "ratio gap " + num(std::abs(ratio - e64.lambda)) + " ";
    }
    if (std::abs(e32.lambda - e64.lambda) >= 1e-8) {
        ok = false;
        detail += "truncation gap " + num(std::abs(e32.lambda - e64.lambda)) + " ";
    }
    for (double mu : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9})
            if (mle_1d(mu, rho) > mle_upper_bound(mu, rho).bound) {
                ok = false;
                detail += "bound violated at (" + num(mu) + "," + num(rho) + ") ";
            }
    double prev_gap = 1e300;
    for (double rho : {0.2, 0.1, 0.05, 0.01}) {
        const double gap = std::abs(leading_eigenvalue(1.0, rho, 32).lambda - 1.0);
        if (gap > prev_gap) {
            ok = false;
            detail += "gap not shrinking at rho=" + num(rho) + " ";
        }
        prev_gap = gap;
    }
    double prev_mle = -1e300;
    for (double rho : {0.1, 0.5, 0.9}) {
        const double m = mle_1d(1.0, rho);
        if (m <= prev_mle) {
            ok = false;
            detail += "not increasing at rho=" + num(rho) + " ";
        }
        prev_mle = m;
    }
    report(5, "eigenvalue: ratio limit, truncation stability, bound, monotone trends",
           ok, detail);
}

// 6. The Hermite-coefficient and generating-function recursions coincide.
void criterion_pantograph_duality() {
    bool ok = true;
    std::string detail;
    const double mu = 1.2, rho = 0.55;
    std::vector<double> q{1.0};
    DensePolynomial1D t{1.0};
    for (int n = 1; n <= 30; ++n) {
        q = advance_q(q, mu, rho);
        t = advance_T(t, mu, rho);
        const auto via_q = hermite_to_generating(q);
        double scale = 0.0;
        for (double c : t) scale = std::max(scale, std::abs(c));
        for (std::size_t k = 0; k < t.size(); ++k)
            if (std::abs(via_q[k] - t[k]) > 1e-10 * scale) {
                ok = false;
                detail = "coefficient mismatch at N=" + std::to_string(n);
            }
        if (std::abs(t[0] - product_moment_1d(mu, rho, n)) >
            1e-10 * std::abs(t[0])) {
            ok = false;
            detail = "value-at-zero mismatch at N=" + std::to_string(n);
        }
    }
    TestRng rng(606);
    for (int trial = 0; trial < 5; ++trial) {
        const double m = rng.uniform(0.2, 2.0), r = rng.uniform(0.05, 0.9);
        const double x = rng.uniform(-1.5, 1.5);
        DensePolynomial1D t1{m, 1.0};
        const double v2 = (m + x) * (m + r * x) + r;
        const double v3 = (m + x) * ((m + r * x) * (m + r * r * x) + r) +
                          r * (m + r * r * x + r * (m + r * x));
        DensePolynomial1D got1 = advance_T({1.0}, m, r);
        DensePolynomial1D got2 = advance_T(got1, m, r);
        DensePolynomial1D got3 = advance_T(got2, m, r);
        if (std::abs(poly_eval(got1, x) - poly_eval(t1, x)) > 1e-10 ||
            std::abs(poly_eval(got2, x) - v2) > 1e-10 * std::max(1.0, std::abs(v2)) ||
            std::abs(poly_eval(got3, x) - v3) > 1e-10 * std::max(1.0, std::abs(v3))) {
            ok = false;
            detail = "closed-form mismatch in trial " + std::to_string(trial);
        }
    }
    report(6, "generating-function chain matches Hermite coefficients (N <= 30)", ok,
           detail);
}

// 7. The 2D staircase recursion against exhaustive enumeration.
void criterion_staircase() {
    bool ok = true;
    std::string detail;
    double worst = 0.0;
    for (auto [rho1, rho2, mu] :
         {std::tuple{0.3, 0.6, 1.0}, {0.5, 0.5, 0.5}, {0.7, 0.2, 2.0}}) {
        SparsePolynomial r = r0_polynomial(mu);
        for (int n = 1; n <= 3; ++n) {
            r = advance_R(r, n, rho1, rho2, mu);
            const double moment = expected_R(r, n, rho1, rho2);
            const double z = exact_partition_function(
                delta_region(n), manhattan_potential_2d(mu, rho1, rho2));
            const double rel = std::abs(moment - z) / z;
            worst = std::max(worst, rel);
            if (rel > 1e-8) {
                ok = false;
                detail += "N=" + std::to_string(n) + " rel " + num(rel) + " ";
            }
        }
    }
    // axis-swap symmetry
    for (int n = 1; n <= 2; ++n) {
        SparsePolynomial ra = r0_polynomial(1.2), rb = r0_polynomial(1.2);
        for (int l = 1; l <= n; ++l) {
            ra = advance_R(ra, l, 0.3, 0.6, 1.2);
            rb = advance_R(rb, l, 0.6, 0.3, 1.2);
        }
        const double a = expected_R(ra, n, 0.3, 0.6);
        const double b = expected_R(rb, n, 0.6, 0.3);
        if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(a))) {
            ok = false;
            detail += "swap asymmetry at N=" + std::to_string(n) + " ";
        }
    }
    report(7, "2D staircase recursion matches enumeration (N <= 3) + swap symmetry",
           ok, detail + "worst rel " + num(worst));
}

// 8. Monte-Carlo soundness: coverage and Pickard covariances.
void criterion_monte_carlo() {
    bool ok = true;
    std::string detail;
    const double rigid_oracle =
        isserlis_product_moment(GaussianKernel::rigid({1.0, 1.0}, 0.0), board(2, 2));
    const double chain_oracle =
        isserlis_product_moment(GaussianKernel::manhattan({0.5}, 1.0), interval_1d(5));
    int hits_rigid = 0, hits_chain = 0;
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        auto er = mc_product_moment(MovingAverageSpec{{1.0, 1.0}, 0.0}, board(2, 2),
                                    100000, 1000 + trial);
        if (std::abs(er.mean - rigid_oracle) <= 4 * er.std_error) ++hits_rigid;
        auto ec = mc_product_moment(AlternatingARSpec{0.5, 0.5, 2, 1.0},
                                    interval_1d(5), 100000, 5000 + trial);
        if (std::abs(ec.mean - chain_oracle) <= 4 * ec.std_error) ++hits_chain;
    }
    if (hits_rigid < 19 || hits_chain < 19) {
        ok = false;
        detail += "coverage " + std::to_string(hits_rigid) + "/20 rigid, " +
                  std::to_string(hits_chain) + "/20 chain ";
    }
    // Pickard lag covariances on a 5x5 window, center site vs all lags <= 2
    const double rho1 = 0.6, rho2 = 0.4;
    const std::size_t n = 1000000;
    const int w = 5, h = 5, cx = 2, cy = 2;
    std::vector<KahanSum> acc(w * h);
    for (std::size_t i = 0; i < n; ++i) {
        auto s = sample_pickard_2d(rho1, rho2, 0.0, w, h, 424242, i);
        const double center = s.values[cy * w + cx];
        for (int j = 0; j < w * h; ++j) acc[j].add(center * s.values[j]);
    }
    double worst_cov = 0.0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double expect = std::pow(rho1, std::abs(x - cx)) *
                                  std::pow(rho2, std::abs(y - cy));
            const double got = acc[y * w + x].value() / double(n);
            worst_cov = std::max(worst_cov, std::abs(got - expect));
        }
    if (worst_cov > 0.01) {
        ok = false;
        detail += "covariance deviation " + num(worst_cov);
    }
    report(8, "MC estimates cover the oracles; unilateral-pass covariances correct",
           ok, detail + "worst cov dev " + num(worst_cov));
}

// 9. Largest singular value of the truncated transfer matrix obeys the bound.
void criterion_norm_bound() {
    bool ok = true;
    double worst = 0.0;
    for (double mu : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (double rho : {0.1, 0.3, 0.5, 0.7, 0.9})
            for (int k : {32, 64}) {
                const double g = std::sqrt(1.0 - rho * rho);
                const double bound =
                    std::sqrt(mu * mu + (1.0 + rho * rho) / (g * g)) / g;
                const double s = largest_singular_value(transfer_matrix(mu, rho, k));
                worst = std::max(worst, s / bound);
                if (s > bound * (1.0 + 1e-6)) ok = false;
            }
    report(9, "operator-norm bound holds for K in {32,64} on the 5x5 grid", ok,
           "max sigma/bound " + num(worst));
}

// 10. CLI determinism: identical invocations, byte-identical artifacts.
void criterion_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "edm_acceptance";
    fs::create_directories(dir);
    const fs::path region = dir / "region.json";
    const fs::path potential = dir / "potential.json";
    {
        std::ofstream r(region);
        r << R"({"dimension": 1, "sites": [[0], [1], [2]]})";
        std::ofstream p(potential);
        p << R"({"V": 0.0, "beta": 1.0, "dimer": {"kind": "manhattan", "alpha": [0.6931471805599453]}})";
    }
    auto run = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = std::string(EDM_CLI_PATH) + " " + args + " --out " +
                                out.string() + " 2> /dev/null";
        return WEXITSTATUS(std::system(cmd.c_str())) == 0;
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    };
    bool ok = true;
    const std::vector<std::string> commands = {
        "exact --region " + region.string() + " --potential " + potential.string(),
        "moment --region " + region.string() + " --potential " + potential.string(),
        "mc --sampler aar --chain-n 2 --mu 1 --rho1 0.5 --rho2 0.5 --n 5000 --seed 7",
        "mc --sampler pickard --width 3 --height 3 --mu 1 --rho1 0.4 --rho2 0.3 --n 2000 --seed 8",
        "manhattan2d --N 2 --rho1 0.3 --rho2 0.6 --mu 1",
        "spectral1d --mu 1 --rho 0.5",
        "pantograph --mu 1 --rho 0.3 --N 8",
        "surface --mu-grid 0.5:2:3 --rho-grid 0.2:0.8:3",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const fs::path a = dir / ("a" + std::to_string(i));
        const fs::path b = dir / ("b" + std::to_string(i));
        if (!run(commands[i], a) || !run(commands[i], b) || slurp(a).empty() ||
            slurp(a) != slurp(b)) {
            ok = false;
        }
    }
    report(10, "CLI reruns produce byte-identical artifacts", ok, "");
}

}  // namespace

int main() {
    criterion_equivalence();
    criterion_counting();
    criterion_dominoes();
    criterion_triple_agreement();
    criterion_eigen();
    criterion_pantograph_duality();
    criterion_staircase();
    criterion_monte_carlo();
    criterion_norm_bound();
    criterion_determinism();
    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
