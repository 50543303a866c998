// Synthetic Gaussian designs, the closed-form recovery-probability bound,
// the comparison harness, and the support-recovery Monte Carlo.
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include <lags/synth_bench.hpp>

using namespace lags;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SimDesign basic_design() {
    SimDesign d;
    d.n = 80;
    d.p = 6;
    d.p0 = 2;
    d.rho = 0.0;
    d.snr = 2.0;
    d.beta_true = pattern_beta(6, 2);
    d.seed = 5;
    return d;
}

}  // namespace

TEST_CASE("the coefficient pattern counts down and pads with zeros") {
    const Eigen::VectorXd b = pattern_beta(6, 3);
    CHECK(b(0) == 3.0);
    CHECK(b(1) == 2.0);
    CHECK(b(2) == 1.0);
    CHECK(b(3) == 0.0);
    CHECK(b(5) == 0.0);
    CHECK_THROWS_AS(pattern_beta(3, 4), InvalidArgument);
}

TEST_CASE("the noise scale follows the signal-to-noise definition") {
    SimDesign d;
    d.n = 50;
    d.p = 2;
    d.p0 = 1;
    d.rho = 0.0;
    d.snr = 2.0;
    d.beta_true.resize(2);
    d.beta_true << 1.0, 0.0;
    d.seed = 1;
    const SimData s = generate(d);
    // beta' Sigma beta = 1, so sigma = 1/snr.
    CHECK(s.sigma == doctest::Approx(0.5));
    CHECK(s.data.n() == 50);
    CHECK(s.data.p() == 2);
    CHECK(s.data.column_names.at(0) == "x1");
    CHECK(s.data.column_names.at(1) == "x2");
}

TEST_CASE("an infinite signal-to-noise ratio gives a noiseless response") {
    SimDesign d = basic_design();
    d.snr = kInf;
    const SimData s = generate(d);
    CHECK(s.sigma == 0.0);
    CHECK((s.data.y - s.data.X * d.beta_true).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generation is deterministic in the seed") {
    const SimDesign d = basic_design();
    const SimData a = generate(d);
    const SimData b = generate(d);
    CHECK((a.data.X - b.data.X).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.data.y - b.data.y).cwiseAbs().maxCoeff() == 0.0);
    SimDesign d2 = d;
    d2.seed = 6;
    CHECK((a.data.X - generate(d2).data.X).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("the design validates correlation bounds and the support count") {
    SimDesign d = basic_design();
    d.rho = -0.9;  // below -1/(p-1) = -0.2
    CHECK_THROWS_AS(generate(d), NotPositiveDefinite);
    d.rho = 1.0;
    CHECK_THROWS_AS(generate(d), NotPositiveDefinite);
    d = basic_design();
    d.p0 = 3;  // pattern has only 2 nonzeros
    CHECK_THROWS_AS(generate(d), InvalidArgument);
    d = basic_design();
    d.snr = -1.0;
    CHECK_THROWS_AS(generate(d), InvalidArgument);
}

TEST_CASE("sample moments reproduce the equicorrelated covariance") {
    SimDesign d;
    d.n = 100000;
    d.p = 60;
    d.p0 = 1;
    d.rho = 0.2;
    d.snr = 2.0;
    d.beta_true = pattern_beta(60, 1);
    d.seed = 33;
    const SimData s = generate(d);
    const Eigen::MatrixXd cov =
        s.data.X.transpose() * s.data.X / static_cast<double>(d.n);
    double worst = 0.0;
    for (int a = 0; a < 60; ++a) {
        for (int b = 0; b < 60; ++b) {
            const double want = a == b ? 1.0 : 0.2;
            worst = std::max(worst, std::abs(cov(a, b) - want));
        }
    }
    CHECK(worst <= 0.02);
}

TEST_CASE("the empirical signal-to-noise ratio matches the requested one") {
    SimDesign d;
    d.n = 10000;
    d.p = 8;
    d.p0 = 3;
    d.rho = 0.3;
    d.snr = 2.0;
    d.beta_true = pattern_beta(8, 3);
    d.seed = 91;
    const SimData s = generate(d);
    const Eigen::VectorXd signal = s.data.X * d.beta_true;
    const Eigen::VectorXd noise = s.data.y - signal;
    const double sig_ss = signal.squaredNorm() / static_cast<double>(d.n);
    const double noi_ss = noise.squaredNorm() / static_cast<double>(d.n);
    const double snr_hat = std::sqrt(sig_ss / noi_ss);
    CHECK(std::abs(snr_hat - 2.0) / 2.0 <= 0.05);
}

TEST_CASE("the probability bound approaches one and is monotone in the sample count") {
    CHECK(recovery_probability_bound(1e9, 10, 1.0, 1.0) >= 1.0 - 1e-9);
    const double b10 = recovery_probability_bound(10, 10, 1.0, 1.0);
    const double b100 = recovery_probability_bound(100, 10, 1.0, 1.0);
    const double b1000 = recovery_probability_bound(1000, 10, 1.0, 1.0);
    CHECK(b10 <= b100);
    CHECK(b100 <= b1000);
    CHECK(b10 >= 0.0);
    CHECK(b1000 <= 1.0);
    // A huge conditioning constant pushes the inner term past one: clamp to 0.
    CHECK(recovery_probability_bound(2, 2, 1e-6, 1e9) == 0.0);
}

TEST_CASE("the noiseless benchmark recovers the support exactly") {
    SimDesign d;
    d.n = 120;
    d.p = 8;
    d.p0 = 3;
    d.rho = 0.0;
    d.snr = kInf;
    d.beta_true = pattern_beta(8, 3);
    d.seed = 17;
    const auto results = run_benchmark(d, {BenchMethod::Lags}, 0.5, 5, 29);
    REQUIRE(results.size() == 1);
    CHECK(results[0].method == bench_method_name(BenchMethod::Lags));
    CHECK(results[0].support_recovered);
    CHECK(results[0].l2_err_sq <= 1e-6);
    CHECK(results[0].nonzeros == 3);
}

TEST_CASE("benchmark results are reproducible and the oracle needs a small p") {
    SimDesign d;
    d.n = 60;
    d.p = 6;
    d.p0 = 2;
    d.rho = 0.2;
    d.snr = 3.0;
    d.beta_true = pattern_beta(6, 2);
    d.seed = 41;
    const std::vector<BenchMethod> all = {BenchMethod::Lags, BenchMethod::LassoCd,
                                          BenchMethod::HardOracle};
    const auto a = run_benchmark(d, all, 0.5, 5, 7);
    const auto b = run_benchmark(d, all, 0.5, 5, 7);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a[i].method == b[i].method);
        CHECK(a[i].nonzeros == b[i].nonzeros);
        CHECK(a[i].train_err == b[i].train_err);
        CHECK(a[i].test_err == b[i].test_err);
        CHECK(a[i].chosen_lambda == b[i].chosen_lambda);
        CHECK(a[i].l2_err_sq == b[i].l2_err_sq);
    }

    SimDesign big = d;
    big.p = 20;
    big.p0 = 2;
    big.beta_true = pattern_beta(20, 2);
    const auto c = run_benchmark(big, all, 0.5, 5, 7);
    CHECK(c.size() == 2);  // the exhaustive-subset oracle is skipped for p > 15
}

TEST_CASE("the recovery Monte Carlo is exact in the noiseless limit") {
    SimDesign d;
    d.n = 100;
    d.p = 10;
    d.p0 = 3;
    d.rho = 0.0;
    d.snr = kInf;
    d.beta_true = 10.0 * pattern_beta(10, 3);
    d.seed = 3;
    const RecoveryMcResult r = support_recovery_monte_carlo(d, 10, 1.0, 4.0);
    CHECK(r.replicates == 10);
    CHECK(r.successes == 10);
    CHECK(r.recovery_frequency == doctest::Approx(1.0));
    CHECK(r.empty_band_count == 0);
    CHECK(r.mean_l2_err_sq <= 1e-12);
}

TEST_CASE("the recovery Monte Carlo enforces its margin precondition") {
    SimDesign d;
    d.n = 100;
    d.p = 10;
    d.p0 = 3;
    d.rho = 0.0;
    d.snr = 1.0;  // sigma is far too large for the margin
    d.beta_true = pattern_beta(10, 3);
    d.seed = 3;
    CHECK_THROWS_AS(support_recovery_monte_carlo(d, 5, 1.0, 4.0), InvalidArgument);

    SimDesign wide = d;
    wide.n = 8;  // n <= p
    CHECK_THROWS_AS(support_recovery_monte_carlo(wide, 5, 1.0, 4.0), InvalidArgument);
}

TEST_CASE("the recovery Monte Carlo succeeds at desk scale with strong margins") {
    SimDesign d;
    d.n = 200;
    d.p = 20;
    d.p0 = 3;
    d.rho = 0.0;
    d.beta_true = Eigen::VectorXd::Zero(20);
    d.beta_true(0) = 20.0;
    d.beta_true(1) = 21.0;
    d.beta_true(2) = 22.0;
    d.snr = d.beta_true.norm();  // sigma = 1
    d.seed = 42;
    const RecoveryMcResult r = support_recovery_monte_carlo(d, 30, 1.0, 8.0);
    CHECK(r.recovery_frequency >= 0.8);
    CHECK(r.band_low_mean > 0.0);
    CHECK(r.band_high_mean >= r.band_low_mean);
}
