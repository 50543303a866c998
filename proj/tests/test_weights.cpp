// Penalty-weight construction: inverse correlation, inverse least squares,
// inverse ridge, and the exclusion semantics of infinite entries.
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include <lags/core_data.hpp>
#include <lags/rng.hpp>
#include <lags/weights.hpp>

using namespace lags;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Orthogonal mean-0 variance-1 columns, so the 1/n-scaled Gram is exactly I.
Dataset orthonormal_fixture(double b1, double b2) {
    Dataset d;
    d.X.resize(4, 2);
    d.X << 1, 1, 1, -1, -1, 1, -1, -1;
    d.y = b1 * d.X.col(0) + b2 * d.X.col(1);
    d.column_names = {"x1", "x2"};
    return d;
}

Dataset random_dataset(int n, int p, std::uint64_t seed) {
    Rng rng(seed);
    Dataset d;
    d.X.resize(n, p);
    d.y.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < p; ++j) d.X(i, j) = rng.normal();
        d.y(i) = rng.normal();
    }
    for (int j = 0; j < p; ++j) d.column_names.push_back("x" + std::to_string(j + 1));
    return d;
}

}  // namespace

TEST_CASE("correlation weights invert the absolute correlation") {
    Eigen::VectorXd c(2);
    c << 0.5, -0.25;
    const WeightVector w = correlation_weights(c);
    CHECK(w.w(0) == doctest::Approx(2.0));
    CHECK(w.w(1) == doctest::Approx(4.0));
    CHECK(w.scheme == WeightScheme::Correlation);
}

TEST_CASE("zero correlation excludes the coordinate") {
    Eigen::VectorXd c(2);
    c << 1.0, 0.0;
    const WeightVector w = correlation_weights(c);
    CHECK(w.w(0) == doctest::Approx(1.0));
    CHECK(w.w(1) == kInf);
    CHECK(!w.is_finite(1));
    CHECK(w.num_finite() == 1);
}

TEST_CASE("least-squares weights on the orthogonal fixture invert the cross products") {
    const StandardizedDesign s = standardize(orthonormal_fixture(3.0, 1.0));
    const WeightVector w = ols_weights(s);
    CHECK(w.w(0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(w.w(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonal designs: correlation and least-squares weights differ by one scalar") {
    const StandardizedDesign s = standardize(orthonormal_fixture(3.0, 1.0));
    const WeightVector wo = ols_weights(s);
    const WeightVector wc = correlation_weights(correlations(s));
    const double ratio = wc.w(0) / wo.w(0);
    CHECK(ratio > 0.0);
    CHECK(wc.w(1) / wo.w(1) == doctest::Approx(ratio).epsilon(1e-10));
}

TEST_CASE("a response with no component on a column gives that column infinite weight") {
    const StandardizedDesign s = standardize(orthonormal_fixture(2.0, 0.0));
    const WeightVector w = ols_weights(s);
    CHECK(w.w(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.w(1) == kInf);
}

TEST_CASE("least-squares weights refuse singular designs") {
    const Dataset d = random_dataset(4, 6, 13);  // p > n
    CHECK_THROWS_AS(ols_weights(standardize(d)), SingularGram);
}

TEST_CASE("ridge weights give identical predictors identical weights") {
    // Two copies of the same column: C = [[1,1],[1,1]], xty = (2,2).
    GramCache g;
    g.C.resize(2, 2);
    g.C << 1, 1, 1, 1;
    g.xty.resize(2);
    g.xty << 2, 2;
    g.inf_norm = 2.0;
    g.n = 10;
    const WeightVector w = ridge_weights_from_gram(g, 0.2);
    // (C + 0.2 I) beta = xty  =>  beta = (0.909090..., 0.909090...).
    CHECK(1.0 / w.w(0) == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
    CHECK(w.w(0) == doctest::Approx(w.w(1)).epsilon(1e-10));

    const Eigen::VectorXd br = ridge_solution(g, 0.2);
    CHECK(br(0) == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
    CHECK(br(1) == doctest::Approx(10.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("ridge weights work where least-squares weights cannot") {
    const Dataset d = random_dataset(4, 6, 13);
    const StandardizedDesign s = standardize(d);
    const WeightVector w = ridge_weights(s, 0.2);
    CHECK(w.p() == 6);
    for (int j = 0; j < 6; ++j) CHECK(w.w(j) > 0.0);
}

TEST_CASE("growing the ridge level deflates every coefficient magnitude") {
    const Dataset d = random_dataset(30, 5, 21);
    const GramCache g = gram(standardize(d));
    const Eigen::VectorXd b1 = ridge_solution(g, 0.1);
    const Eigen::VectorXd b2 = ridge_solution(g, 1.0);
    const Eigen::VectorXd b3 = ridge_solution(g, 10.0);
    CHECK(b1.norm() > b2.norm());
    CHECK(b2.norm() > b3.norm());
    // Large level: beta ~ xty / phi, so weights approach the inverse
    // cross-product pattern up to the common factor.
    const Eigen::VectorXd b4 = ridge_solution(g, 1e6);
    for (int j = 0; j < 5; ++j) {
        CHECK(b4(j) * 1e6 == doctest::Approx(g.xty(j)).epsilon(1e-4));
    }
}

TEST_CASE("zero cross products make every ridge weight infinite") {
    GramCache g;
    g.C = Eigen::MatrixXd::Identity(3, 3);
    g.xty = Eigen::VectorXd::Zero(3);
    g.inf_norm = 1.0;
    g.n = 5;
    const WeightVector w = ridge_weights_from_gram(g, 0.2);
    for (int j = 0; j < 3; ++j) CHECK(w.w(j) == kInf);
}

TEST_CASE("uniform weights are all ones") {
    const WeightVector w = uniform_weights(4);
    for (int j = 0; j < 4; ++j) CHECK(w.w(j) == 1.0);
    CHECK(w.scheme == WeightScheme::Uniform);
}

TEST_CASE("permuting the columns permutes the weights identically") {
    const Dataset d = random_dataset(40, 5, 31);
    const std::vector<int> perm = {3, 0, 4, 1, 2};
    Dataset dp = d;
    for (int j = 0; j < 5; ++j) {
        dp.X.col(j) = d.X.col(perm[j]);
        dp.column_names[static_cast<std::size_t>(j)] =
            d.column_names[static_cast<std::size_t>(perm[j])];
    }
    const StandardizedDesign s = standardize(d);
    const StandardizedDesign sp = standardize(dp);

    const WeightVector wo = ols_weights(s);
    const WeightVector wop = ols_weights(sp);
    const WeightVector wr = ridge_weights(s, 0.2);
    const WeightVector wrp = ridge_weights(sp, 0.2);
    const WeightVector wc = correlation_weights(correlations(s));
    const WeightVector wcp = correlation_weights(correlations(sp));
    for (int j = 0; j < 5; ++j) {
        CHECK(wop.w(j) == doctest::Approx(wo.w(perm[j])).epsilon(1e-10));
        CHECK(wrp.w(j) == doctest::Approx(wr.w(perm[j])).epsilon(1e-10));
        CHECK(wcp.w(j) == doctest::Approx(wc.w(perm[j])).epsilon(1e-10));
    }
}

TEST_CASE("near-zero least-squares coefficients become exact exclusions") {
    GramCache g;
    g.C = Eigen::MatrixXd::Identity(2, 2);
    g.xty.resize(2);
    g.xty << 1.0, 1e-13;  // below the 1e-12 cutoff
    g.inf_norm = 1.0;
    g.n = 50;
    const WeightVector w = ols_weights_from_gram(g);
    CHECK(w.w(0) == doctest::Approx(1.0));
    CHECK(w.w(1) == kInf);
}
