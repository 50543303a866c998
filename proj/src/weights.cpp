#include "lags/weights.hpp"

#include <cmath>
#include <limits>

namespace lags {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kZeroCoef = 1e-12;  // |beta| below this counts as zero

WeightVector inverse_magnitude(const Eigen::VectorXd& beta, WeightScheme scheme) {
    WeightVector wv;
    wv.scheme = scheme;
    wv.w.resize(beta.size());
    for (Eigen::Index i = 0; i < beta.size(); ++i) {
        const double mag = std::abs(beta(i));
        wv.w(i) = (mag < kZeroCoef) ? kInf : 1.0 / mag;
    }
    return wv;
}

}  // namespace

Eigen::Index WeightVector::num_finite() const {
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (std::isfinite(w(i))) ++count;
    }
    return count;
}

WeightVector uniform_weights(Eigen::Index p) {
    WeightVector wv;
    wv.scheme = WeightScheme::Uniform;
    wv.w = Eigen::VectorXd::Ones(p);
    return wv;
}

WeightVector correlation_weights(const Eigen::VectorXd& c) {
    return inverse_magnitude(c, WeightScheme::Correlation);
}

Eigen::VectorXd ols_solution(const GramCache& g) {
    if (g.n < g.p()) {
        throw SingularGram("Gram matrix is rank deficient: n < p");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.C);
    const double emin = eig.eigenvalues().minCoeff();
    const double emax = eig.eigenvalues().maxCoeff();
    if (emin <= 0.0 || emax / emin > 1e12) {
        throw SingularGram("Gram matrix condition number exceeds 1e12");
    }
    return eig.eigenvectors() *
           (eig.eigenvectors().transpose() * g.xty).cwiseQuotient(eig.eigenvalues());
}

Eigen::VectorXd ridge_solution(const GramCache& g, double phi) {
    if (phi <= 0.0) throw InvalidArgument("ridge stabilizer must be positive");
    Eigen::MatrixXd M = g.C;
    M.diagonal().array() += phi;
    return Eigen::LDLT<Eigen::MatrixXd>(M).solve(g.xty);
}

WeightVector ols_weights_from_gram(const GramCache& g) {
    return inverse_magnitude(ols_solution(g), WeightScheme::InverseOls);
}

WeightVector ols_weights(const StandardizedDesign& s) {
    return ols_weights_from_gram(gram(s));
}

WeightVector ridge_weights_from_gram(const GramCache& g, double phi) {
    WeightVector wv = inverse_magnitude(ridge_solution(g, phi), WeightScheme::InverseRidge);
    wv.phi = phi;
    return wv;
}

WeightVector ridge_weights(const StandardizedDesign& s, double phi) {
    return ridge_weights_from_gram(gram(s), phi);
}

}  // namespace lags
