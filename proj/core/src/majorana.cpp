#include "lustab/majorana.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "lustab/errors.hpp"

namespace lustab {

Eigen::Vector3d bloch_vector(const SingleQubitState& phi) {
    const double norm2 = std::norm(phi.alpha) + std::norm(phi.beta);
    if (norm2 == 0.0) throw DimensionMismatchError("zero 1-qubit state");
    const Complex cross = std::conj(phi.alpha) * phi.beta;
    return {2.0 * cross.real() / norm2, 2.0 * cross.imag() / norm2,
            (std::norm(phi.alpha) - std::norm(phi.beta)) / norm2};
}

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Coefficients of prod_j (alpha_j + beta_j z).
Eigen::VectorXcd product_polynomial(const std::vector<SingleQubitState>& phis) {
    Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(phis.size()) + 1);
    coeff[0] = 1.0;
    Eigen::Index degree = 0;
    for (const auto& phi : phis) {
        for (Eigen::Index k = degree + 1; k > 0; --k) {
            coeff[k] = coeff[k] * phi.alpha + coeff[k - 1] * phi.beta;
        }
        coeff[0] *= phi.alpha;
        ++degree;
    }
    return coeff;
}

/// Roots via the companion matrix of the monic polynomial, polished by a few
/// Newton steps on the original coefficients.
std::vector<Complex> polynomial_roots(const Eigen::VectorXcd& coeff) {
    const Eigen::Index degree = coeff.size() - 1;
    if (degree == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeff[i] / coeff[degree];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);

    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    for (Eigen::Index i = 0; i < degree; ++i) {
        Complex z = solver.eigenvalues()[i];
        for (int step = 0; step < 3; ++step) {
            Complex p = 0.0, dp = 0.0;
            for (Eigen::Index k = degree; k >= 0; --k) {
                dp = dp * z + p;
                p = p * z + coeff[k];
            }
            if (std::abs(dp) < 1e-300) break;
            const Complex delta = p / dp;
            if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) break;
            z -= delta;
        }
        roots.push_back(z);
    }
    return roots;
}

}  // namespace

PureState symmetrize(const std::vector<SingleQubitState>& phis) {
    const int n = static_cast<int>(phis.size());
    if (n < 1) throw DimensionMismatchError("symmetrize needs at least one state");
    const Eigen::VectorXcd coeff = product_polynomial(phis);
    DickeCoefficients d{n, Vec(n + 1)};
    for (int k = 0; k <= n; ++k) {
        d.d[k] = factorial(k) * factorial(n - k) * coeff[k];
    }
    if (d.d.norm() == 0.0) throw DimensionMismatchError("symmetrization vanished");
    return dicke_reconstruct(d);
}

std::vector<SingleQubitState> majorana_states(const PureState& psi, double tol) {
    if (!is_symmetric(psi, tol)) throw NotSymmetricError("majorana_states needs a symmetric state");
    const int n = psi.n;
    const DickeCoefficients d = dicke_expand(psi, tol);
    Eigen::VectorXcd coeff(n + 1);
    for (int k = 0; k <= n; ++k) coeff[k] = d.d[k] / (factorial(k) * factorial(n - k));

    const double max_coeff = coeff.cwiseAbs().maxCoeff();
    const double cutoff = 1e-10 * max_coeff;

    // Missing leading degrees are roots at infinity: |0> factors.
    int degree = n;
    while (degree > 0 && std::abs(coeff[degree]) <= cutoff) --degree;
    // Trailing zero coefficients are exact roots at z = 0: |1> factors.
    int zeros = 0;
    while (zeros < degree && std::abs(coeff[zeros]) <= cutoff) ++zeros;

    std::vector<SingleQubitState> states;
    states.reserve(static_cast<std::size_t>(n));
    for (int i = degree; i < n; ++i) states.push_back({1.0, 0.0});
    for (int i = 0; i < zeros; ++i) states.push_back({0.0, 1.0});

    const Eigen::VectorXcd reduced = coeff.segment(zeros, degree - zeros + 1);
    for (const Complex& z : polynomial_roots(reduced)) {
        const double scale = std::sqrt(1.0 + std::norm(z));
        states.push_back({-z / scale, 1.0 / scale});
    }
    return states;
}

int MajoranaConfiguration::total() const {
    int sum = 0;
    for (const auto& p : points) sum += p.multiplicity;
    return sum;
}

MajoranaConfiguration majorana_roots(const PureState& psi, double tol) {
    const std::vector<SingleQubitState> states = majorana_states(psi, tol);
    MajoranaConfiguration config;
    for (const auto& s : states) {
        const Eigen::Vector3d v = bloch_vector(s);
        bool merged = false;
        for (auto& p : config.points) {
            // Bloch-vector distance is twice the chordal root distance.
            if ((p.dir - v).norm() < 2e-6) {
                p.dir = (p.dir * p.multiplicity + v) / (p.multiplicity + 1);
                ++p.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) config.points.push_back({v, 1});
    }
    for (auto& p : config.points) p.dir.normalize();
    return config;
}

}  // namespace lustab
