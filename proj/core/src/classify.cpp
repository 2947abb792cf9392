#include "lustab/classify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace lustab {

namespace {

const Complex kI{0.0, 1.0};

/// g in SU(2) with g N g^dagger = i lambda Z, lambda > 0, for nonzero
/// traceless skew-Hermitian N.
std::pair<Mat2, double> diagonalize_su2(const Mat2& skew) {
    const Mat2 hermitian = -kI * skew;
    Eigen::SelfAdjointEigenSolver<Mat2> solver(hermitian);
    const double lambda = solver.eigenvalues()[1];  // ascending order
    Mat2 vectors;  // columns: +lambda then -lambda eigenvector
    vectors.col(0) = solver.eigenvectors().col(1);
    vectors.col(1) = solver.eigenvectors().col(0);
    Mat2 g = vectors.adjoint();
    const Complex det = g.determinant();
    g /= std::sqrt(det);
    return {g, lambda};
}

/// Per-qubit iX with phase (-i)^n: the operator X^{x n}.
LocalUnitaryElement all_x_flip(int n) {
    LocalUnitaryElement u;
    u.phase = std::pow(Complex(0.0, -1.0), n);
    u.site.assign(static_cast<std::size_t>(n), kI * pauli_x());
    return u;
}

LocalUnitaryElement uniform(int n, const Mat2& g) {
    LocalUnitaryElement u;
    u.phase = 1.0;
    u.site.assign(static_cast<std::size_t>(n), g);
    return u;
}

/// One SU(2) factor per qubit diagonalizing that qubit's projection of K
/// (largest-norm site over the basis). After it every basis element is
/// diagonal on every site.
LocalUnitaryElement per_qubit_diagonalizer(const StabilizerAlgebra& algebra) {
    const int n = algebra.n;
    LocalUnitaryElement u = LocalUnitaryElement::identity(n);
    for (int k = 1; k <= n; ++k) {
        Mat2 site = Mat2::Zero();
        double best = 0.0;
        for (const auto& m : algebra.basis) {
            const Mat2 candidate = m.site_matrix(k);
            if (candidate.norm() > best) {
                best = candidate.norm();
                site = candidate;
            }
        }
        if (best < 1e-10) throw ClassificationError("stabilizer misses a qubit projection");
        u.site[static_cast<std::size_t>(k - 1)] = diagonalize_su2(site).first;
    }
    return u;
}

/// iX flips (phase (-i)^#flips) clearing the set bits of `target`.
LocalUnitaryElement bit_flips(int n, std::int64_t target) {
    LocalUnitaryElement flip = LocalUnitaryElement::identity(n);
    int flips = 0;
    for (int k = 1; k <= n; ++k) {
        if ((target >> (n - k)) & 1) {
            flip.site[static_cast<std::size_t>(k - 1)] = kI * pauli_x();
            ++flips;
        }
    }
    flip.phase = std::pow(Complex(0.0, -1.0), flips);
    return flip;
}

LocalUnitaryElement canonicalize_product(const PureState& psi, const StabilizerAlgebra& algebra) {
    const int n = psi.n;
    LocalUnitaryElement canonicalizer = per_qubit_diagonalizer(algebra);
    PureState rotated = apply_group(canonicalizer, psi);
    std::int64_t lead = 0;
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (std::abs(rotated.amp[i]) > std::abs(rotated.amp[lead])) lead = i;
    }
    const double norm = rotated.norm();
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (i != lead && std::abs(rotated.amp[i]) > 1e-6 * norm)
            throw ClassificationError("support not reduced to one basis string");
    }
    if (lead != 0) canonicalizer = compose(bit_flips(n, lead), canonicalizer);
    return canonicalizer;
}

LocalUnitaryElement canonicalize_singlet(const PureState& psi, const StabilizerAlgebra& algebra) {
    (void)algebra;
    // Coefficient matrix C (psi = sum C_ij |ij>) of a singlet-class state is
    // proportional to a unitary, so X C^dagger C = s^2 X and g1 = X C^dagger
    // (scaled into SU(2), acting on qubit 1 alone) lands on |01>+|10>.
    Mat2 c;
    c << psi.amp[0], psi.amp[1], psi.amp[2], psi.amp[3];
    const double s2 = 0.5 * psi.amp.squaredNorm();
    if ((c.adjoint() * c - s2 * Mat2::Identity()).norm() > 1e-6 * psi.amp.squaredNorm())
        throw ClassificationError("unequal Schmidt coefficients in the singlet class");
    Mat2 g1 = pauli_x() * c.adjoint();
    const Complex det = g1.determinant();  // magnitude s^2
    g1 /= std::sqrt(det);
    LocalUnitaryElement canonicalizer = LocalUnitaryElement::identity(2);
    canonicalizer.site[0] = g1;
    // (g1 x Id) psi = (s^2 / sqrt(det)) (|01> + |10>); strip the leftover phase.
    const Complex scale = s2 / std::sqrt(det);
    canonicalizer.phase = std::conj(scale) / std::abs(scale);
    return canonicalizer;
}

}  // namespace

std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::Product: return "Product";
        case StateClass::GeneralizedGhz: return "GeneralizedGHZ";
        case StateClass::Singlet: return "Singlet";
        case StateClass::Dicke: return "Dicke";
        case StateClass::Discrete: return "Discrete";
    }
    return "?";
}

std::pair<double, LocalUnitaryElement> ghz_parameter(const PureState& psi,
                                                     const StabilizerAlgebra& algebra,
                                                     double tol) {
    const int n = psi.n;
    // Every qubit projection of K is spanned by a conjugate of one common
    // matrix; diagonalizing it qubit by qubit reduces the support to a pair
    // of complementary basis strings.
    LocalUnitaryElement canonicalizer = per_qubit_diagonalizer(algebra);
    PureState rotated = apply_group(canonicalizer, psi);

    // Locate the two complementary support strings.
    std::int64_t lead = 0;
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (std::abs(rotated.amp[i]) > std::abs(rotated.amp[lead])) lead = i;
    }
    const std::int64_t partner = rotated.amp.size() - 1 - lead;
    const double norm = rotated.norm();
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (i != lead && i != partner && std::abs(rotated.amp[i]) > 1e-6 * norm)
            throw ClassificationError("support not reduced to complementary basis strings");
    }
    if (lead != 0 && partner != 0) {
        // Flip the set bits of the string closer to 0...0 down to zero.
        const LocalUnitaryElement flip = bit_flips(n, std::min(lead, partner));
        canonicalizer = compose(flip, canonicalizer);
        rotated = apply_group(flip, rotated);
    }

    const std::int64_t top = rotated.amp.size() - 1;
    double a = std::abs(rotated.amp[0]);
    double b = std::abs(rotated.amp[top]);
    if (b < tol * norm && a < tol * norm)
        throw ClassificationError("support not reduced to the extreme basis strings");
    if (std::min(a, b) < tol * norm) throw ClassificationError("degenerate GHZ parameter (product state)");

    // Strip phases with qubit-local Z rotations plus a global phase.
    const double arg0 = std::arg(rotated.amp[0]);
    const double arg1 = std::arg(rotated.amp[top]);
    const double theta = (arg1 - arg0) / (2.0 * n);
    Mat2 diag = Mat2::Zero();
    diag(0, 0) = std::polar(1.0, theta);
    diag(1, 1) = std::polar(1.0, -theta);
    LocalUnitaryElement strip = uniform(n, diag);
    strip.phase = std::polar(1.0, -(arg0 + arg1) / 2.0);
    canonicalizer = compose(strip, canonicalizer);

    if (a < b) {
        canonicalizer = compose(all_x_flip(n), canonicalizer);
        std::swap(a, b);
    }
    const double t = (4.0 / std::numbers::pi) * std::atan2(b, a);
    return {t, canonicalizer};
}

std::pair<int, LocalUnitaryElement> canonicalize_dicke(const PureState& psi,
                                                       const StabilizerAlgebra& algebra,
                                                       double tol) {
    const int n = psi.n;
    if (algebra.dim != 1) throw ClassificationError("Dicke canonicalization needs dim K = 1");
    const AlgebraElement& generator = algebra.basis[0];

    // Every site carries the same eigenvalue scale; orienting each to the
    // positive Z eigenvalue aligns the generator with it0 + lambda*sum A.
    LocalUnitaryElement canonicalizer = LocalUnitaryElement::identity(n);
    double lambda = 0.0;
    for (int k = 1; k <= n; ++k) {
        const Mat2 site = generator.site_matrix(k);
        if (site.norm() < 1e-10) throw ClassificationError("stabilizer generator misses a qubit");
        const auto [g, site_lambda] = diagonalize_su2(site);
        canonicalizer.site[static_cast<std::size_t>(k - 1)] = g;
        lambda = site_lambda;
    }
    PureState rotated = apply_group(canonicalizer, psi);

    // Support must be a single weight class; the rotation is monomial, so
    // per-qubit diagonal phases may still vary across the class.
    const double norm = rotated.norm();
    std::int64_t lead = 0;
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (std::abs(rotated.amp[i]) > std::abs(rotated.amp[lead])) lead = i;
    }
    int k = weight(static_cast<MultiIndex>(lead));
    for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
        if (weight(static_cast<MultiIndex>(i)) != k &&
            std::abs(rotated.amp[i]) > 1e-6 * norm)
            throw ClassificationError("support not confined to one weight class");
    }
    if (k == 0 || k == n) throw ClassificationError("pole weight class (product state)");

    // Equalize the intra-class phases: for each qubit j > 1 compare a support
    // string having qubit 1 set and qubit j clear against its swap partner;
    // the phase ratio fixes the diagonal correction on qubit j (mod pi, which
    // only costs a global sign).
    LocalUnitaryElement strip = LocalUnitaryElement::identity(n);
    const std::int64_t bit1 = std::int64_t{1} << (n - 1);
    for (int j = 2; j <= n; ++j) {
        const std::int64_t bitj = std::int64_t{1} << (n - j);
        std::int64_t s = -1;
        for (std::int64_t i = 0; i < rotated.amp.size(); ++i) {
            if (weight(static_cast<MultiIndex>(i)) == k && (i & bit1) && !(i & bitj)) {
                s = i;
                break;
            }
        }
        if (s < 0) throw ClassificationError("weight class misses a swap pair");
        const Complex ratio = rotated.amp[s ^ bit1 ^ bitj] / rotated.amp[s];
        const double beta = std::arg(ratio) / 2.0;
        Mat2 d = Mat2::Zero();
        d(0, 0) = std::polar(1.0, beta);
        d(1, 1) = std::polar(1.0, -beta);
        strip.site[static_cast<std::size_t>(j - 1)] = d;
    }
    canonicalizer = compose(strip, canonicalizer);
    rotated = apply_group(strip, rotated);

    const DickeCoefficients d = dicke_expand(rotated, 1e-5);
    double off = 0.0;
    for (int i = 0; i <= n; ++i) {
        if (i != k) off += std::norm(d.d[i]);
    }
    if (std::sqrt(off) > 1e-5 * d.d.norm())
        throw ClassificationError("rotated state is not a single Dicke component");

    // Cross-check against the annihilated weight class read off the
    // generator's phase coefficient.
    const double t0 = generator.t / lambda;
    const double k_predicted = (n + t0) / 2.0;
    if (std::min(std::abs(k_predicted - k), std::abs((n - k_predicted) - k)) > 1e-4)
        throw ClassificationError("generator phase coefficient inconsistent with Dicke index");
    (void)tol;

    if (2 * k > n) {
        canonicalizer = compose(all_x_flip(n), canonicalizer);
        k = n - k;
    }
    return {k, canonicalizer};
}

ClassificationReport classify(const PureState& psi, double tol, double rank_tol) {
    const int n = psi.n;
    const StabilizerAlgebra algebra = stabilizer_algebra(psi, rank_tol);

    ClassificationReport report;
    report.stabilizer_dim = algebra.dim;
    report.canonicalizer = LocalUnitaryElement::identity(n);

    // The canonicalizers below certify class membership through the support
    // of the rotated state, so LU scrambles of a symmetric state (which are
    // not symmetric themselves) classify correctly. Only the discrete case
    // has no such certificate and keeps the symmetry gate.
    if (algebra.dim == n) {
        report.type = StateClass::Product;
        report.canonicalizer = canonicalize_product(psi, algebra);
        return report;
    }
    if (algebra.dim == 3 && n == 2) {
        report.type = StateClass::Singlet;
        report.canonicalizer = canonicalize_singlet(psi, algebra);
        return report;
    }
    if (algebra.dim == n - 1) {
        report.type = StateClass::GeneralizedGhz;
        auto [t, canonicalizer] = ghz_parameter(psi, algebra, tol);
        report.ghz_t = t;
        report.canonicalizer = std::move(canonicalizer);
        return report;
    }
    if (algebra.dim == 1 && n > 2) {
        report.type = StateClass::Dicke;
        auto [k, canonicalizer] = canonicalize_dicke(psi, algebra, tol);
        report.dicke_k = k;
        report.canonicalizer = std::move(canonicalizer);
        return report;
    }
    if (algebra.dim == 0) {
        if (!is_symmetric(psi, tol))
            throw NotSymmetricError("discrete classification needs a symmetric state");
        report.type = StateClass::Discrete;
        return report;
    }
    throw ClassificationError("stabilizer dimension " + std::to_string(algebra.dim) +
                              " matches no symmetric class (tolerance failure?)");
}

PureState canonical_representative(const ClassificationReport& report, int n) {
    switch (report.type) {
        case StateClass::Product: {
            Vec amp = Vec::Zero(std::int64_t{1} << n);
            amp[0] = 1.0;
            return PureState(n, std::move(amp));
        }
        case StateClass::GeneralizedGhz: {
            Vec amp = Vec::Zero(std::int64_t{1} << n);
            amp[0] = std::cos(std::numbers::pi * report.ghz_t / 4.0);
            amp[amp.size() - 1] = std::sin(std::numbers::pi * report.ghz_t / 4.0);
            return PureState(n, std::move(amp));
        }
        case StateClass::Singlet: {
            Vec amp = Vec::Zero(4);
            amp[1] = 1.0;
            amp[2] = 1.0;
            return PureState(2, std::move(amp));
        }
        case StateClass::Dicke:
            return dicke_state(n, report.dicke_k);
        case StateClass::Discrete:
            throw ClassificationError("discrete classes have no canonical representative");
    }
    throw ClassificationError("unreachable");
}

std::vector<PauliElement> pauli_stabilizer(const PureState& psi, double tol) {
    const int n = psi.n;
    if (n > 8) throw DimensionMismatchError("Pauli enumeration capped at 8 qubits");
    const double norm2 = psi.amp.squaredNorm();
    const double bound = tol * psi.norm();
    static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

    std::vector<PauliElement> out;
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    Vec image(psi.amp.size());
    for (std::uint64_t code = 0; code < total; ++code) {
        // Apply the word directly: X flips, Y flips with phase, Z signs.
        for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
            std::int64_t j = i;
            Complex factor = 1.0;
            for (int q = 0; q < n; ++q) {
                const int letter = static_cast<int>((code >> (2 * q)) & 3u);
                if (letter == 0) continue;
                const std::int64_t bit = std::int64_t{1} << (n - 1 - q);
                const bool one = (i & bit) != 0;
                switch (letter) {
                    case 1:  // X
                        j ^= bit;
                        break;
                    case 2:  // Y
                        j ^= bit;
                        factor *= one ? -kI : kI;
                        break;
                    case 3:  // Z
                        if (one) factor = -factor;
                        break;
                }
            }
            image[j] = factor * psi.amp[i];
        }
        const Complex mu = psi.amp.dot(image) / norm2;
        if (std::abs(std::abs(mu) - 1.0) > tol) continue;
        if ((image - mu * psi.amp).norm() > bound) continue;
        // Snap mu to the nearest fourth root of unity and require agreement.
        const double angle = std::arg(mu);
        const double snapped = std::round(angle / (std::numbers::pi / 2.0)) * (std::numbers::pi / 2.0);
        if (std::abs(std::remainder(angle - snapped, 2.0 * std::numbers::pi)) > 1e-6) continue;
        PauliElement element;
        element.phase = std::conj(std::polar(1.0, snapped));
        element.word.resize(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            element.word[static_cast<std::size_t>(q)] = kLetters[(code >> (2 * q)) & 3u];
        }
        out.push_back(std::move(element));
    }
    return out;
}

}  // namespace lustab
