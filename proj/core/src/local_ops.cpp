#include "lustab/local_ops.hpp"

#include <cmath>

namespace lustab {

namespace {
const Complex kI{0.0, 1.0};
}

Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << 0, -kI, kI, 0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 su2_matrix(const Eigen::Vector3d& abc) {
    // a*iZ + b*iY + c*iX
    const double a = abc[0], b = abc[1], c = abc[2];
    Mat2 m;
    m << Complex(0, a), Complex(b, c), Complex(-b, c), Complex(0, -a);
    return m;
}

Eigen::Vector3d su2_coords(const Mat2& m) {
    return {m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag()};
}

AlgebraElement AlgebraElement::zero(int n) {
    AlgebraElement m;
    m.t = 0.0;
    m.site.assign(static_cast<std::size_t>(n), Eigen::Vector3d::Zero());
    return m;
}

Mat2 AlgebraElement::site_matrix(int k) const {
    return su2_matrix(site[static_cast<std::size_t>(k - 1)]);
}

double AlgebraElement::norm() const {
    double s = t * t;
    for (const auto& v : site) s += v.squaredNorm();
    return std::sqrt(s);
}

LocalUnitaryElement LocalUnitaryElement::identity(int n) {
    LocalUnitaryElement u;
    u.phase = 1.0;
    u.site.assign(static_cast<std::size_t>(n), Mat2::Identity());
    return u;
}

Eigen::VectorXd algebra_coords(const AlgebraElement& m) {
    Eigen::VectorXd v(3 * m.n() + 1);
    v[0] = m.t;
    for (int k = 0; k < m.n(); ++k) v.segment<3>(1 + 3 * k) = m.site[static_cast<std::size_t>(k)];
    return v;
}

AlgebraElement algebra_from_coords(const Eigen::VectorXd& coords) {
    const int n = static_cast<int>((coords.size() - 1) / 3);
    AlgebraElement m = AlgebraElement::zero(n);
    m.t = coords[0];
    for (int k = 0; k < n; ++k) m.site[static_cast<std::size_t>(k)] = coords.segment<3>(1 + 3 * k);
    return m;
}

Vec apply_single_qubit(const Mat2& op, const Vec& amp, int n, int qubit) {
    const int pos = n - qubit;  // bit position from LSB
    const std::int64_t bit = std::int64_t{1} << pos;
    Vec out(amp.size());
    for (std::int64_t i = 0; i < amp.size(); ++i) {
        if (i & bit) continue;
        const Complex v0 = amp[i];
        const Complex v1 = amp[i | bit];
        out[i] = op(0, 0) * v0 + op(0, 1) * v1;
        out[i | bit] = op(1, 0) * v0 + op(1, 1) * v1;
    }
    return out;
}

PureState apply_group(const LocalUnitaryElement& u, const PureState& psi) {
    if (u.n() != psi.n) throw DimensionMismatchError("group element / state qubit count mismatch");
    Vec amp = psi.amp;
    for (int k = 1; k <= psi.n; ++k) {
        amp = apply_single_qubit(u.site[static_cast<std::size_t>(k - 1)], amp, psi.n, k);
    }
    amp *= u.phase;
    return PureState(psi.n, std::move(amp));
}

Vec apply_algebra(const AlgebraElement& m, const PureState& psi) {
    if (m.n() != psi.n) throw DimensionMismatchError("algebra element / state qubit count mismatch");
    Vec out = kI * m.t * psi.amp;
    for (int k = 1; k <= psi.n; ++k) {
        out += apply_single_qubit(m.site_matrix(k), psi.amp, psi.n, k);
    }
    return out;
}

int element_weight(const AlgebraElement& m, double tol) {
    int w = 0;
    const double bound = tol * (m.norm() + 1.0);
    for (const auto& v : m.site) {
        if (v.norm() > bound) ++w;
    }
    return w;
}

int element_weight(const LocalUnitaryElement& u, double tol) {
    int w = 0;
    for (const auto& g : u.site) {
        if ((g - Mat2::Identity()).norm() > tol) ++w;
    }
    return w;
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n()) throw DimensionMismatchError("bracket of mismatched elements");
    AlgebraElement out = AlgebraElement::zero(a.n());
    for (int k = 1; k <= a.n(); ++k) {
        const Mat2 ma = a.site_matrix(k);
        const Mat2 mb = b.site_matrix(k);
        out.site[static_cast<std::size_t>(k - 1)] = su2_coords(ma * mb - mb * ma);
    }
    return out;
}

AlgebraElement conjugate(const LocalUnitaryElement& u, const AlgebraElement& m) {
    if (u.n() != m.n()) throw DimensionMismatchError("conjugate of mismatched elements");
    AlgebraElement out = AlgebraElement::zero(m.n());
    out.t = m.t;
    for (int k = 1; k <= m.n(); ++k) {
        const Mat2& g = u.site[static_cast<std::size_t>(k - 1)];
        out.site[static_cast<std::size_t>(k - 1)] = su2_coords(g * m.site_matrix(k) * g.adjoint());
    }
    return out;
}

LocalUnitaryElement compose(const LocalUnitaryElement& u2, const LocalUnitaryElement& u1) {
    if (u2.n() != u1.n()) throw DimensionMismatchError("compose of mismatched elements");
    LocalUnitaryElement out;
    out.phase = u2.phase * u1.phase;
    out.site.resize(u1.site.size());
    for (std::size_t k = 0; k < u1.site.size(); ++k) out.site[k] = u2.site[k] * u1.site[k];
    return out;
}

Eigen::MatrixXcd dense_operator(const LocalUnitaryElement& u) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto& g : u.site) {
        // op <- kron(op, g); qubit 1 stays the most significant factor
        Eigen::MatrixXcd next(op.rows() * 2, op.cols() * 2);
        for (Eigen::Index r = 0; r < op.rows(); ++r) {
            for (Eigen::Index c = 0; c < op.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = op(r, c) * g;
            }
        }
        op = std::move(next);
    }
    return u.phase * op;
}

}  // namespace lustab
