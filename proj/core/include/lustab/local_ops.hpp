#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lustab/state.hpp"

namespace lustab {

using Mat2 = Eigen::Matrix2cd;

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// su(2) coordinates (a,b,c) mean a*A + b*B + c*C with A=iZ, B=iY, C=iX.
Mat2 su2_matrix(const Eigen::Vector3d& abc);
Eigen::Vector3d su2_coords(const Mat2& m);

/// Element (it, M_1,...,M_n) of the local unitary Lie algebra
/// u(1) + su(2)^n, stored as the real phase coefficient t plus per-qubit
/// (a,b,c) coordinate triples.
struct AlgebraElement {
    double t = 0.0;
    std::vector<Eigen::Vector3d> site;  // size n

    static AlgebraElement zero(int n);
    int n() const { return static_cast<int>(site.size()); }
    Mat2 site_matrix(int k) const;  // 1-based qubit index
    double norm() const;
};

/// Element (e^{it}, g_1,...,g_n) of U(1) x SU(2)^n.
struct LocalUnitaryElement {
    Complex phase{1.0, 0.0};
    std::vector<Mat2> site;

    static LocalUnitaryElement identity(int n);
    int n() const { return static_cast<int>(site.size()); }
};

/// Coordinate vector (t, a_1,b_1,c_1, ..., a_n,b_n,c_n) of length 3n+1.
Eigen::VectorXd algebra_coords(const AlgebraElement& m);
AlgebraElement algebra_from_coords(const Eigen::VectorXd& coords);

Vec apply_single_qubit(const Mat2& op, const Vec& amp, int n, int qubit);

/// e^{it} (g_1 x ... x g_n) |psi>
PureState apply_group(const LocalUnitaryElement& u, const PureState& psi);

/// (it + sum_k M_k^{(k)}) |psi>; the result may be the zero vector.
Vec apply_algebra(const AlgebraElement& m, const PureState& psi);

int element_weight(const AlgebraElement& m, double tol = kDefaultTol);
int element_weight(const LocalUnitaryElement& u, double tol = kDefaultTol);

/// [M, M']: per-qubit commutators, zero phase part.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// U M U^dagger, i.e. (it, g_1 M_1 g_1^dagger, ...).
AlgebraElement conjugate(const LocalUnitaryElement& u, const AlgebraElement& m);

/// u2 after u1 (matrix product per site, phases multiplied).
LocalUnitaryElement compose(const LocalUnitaryElement& u2, const LocalUnitaryElement& u1);

/// Dense 2^n x 2^n matrix phase * g_1 x ... x g_n (small n only).
Eigen::MatrixXcd dense_operator(const LocalUnitaryElement& u);

}  // namespace lustab
