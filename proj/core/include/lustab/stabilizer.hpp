#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lustab/local_ops.hpp"

namespace lustab {

inline constexpr double kRankTol = 1e-8;

/// Basis of the stabilizer subalgebra K_psi = { M : M|psi> = 0 },
/// orthonormal in the natural real inner product on coordinate vectors.
struct StabilizerAlgebra {
    int n = 0;
    int dim = 0;
    std::vector<AlgebraElement> basis;
    Eigen::MatrixXd coords;  // (3n+1) x dim, orthonormal columns
    double residual = 0.0;   // max |M psi| / |psi| over the basis
};

/// Nullspace of the real-linear map (t, a_k, b_k, c_k) -> (it + sum M_k)|psi>,
/// a (2 * 2^n) x (3n+1) system solved by SVD. Singular values below
/// rank_tol * sigma_max count as zero.
StabilizerAlgebra stabilizer_algebra(const PureState& psi, double rank_tol = kRankTol);

/// Rank of the 3 x dim matrix of qubit-k coordinate triples of the basis.
int projection_dim(const StabilizerAlgebra& algebra, int qubit, double tol = kRankTol);

/// Qubit-set decomposition: su(2) blocks plus the projection-dim-1 set R1
/// and the projection-dim-0 set R0.
struct StabilizerDecomposition {
    std::vector<std::vector<int>> blocks;  // 1-based qubit labels
    std::vector<int> r1_qubits;
    std::vector<int> r0_qubits;
    std::vector<std::array<AlgebraElement, 3>> block_algebras;
};

StabilizerDecomposition decompose(const StabilizerAlgebra& algebra, double tol = kRankTol);

/// Samples elements of the block algebra (the basis itself plus random
/// combinations) and checks every in-block qubit component is nonzero.
bool check_block_full_weight(const StabilizerAlgebra& algebra, const std::vector<int>& block,
                             int trials, std::uint64_t seed = 7, double tol = 1e-6);

/// Columns of K restricted to the coordinate set of `qubits` (phase slot
/// excluded): basis of K intersected with the direct sum of those su(2)
/// summands. Returns a (3n+1) x r matrix with orthonormal columns.
Eigen::MatrixXd intersect_coords(const StabilizerAlgebra& algebra, const std::vector<int>& qubits,
                                 double tol = kRankTol);

/// Largest principal angle (radians) between the column spans of a and b.
/// Spans of unequal dimension give pi/2.
double max_principal_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Orthonormalize columns, dropping directions below tol * sigma_max.
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m, double tol = kRankTol);

}  // namespace lustab
