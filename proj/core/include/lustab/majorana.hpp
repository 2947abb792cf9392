#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lustab/state.hpp"

namespace lustab {

struct SingleQubitState {
    Complex alpha{0.0, 0.0};  // |0> amplitude
    Complex beta{0.0, 0.0};   // |1> amplitude
};

/// Standard Bloch vector (x,y,z) of a nonzero 1-qubit state.
Eigen::Vector3d bloch_vector(const SingleQubitState& phi);

/// Sum over all n! permutations of the product state, computed through the
/// weight-class formula: the amplitude on weight-k strings is
/// k!(n-k)! * [z^k] prod_j (alpha_j + beta_j z).
PureState symmetrize(const std::vector<SingleQubitState>& phis);

struct MajoranaPoint {
    Eigen::Vector3d dir;  // unit vector
    int multiplicity = 1;
};

/// Multiset of n Bloch-sphere points, clustered with multiplicities.
struct MajoranaConfiguration {
    std::vector<MajoranaPoint> points;
    int total() const;
};

/// The n 1-qubit states (with repeats) whose symmetrized product is
/// proportional to psi: roots z_r of p(z) = sum_k d_k z^k / (k!(n-k)!) map
/// to alpha:beta = -z:1; each missing degree contributes a |0> factor.
std::vector<SingleQubitState> majorana_states(const PureState& psi, double tol = kDefaultTol);

/// majorana_states, mapped to Bloch vectors and clustered by chordal
/// distance into a point multiset.
MajoranaConfiguration majorana_roots(const PureState& psi, double tol = kDefaultTol);

}  // namespace lustab
