#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lustab/majorana.hpp"
#include "lustab/local_ops.hpp"

namespace lustab {

using Rotation = Eigen::Matrix3d;

/// One of the two SU(2) lifts of a rotation (the other is its negative).
Mat2 su2_from_rotation(const Rotation& r);
Rotation rotation_from_su2(const Mat2& g);

/// All rotations mapping the point multiset to itself: image pairs of a
/// fixed reference pair with matching separations and multiplicities
/// generate the candidates, each verified by a full multiset match.
/// Throws DegenerateConfigurationError when all points are equal or lie on
/// one axis (continuous symmetry; not this code path).
std::vector<Rotation> rotation_candidates(const MajoranaConfiguration& config,
                                          double tol = 1e-6);

/// Lift R to g in SU(2) and test e^{i phi} g^{x n} |psi> = |psi>; the phase
/// absorbs the lift sign, so only one lift needs testing. Empty result
/// means R does not stabilize.
std::optional<std::pair<Complex, Mat2>> lift_and_verify(const PureState& psi, const Rotation& r,
                                                        double tol = kDefaultTol);

enum class GroupClass { Trivial, Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

struct GroupLabel {
    GroupClass cls = GroupClass::Trivial;
    int k = 0;  // cyclic/dihedral order parameter
    std::string str() const;
};

/// Label a closed rotation set by order and axis census; throws
/// UnrecognizedGroupError when the census fits no finite SO(3) subgroup
/// (signals a closure or tolerance failure upstream).
GroupLabel identify_group(const std::vector<Rotation>& rotations, double tol = 1e-6);

struct StabilizerGroupElement {
    Complex phase;
    Mat2 g;
    Rotation rotation;
};

struct FiniteStabilizerReport {
    std::vector<StabilizerGroupElement> elements;
    int order = 0;
    GroupLabel label;
};

/// Full finite stabilizer of a symmetric state with dim K = 0: Majorana
/// points -> candidate rotations -> verified lifts, with group closure
/// checked on the surviving rotations.
FiniteStabilizerReport finite_stabilizer(const PureState& psi, double tol = kDefaultTol,
                                         double geom_tol = 1e-6);

}  // namespace lustab
