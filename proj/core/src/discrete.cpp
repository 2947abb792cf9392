#include "lustab/discrete.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lustab/stabilizer.hpp"

namespace lustab {

namespace {

const Complex kI{0.0, 1.0};

bool same_rotation(const Rotation& a, const Rotation& b, double tol) {
    return (a - b).norm() < tol;
}

}  // namespace

Mat2 su2_from_rotation(const Rotation& r) {
    const Eigen::Quaterniond q(r);
    // g = w Id - i (x X + y Y + z Z) covers the rotation.
    Mat2 g;
    g << Complex(q.w(), -q.z()), Complex(-q.y(), -q.x()), Complex(q.y(), -q.x()),
        Complex(q.w(), q.z());
    return g;
}

Rotation rotation_from_su2(const Mat2& g) {
    const double w = 0.5 * (g(0, 0) + g(1, 1)).real();
    const double z = -0.5 * (g(0, 0) - g(1, 1)).imag();
    const double x = -0.5 * (g(0, 1) + g(1, 0)).imag();
    const double y = -0.5 * (g(0, 1) - g(1, 0)).real();
    Eigen::Quaterniond q(w, x, y, z);
    q.normalize();
    return q.toRotationMatrix();
}

std::vector<Rotation> rotation_candidates(const MajoranaConfiguration& config, double tol) {
    const auto& pts = config.points;
    if (pts.size() < 2) {
        throw DegenerateConfigurationError("all Majorana points coincide");
    }
    // Reference pair: two points whose directions are not (anti)parallel.
    int ref_a = -1, ref_b = -1;
    for (std::size_t i = 0; i < pts.size() && ref_a < 0; ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].dir.cross(pts[j].dir).norm() > 1e-8) {
                ref_a = static_cast<int>(i);
                ref_b = static_cast<int>(j);
                break;
            }
        }
    }
    if (ref_a < 0) {
        throw DegenerateConfigurationError("all Majorana points lie on one axis");
    }

    const Eigen::Vector3d pa = pts[static_cast<std::size_t>(ref_a)].dir;
    const Eigen::Vector3d pb = pts[static_cast<std::size_t>(ref_b)].dir;
    const double separation = pa.dot(pb);

    auto frame = [](const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
        Eigen::Matrix3d f;
        f.col(0) = u;
        f.col(1) = (v - u.dot(v) * u).normalized();
        f.col(2) = u.cross(f.col(1));
        return f;
    };
    const Eigen::Matrix3d ref_frame = frame(pa, pb);

    auto maps_multiset = [&](const Rotation& r) {
        for (const auto& p : pts) {
            const Eigen::Vector3d image = r * p.dir;
            bool matched = false;
            for (const auto& q : pts) {
                if ((image - q.dir).norm() < tol) {
                    matched = (q.multiplicity == p.multiplicity);
                    break;
                }
            }
            if (!matched) return false;
        }
        return true;
    };

    std::vector<Rotation> out;
    for (const auto& qa : pts) {
        if (qa.multiplicity != pts[static_cast<std::size_t>(ref_a)].multiplicity) continue;
        for (const auto& qb : pts) {
            if (&qa == &qb) continue;
            if (qb.multiplicity != pts[static_cast<std::size_t>(ref_b)].multiplicity) continue;
            if (std::abs(qa.dir.dot(qb.dir) - separation) > 10 * tol) continue;
            const Rotation r = frame(qa.dir, qb.dir) * ref_frame.transpose();
            if (!maps_multiset(r)) continue;
            bool duplicate = false;
            for (const auto& seen : out) {
                if (same_rotation(seen, r, 1e-6)) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) out.push_back(r);
        }
    }
    return out;
}

std::optional<std::pair<Complex, Mat2>> lift_and_verify(const PureState& psi, const Rotation& r,
                                                        double tol) {
    const Mat2 g = su2_from_rotation(r);
    LocalUnitaryElement u;
    u.phase = 1.0;
    u.site.assign(static_cast<std::size_t>(psi.n), g);
    const PureState image = apply_group(u, psi);
    const Complex lambda = psi.amp.dot(image.amp) / psi.amp.squaredNorm();
    if (std::abs(std::abs(lambda) - 1.0) > tol) return std::nullopt;
    if ((image.amp - lambda * psi.amp).norm() > tol * psi.norm()) return std::nullopt;
    return std::make_pair(std::conj(lambda), g);
}

FiniteStabilizerReport finite_stabilizer(const PureState& psi, double tol, double geom_tol) {
    if (!is_symmetric(psi, tol)) throw NotSymmetricError("finite_stabilizer needs a symmetric state");
    if (stabilizer_algebra(psi).dim > 0)
        throw DegenerateConfigurationError(
            "state has continuous symmetry; route through the classifier");
    const MajoranaConfiguration config = majorana_roots(psi, tol);
    const std::vector<Rotation> candidates = rotation_candidates(config, geom_tol);

    FiniteStabilizerReport report;
    for (const Rotation& r : candidates) {
        if (auto lift = lift_and_verify(psi, r, std::max(tol, 1e-7))) {
            report.elements.push_back({lift->first, lift->second, r});
        }
    }
    report.order = static_cast<int>(report.elements.size());

    std::vector<Rotation> rotations;
    rotations.reserve(report.elements.size());
    for (const auto& e : report.elements) rotations.push_back(e.rotation);

    // Group closure on the surviving rotations.
    for (const auto& a : rotations) {
        for (const auto& b : rotations) {
            const Rotation product = a * b;
            bool inside = false;
            for (const auto& c : rotations) {
                if (same_rotation(product, c, 1e-5)) {
                    inside = true;
                    break;
                }
            }
            if (!inside) throw UnrecognizedGroupError("verified rotations are not closed");
        }
    }
    report.label = identify_group(rotations, geom_tol);
    return report;
}

std::string GroupLabel::str() const {
    switch (cls) {
        case GroupClass::Trivial: return "trivial";
        case GroupClass::Cyclic: return "cyclic(" + std::to_string(k) + ")";
        case GroupClass::Dihedral: return "dihedral(" + std::to_string(k) + ")";
        case GroupClass::Tetrahedral: return "tetrahedral";
        case GroupClass::Octahedral: return "octahedral";
        case GroupClass::Icosahedral: return "icosahedral";
    }
    return "?";
}

GroupLabel identify_group(const std::vector<Rotation>& rotations, double tol) {
    const int order = static_cast<int>(rotations.size());
    if (order == 0) throw UnrecognizedGroupError("empty rotation set");
    if (order == 1) return {GroupClass::Trivial, 0};

    struct Axis {
        Eigen::Vector3d dir;
        int count = 0;       // non-identity rotations about this axis
        bool half = false;   // has a pi rotation
    };
    std::vector<Axis> axes;
    int non_identity = 0;
    for (const auto& r : rotations) {
        const Eigen::AngleAxisd aa(r);
        if (std::abs(aa.angle()) < 1e-8) continue;
        ++non_identity;
        Eigen::Vector3d axis = aa.axis();
        // canonical hemisphere
        if (axis.z() < -tol || (std::abs(axis.z()) < tol && axis.y() < -tol) ||
            (std::abs(axis.z()) < tol && std::abs(axis.y()) < tol && axis.x() < 0)) {
            axis = -axis;
        }
        bool found = false;
        const bool is_half = std::abs(std::abs(aa.angle()) - std::numbers::pi) < 1e-6;
        for (auto& a : axes) {
            if ((a.dir - axis).norm() < 1e-5) {
                ++a.count;
                a.half = a.half || is_half;
                found = true;
                break;
            }
        }
        if (!found) axes.push_back({axis, 1, is_half});
    }
    if (non_identity + 1 != order)
        throw UnrecognizedGroupError("identity element missing or duplicated");

    if (axes.size() == 1) return {GroupClass::Cyclic, order};

    // Principal axis: the one carrying the most rotations.
    const auto principal =
        std::max_element(axes.begin(), axes.end(),
                         [](const Axis& a, const Axis& b) { return a.count < b.count; });
    const int k = principal->count + 1;

    if (order == 2 * k) {
        int perpendicular_halves = 0;
        for (const auto& a : axes) {
            if (&a == &*principal) continue;
            if (a.half && std::abs(a.dir.dot(principal->dir)) < 1e-5) {
                perpendicular_halves += a.count;
            }
        }
        if (perpendicular_halves == k) return {GroupClass::Dihedral, k};
    }
    if (order == 12 && k == 3) return {GroupClass::Tetrahedral, 0};
    if (order == 24 && k == 4) return {GroupClass::Octahedral, 0};
    if (order == 60 && k == 5) return {GroupClass::Icosahedral, 0};
    throw UnrecognizedGroupError("axis census matches no finite SO(3) subgroup");
}

}  // namespace lustab
