#include "lustab/stabilizer.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <random>

#include "lustab/errors.hpp"

namespace lustab {

namespace {

Eigen::VectorXd stack_real(const Vec& v) {
    Eigen::VectorXd out(2 * v.size());
    out.head(v.size()) = v.real();
    out.tail(v.size()) = v.imag();
    return out;
}

/// Columns of V past the numerical rank.
Eigen::MatrixXd svd_nullspace(const Eigen::MatrixXd& m, double rank_tol) {
    if (m.rows() == 0) {
        return Eigen::MatrixXd::Identity(m.cols(), m.cols());
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = rank_tol * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) ++rank;
    }
    return svd.matrixV().rightCols(m.cols() - rank);
}

}  // namespace

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& m, double tol) {
    if (m.cols() == 0) return m;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * (sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

double max_principal_angle(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    const Eigen::MatrixXd qa = orthonormal_span(a);
    const Eigen::MatrixXd qb = orthonormal_span(b);
    if (qa.cols() != qb.cols()) return M_PI / 2.0;
    if (qa.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(qa.transpose() * qb);
    const double smin = svd.singularValues().minCoeff();
    return std::acos(std::clamp(smin, -1.0, 1.0));
}

StabilizerAlgebra stabilizer_algebra(const PureState& psi, double rank_tol) {
    const int n = psi.n;
    const int cols = 3 * n + 1;
    Eigen::MatrixXd system(2 * psi.amp.size(), cols);

    {
        AlgebraElement phase_only = AlgebraElement::zero(n);
        phase_only.t = 1.0;
        system.col(0) = stack_real(apply_algebra(phase_only, psi));
    }
    for (int k = 1; k <= n; ++k) {
        for (int axis = 0; axis < 3; ++axis) {
            AlgebraElement gen = AlgebraElement::zero(n);
            gen.site[static_cast<std::size_t>(k - 1)][axis] = 1.0;
            system.col(1 + 3 * (k - 1) + axis) = stack_real(apply_algebra(gen, psi));
        }
    }

    StabilizerAlgebra out;
    out.n = n;
    out.coords = svd_nullspace(system, rank_tol);
    out.dim = static_cast<int>(out.coords.cols());
    out.basis.reserve(static_cast<std::size_t>(out.dim));
    const double norm = psi.norm();
    for (int j = 0; j < out.dim; ++j) {
        AlgebraElement m = algebra_from_coords(out.coords.col(j));
        out.residual = std::max(out.residual, apply_algebra(m, psi).norm() / norm);
        out.basis.push_back(std::move(m));
    }
    return out;
}

int projection_dim(const StabilizerAlgebra& algebra, int qubit, double tol) {
    if (qubit < 1 || qubit > algebra.n) throw DimensionMismatchError("qubit index out of range");
    if (algebra.dim == 0) return 0;
    const Eigen::MatrixXd block = algebra.coords.middleRows(1 + 3 * (qubit - 1), 3);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv[i] > cutoff) ++rank;
    }
    return rank;
}

Eigen::MatrixXd intersect_coords(const StabilizerAlgebra& algebra, const std::vector<int>& qubits,
                                 double tol) {
    // Forbidden coordinates: the phase slot plus every qubit outside the set.
    std::vector<bool> allowed(static_cast<std::size_t>(algebra.n) + 1, false);
    for (int q : qubits) allowed[static_cast<std::size_t>(q)] = true;
    std::vector<int> forbidden_rows{0};
    for (int q = 1; q <= algebra.n; ++q) {
        if (!allowed[static_cast<std::size_t>(q)]) {
            for (int axis = 0; axis < 3; ++axis) forbidden_rows.push_back(1 + 3 * (q - 1) + axis);
        }
    }
    Eigen::MatrixXd constraint(forbidden_rows.size(), algebra.dim);
    for (std::size_t r = 0; r < forbidden_rows.size(); ++r) {
        constraint.row(static_cast<Eigen::Index>(r)) = algebra.coords.row(forbidden_rows[r]);
    }
    const Eigen::MatrixXd combos = svd_nullspace(constraint, tol);
    return orthonormal_span(algebra.coords * combos, tol);
}

namespace {

bool bracket_closed(const Eigen::MatrixXd& span, double tol) {
    const Eigen::Index d = span.cols();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const AlgebraElement br =
                bracket(algebra_from_coords(span.col(i)), algebra_from_coords(span.col(j)));
            const Eigen::VectorXd c = algebra_coords(br);
            const double out_of_span = (c - span * (span.transpose() * c)).norm();
            if (out_of_span > tol * std::max(1.0, c.norm())) return false;
        }
    }
    return true;
}

}  // namespace

StabilizerDecomposition decompose(const StabilizerAlgebra& algebra, double tol) {
    StabilizerDecomposition out;
    std::vector<int> candidates;
    for (int q = 1; q <= algebra.n; ++q) {
        const int pd = projection_dim(algebra, q, tol);
        if (pd == 0) {
            out.r0_qubits.push_back(q);
        } else if (pd == 1) {
            out.r1_qubits.push_back(q);
        } else {
            candidates.push_back(q);
        }
    }

    // Minimal subsets first: grow the subset size until a 3-dimensional
    // bracket-closed intersection appears, claim it, and restart.
    while (!candidates.empty()) {
        bool found = false;
        const int count = static_cast<int>(candidates.size());
        for (int size = 1; size <= count && !found; ++size) {
            std::vector<int> pick(static_cast<std::size_t>(size));
            std::vector<int> idx(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                for (int i = 0; i < size; ++i)
                    pick[static_cast<std::size_t>(i)] =
                        candidates[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                const Eigen::MatrixXd span = intersect_coords(algebra, pick, tol);
                if (span.cols() == 3 && bracket_closed(span, 1e-6)) {
                    out.blocks.push_back(pick);
                    out.block_algebras.push_back({algebra_from_coords(span.col(0)),
                                                  algebra_from_coords(span.col(1)),
                                                  algebra_from_coords(span.col(2))});
                    for (int q : pick) {
                        candidates.erase(std::find(candidates.begin(), candidates.end(), q));
                    }
                    found = true;
                    break;
                }
                // next combination
                int i = size - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == count - size + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < size; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        if (!found) {
            throw MalformedAlgebraError("qubits with projection dim >= 2 do not partition into su(2) blocks");
        }
    }
    return out;
}

bool check_block_full_weight(const StabilizerAlgebra& algebra, const std::vector<int>& block,
                             int trials, std::uint64_t seed, double tol) {
    const Eigen::MatrixXd span = intersect_coords(algebra, block);
    if (span.cols() == 0) return false;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto full_weight = [&](const Eigen::VectorXd& coords) {
        const AlgebraElement m = algebra_from_coords(coords);
        const double bound = tol * m.norm();
        for (int q : block) {
            if (m.site[static_cast<std::size_t>(q - 1)].norm() <= bound) return false;
        }
        return true;
    };

    for (Eigen::Index j = 0; j < span.cols(); ++j) {
        if (!full_weight(span.col(j))) return false;
    }
    for (int trial = 0; trial < trials; ++trial) {
        Eigen::VectorXd combo = Eigen::VectorXd::Zero(span.rows());
        for (Eigen::Index j = 0; j < span.cols(); ++j) combo += gauss(rng) * span.col(j);
        if (combo.norm() < 1e-12) continue;
        if (!full_weight(combo)) return false;
    }
    return true;
}

}  // namespace lustab
