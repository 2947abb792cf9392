#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "lustab/errors.hpp"

namespace lustab {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

/// Computational basis indices are n-bit strings i1 i2 ... in with i1 the
/// most significant bit, so |I> sits at amplitude slot
/// sum_k i_k 2^(n-k) (dictionary order of bit strings).
using MultiIndex = std::uint64_t;

int weight(MultiIndex index);

std::string format_bits(MultiIndex index, int n);
MultiIndex parse_bits(const std::string& bits);

/// Dense n-qubit pure state. Never the zero vector; normalization is not
/// required anywhere, all tolerances scale with the norm.
struct PureState {
    int n = 0;
    Vec amp;

    PureState() = default;
    PureState(int n_, Vec amp_);

    std::int64_t dim() const { return amp.size(); }
    double norm() const { return amp.norm(); }
};

/// Unnormalized Dicke state: all weight-k basis strings with coefficient 1.
PureState dicke_state(int n, int k);

/// Invariance under the n-1 adjacent transpositions (they generate the
/// symmetric group), each checked to tol * |psi|.
bool is_symmetric(const PureState& psi, double tol = kDefaultTol);

struct DickeCoefficients {
    int n = 0;
    Vec d;  // d_0 ... d_n
};

/// Coefficients of a symmetric state in the Dicke basis. Throws
/// NotSymmetricError if amplitudes disagree within a weight class.
DickeCoefficients dicke_expand(const PureState& psi, double tol = kDefaultTol);

PureState dicke_reconstruct(const DickeCoefficients& coeffs);

PureState swap_qubits(const PureState& psi, int qa, int qb);

/// perm[k-1] is the destination qubit of qubit k (1-based both sides).
PureState permute_qubits(const PureState& psi, const std::vector<int>& perm);

/// |<u,v>| / (|u| |v|), i.e. overlap magnitude ignoring scale and phase.
double fidelity(const Vec& u, const Vec& v);

// --- state file format ---
// Line 1: "n=<int>", line 2: "format=dense" or "format=dicke", then either
// "<bitstring> <re> <im>" or "<k> <re> <im>" lines. Omitted entries are zero;
// duplicate indices are rejected.
PureState read_state(std::istream& in);
PureState read_state_file(const std::string& path);
void write_state(std::ostream& out, const PureState& psi, double tol = kDefaultTol);

}  // namespace lustab
