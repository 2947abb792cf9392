#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lustab/stabilizer.hpp"

namespace lustab {

enum class StateClass {
    Product,         // dim K = n
    GeneralizedGhz,  // dim K = n-1
    Singlet,         // dim K = 3, n = 2
    Dicke,           // dim K = 1
    Discrete,        // dim K = 0
};

std::string to_string(StateClass c);

struct ClassificationReport {
    StateClass type = StateClass::Discrete;
    double ghz_t = 0.0;  // GeneralizedGhz only, in (0,1]
    int dicke_k = 0;     // Dicke only, 1..floor(n/2)
    LocalUnitaryElement canonicalizer;
    int stabilizer_dim = 0;
};

/// Dispatch on dim K_psi for a symmetric state; the canonicalizer maps psi
/// onto the canonical representative of its class (up to scale and global
/// phase).
ClassificationReport classify(const PureState& psi, double tol = kDefaultTol,
                              double rank_tol = kRankTol);

/// The canonical state a|0..0> + b|1..1> parameter t in (0,1] with
/// a = cos(pi t/4), b = sin(pi t/4), plus the LU element realizing it.
std::pair<double, LocalUnitaryElement> ghz_parameter(const PureState& psi,
                                                     const StabilizerAlgebra& algebra,
                                                     double tol = kDefaultTol);

/// The Dicke class index k <= floor(n/2) read off the one-dimensional
/// stabilizer generator, plus the canonicalizing LU element.
std::pair<int, LocalUnitaryElement> canonicalize_dicke(const PureState& psi,
                                                       const StabilizerAlgebra& algebra,
                                                       double tol = kDefaultTol);

/// Canonical representative state of a report (for verification).
PureState canonical_representative(const ClassificationReport& report, int n);

struct PauliElement {
    Complex phase;     // one of 1, i, -1, -i
    std::string word;  // e.g. "XXZI", qubit 1 first
};

/// All signed Pauli words fixing psi exactly, by brute force over 4^n words
/// (n <= 8).
std::vector<PauliElement> pauli_stabilizer(const PureState& psi, double tol = kDefaultTol);

}  // namespace lustab
