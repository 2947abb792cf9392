#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lustab/state.hpp"

namespace lustab {

/// Partition of {1,...,2m} into m unordered pairs (chords of a circle
/// diagram). Chords are stored as (lo, hi) and sorted by lo.
struct PairPartition {
    std::vector<std::pair<int, int>> chords;

    explicit PairPartition(std::vector<std::pair<int, int>> chords_);
    int m() const { return static_cast<int>(chords.size()); }
    int n() const { return 2 * m(); }

    bool operator==(const PairPartition& other) const { return chords == other.chords; }
    bool operator<(const PairPartition& other) const { return chords < other.chords; }

    std::string str() const;  // "1-4,2-3"
};

PairPartition parse_partition(const std::string& text);

/// True iff chords {i,j}, {k,l} exist with i < k < j < l.
bool has_crossing(const PairPartition& p);

/// All noncrossing pair partitions of {1,...,2m}; the count is the m-th
/// Catalan number.
std::vector<PairPartition> enumerate_noncrossing(int m);

/// All (2m-1)!! perfect matchings, crossing or not.
std::vector<PairPartition> enumerate_all_matchings(int m);

/// Product of singlets |01>-|10> over the chords; the lower chord endpoint
/// takes the first slot of each factor, which fixes the global sign.
PureState singlet_product(const PairPartition& p);

/// (I_P, I_P^c): I_P puts 0 on the smaller and 1 on the larger endpoint of
/// each chord; the first basis string of the singlet-product expansion.
/// Rejects crossing partitions.
std::pair<MultiIndex, MultiIndex> leading_index(const PairPartition& p);

/// Number of noncrossing partitions whose singlet product has nonzero
/// amplitude at |I> (every chord must see opposite bits).
int count_partitions_hitting(int n, MultiIndex index);

struct CDCExpansion {
    std::vector<PairPartition> partitions;
    std::vector<Complex> coefficients;
    double residual = 0.0;  // relative to |psi|
};

/// Least-squares coefficients of psi over the span of the noncrossing
/// singlet products; residual 0 (within tol) means psi is a chord diagram
/// construction, and the expansion is then the unique one.
CDCExpansion cdc_expand(const PureState& psi, double tol = kDefaultTol);

struct SymmetricSpanReport {
    bool in_span = false;
    double relative_residual = 0.0;
};

/// Projects the middle Dicke state |D_n^{(m)}> onto the noncrossing span;
/// in_span must come out false for every even n (no CDC is symmetric).
SymmetricSpanReport verify_lemma1(int n, double tol = kDefaultTol);

/// The 4-qubit state (1/sqrt 6)[|0011>+|1100> + w(|1010>+|0101>)
/// + w^2(|1001>+|0110>)], w = exp(2 pi i/3).
PureState construct_m4();

}  // namespace lustab
