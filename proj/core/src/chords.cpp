#include "lustab/chords.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace lustab {

PairPartition::PairPartition(std::vector<std::pair<int, int>> chords_) : chords(std::move(chords_)) {
    std::vector<bool> used(2 * chords.size() + 1, false);
    for (auto& [lo, hi] : chords) {
        if (lo > hi) std::swap(lo, hi);
        if (lo < 1 || hi > static_cast<int>(2 * chords.size()) || lo == hi)
            throw ParseError("chord endpoints out of range");
        for (int v : {lo, hi}) {
            if (used[static_cast<std::size_t>(v)]) throw ParseError("repeated chord endpoint");
            used[static_cast<std::size_t>(v)] = true;
        }
    }
    std::sort(chords.begin(), chords.end());
}

std::string PairPartition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        if (i) out << ",";
        out << chords[i].first << "-" << chords[i].second;
    }
    return out.str();
}

PairPartition parse_partition(const std::string& text) {
    std::vector<std::pair<int, int>> chords;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw ParseError("bad chord: " + item);
        try {
            chords.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw ParseError("bad chord: " + item);
        }
    }
    if (chords.empty()) throw ParseError("empty partition");
    return PairPartition(std::move(chords));
}

bool has_crossing(const PairPartition& p) {
    for (std::size_t i = 0; i < p.chords.size(); ++i) {
        for (std::size_t j = i + 1; j < p.chords.size(); ++j) {
            const auto [a, b] = p.chords[i];
            const auto [c, d] = p.chords[j];
            const bool c_inside = (a < c && c < b);
            const bool d_inside = (a < d && d < b);
            if (c_inside != d_inside) return true;
        }
    }
    return false;
}

namespace {

void matchings_rec(std::vector<int>& labels, std::vector<std::pair<int, int>>& acc,
                   std::vector<PairPartition>& out) {
    if (labels.empty()) {
        out.emplace_back(acc);
        return;
    }
    const int first = labels[0];
    for (std::size_t j = 1; j < labels.size(); ++j) {
        const int partner = labels[j];
        std::vector<int> rest;
        rest.reserve(labels.size() - 2);
        for (std::size_t k = 1; k < labels.size(); ++k) {
            if (k != j) rest.push_back(labels[k]);
        }
        acc.emplace_back(first, partner);
        matchings_rec(rest, acc, out);
        acc.pop_back();
    }
}

void noncrossing_two_runs(const std::vector<int>& labels, std::vector<std::pair<int, int>>& acc,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
    if (labels.empty()) {
        out.push_back(acc);
        return;
    }
    // Pair the first label with a partner at odd offset; chords cannot
    // reach across the split, so the two runs enumerate independently.
    for (std::size_t j = 1; j < labels.size(); j += 2) {
        std::vector<int> inside(labels.begin() + 1, labels.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<int> outside(labels.begin() + static_cast<std::ptrdiff_t>(j) + 1, labels.end());
        acc.emplace_back(labels[0], labels[j]);
        const std::size_t mark = acc.size();
        std::vector<std::vector<std::pair<int, int>>> inside_completions;
        {
            std::vector<std::pair<int, int>> acc_in;
            noncrossing_two_runs(inside, acc_in, inside_completions);
        }
        for (const auto& completion : inside_completions) {
            acc.insert(acc.end(), completion.begin(), completion.end());
            noncrossing_two_runs(outside, acc, out);
            acc.resize(mark);
        }
        acc.pop_back();
    }
}

}  // namespace

std::vector<PairPartition> enumerate_noncrossing(int m) {
    if (m < 1) throw ParseError("m must be >= 1");
    std::vector<int> labels(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> acc;
    noncrossing_two_runs(labels, acc, raw);
    std::vector<PairPartition> out;
    out.reserve(raw.size());
    for (auto& chords : raw) out.emplace_back(std::move(chords));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PairPartition> enumerate_all_matchings(int m) {
    if (m < 1) throw ParseError("m must be >= 1");
    std::vector<int> labels(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < 2 * m; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::vector<PairPartition> out;
    std::vector<std::pair<int, int>> acc;
    matchings_rec(labels, acc, out);
    return out;
}

PureState singlet_product(const PairPartition& p) {
    const int n = p.n();
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    const int m = p.m();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        // bit set in mask: chord takes |10> with sign -1, else |01>.
        MultiIndex index = 0;
        int sign = 1;
        for (int c = 0; c < m; ++c) {
            const auto [lo, hi] = p.chords[static_cast<std::size_t>(c)];
            if ((mask >> c) & 1u) {
                index |= MultiIndex{1} << (n - lo);
                sign = -sign;
            } else {
                index |= MultiIndex{1} << (n - hi);
            }
        }
        amp[static_cast<std::int64_t>(index)] = sign;
    }
    return PureState(n, std::move(amp));
}

std::pair<MultiIndex, MultiIndex> leading_index(const PairPartition& p) {
    if (has_crossing(p)) throw ParseError("leading index requires a noncrossing partition");
    const int n = p.n();
    MultiIndex ip = 0;
    for (const auto& [lo, hi] : p.chords) {
        (void)lo;
        ip |= MultiIndex{1} << (n - hi);
    }
    const MultiIndex full = (MultiIndex{1} << n) - 1;
    return {ip, full & ~ip};
}

int count_partitions_hitting(int n, MultiIndex index) {
    if (n % 2 != 0) throw ParseError("qubit count must be even");
    int count = 0;
    for (const auto& p : enumerate_noncrossing(n / 2)) {
        bool hits = true;
        for (const auto& [lo, hi] : p.chords) {
            const int blo = static_cast<int>((index >> (n - lo)) & 1u);
            const int bhi = static_cast<int>((index >> (n - hi)) & 1u);
            if (blo == bhi) {
                hits = false;
                break;
            }
        }
        if (hits) ++count;
    }
    return count;
}

CDCExpansion cdc_expand(const PureState& psi, double tol) {
    if (psi.n % 2 != 0) throw DimensionMismatchError("CDC expansion requires an even qubit count");
    CDCExpansion out;
    out.partitions = enumerate_noncrossing(psi.n / 2);
    const auto count = static_cast<Eigen::Index>(out.partitions.size());
    Eigen::MatrixXcd span(psi.amp.size(), count);
    for (Eigen::Index j = 0; j < count; ++j) {
        span.col(j) = singlet_product(out.partitions[static_cast<std::size_t>(j)]).amp;
    }
    const Eigen::VectorXcd c = span.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(psi.amp);
    out.residual = (span * c - psi.amp).norm() / psi.norm();
    out.coefficients.assign(c.data(), c.data() + c.size());

    if (out.residual <= tol) {
        // Cross-check by forward substitution on the leading indices: s_Q
        // hits |I_P> only when I_Q <= I_P in dictionary order, so visiting
        // partitions by ascending I_P recovers the coefficients one by one.
        std::vector<Eigen::Index> order(static_cast<std::size_t>(count));
        std::vector<MultiIndex> leads(static_cast<std::size_t>(count));
        for (Eigen::Index j = 0; j < count; ++j) {
            order[static_cast<std::size_t>(j)] = j;
            leads[static_cast<std::size_t>(j)] =
                leading_index(out.partitions[static_cast<std::size_t>(j)]).first;
        }
        std::sort(order.begin(), order.end(),
                  [&](Eigen::Index a, Eigen::Index b) {
                      return leads[static_cast<std::size_t>(a)] < leads[static_cast<std::size_t>(b)];
                  });
        Eigen::VectorXcd direct = Eigen::VectorXcd::Zero(count);
        for (std::size_t r = 0; r < order.size(); ++r) {
            const Eigen::Index j = order[r];
            const auto ip = static_cast<std::int64_t>(leads[static_cast<std::size_t>(j)]);
            Complex value = psi.amp[ip];
            for (std::size_t q = 0; q < r; ++q) {
                const Eigen::Index i = order[q];
                value -= direct[i] * span(ip, i);
            }
            direct[j] = value;  // s_P has coefficient +1 at its own I_P
        }
        const double mismatch = (direct - c).norm() / psi.norm();
        out.residual = std::max(out.residual, mismatch);
    }
    return out;
}

SymmetricSpanReport verify_lemma1(int n, double tol) {
    if (n % 2 != 0 || n < 2) throw ParseError("n must be even and >= 2");
    const PureState dicke = dicke_state(n, n / 2);
    const CDCExpansion expansion = cdc_expand(dicke, tol);
    SymmetricSpanReport report;
    report.relative_residual = expansion.residual;
    report.in_span = expansion.residual <= tol;
    return report;
}

PureState construct_m4() {
    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const double scale = 1.0 / std::sqrt(6.0);
    Vec amp = Vec::Zero(16);
    amp[parse_bits("0011")] = scale;
    amp[parse_bits("1100")] = scale;
    amp[parse_bits("1010")] = scale * omega;
    amp[parse_bits("0101")] = scale * omega;
    amp[parse_bits("1001")] = scale * omega * omega;
    amp[parse_bits("0110")] = scale * omega * omega;
    return PureState(4, std::move(amp));
}

}  // namespace lustab
