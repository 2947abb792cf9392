#include "lustab/state.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace lustab {

int weight(MultiIndex index) {
    return std::popcount(index);
}

std::string format_bits(MultiIndex index, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int k = 0; k < n; ++k) {
        if ((index >> (n - 1 - k)) & 1u) out[static_cast<std::size_t>(k)] = '1';
    }
    return out;
}

MultiIndex parse_bits(const std::string& bits) {
    MultiIndex index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("bad bit string: " + bits);
        index = (index << 1) | static_cast<MultiIndex>(c - '0');
    }
    return index;
}

PureState::PureState(int n_, Vec amp_) : n(n_), amp(std::move(amp_)) {
    if (n < 1) throw DimensionMismatchError("qubit count must be positive");
    if (amp.size() != (std::int64_t{1} << n))
        throw DimensionMismatchError("amplitude vector has wrong length");
    if (amp.norm() == 0.0) throw DimensionMismatchError("zero state vector");
}

PureState dicke_state(int n, int k) {
    if (k < 0 || k > n) throw DimensionMismatchError("Dicke index out of range");
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    for (std::int64_t i = 0; i < amp.size(); ++i) {
        if (weight(static_cast<MultiIndex>(i)) == k) amp[i] = 1.0;
    }
    return PureState(n, std::move(amp));
}

PureState swap_qubits(const PureState& psi, int qa, int qb) {
    if (qa < 1 || qb < 1 || qa > psi.n || qb > psi.n)
        throw DimensionMismatchError("qubit index out of range");
    if (qa == qb) return psi;
    const int pa = psi.n - qa;
    const int pb = psi.n - qb;
    Vec out(psi.amp.size());
    for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
        const std::int64_t ba = (i >> pa) & 1;
        const std::int64_t bb = (i >> pb) & 1;
        std::int64_t j = i & ~((std::int64_t{1} << pa) | (std::int64_t{1} << pb));
        j |= (bb << pa) | (ba << pb);
        out[j] = psi.amp[i];
    }
    return PureState(psi.n, std::move(out));
}

PureState permute_qubits(const PureState& psi, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != psi.n)
        throw DimensionMismatchError("permutation length mismatch");
    Vec out = Vec::Zero(psi.amp.size());
    for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
        std::int64_t j = 0;
        for (int k = 1; k <= psi.n; ++k) {
            const std::int64_t bit = (i >> (psi.n - k)) & 1;
            j |= bit << (psi.n - perm[static_cast<std::size_t>(k - 1)]);
        }
        out[j] = psi.amp[i];
    }
    return PureState(psi.n, std::move(out));
}

bool is_symmetric(const PureState& psi, double tol) {
    const double bound = tol * psi.norm();
    for (int q = 1; q < psi.n; ++q) {
        if ((swap_qubits(psi, q, q + 1).amp - psi.amp).norm() > bound) return false;
    }
    return true;
}

DickeCoefficients dicke_expand(const PureState& psi, double tol) {
    const double bound = tol * psi.norm();
    Vec d = Vec::Zero(psi.n + 1);
    std::vector<bool> seen(static_cast<std::size_t>(psi.n) + 1, false);
    for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
        const int k = weight(static_cast<MultiIndex>(i));
        if (!seen[static_cast<std::size_t>(k)]) {
            d[k] = psi.amp[i];
            seen[static_cast<std::size_t>(k)] = true;
        } else if (std::abs(psi.amp[i] - d[k]) > bound) {
            throw NotSymmetricError("amplitudes differ within weight class " + std::to_string(k));
        }
    }
    return DickeCoefficients{psi.n, std::move(d)};
}

PureState dicke_reconstruct(const DickeCoefficients& coeffs) {
    Vec amp(std::int64_t{1} << coeffs.n);
    for (std::int64_t i = 0; i < amp.size(); ++i) {
        amp[i] = coeffs.d[weight(static_cast<MultiIndex>(i))];
    }
    return PureState(coeffs.n, std::move(amp));
}

double fidelity(const Vec& u, const Vec& v) {
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return std::abs(u.dot(v)) / (nu * nv);
}

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        const auto end = line.find_last_not_of(" \t\r");
        return line.substr(pos, end - pos + 1);
    }
    return {};
}

}  // namespace

PureState read_state(std::istream& in) {
    std::string header = next_content_line(in);
    if (header.rfind("n=", 0) != 0) throw ParseError("expected n=<int> header");
    int n = 0;
    try {
        n = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad qubit count: " + header);
    }
    if (n < 1 || n > 24) throw ParseError("qubit count out of range");

    std::string fmt = next_content_line(in);
    const bool dense = (fmt == "format=dense");
    if (!dense && fmt != "format=dicke") throw ParseError("expected format=dense or format=dicke");

    Vec amp = Vec::Zero(std::int64_t{1} << n);
    Vec d = Vec::Zero(n + 1);
    std::set<std::int64_t> used;
    std::string line;
    while (!(line = next_content_line(in)).empty()) {
        std::istringstream row(line);
        std::string key;
        double re = 0.0, im = 0.0;
        if (!(row >> key >> re >> im)) throw ParseError("bad state line: " + line);
        if (dense) {
            if (static_cast<int>(key.size()) != n) throw ParseError("bit string length mismatch: " + key);
            const auto idx = static_cast<std::int64_t>(parse_bits(key));
            if (!used.insert(idx).second) throw ParseError("duplicate index: " + key);
            amp[idx] = Complex(re, im);
        } else {
            int k = 0;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("bad Dicke index: " + key);
            }
            if (k < 0 || k > n) throw ParseError("Dicke index out of range: " + key);
            if (!used.insert(k).second) throw ParseError("duplicate index: " + key);
            d[k] = Complex(re, im);
        }
    }
    if (!dense) return dicke_reconstruct(DickeCoefficients{n, std::move(d)});
    if (amp.norm() == 0.0) throw ParseError("state file describes the zero vector");
    return PureState(n, std::move(amp));
}

PureState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_state(in);
}

void write_state(std::ostream& out, const PureState& psi, double tol) {
    out << "n=" << psi.n << "\n";
    out << "format=dense\n";
    const double bound = tol * psi.norm();
    out.precision(17);
    for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
        if (std::abs(psi.amp[i]) > bound) {
            out << format_bits(static_cast<MultiIndex>(i), psi.n) << " " << psi.amp[i].real()
                << " " << psi.amp[i].imag() << "\n";
        }
    }
}

}  // namespace lustab
