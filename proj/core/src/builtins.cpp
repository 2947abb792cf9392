#include "lustab/builtins.hpp"

#include <cmath>

#include "lustab/chords.hpp"

namespace lustab {

SingleQubitState named_qubit_state(char name) {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = std::sqrt(3.0) / 2.0;
    switch (name) {
        case 'a': return {1.0, 0.0};
        case 'b': return {0.0, 1.0};
        case 'c': return {r2, r2};
        case 'd': return {0.5, r3};
        case 'e': return {-0.5, r3};
        case 'f': return {r2, Complex(0.0, r2)};
        case 'g': return {r2, -r2};
        case 'h': return {r2, Complex(0.0, -r2)};
        default: throw ParseError(std::string("unknown 1-qubit state: ") + name);
    }
}

namespace {

PureState symmetrize_named(const std::string& letters) {
    std::vector<SingleQubitState> phis;
    phis.reserve(letters.size());
    for (char c : letters) phis.push_back(named_qubit_state(c));
    return symmetrize(phis);
}

PureState ghz(int n) {
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    amp[0] = 1.0;
    amp[amp.size() - 1] = 1.0;
    return PureState(n, std::move(amp));
}

PureState product(int n) {
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    amp[0] = 1.0;
    return PureState(n, std::move(amp));
}

std::pair<std::string, std::string> split_args(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) {
        colon = name.find('(');
        if (colon != std::string::npos && name.back() == ')') {
            return {name.substr(0, colon), name.substr(colon + 1, name.size() - colon - 2)};
        }
        return {name, ""};
    }
    return {name.substr(0, colon), name.substr(colon + 1)};
}

}  // namespace

PureState builtin_state(const std::string& name) {
    const auto [head, args] = split_args(name);
    try {
        if (head == "isoceles") return symmetrize_named("abc");
        if (head == "phi") return symmetrize_named("ade");
        if (head == "phi-prime") return symmetrize_named("adef");
        if (head == "tau") return symmetrize_named("abcfgh");
        if (head == "m4") return construct_m4();
        if (head == "singlet") {
            Vec amp = Vec::Zero(4);
            amp[1] = 1.0;
            amp[2] = 1.0;
            return PureState(2, std::move(amp));
        }
        if (head == "ghz") return ghz(std::stoi(args));
        if (head == "product") return product(std::stoi(args));
        if (head == "dicke") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw ParseError("dicke needs n,k");
            return dicke_state(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("bad arguments in state spec: " + name);
    } catch (const std::out_of_range&) {
        throw ParseError("bad arguments in state spec: " + name);
    }
    throw ParseError("unknown builtin state: " + name);
}

}  // namespace lustab
