// Command-line front end: state parsing, pipeline dispatch, JSON/text reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numbers>

#include "lustab/builtins.hpp"
#include "lustab/chords.hpp"
#include "lustab/classify.hpp"
#include "lustab/discrete.hpp"
#include "lustab/majorana.hpp"
#include "lustab/stabilizer.hpp"
#include "lustab/verify.hpp"

using json = nlohmann::json;
using namespace lustab;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

/// "file:path", a builtin name, or an inline spec like "dicke:4,2".
PureState load_state(const std::string& spec, int max_n) {
    PureState psi = spec.rfind("file:", 0) == 0 ? read_state_file(spec.substr(5))
                                                : builtin_state(spec);
    if (psi.n > max_n) {
        throw ParseError("state has " + std::to_string(psi.n) + " qubits, over --max-n " +
                         std::to_string(max_n));
    }
    return psi;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json element_json(const AlgebraElement& m) {
    json sites = json::array();
    for (const auto& s : m.site) sites.push_back({s[0], s[1], s[2]});
    return {{"t", m.t}, {"sites", sites}};
}

json unitary_json(const LocalUnitaryElement& u) {
    json sites = json::array();
    for (const auto& g : u.site) {
        sites.push_back({complex_json(g(0, 0)), complex_json(g(0, 1)), complex_json(g(1, 0)),
                         complex_json(g(1, 1))});
    }
    return {{"phase", complex_json(u.phase)}, {"sites", sites}};
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        json wrapped = report;
        wrapped["schema"] = 1;
        std::cout << wrapped.dump(2) << "\n";
    }
}

int cmd_classify(const std::string& spec, int max_n, double tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    const ClassificationReport report = classify(psi, tol);
    json out = {{"type", to_string(report.type)},
                {"stabilizer_dim", report.stabilizer_dim},
                {"canonicalizer", unitary_json(report.canonicalizer)}};
    if (report.type == StateClass::GeneralizedGhz) out["t"] = report.ghz_t;
    if (report.type == StateClass::Dicke) out["k"] = report.dicke_k;
    emit(out, as_json);
    if (!as_json) {
        std::cout << "type: " << to_string(report.type) << "\n";
        std::cout << "stabilizer dim: " << report.stabilizer_dim << "\n";
        if (report.type == StateClass::GeneralizedGhz) std::cout << "t: " << report.ghz_t << "\n";
        if (report.type == StateClass::Dicke) std::cout << "k: " << report.dicke_k << "\n";
    }
    return 0;
}

int cmd_stab_algebra(const std::string& spec, int max_n, double rank_tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    const StabilizerAlgebra algebra = stabilizer_algebra(psi, rank_tol);
    json basis = json::array();
    for (const auto& m : algebra.basis) basis.push_back(element_json(m));
    emit({{"n", algebra.n}, {"dim", algebra.dim}, {"residual", algebra.residual}, {"basis", basis}},
         as_json);
    if (!as_json) {
        std::cout << "dim: " << algebra.dim << " (residual " << algebra.residual << ")\n";
        for (const auto& m : algebra.basis) {
            std::cout << "t=" << m.t;
            for (int k = 1; k <= algebra.n; ++k) {
                const auto& s = m.site[static_cast<std::size_t>(k - 1)];
                std::cout << "  (" << s[0] << "," << s[1] << "," << s[2] << ")";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_stab_group(const std::string& spec, int max_n, double tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    const FiniteStabilizerReport report = finite_stabilizer(psi, tol);
    json elements = json::array();
    for (const auto& e : report.elements) {
        elements.push_back({{"phase", complex_json(e.phase)},
                            {"g", {complex_json(e.g(0, 0)), complex_json(e.g(0, 1)),
                                   complex_json(e.g(1, 0)), complex_json(e.g(1, 1))}}});
    }
    emit({{"order", report.order}, {"label", report.label.str()}, {"elements", elements}}, as_json);
    if (!as_json) {
        std::cout << "order: " << report.order << "\n";
        std::cout << "label: " << report.label.str() << "\n";
    }
    return 0;
}

int cmd_majorana(const std::string& spec, int max_n, double tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    const MajoranaConfiguration config = majorana_roots(psi, tol);
    json points = json::array();
    for (const auto& p : config.points) {
        points.push_back(
            {{"dir", {p.dir[0], p.dir[1], p.dir[2]}}, {"multiplicity", p.multiplicity}});
    }
    emit({{"points", points}}, as_json);
    if (!as_json) {
        for (const auto& p : config.points) {
            std::cout << p.dir[0] << " " << p.dir[1] << " " << p.dir[2] << " " << p.multiplicity
                      << "\n";
        }
    }
    return 0;
}

int cmd_symmetrize(const std::string& letters, bool as_json) {
    std::vector<SingleQubitState> phis;
    phis.reserve(letters.size());
    for (char c : letters) phis.push_back(named_qubit_state(c));
    const PureState psi = symmetrize(phis);
    if (as_json) {
        json amps = json::array();
        for (std::int64_t i = 0; i < psi.amp.size(); ++i) {
            amps.push_back({format_bits(static_cast<MultiIndex>(i), psi.n),
                            complex_json(psi.amp[i])});
        }
        emit({{"n", psi.n}, {"amplitudes", amps}}, true);
    } else {
        write_state(std::cout, psi);
    }
    return 0;
}

int cmd_cdc(const std::string& spec, int max_n, int max_m, double tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    if (psi.n % 2 != 0) throw NotSymmetricError("chord expansions need an even qubit count");
    if (psi.n / 2 > max_m) {
        throw ParseError("m = " + std::to_string(psi.n / 2) + " over --max-m " +
                         std::to_string(max_m));
    }
    const CDCExpansion expansion = cdc_expand(psi, tol);
    json terms = json::array();
    for (std::size_t i = 0; i < expansion.partitions.size(); ++i) {
        terms.push_back({{"partition", expansion.partitions[i].str()},
                         {"coefficient", complex_json(expansion.coefficients[i])}});
    }
    emit({{"residual", expansion.residual}, {"terms", terms}}, as_json);
    if (!as_json) {
        std::cout << "residual: " << expansion.residual << "\n";
        for (std::size_t i = 0; i < expansion.partitions.size(); ++i) {
            const Complex c = expansion.coefficients[i];
            if (std::abs(c) < 1e-12) continue;
            std::cout << expansion.partitions[i].str() << ": " << c.real() << (c.imag() < 0 ? "-" : "+")
                      << std::abs(c.imag()) << "i\n";
        }
    }
    return 0;
}

int cmd_pauli(const std::string& spec, int max_n, double tol, bool as_json) {
    const PureState psi = load_state(spec, max_n);
    const auto elements = pauli_stabilizer(psi, tol);
    json out = json::array();
    for (const auto& e : elements) out.push_back({{"phase", complex_json(e.phase)}, {"word", e.word}});
    emit({{"size", elements.size()}, {"elements", out}}, as_json);
    if (!as_json) {
        std::cout << "size: " << elements.size() << "\n";
        for (const auto& e : elements) {
            const double arg = std::arg(e.phase);
            const char* label = std::abs(arg) < 0.1             ? "+1"
                                : std::abs(arg - std::numbers::pi / 2) < 0.1  ? "+i"
                                : std::abs(arg + std::numbers::pi / 2) < 0.1  ? "-i"
                                                                              : "-1";
            std::cout << label << " " << e.word << "\n";
        }
    }
    return 0;
}

int cmd_verify_paper(std::uint64_t seed, bool as_json) {
    const auto items = run_verification_suite(seed);
    if (as_json) {
        json out = json::array();
        for (const auto& item : items) {
            out.push_back({{"id", item.id}, {"name", item.name}, {"pass", item.pass},
                           {"detail", item.detail}});
        }
        int failures = 0;
        for (const auto& item : items) {
            if (!item.pass) ++failures;
        }
        emit({{"items", out}, {"failures", failures}}, true);
        return failures == 0 ? 0 : kExitDomain;
    }
    return print_verification(std::cout, items) == 0 ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-unitary stabilizer toolkit for n-qubit pure states"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = kDefaultTol;
    double rank_tol = kRankTol;
    std::uint64_t seed = 7;
    int max_n = 12;
    int max_m = 8;
    bool as_json = false;
    std::string input;
    std::string letters;

    app.add_option("--tol", tol, "numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--rank-tol", rank_tol, "relative singular value threshold")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--max-n", max_n, "refuse states with more qubits");
    app.add_flag("--json", as_json, "emit a JSON report");

    auto* classify_cmd = app.add_subcommand("classify", "symmetric-state equivalence class");
    auto* algebra_cmd = app.add_subcommand("stab-algebra", "stabilizer subalgebra basis");
    auto* group_cmd = app.add_subcommand("stab-group", "finite stabilizer group (dim K = 0)");
    auto* majorana_cmd = app.add_subcommand("majorana", "Majorana point configuration");
    auto* symmetrize_cmd = app.add_subcommand("symmetrize", "symmetrized product of 1-qubit states");
    auto* cdc_cmd = app.add_subcommand("cdc", "chord-diagram (singlet-product) expansion");
    auto* pauli_cmd = app.add_subcommand("pauli", "signed Pauli stabilizer group");
    auto* verify_cmd = app.add_subcommand("verify-paper", "full reproduction suite");

    for (auto* cmd : {classify_cmd, algebra_cmd, group_cmd, majorana_cmd, symmetrize_cmd, cdc_cmd,
                      pauli_cmd, verify_cmd}) {
        cmd->fallthrough();
    }
    for (auto* cmd : {classify_cmd, algebra_cmd, group_cmd, majorana_cmd, cdc_cmd, pauli_cmd}) {
        cmd->add_option("--input", input,
                        "state spec: builtin (ghz:3, dicke:4,2, tau, ...) or file:path")
            ->required();
    }
    symmetrize_cmd
        ->add_option("--input", letters, "1-qubit state letters, e.g. abc")
        ->required();
    cdc_cmd->add_option("--max-m", max_m, "chord-count cap (Catalan growth)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(input, max_n, tol, as_json);
        if (algebra_cmd->parsed()) return cmd_stab_algebra(input, max_n, rank_tol, as_json);
        if (group_cmd->parsed()) return cmd_stab_group(input, max_n, tol, as_json);
        if (majorana_cmd->parsed()) return cmd_majorana(input, max_n, tol, as_json);
        if (symmetrize_cmd->parsed()) return cmd_symmetrize(letters, as_json);
        if (cdc_cmd->parsed()) return cmd_cdc(input, max_n, max_m, tol, as_json);
        if (pauli_cmd->parsed()) return cmd_pauli(input, max_n, tol, as_json);
        if (verify_cmd->parsed()) return cmd_verify_paper(seed, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
