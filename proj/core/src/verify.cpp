#include "lustab/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "lustab/builtins.hpp"
#include "lustab/chords.hpp"
#include "lustab/classify.hpp"
#include "lustab/discrete.hpp"
#include "lustab/majorana.hpp"
#include "lustab/stabilizer.hpp"

namespace lustab {

namespace {

const Complex kI{0.0, 1.0};

Mat2 random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector4d q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
    q.normalize();
    Mat2 g;
    g << Complex(q[0], -q[3]), Complex(-q[2], -q[1]), Complex(q[2], -q[1]), Complex(q[0], q[3]);
    return g;
}

LocalUnitaryElement random_lu(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    LocalUnitaryElement u;
    u.phase = std::polar(1.0, angle(rng));
    u.site.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) u.site.push_back(random_su2(rng));
    return u;
}

LocalUnitaryElement uniform_lu(int n, const Mat2& g) {
    LocalUnitaryElement u;
    u.site.assign(static_cast<std::size_t>(n), g);
    return u;
}

PureState random_symmetric(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DickeCoefficients d{n, Vec(n + 1)};
    for (int k = 0; k <= n; ++k) d.d[k] = Complex(gauss(rng), gauss(rng));
    return dicke_reconstruct(d);
}

PureState random_dense(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec amp(std::int64_t{1} << n);
    for (std::int64_t i = 0; i < amp.size(); ++i) amp[i] = Complex(gauss(rng), gauss(rng));
    return PureState(n, std::move(amp));
}

PureState generalized_ghz(int n, double a, double b) {
    Vec amp = Vec::Zero(std::int64_t{1} << n);
    amp[0] = a;
    amp[amp.size() - 1] = b;
    return PureState(n, std::move(amp));
}

Eigen::MatrixXd coords_of(const std::vector<AlgebraElement>& elements) {
    Eigen::MatrixXd m(3 * elements.front().n() + 1, static_cast<Eigen::Index>(elements.size()));
    for (std::size_t j = 0; j < elements.size(); ++j) {
        m.col(static_cast<Eigen::Index>(j)) = algebra_coords(elements[j]);
    }
    return m;
}

AlgebraElement single_site(int n, int qubit, double t, const Eigen::Vector3d& abc) {
    AlgebraElement m = AlgebraElement::zero(n);
    m.t = t;
    m.site[static_cast<std::size_t>(qubit - 1)] = abc;
    return m;
}

struct Suite {
    std::vector<VerifyItem> items;
    std::uint64_t seed;

    void run(int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
        VerifyItem item;
        item.id = id;
        item.name = name;
        try {
            auto [pass, detail] = body();
            item.pass = pass;
            item.detail = std::move(detail);
        } catch (const std::exception& e) {
            item.pass = false;
            item.detail = std::string("exception: ") + e.what();
        }
        items.push_back(std::move(item));
    }
};

std::pair<bool, std::string> criterion_dimensions() {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream detail;
    bool pass = true;
    auto expect = [&](const PureState& psi, int want, const std::string& label) {
        const int got = stabilizer_algebra(psi).dim;
        if (got != want) {
            pass = false;
            detail << label << ": dim " << got << " != " << want << "; ";
        }
    };
    for (int n = 2; n <= 6; ++n) expect(builtin_state("product:" + std::to_string(n)), n, "product");
    for (int n = 3; n <= 6; ++n) {
        expect(generalized_ghz(n, 1.0, 1.0), n - 1, "ghz a=b n=" + std::to_string(n));
        expect(generalized_ghz(n, 2.0, 1.0), n - 1, "ghz a!=b n=" + std::to_string(n));
    }
    expect(builtin_state("singlet"), 3, "singlet");
    for (int n = 3; n <= 7; ++n) {
        for (int k = 1; k < n; ++k) {
            expect(dicke_state(n, k), 1, "dicke(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
    expect(builtin_state("isoceles"), 0, "isoceles");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 10.0) {
        pass = false;
        detail << "runtime " << seconds << "s >= 10s; ";
    }
    detail << "runtime " << seconds << "s";
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_generators() {
    bool pass = true;
    std::ostringstream detail;
    auto check = [&](const PureState& psi, const std::vector<AlgebraElement>& generators,
                     const std::string& label) {
        double residual = 0.0;
        for (const auto& m : generators) {
            residual = std::max(residual, apply_algebra(m, psi).norm() / psi.norm());
        }
        const StabilizerAlgebra computed = stabilizer_algebra(psi);
        const double angle = max_principal_angle(coords_of(generators), computed.coords);
        if (residual >= 1e-10 || angle >= 1e-7) {
            pass = false;
            detail << label << ": residual " << residual << " angle " << angle << "; ";
        }
    };

    {
        const int n = 4;
        std::vector<AlgebraElement> gens;
        for (int k = 1; k <= n; ++k) gens.push_back(single_site(n, k, -1.0, {1, 0, 0}));
        check(builtin_state("product:4"), gens, "K_product");
    }
    {
        const int n = 4;
        std::vector<AlgebraElement> gens;
        for (int k = 2; k <= n; ++k) {
            AlgebraElement m = single_site(n, 1, 0.0, {1, 0, 0});
            m.site[static_cast<std::size_t>(k - 1)] = {-1, 0, 0};
            gens.push_back(m);
        }
        check(generalized_ghz(n, 2.0, 1.0), gens, "K_GHZ");
    }
    {
        std::vector<AlgebraElement> gens;
        AlgebraElement m1 = single_site(2, 1, 0.0, {1, 0, 0});
        m1.site[1] = {1, 0, 0};
        AlgebraElement m2 = single_site(2, 1, 0.0, {0, 1, 0});
        m2.site[1] = {0, -1, 0};
        AlgebraElement m3 = single_site(2, 1, 0.0, {0, 0, 1});
        m3.site[1] = {0, 0, -1};
        gens = {m1, m2, m3};
        check(builtin_state("singlet"), gens, "K_singlet");
    }
    {
        const int n = 5, k = 2;
        AlgebraElement m = AlgebraElement::zero(n);
        m.t = 2.0 * k - n;
        for (auto& site : m.site) site = {1, 0, 0};
        check(dicke_state(n, k), {m}, "K_Dicke(5,2)");
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_scramble(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 4;
        const double t0 = unit(rng);
        const PureState psi = generalized_ghz(n, std::cos(std::numbers::pi * t0 / 4.0),
                                              std::sin(std::numbers::pi * t0 / 4.0));
        const PureState scrambled = apply_group(random_lu(n, rng), psi);
        const StabilizerAlgebra algebra = stabilizer_algebra(scrambled);
        if (algebra.dim != n - 1) {
            ++failures;
            continue;
        }
        const auto [t, canon] = ghz_parameter(scrambled, algebra);
        (void)canon;
        if (std::abs(t - t0) > 1e-6) ++failures;
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 4;
        std::uniform_int_distribution<int> pick_k(1, n - 1);
        const int k0 = pick_k(rng);
        const PureState psi = dicke_state(n, k0);
        const PureState scrambled = apply_group(random_lu(n, rng), psi);
        const StabilizerAlgebra algebra = stabilizer_algebra(scrambled);
        if (algebra.dim != 1) {
            ++failures;
            continue;
        }
        const auto [k, canon] = canonicalize_dicke(scrambled, algebra);
        (void)canon;
        if (k != std::min(k0, n - k0)) ++failures;
    }
    // classify itself, on symmetry-preserving (uniform) scramblings
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial % 4;
        const double t0 = unit(rng);
        const Mat2 g = random_su2(rng);
        const PureState psi = apply_group(
            uniform_lu(n, g), generalized_ghz(n, std::cos(std::numbers::pi * t0 / 4.0),
                                              std::sin(std::numbers::pi * t0 / 4.0)));
        const ClassificationReport report = classify(psi);
        if (report.type != StateClass::GeneralizedGhz || std::abs(report.ghz_t - t0) > 1e-6)
            ++failures;
    }
    if (failures > 0) {
        pass = false;
        detail << failures << " recovery failures";
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_phi() {
    const PureState phi = builtin_state("phi");
    const StabilizerAlgebra algebra = stabilizer_algebra(phi);
    bool pass = algebra.dim == 2;
    std::ostringstream detail;
    detail << "dim " << algebra.dim;

    AlgebraElement m1 = single_site(3, 1, 0.0, {0, 1, 0});
    m1.site[1] = {0, -1, 0};
    AlgebraElement m2 = single_site(3, 2, 0.0, {0, 1, 0});
    m2.site[2] = {0, -1, 0};
    const double angle = max_principal_angle(coords_of({m1, m2}), algebra.coords);
    detail << ", principal angle " << angle;
    if (angle >= 1e-7) pass = false;

    const ClassificationReport report = classify(phi);
    detail << ", class " << to_string(report.type);
    if (report.type != StateClass::GeneralizedGhz) pass = false;
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_phi_prime() {
    const PureState psi = builtin_state("phi-prime");
    bool pass = true;
    std::ostringstream detail;

    const int dim = stabilizer_algebra(psi).dim;
    detail << "dim " << dim;
    if (dim != 0) pass = false;

    // The order-4 element quoted for this state: e^{-2pi i/3} (e^{2pi i/3 Y})^{x4}.
    const double theta = 2.0 * std::numbers::pi / 3.0;
    const Mat2 g = std::cos(theta) * Mat2::Identity() + kI * std::sin(theta) * pauli_y();
    LocalUnitaryElement u;
    u.phase = std::polar(1.0, -theta);
    u.site.assign(4, g);
    const double residual = (apply_group(u, psi).amp - psi.amp).norm() / psi.norm();
    detail << ", element residual " << residual;
    if (residual >= 1e-9) pass = false;

    const auto lift = lift_and_verify(psi, rotation_from_su2(g));
    if (!lift) {
        pass = false;
        detail << ", lift rejected";
    }

    const FiniteStabilizerReport report = finite_stabilizer(psi);
    detail << ", group order " << report.order << " label " << report.label.str();
    // Element orders in the rotation group:
    int max_order = 0;
    bool has_order4 = false;
    for (const auto& e : report.elements) {
        Rotation power = e.rotation;
        int order = 1;
        while ((power - Rotation::Identity()).norm() > 1e-6 && order < 100) {
            power = power * e.rotation;
            ++order;
        }
        max_order = std::max(max_order, order);
        if (order == 4) has_order4 = true;
    }
    detail << ", max element order " << max_order;
    if (!has_order4) {
        pass = false;
        detail << ", no cyclic subgroup of order 4";
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_tau() {
    const FiniteStabilizerReport report = finite_stabilizer(builtin_state("tau"));
    std::ostringstream detail;
    detail << "order " << report.order << " label " << report.label.str();
    return {report.order == 24 && report.label.cls == GroupClass::Octahedral, detail.str()};
}

std::pair<bool, std::string> criterion_isoceles_xxx() {
    const PureState psi = builtin_state("isoceles");
    const FiniteStabilizerReport report = finite_stabilizer(psi);
    Eigen::MatrixXcd xxx = dense_operator(
        [] {
            LocalUnitaryElement u;
            u.site.assign(3, pauli_x());
            return u;
        }());
    for (const auto& e : report.elements) {
        LocalUnitaryElement u;
        u.phase = e.phase;
        u.site.assign(3, e.g);
        if ((dense_operator(u) - xxx).norm() < 1e-6) {
            const double residual = (apply_group(u, psi).amp - psi.amp).norm() / psi.norm();
            std::ostringstream detail;
            detail << "XXX residual " << residual << ", group order " << report.order;
            return {residual < 1e-9, detail.str()};
        }
    }
    return {false, "XXX element not found (order " + std::to_string(report.order) + ")"};
}

std::pair<bool, std::string> criterion_lemma1() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {2, 4, 6}) {
        const SymmetricSpanReport report = verify_lemma1(n);
        detail << "n=" << n << " residual " << report.relative_residual << "; ";
        if (report.in_span || report.relative_residual <= 0.1) pass = false;
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_catalan() {
    static constexpr int kCatalan[5] = {0, 1, 2, 5, 14};
    bool pass = true;
    std::ostringstream detail;
    for (int m = 1; m <= 4; ++m) {
        const auto noncrossing = enumerate_noncrossing(m);
        int brute = 0;
        for (const auto& p : enumerate_all_matchings(m)) {
            if (!has_crossing(p)) ++brute;
        }
        detail << "m=" << m << ": " << noncrossing.size() << "/" << brute << "; ";
        if (static_cast<int>(noncrossing.size()) != kCatalan[m] || brute != kCatalan[m]) pass = false;
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_ihat() {
    const MultiIndex ihat = parse_bits("00010111");
    const int count = count_partitions_hitting(8, ihat);
    return {count == 2, "count " + std::to_string(count)};
}

std::pair<bool, std::string> criterion_m4() {
    const PureState m4 = construct_m4();
    bool pass = true;
    std::ostringstream detail;

    const CDCExpansion expansion = cdc_expand(m4);
    detail << "cdc residual " << expansion.residual;
    if (expansion.residual >= 1e-9) pass = false;

    if (is_symmetric(m4)) {
        pass = false;
        detail << ", unexpectedly symmetric";
    }

    for (const auto& perm : {std::vector<int>{2, 1, 4, 3}, std::vector<int>{3, 4, 1, 2},
                             std::vector<int>{4, 3, 2, 1}}) {
        const double diff = (permute_qubits(m4, perm).amp - m4.amp).norm() / m4.norm();
        if (diff > 1e-12) {
            pass = false;
            detail << ", permutation residual " << diff;
        }
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_pauli() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {3, 4}) {
        const auto equal = pauli_stabilizer(generalized_ghz(n, 1.0, 1.0));
        const auto skew = pauli_stabilizer(generalized_ghz(n, 2.0, 1.0));
        detail << "n=" << n << ": " << equal.size() << "/" << skew.size() << "; ";
        if (static_cast<int>(equal.size()) != (1 << n)) pass = false;
        if (static_cast<int>(skew.size()) != (1 << (n - 1))) pass = false;
    }
    const auto dicke = pauli_stabilizer(dicke_state(4, 2));
    for (const std::string want : {"ZZZZ", "XXXX", "YYYY"}) {
        bool found = false;
        for (const auto& e : dicke) {
            if (e.word == want && std::abs(e.phase - Complex(1.0, 0.0)) < 1e-9) found = true;
        }
        if (!found) {
            pass = false;
            detail << want << " missing; ";
        }
    }
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_majorana_roundtrip(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 5;  // 3..7
        const PureState psi = random_symmetric(n, rng);
        const PureState rebuilt = symmetrize(majorana_states(psi));
        worst = std::min(worst, fidelity(psi.amp, rebuilt.amp));
    }
    std::ostringstream detail;
    detail << "worst fidelity " << worst;
    return {worst > 1.0 - 1e-8, detail.str()};
}

std::pair<bool, std::string> criterion_covariance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    bool pass = true;
    std::ostringstream detail;
    double worst_angle = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + trial % 4;  // 2..5
        PureState psi = [&]() {
            switch (trial % 5) {
                case 0: return generalized_ghz(n, 1.0, 1.0);
                case 1: return dicke_state(n, std::max(1, n / 2));
                case 2: return builtin_state("product:" + std::to_string(n));
                case 3: return random_symmetric(n, rng);
                default: return random_dense(n, rng);
            }
        }();
        const LocalUnitaryElement u = random_lu(n, rng);
        const StabilizerAlgebra before = stabilizer_algebra(psi);
        const StabilizerAlgebra after = stabilizer_algebra(apply_group(u, psi));
        if (before.dim != after.dim) {
            pass = false;
            detail << "dim changed " << before.dim << "->" << after.dim << "; ";
            continue;
        }
        if (before.dim == 0) continue;
        std::vector<AlgebraElement> conjugated;
        conjugated.reserve(before.basis.size());
        for (const auto& m : before.basis) conjugated.push_back(conjugate(u, m));
        const double angle = max_principal_angle(coords_of(conjugated), after.coords);
        worst_angle = std::max(worst_angle, angle);
    }
    detail << "worst principal angle " << worst_angle;
    if (worst_angle >= 1e-7) pass = false;
    return {pass, detail.str()};
}

std::pair<bool, std::string> criterion_brute_force_completeness() {
    const PureState psi = builtin_state("isoceles");
    const FiniteStabilizerReport report = finite_stabilizer(psi);
    const Vec normalized = psi.amp / psi.norm();

    auto deficit = [&](const Eigen::Vector4d& quaternion) {
        const Eigen::Vector4d q = quaternion.normalized();
        Mat2 g;
        g << Complex(q[0], -q[3]), Complex(-q[2], -q[1]), Complex(q[2], -q[1]),
            Complex(q[0], q[3]);
        LocalUnitaryElement u;
        u.site.assign(3, g);
        const PureState image = apply_group(u, psi);
        return 1.0 - fidelity(psi.amp, image.amp);
    };

    // Grid over SU(2): Fibonacci-sphere axes x rotation angles.
    std::vector<Eigen::Vector4d> hits;
    const int axes = 400;
    const int angles = 30;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    int evaluated = 0;
    for (int a = 0; a < axes; ++a) {
        const double z = 1.0 - 2.0 * (a + 0.5) / axes;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi_angle = golden * a;
        const Eigen::Vector3d axis(r * std::cos(phi_angle), r * std::sin(phi_angle), z);
        for (int s = 1; s <= angles; ++s) {
            const double angle = std::numbers::pi * s / angles;
            Eigen::Vector4d q;
            q[0] = std::cos(angle / 2.0);
            q.tail<3>() = std::sin(angle / 2.0) * axis;
            ++evaluated;
            if (deficit(q) < 0.05) {
                // local refinement: coordinate descent on the quaternion
                Eigen::Vector4d best = q;
                double best_value = deficit(best);
                double step = 0.05;
                while (step > 1e-9) {
                    bool improved = false;
                    for (int d = 0; d < 4; ++d) {
                        for (double sign : {1.0, -1.0}) {
                            Eigen::Vector4d candidate = best;
                            candidate[d] += sign * step;
                            const double value = deficit(candidate);
                            if (value < best_value) {
                                best_value = value;
                                best = candidate;
                                improved = true;
                            }
                        }
                    }
                    if (!improved) step /= 2.0;
                }
                if (best_value <= 1e-4) hits.push_back(best.normalized());
            }
        }
    }

    // Every refined stabilizing unitary must land on a reported rotation.
    bool pass = evaluated >= 10000;
    int outside = 0;
    for (const auto& q : hits) {
        Mat2 g;
        g << Complex(q[0], -q[3]), Complex(-q[2], -q[1]), Complex(q[2], -q[1]), Complex(q[0], q[3]);
        const Rotation r = rotation_from_su2(g);
        bool matched = false;
        for (const auto& e : report.elements) {
            if ((r - e.rotation).norm() < 1e-3) {
                matched = true;
                break;
            }
        }
        if (!matched) ++outside;
    }
    if (outside > 0) pass = false;
    std::ostringstream detail;
    detail << evaluated << " grid points, " << hits.size() << " stabilizing candidates, " << outside
           << " outside reported group (order " << report.order << ")";
    return {pass, detail.str()};
}

}  // namespace

std::vector<VerifyItem> run_verification_suite(std::uint64_t seed) {
    Suite suite;
    suite.seed = seed;
    suite.run(1, "stabilizer dimensions", criterion_dimensions);
    suite.run(2, "generator conformance", criterion_generators);
    suite.run(3, "scramble and recover", [&] { return criterion_scramble(seed); });
    suite.run(4, "phi example", criterion_phi);
    suite.run(5, "phi-prime example", criterion_phi_prime);
    suite.run(6, "octahedral tau", criterion_tau);
    suite.run(7, "isoceles XXX element", criterion_isoceles_xxx);
    suite.run(8, "no symmetric chord construction", criterion_lemma1);
    suite.run(9, "Catalan counts", criterion_catalan);
    suite.run(10, "hat-index hitting count", criterion_ihat);
    suite.run(11, "M4 state", criterion_m4);
    suite.run(12, "Pauli stabilizer sizes", criterion_pauli);
    suite.run(13, "Majorana round trip", [&] { return criterion_majorana_roundtrip(seed + 1); });
    suite.run(14, "conjugation covariance", [&] { return criterion_covariance(seed + 2); });
    suite.run(15, "brute-force completeness", criterion_brute_force_completeness);
    return suite.items;
}

int print_verification(std::ostream& out, const std::vector<VerifyItem>& items) {
    int failures = 0;
    for (const auto& item : items) {
        out << (item.pass ? "PASS" : "FAIL") << " " << item.id << " " << item.name;
        if (!item.detail.empty()) out << " [" << item.detail << "]";
        out << "\n";
        if (!item.pass) ++failures;
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

}  // namespace lustab
