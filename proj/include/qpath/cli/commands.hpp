// Copyright 2026 The qpath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPATH_CLI_COMMANDS_HPP
#define QPATH_CLI_COMMANDS_HPP

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpath/action/action.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/cv/cv.hpp"
#include "qpath/densesim/dense.hpp"
#include "qpath/errors.hpp"
#include "qpath/parallel.hpp"
#include "qpath/pathsum/amplitudes.hpp"
#include "qpath/phasespace/symplectic.hpp"
#include "qpath/phasespace/wigner.hpp"
#include "qpath/random.hpp"

namespace qpath::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Exit codes: success, a requested check failed, the command itself failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

struct Options {
    std::string circuit;  // path, or "-" for stdin
    std::string in;
    std::string out;
    std::string method = "gauss";
    std::string suite;
    std::string gate;
    std::string param;  // CV gate parameter for genfun
    std::uint32_t d = 3;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::optional<std::uint64_t> cap;
    std::uint64_t state = 0;
    bool cv = false;
    unsigned threads = 0;

    std::uint64_t enumeration_cap() const {
        return cap ? *cap : default_cap();
    }
};

struct Result {
    json envelope;
    int exit_code = kExitOk;
};

inline std::string read_text(const std::string &path) {
    if (path.empty()) {
        throw Error(ErrorCode::invalid_argument, "--circuit is required");
    }
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

/// Whether circuit text starts with the "cv" header (comments and blank
/// lines skipped).
inline bool is_cv_text(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = std::min(text.find('\n', pos), text.size());
        auto line = text.substr(pos, end - pos);
        line = line.substr(0, std::min(line.find('#'), line.size()));
        auto toks = detail::split_tokens(line);
        if (!toks.empty()) {
            return toks[0].text == "cv";
        }
        pos = end + 1;
    }
    return false;
}

/// "1,0,2" -> {1, 0, 2}, checked against n and d.
inline ModVector parse_digits(const std::string &list, std::uint32_t n, std::uint32_t d, const char *what) {
    ModVector v;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint64_t x = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::invalid_argument, std::string(what) + ": '" + item + "' is not a digit");
        }
        if (x >= d) {
            throw Error(ErrorCode::invalid_argument,
                        std::string(what) + ": digit " + item + " out of range for d=" + std::to_string(d));
        }
        v.push_back(static_cast<std::uint32_t>(x));
    }
    if (v.size() != n) {
        throw Error(ErrorCode::dimension_mismatch, std::string(what) + " has " + std::to_string(v.size()) +
                                                      " digits, expected n=" + std::to_string(n));
    }
    return v;
}

inline json matrix_json(const ModMatrix &m) {
    return m.to_rows();
}

inline json amplitude_json(const CyclotomicAmplitude &a) {
    return {{"counts", a.counts()}, {"half_power", a.half_power()}};
}

// ---- amp ------------------------------------------------------------------

inline json cmd_amp(const Options &o) {
    auto ir = parse_circuit(read_text(o.circuit));
    auto q0 = parse_digits(o.in, ir.n, ir.d, "--in");
    auto qf = parse_digits(o.out, ir.n, ir.d, "--out");
    json p{{"d", ir.d}, {"n", ir.n}, {"in", q0}, {"out", qf}, {"method", o.method}};
    if (o.method == "dense") {
        Complex a = dense_amplitude(ir, q0, qf);
        p["re"] = a.real();
        p["im"] = a.imag();
        return p;
    }
    SumMethod m;
    if (o.method == "pathsum" || o.method == "enumerate") {
        m = SumMethod::enumerate;
    } else if (o.method == "gauss") {
        m = SumMethod::gauss;
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown method '" + o.method + "' (pathsum, gauss, dense)");
    }
    auto a = PathSum(ir).amplitude(q0, qf, m, o.enumeration_cap(), o.threads);
    auto z = a.to_complex();
    p["re"] = z.real();
    p["im"] = z.imag();
    p["exact"] = amplitude_json(a);
    return p;
}

// ---- verify ---------------------------------------------------------------

namespace detail {

struct CaseOutcome {
    bool passed = false;
    json details = json::object();
};

constexpr std::uint32_t kCampaignPrimes[] = {3, 5, 7};

inline CaseOutcome verify_main_disc_case(const CircuitIR &ir) {
    auto r = verify_main_disc_report(ir);
    return {r.holds(),
            {{"phases_equal", r.phases_equal},
             {"constraints_equal", r.constraints_equal},
             {"phase", r.path_sum_phase.to_string()}}};
}

inline CaseOutcome verify_main_cv_case(const CVCircuit &c) {
    auto r = cv_verify_main_report(c);
    json cons = json::array();
    for (const auto &b : r.functional.constraints) {
        cons.push_back(b.to_string());
    }
    return {r.holds(),
            {{"phases_equal", r.phases_equal},
             {"constraints_equal", r.constraints_equal},
             {"phase", r.functional.phase.to_string()},
             {"constraints", cons},
             {"f_count", r.functional.f_count},
             {"fdag_count", r.functional.fdag_count}}};
}

inline CaseOutcome verify_actclasstraj_case(const CircuitIR &ir, std::uint64_t cap) {
    auto r = verify_actclasstraj_all(ir, cap);
    return {r.holds(),
            {{"trajectories", r.trajectories}, {"boundary_pairs", r.boundary_pairs}, {"offsets", r.offsets}}};
}

inline CaseOutcome verify_covariance_case(const CircuitIR &ir, Rng &rng) {
    // Every generator kind on every wire (SUM on every ordered pair).
    std::vector<Gate> gates;
    for (std::uint32_t w = 0; w < ir.n; w++) {
        gates.push_back(Gate::F(w));
        gates.push_back(Gate::R(w));
        gates.push_back(Gate::ID(w));
        for (std::uint32_t t = 0; t < ir.n; t++) {
            if (t != w) {
                gates.push_back(Gate::SUM(w, t));
            }
        }
    }
    std::size_t dim = hilbert_dim(ir.n, ir.d, kDefaultDenseDimCap);
    auto rho = random_density_matrix(rng, dim);
    double worst = 0;
    for (const auto &g : gates) {
        worst = std::max(worst, covariance_error(embedded_gate_matrix(g, ir.n, ir.d),
                                                 gate_symplectomorphism(g, ir.n, ir.d), rho));
    }
    // The circuit as a whole is covariant under its composed map too.
    worst = std::max(worst, covariance_error(circuit_unitary(ir), circuit_symplectomorphism(ir), rho));
    return {worst <= 1e-10, {{"max_error", worst}, {"generators", gates.size()}}};
}

/// Magnitude m of a balanced circuit satisfies support * m^2 = d^n and
/// m * d^{#F/2} = d^{k/2} for an integer k >= 0.
inline CaseOutcome verify_balanced_case(const CircuitIR &ir) {
    auto r = is_balanced(circuit_unitary(ir));
    double dn = std::pow(double(ir.d), double(ir.n));
    double scaled = r.magnitude * std::pow(double(ir.d), 0.5 * double(ir.count(GateKind::F)));
    double k = 2 * std::log(scaled) / std::log(double(ir.d));
    bool integral = std::abs(k - std::round(k)) < 1e-9 && std::round(k) >= 0;
    bool norm = std::abs(double(r.support_size) * r.magnitude * r.magnitude - dn) < 1e-8 * dn;
    return {r.balanced && integral && norm,
            {{"magnitude", r.magnitude},
             {"support", r.support_size},
             {"f_count", ir.count(GateKind::F)},
             {"excess_half_powers", std::llround(k)}}};
}

inline CaseOutcome verify_oracle_case(const CircuitIR &ir, Rng &rng, SumMethod method, std::uint64_t cap,
                                      std::size_t pairs) {
    PathSum ps(ir);
    double worst = 0;
    for (std::size_t j = 0; j < pairs; j++) {
        auto q0 = random_configuration(rng, ir.n, ir.d);
        auto qf = random_configuration(rng, ir.n, ir.d);
        auto a = ps.amplitude(q0, qf, method, cap, 1).to_complex();
        worst = std::max(worst, std::abs(a - dense_amplitude(ir, q0, qf)));
    }
    return {worst <= 1e-9, {{"max_abs_diff", worst}, {"pairs", pairs}}};
}

inline CircuitIR campaign_circuit(Rng &rng, std::size_t index, std::uint32_t max_n,
                                  const std::vector<std::uint32_t> &primes) {
    std::uint32_t d = primes[index % primes.size()];
    auto n = 1 + static_cast<std::uint32_t>(uniform_below(rng, max_n));
    return random_circuit(rng, d, n, 8);
}

inline json balanced_generators() {
    json out = json::array();
    for (std::uint32_t d : kCampaignPrimes) {
        for (const auto &g : {Gate::F(0), Gate::R(0), Gate::SUM(0, 1)}) {
            auto r = is_balanced(gate_matrix(g, d));
            double expected = g.kind == GateKind::F ? 1 / std::sqrt(double(d)) : 1.0;
            out.push_back({{"gate", std::string(gate_mnemonic(g.kind))},
                           {"d", d},
                           {"balanced", r.balanced},
                           {"magnitude", r.magnitude},
                           {"expected_magnitude", expected},
                           {"passed", r.balanced && std::abs(r.magnitude - expected) < 1e-12}});
        }
    }
    return out;
}

}  // namespace detail

inline const std::vector<std::string> &verify_suites() {
    static const std::vector<std::string> s{"main-disc", "main-cv", "covariance", "actclasstraj", "balanced", "oracle"};
    return s;
}

/// Runs a verification suite, either on `count` seeded random cases or, with
/// --circuit, on that circuit alone. Case k uses seed case_seed(seed, k).
inline json cmd_verify(const Options &o) {
    using detail::CaseOutcome;
    const auto &suites = verify_suites();
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
        throw Error(ErrorCode::invalid_argument, "unknown suite '" + o.suite + "'");
    }
    SumMethod method = o.method == "pathsum" || o.method == "enumerate" ? SumMethod::enumerate : SumMethod::gauss;
    std::uint64_t cap = o.enumeration_cap();

    std::optional<std::string> fixed;
    if (!o.circuit.empty()) {
        fixed = read_text(o.circuit);
    }
    std::size_t count = fixed ? 1 : o.count;

    auto run_case = [&](std::size_t i, Rng &rng, std::string &text) -> CaseOutcome {
        if (o.suite == "main-cv") {
            CVCircuit c = fixed ? parse_cv_circuit(*fixed) : random_cv_circuit(rng, 1 + static_cast<std::uint32_t>(uniform_below(rng, 3)), 8);
            text = format_cv_circuit(c);
            return detail::verify_main_cv_case(c);
        }
        CircuitIR ir;
        if (fixed) {
            ir = parse_circuit(*fixed);
        } else if (o.suite == "main-disc" || o.suite == "oracle") {
            ir = detail::campaign_circuit(rng, i, 3, {3, 5, 7});
        } else {
            ir = detail::campaign_circuit(rng, i, 2, {3, 5});
        }
        text = format_circuit(ir);
        if (o.suite == "main-disc") return detail::verify_main_disc_case(ir);
        if (o.suite == "actclasstraj") return detail::verify_actclasstraj_case(ir, cap);
        if (o.suite == "covariance") return detail::verify_covariance_case(ir, rng);
        if (o.suite == "balanced") return detail::verify_balanced_case(ir);
        return detail::verify_oracle_case(ir, rng, method, cap, 10);
    };

    std::vector<json> cases(count);
    parallel_for(count, o.threads, [&](std::size_t i) {
        std::uint64_t s = case_seed(o.seed, i);
        Rng rng(s);
        std::string text;
        json c{{"index", i}, {"seed", s}};
        try {
            auto r = run_case(i, rng, text);
            c["passed"] = r.passed;
            c["details"] = std::move(r.details);
        } catch (const Error &e) {
            c["passed"] = false;
            c["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        }
        c["circuit"] = text;
        cases[i] = std::move(c);
    });

    std::size_t passed = 0;
    double worst = 0;
    for (const auto &c : cases) {
        passed += c["passed"].get<bool>();
        if (c.contains("details") && c["details"].contains("max_abs_diff")) {
            worst = std::max(worst, c["details"]["max_abs_diff"].get<double>());
        }
        if (c.contains("details") && c["details"].contains("max_error")) {
            worst = std::max(worst, c["details"]["max_error"].get<double>());
        }
    }
    json p{{"suite", o.suite}, {"seed", o.seed}, {"count", count}, {"passed", passed}, {"failed", count - passed}};
    if (o.suite == "oracle") {
        p["max_abs_diff"] = worst;
    }
    if (o.suite == "covariance") {
        p["max_error"] = worst;
    }
    if (o.suite == "balanced") {
        p["generators"] = detail::balanced_generators();
        for (const auto &g : p["generators"]) {
            if (!g["passed"].get<bool>()) {
                p["failed"] = p["failed"].get<std::size_t>() + 1;
            }
        }
    }
    p["all_passed"] = p["failed"].get<std::size_t>() == 0;
    p["cases"] = std::move(cases);
    return p;
}

// ---- wigner / symplectic / genfun / parse ---------------------------------

/// Wigner table of U|state><state|U^dag; table[pack(q)][pack(p)].
inline json cmd_wigner(const Options &o) {
    auto ir = parse_circuit(read_text(o.circuit));
    std::size_t dim = hilbert_dim(ir.n, ir.d, kDefaultDenseDimCap);
    if (o.state >= dim) {
        throw Error(ErrorCode::invalid_argument,
                    "state index " + std::to_string(o.state) + " out of range for d^n=" + std::to_string(dim));
    }
    auto q = unpack_configuration(o.state, ir.n, ir.d);
    auto psi = apply_circuit(ir, basis_state(q, ir.d));
    auto w = wigner_transform(DenseMatrix::projector(psi), ir.n, ir.d);
    json table = json::array();
    for (std::size_t iq = 0; iq < dim; iq++) {
        json row = json::array();
        for (std::size_t ip = 0; ip < dim; ip++) {
            row.push_back(w.values[iq + dim * ip]);
        }
        table.push_back(std::move(row));
    }
    return {{"d", ir.d}, {"n", ir.n}, {"state", q}, {"table", table}, {"total", w.total()}};
}

inline json cmd_symplectic(const Options &o) {
    auto text = read_text(o.circuit);
    if (is_cv_text(text)) {
        auto c = parse_cv_circuit(text);
        auto m = cv_circuit_symplectomorphism(c);
        json s = json::array(), a = json::array();
        for (const auto &row : m.s) {
            json r = json::array();
            for (const auto &e : row) {
                r.push_back(e.to_string());
            }
            s.push_back(r);
        }
        for (const auto &e : m.a) {
            a.push_back(e.to_string());
        }
        return {{"cv", true}, {"n", c.n}, {"S", s}, {"a", a}, {"symplectic", m.is_symplectic()}};
    }
    auto ir = parse_circuit(text);
    auto phi = circuit_symplectomorphism(ir);
    return {{"cv", false},
            {"d", ir.d},
            {"n", ir.n},
            {"S", matrix_json(phi.s)},
            {"a", phi.a},
            {"symplectic", is_symplectic(phi.s)}};
}

inline json cmd_genfun(const Options &o) {
    if (o.cv) {
        CVGate g;
        RationalField f;
        auto param = o.param.empty() ? RationalPolynomial::variable(f, o.gate == "X" ? "tau" : "eta")
                                     : RationalPolynomial::constant(f, parse_rational(o.param));
        if (o.gate == "F") g = CVGate::F(0);
        else if (o.gate == "FDAG") g = CVGate::FDAG(0);
        else if (o.gate == "P") g = CVGate::P(0, param);
        else if (o.gate == "X") g = CVGate::X(0, param);
        else if (o.gate == "SUM") g = CVGate::SUM(0, 1);
        else if (o.gate == "SUMDAG") g = CVGate::SUMDAG(0, 1);
        else if (o.gate == "ID") g = CVGate::ID(0);
        else throw Error(ErrorCode::invalid_argument, "unknown CV gate '" + o.gate + "'");
        return {{"gate", o.gate},
                {"cv", true},
                {"g", cv_generating_function(g).to_string()},
                {"relation_holds", cv_check_generating_relation(g)}};
    }
    auto kind = parse_gate_kind(o.gate);
    if (!kind) {
        throw Error(ErrorCode::invalid_argument, "unknown gate '" + o.gate + "' (F, R, SUM, ID)");
    }
    if (!is_odd_prime(o.d)) {
        throw Error(ErrorCode::invalid_argument, "d must be an odd prime, got " + std::to_string(o.d));
    }
    Gate local = *kind == GateKind::SUM ? Gate::SUM(0, 1) : Gate{*kind, 0, 0};
    auto phi = gate_symplectomorphism(local, static_cast<std::uint32_t>(local.arity()), o.d);
    auto gf = generating_function(phi);
    return {{"gate", o.gate},
            {"cv", false},
            {"d", o.d},
            {"g", gf.g.to_string()},
            {"g_tilde", gf.g_tilde.to_string()},
            {"relation_holds", check_generating_relation(polynomial_map(phi), gf.g)}};
}

inline json cmd_parse(const Options &o) {
    auto text = read_text(o.circuit);
    if (is_cv_text(text)) {
        auto c = parse_cv_circuit(text);
        return {{"cv", true}, {"n", c.n}, {"gates", c.gates.size()}, {"circuit", format_cv_circuit(c)}};
    }
    auto ir = parse_circuit(text);
    return {{"cv", false}, {"d", ir.d}, {"n", ir.n}, {"gates", ir.gates.size()}, {"circuit", format_circuit(ir)}};
}

// ---- dispatch -------------------------------------------------------------

/// Runs one subcommand and wraps its payload:
/// {schema_version, command, status: ok|error, payload, timing_ms}.
inline Result run(const std::string &command, const Options &o) {
    auto start = std::chrono::steady_clock::now();
    json env{{"schema_version", kSchemaVersion}, {"command", command}};
    int code = kExitOk;
    try {
        json p;
        if (command == "amp") p = cmd_amp(o);
        else if (command == "verify") p = cmd_verify(o);
        else if (command == "wigner") p = cmd_wigner(o);
        else if (command == "symplectic") p = cmd_symplectic(o);
        else if (command == "genfun") p = cmd_genfun(o);
        else if (command == "parse") p = cmd_parse(o);
        else throw Error(ErrorCode::invalid_argument, "unknown command '" + command + "'");
        if (command == "verify" && !p["all_passed"].get<bool>()) {
            code = kExitCheckFailed;
        }
        env["status"] = "ok";
        env["payload"] = std::move(p);
    } catch (const ParseError &e) {
        env["status"] = "error";
        env["payload"] = {{"code", std::string(error_code_name(e.code()))},
                          {"message", e.what()},
                          {"line", e.line()},
                          {"column", e.column()}};
        code = kExitError;
    } catch (const Error &e) {
        env["status"] = "error";
        env["payload"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
        code = kExitError;
    }
    env["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {std::move(env), code};
}

}  // namespace qpath::cli

#endif
