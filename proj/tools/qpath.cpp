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

// qpath: exact sum-over-paths tools for odd-prime Clifford circuits.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpath/cli/commands.hpp"

int main(int argc, char **argv) {
    using namespace qpath::cli;
    CLI::App app{"Exact sum-over-paths simulation and phase-space checks for odd-prime Clifford circuits"};
    app.require_subcommand(1);
    Options o;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Indent the JSON output");

    auto circuit_opt = [&](CLI::App *sub, bool required) {
        auto *opt = sub->add_option("--circuit", o.circuit, "Circuit file, or - for stdin");
        if (required) {
            opt->required();
        }
    };
    auto cap_opt = [&](CLI::App *sub) {
        sub->add_option("--cap", o.cap, "Enumeration cap (default 1e7, or QPATH_CAP)");
    };
    auto pretty_opt = [&](CLI::App *sub) { sub->add_flag("--pretty", pretty, "Indent the JSON output"); };

    auto *amp = app.add_subcommand("amp", "Transition amplitude <out|U|in>");
    circuit_opt(amp, true);
    amp->add_option("--in", o.in, "Input configuration, comma-separated digits")->required();
    amp->add_option("--out", o.out, "Output configuration, comma-separated digits")->required();
    amp->add_option("--method", o.method, "pathsum, gauss or dense")
        ->check(CLI::IsMember({"pathsum", "enumerate", "gauss", "dense"}));
    amp->add_option("--threads", o.threads, "Worker threads for enumeration (0 = all cores)");
    cap_opt(amp);
    pretty_opt(amp);

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(verify_suites()));
    verify->add_option("--seed", o.seed, "Campaign seed");
    verify->add_option("--count", o.count, "Number of random cases");
    verify->add_option("--method", o.method, "Path-sum method for the oracle suite")
        ->check(CLI::IsMember({"pathsum", "enumerate", "gauss"}));
    verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    circuit_opt(verify, false);
    cap_opt(verify);
    pretty_opt(verify);

    auto *wigner = app.add_subcommand("wigner", "Wigner table of U|state>");
    circuit_opt(wigner, true);
    wigner->add_option("--state", o.state, "Basis index of the input state (wire 0 fastest)");
    pretty_opt(wigner);

    auto *symp = app.add_subcommand("symplectic", "Affine symplectic map (S, a) of a circuit");
    circuit_opt(symp, true);
    pretty_opt(symp);

    auto *genfun = app.add_subcommand("genfun", "Generating function of a generator");
    genfun->add_option("gate", o.gate, "F, R, SUM, ID (or FDAG, P, X, SUMDAG with --cv)")->required();
    genfun->add_option("-d,--d", o.d, "Odd prime dimension");
    genfun->add_flag("--cv", o.cv, "Continuous-variable generator");
    genfun->add_option("--param", o.param, "Rational eta or tau for P/X (symbolic if omitted)");
    pretty_opt(genfun);

    auto *parse = app.add_subcommand("parse", "Syntax-check a circuit file");
    circuit_opt(parse, true);
    pretty_opt(parse);

    CLI11_PARSE(app, argc, argv);

    auto result = run(app.get_subcommands().front()->get_name(), o);
    std::cout << result.envelope.dump(pretty ? 2 : -1) << "\n";
    return result.exit_code;
}
