// Copyright 2026 The quhm Authors.
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

// quhm: construct, verify, inspect and serialize the matrices of the library.
//
// Exit codes: 0 pass, 1 a requested check failed, 2 usage or parse error,
// 3 a construction failed its own verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "quhm/errors.hpp"

namespace {

std::vector<std::size_t> parse_factorization(const std::string& text) {
    std::vector<std::size_t> dims;
    if (text.empty()) return dims;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(part, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != part.size() || part.empty() || v == 0)
            throw quhm::ParameterError("--factorization expects positive integers like 3,3,3; got '" + text + "'");
        dims.push_back(static_cast<std::size_t>(v));
    }
    return dims;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace quhm::cli;

    CLI::App app{"Quaternary unit Hadamard matrices from skew cores: construct, verify, report"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    Options opt;
    std::string factorization;
    std::string format_name = "json";

    auto add_params = [&](CLI::App* sub, bool need_m) {
        sub->add_option("--q", opt.q, "Core order q");
        if (need_m) sub->add_option("--m", opt.m, "Recursion depth m")->check(CLI::NonNegativeNumber);
        sub->add_option("--core-file", opt.core_file, "Read a user-supplied core document instead of the Jacobsthal core")
            ->check(CLI::ExistingFile);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "txt"}));
        sub->add_option("--out", opt.out, "Write the document here instead of stdout");
    };

    CLI::App* construct = app.add_subcommand("construct", "Build a core, pair, QUH or quaternary Hadamard matrix");
    construct->add_option("kind", opt.construct_kind, "core | ja | seeded | quh | cd | qhad")
        ->required()
        ->check(CLI::IsMember({"core", "ja", "seeded", "quh", "cd", "qhad"}));
    add_params(construct, true);
    add_output(construct);
    construct->add_flag("--no-verify", opt.no_verify, "Skip the Gram checks on the result");
    construct->add_option("--seed-file", opt.seed_file, "Seed pair document for 'seeded'")->check(CLI::ExistingFile);

    CLI::App* verify = app.add_subcommand("verify", "Run checks on a document");
    verify->add_option("path", opt.path, "Document to check ('-' for stdin)");
    verify->add_option("--check", opt.checks,
                       "Checks to run: amicable, gram, regularity, butson, unit-hadamard, core, quaternary, "
                       "multicirculant, membership, spectrum, excess-lemma")
        ->delimiter(',');
    add_params(verify, false);
    verify->add_option("--m-max", opt.m_max, "Largest depth for excess-lemma")->check(CLI::NonNegativeNumber);
    verify->add_option("--factorization", factorization, "Block orders for the multicirculant check, e.g. 3,3");

    CLI::App* report = app.add_subcommand("report", "One-line summary of a document");
    report->add_option("path", opt.path, "Document to summarize ('-' for stdin)")->required();
    report->add_option("--factorization", factorization, "Block orders for the multicirculant verdict");

    CLI::App* scheme = app.add_subcommand("scheme", "Association scheme of a skew core");
    scheme->add_option("action", opt.scheme_action, "axioms | eigenmatrix | membership")
        ->required()
        ->check(CLI::IsMember({"axioms", "eigenmatrix", "membership"}));
    scheme->add_option("path", opt.path, "sign-pair or quh document for membership");
    {
        scheme->add_option("--q", opt.q, "Core order q");
        scheme->add_option("--m", opt.m, "Tensor depth m")->check(CLI::NonNegativeNumber);
        scheme->add_option("--core-file", opt.core_file, "User-supplied skew core document")->check(CLI::ExistingFile);
    }
    add_output(scheme);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        opt.format = quhm::format_from_string(format_name);
        opt.factorization = parse_factorization(factorization);
        opt.factorization_given = !factorization.empty();
        CLI::App* active = app.get_subcommands().front();
        auto given = [active](const char* name) {
            const CLI::Option* o = active->get_option_no_throw(name);
            return o != nullptr && o->count() > 0;
        };
        opt.q_given = given("--q");
        opt.m_given = given("--m");
        opt.order_cap = quhm::order_cap_from_env();

        if (construct->parsed()) return cmd_construct(opt, std::cout, std::cerr);
        if (verify->parsed()) return cmd_verify(opt, std::cout, std::cerr);
        if (report->parsed()) return cmd_report(opt, std::cout, std::cerr);
        if (scheme->parsed()) return cmd_scheme(opt, std::cout, std::cerr);
    } catch (const quhm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
