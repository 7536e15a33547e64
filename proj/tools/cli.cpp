// Copyright (c) maxplus contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxplus/maxplus.hpp"

namespace maxplus::cli {

namespace {

struct InputOptions {
    std::string file;
    std::string lambda;
};

struct Settings {
    std::size_t max_cycles = 1'000'000;
    std::string method = "extremal";
    bool json = false;
    std::string vector;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MpMatrix load_matrix(const InputOptions& input) {
    io::MatrixDocument doc;
    try {
        doc = io::parse_matrix(read_input(input.file));
    } catch (const ParseError& e) {
        throw UsageError(input.file + ": " + e.what());
    }
    if (!input.lambda.empty()) {
        try {
            doc.lambda_shift = io::parse_rational(input.lambda);
        } catch (const ParseError&) {
            throw UsageError("--lambda expects a finite number, got '" + input.lambda + "'");
        }
    }
    return doc.shifted();
}

graph::EnumerationLimits limits_of(const Settings& s) { return graph::EnumerationLimits{s.max_cycles}; }

struct MethodOutput {
    ScaledBasis basis;
    supereig::BasisStats stats;
};

MethodOutput run_method(const MpMatrix& a, const std::string& method, const Settings& s, bool filter) {
    const auto limits = limits_of(s);
    MethodOutput out;
    if (method == "extremal") {
        supereig::BasisOptions options;
        options.limits = limits;
        if (!filter) {
            options.oracle = supereig::accept_all_oracle();
        }
        auto result = supereig::compute_basis(a, options);
        out.basis = std::move(result.basis);
        out.stats = result.stats;
        return out;
    }
    oracle::GeneratorSet gens;
    if (method == "wang2020") {
        const graph::Digraph d(a);
        const auto cycles = graph::enumerate_nonneg_elementary_cycles(d, limits);
        out.stats.cycles = cycles.size();
        for (const auto& sigma : cycles) {
            out.stats.paths += graph::enumerate_max_jsigma_paths(d, sigma, limits).size();
        }
        gens = oracle::cycle_path_generators(a, limits);
    } else if (method == "dd") {
        gens = oracle::double_description(oracle::TwoSidedSystem::supereigen(a));
    } else {
        throw UsageError("unknown method '" + method + "'");
    }
    out.stats.candidates = gens.size();
    const ScaledBasis unique = gens.scaled_set();
    out.stats.duplicates = gens.size() - unique.size();
    out.basis = filter ? oracle::extremal_filter(gens) : unique;
    return out;
}

nlohmann::json basis_json(const MpMatrix& a, const MethodOutput& m) {
    const ExtReal lambda = graph::max_cycle_mean(a);
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& v : m.basis) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : v) {
            row.push_back(x.is_finite() ? nlohmann::json(io::format_scalar(x)) : nlohmann::json(nullptr));
        }
        basis.push_back(std::move(row));
    }
    return {
        {"n", a.rows()},
        {"lambda", io::format_scalar(lambda)},
        {"solvable", lambda >= ExtReal(0)},
        {"basis", std::move(basis)},
        {"stats",
         {{"cycles", m.stats.cycles},
          {"paths", m.stats.paths},
          {"candidates", m.stats.candidates},
          {"duplicates", m.stats.duplicates}}},
    };
}

int cmd_basis(const InputOptions& input, const Settings& s, std::ostream& out) {
    const MpMatrix a = load_matrix(input);
    const MethodOutput m = run_method(a, s.method, s, true);
    if (s.json) {
        out << basis_json(a, m).dump(2) << '\n';
    } else {
        out << io::format_basis(m.basis);
    }
    return kOk;
}

int cmd_generators(const InputOptions& input, const Settings& s, std::ostream& out) {
    const MpMatrix a = load_matrix(input);
    out << io::format_basis(run_method(a, s.method, s, false).basis);
    return kOk;
}

int cmd_lambda(const InputOptions& input, std::ostream& out) {
    out << io::format_scalar(graph::max_cycle_mean(load_matrix(input))) << '\n';
    return kOk;
}

int cmd_cycles(const InputOptions& input, const Settings& s, std::ostream& out) {
    const graph::Digraph d(load_matrix(input));
    for (const auto& c : graph::enumerate_nonneg_elementary_cycles(d, limits_of(s))) {
        for (std::size_t k = 0; k < c.nodes.size(); ++k) {
            out << (k ? " " : "") << c.nodes[k] + 1;
        }
        out << " : " << c.weight.get_str() << '\n';
    }
    return kOk;
}

int cmd_check(const InputOptions& input, const Settings& s, std::ostream& out) {
    const MpMatrix a = load_matrix(input);
    MpVector v;
    try {
        v = io::parse_vector(s.vector, a.rows());
    } catch (const ParseError& e) {
        throw UsageError(std::string("--vector: ") + e.what());
    }
    const bool member = supereig::in_supereig(a, v);
    bool extremal = false;
    if (member) {
        const ScaledBasis generators = oracle::cycle_path_generators(a, limits_of(s)).scaled_set();
        extremal = supereig::is_extremal_ref(a, v, generators);
    }
    out << (member ? "member" : "nonmember") << ' ' << (extremal ? "extremal" : "nonextremal") << '\n';
    return kOk;
}

int cmd_verify(const InputOptions& input, const Settings& s, std::ostream& out) {
    const MpMatrix a = load_matrix(input);
    const ScaledBasis by_search = run_method(a, "extremal", s, true).basis;
    const ScaledBasis by_generators = run_method(a, "wang2020", s, true).basis;
    const ScaledBasis by_dd = run_method(a, "dd", s, true).basis;
    if (oracle::bases_equal(by_search, by_generators) && oracle::bases_equal(by_search, by_dd)) {
        out << "OK: 3 methods agree, |basis|=" << by_search.size() << '\n';
        return kOk;
    }
    out << "MISMATCH: |extremal|=" << by_search.size() << " |wang2020|=" << by_generators.size()
        << " |dd|=" << by_dd.size() << '\n';
    const std::pair<const char*, const ScaledBasis*> all[] = {
        {"extremal", &by_search}, {"wang2020", &by_generators}, {"dd", &by_dd}};
    for (const auto& [name, basis] : all) {
        out << "[" << name << "]\n" << io::format_basis(*basis);
    }
    return kMismatch;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scaled basis of the max-plus supereigenvector cone {x : A x >= x}", "maxplus"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    InputOptions input;
    app.add_option("--max-cycles", settings.max_cycles, "Cap on enumerated elementary cycles")
        ->check(CLI::PositiveNumber);

    const std::vector<std::string> methods{"extremal", "wang2020", "dd"};
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("FILE", input.file, "Matrix file, one row per line ('-' for stdin)")->required();
        sub->add_option("--lambda", input.lambda, "Solve A x >= L x by rescaling A to (-L) A");
    };

    auto* basis = app.add_subcommand("basis", "Print the scaled basis, one vector per line");
    add_input(basis);
    basis->add_option("--method", settings.method, "extremal | wang2020 | dd")->check(CLI::IsMember(methods));
    basis->add_flag("--json", settings.json, "Emit a JSON document");

    auto* generators = app.add_subcommand("generators", "Print the unfiltered scaled generating set");
    add_input(generators);
    generators->add_option("--method", settings.method, "extremal | wang2020 | dd")->check(CLI::IsMember(methods));

    auto* lambda = app.add_subcommand("lambda", "Print the maximum cycle mean");
    add_input(lambda);

    auto* cycles = app.add_subcommand("cycles", "List nonnegative elementary cycles with weights");
    add_input(cycles);

    auto* check = app.add_subcommand("check", "Test membership and extremality of a vector");
    add_input(check);
    check->add_option("--vector", settings.vector, "Entries, e.g. \"0 -1 -inf\"")->required();

    auto* verify = app.add_subcommand("verify", "Cross-check the three basis methods");
    add_input(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*basis) return cmd_basis(input, settings, out);
        if (*generators) return cmd_generators(input, settings, out);
        if (*lambda) return cmd_lambda(input, out);
        if (*cycles) return cmd_cycles(input, settings, out);
        if (*check) return cmd_check(input, settings, out);
        if (*verify) return cmd_verify(input, settings, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace maxplus::cli
