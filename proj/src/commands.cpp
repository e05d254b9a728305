#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardy/cli_io.hpp"

namespace hardy::cli {

namespace {

struct CommonOptions {
    std::size_t n = 0;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    bool timing = false;
};

struct ConjugationSpec {
    std::string kind = "J";
    std::string lambda;
    std::string alpha;
    std::string zeta;
    std::string matrix;
};

struct BuiltConjugation {
    AntilinearOp op;
    json echo;
    std::optional<Complex> lambda;
    std::optional<UnimodularSeq> zeta;
};

/// Inline JSON, or @path to read it from a file.
json load_json_arg(const std::string& text, const std::string& what) {
    if (text.empty()) {
        throw InputError(what + " is required");
    }
    std::string body = text;
    if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) {
            throw InputError("cannot read " + what + " file " + text.substr(1));
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON for " + what + ": " + e.what());
    }
}

LinearOp matrix_from_json(const json& j) {
    const json& rows = j.is_object() ? j.value("rows", json()) : j;
    if (!rows.is_array() || rows.empty()) {
        throw InputError("matrix must be a non-empty list of rows");
    }
    const std::size_t n = rows.size();
    std::vector<Complex> e;
    e.reserve(n * n);
    for (const json& r : rows) {
        if (!r.is_array() || r.size() != n) {
            throw InputError("matrix must be square");
        }
        for (const json& z : r) {
            e.push_back(complex_from_json(z));
        }
    }
    return LinearOp(n, std::move(e));
}

BuiltConjugation build_conjugation(const ConjugationSpec& spec, std::size_t n, std::uint64_t seed) {
    const std::string& kind = spec.kind;
    if (kind == "J") {
        return {build_J(n), {{"kind", kind}}, std::nullopt, std::nullopt};
    }
    if (kind == "lambda") {
        const json j = load_json_arg(spec.lambda, "--lambda");
        const Complex l = require_unimodular(complex_from_json(j), "lambda");
        return {build_c_lambda(l, n), {{"kind", kind}, {"lambda", j}}, l, std::nullopt};
    }
    if (kind == "alpha") {
        const json j = load_json_arg(spec.alpha, "--alpha");
        return {build_c_alpha(AlphaSeq(sequence_from_json(j, n, 0))), {{"kind", kind}, {"alpha", j}}, std::nullopt,
                std::nullopt};
    }
    if (kind == "zeta") {
        const json j = load_json_arg(spec.zeta, "--zeta");
        UnimodularSeq zeta(sequence_from_json(j, n - 1, 1));
        AntilinearOp op = build_c_zeta(zeta);
        return {std::move(op), {{"kind", kind}, {"zeta", j}}, std::nullopt, std::move(zeta)};
    }
    if (kind == "unitary-seed") {
        return {build_from_unitary(random_unitary(n, seed)), {{"kind", kind}, {"unitary_seed", seed}}, std::nullopt,
                std::nullopt};
    }
    if (kind == "matrix") {
        const json j = load_json_arg(spec.matrix, "--matrix");
        LinearOp a = matrix_from_json(j);
        if (a.dim() != n) {
            throw InputError("matrix order " + std::to_string(a.dim()) + " does not match --n " + std::to_string(n));
        }
        return {AntilinearOp(std::move(a)), {{"kind", kind}, {"matrix", j}}, std::nullopt, std::nullopt};
    }
    throw InputError("unknown conjugation kind \"" + kind + "\"");
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw InputError("cannot write " + path);
    }
    file << text;
    if (!file) {
        throw InputError("write failed for " + path);
    }
}

json report_file(json command, json results, const CommonOptions& common,
                 std::chrono::steady_clock::time_point started) {
    json report = {{"schema_version", kSchemaVersion}, {"command", std::move(command)}, {"results", std::move(results)}};
    if (common.timing) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        report["runtime_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    return report;
}

json common_echo(const std::string& name, const CommonOptions& common) {
    return {{"name", name}, {"n", common.n}, {"tol", common.tol}, {"seed", common.seed}};
}

int check_conjugation(const CommonOptions& common, const ConjugationSpec& spec, int trials, std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    if (trials < 1) {
        throw InputError("--trials must be >= 1");
    }
    const BuiltConjugation c = build_conjugation(spec, common.n, common.seed);
    const ConjugationCert cert = verify_conjugation(c.op, trials, common.tol, common.seed);

    json command = common_echo("check-conjugation", common);
    command["trials"] = trials;
    command["conjugation"] = c.echo;
    const json report = report_file(command, certificate_to_json(cert), common, started);
    write_text(common.out, report.dump(2) + "\n", out);
    return cert.passed ? kPositive : kNegative;
}

std::vector<Complex> diagonal_of(const LinearOp& a) {
    std::vector<Complex> d(a.dim());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = a(i, i);
    }
    return d;
}

int check_symmetry(const CommonOptions& common, const ConjugationSpec& spec, const std::string& symbol_path,
                   std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    const json symbol_json = load_json_arg("@" + symbol_path, "--symbol");
    const LaurentSymbol symbol = symbol_from_json(symbol_json);
    if (symbol.band() + 1 > common.n) {
        throw InputError("symbol band " + std::to_string(symbol.band()) + " exceeds N - 1 = " +
                         std::to_string(common.n - 1));
    }
    const BuiltConjugation c = build_conjugation(spec, common.n, common.seed);
    const ToeplitzSection t = build_toeplitz(symbol, common.n);

    SymmetryReport report;
    report.tol = common.tol;
    report.window = default_window(c.op, symbol.band());
    report.residual = symmetry_residual(c.op, t, report.window);
    if (c.zeta) {
        report.one_sided = check_zeta_condition(symbol, *c.zeta, common.tol);
        report.entrywise = check_entrywise_condition(symbol, *c.zeta, common.n, common.tol);
    } else if (bandwidth(c.op.a_factor()) == 0) {
        const std::vector<Complex> d = diagonal_of(c.op.a_factor());
        if (c.lambda) {
            report.one_sided = check_ko_lee(symbol, *c.lambda, common.tol);
        } else {
            std::vector<Complex> w(symbol.band() + 1);
            for (std::size_t k = 0; k < w.size(); ++k) {
                w[k] = std::conj(d[k]);
            }
            report.one_sided = check_one_sided_condition(symbol, w, common.tol);
        }
        report.entrywise = check_entrywise_diagonal(symbol, d, common.tol);
    }

    json command = common_echo("check-symmetry", common);
    command["symbol"] = symbol_json;
    command["conjugation"] = c.echo;
    const json file = report_file(command, report_to_json(report), common, started);
    write_text(common.out, file.dump(2) + "\n", out);
    return report.symmetric() ? kPositive : kNegative;
}

int gen_symbol(const CommonOptions& common, const std::string& onesided_arg, const std::string& phi0_arg,
               const std::string& zeta_arg, std::ostream& out) {
    std::map<int, Complex> onesided;
    if (!onesided_arg.empty()) {
        json list = load_json_arg(onesided_arg, "--onesided");
        if (list.is_object()) {
            list = list.value("coeffs", json::array());
        }
        if (!list.is_array()) {
            throw InputError("--onesided must be a list of {n, re, im}");
        }
        for (const json& entry : list) {
            if (!entry.is_object() || !entry.contains("n") || !entry.at("n").is_number_integer()) {
                throw InputError("one-sided coefficient needs integer \"n\": " + entry.dump());
            }
            const int n = entry.at("n").get<int>();
            if (n < 1) {
                throw InputError("one-sided coefficient index must be >= 1, got " + std::to_string(n));
            }
            if (!onesided.emplace(n, complex_from_json(entry)).second) {
                throw InputError("duplicate one-sided coefficient n = " + std::to_string(n));
            }
        }
    }
    const Complex phi0 = phi0_arg.empty() ? Complex{} : complex_from_json(load_json_arg(phi0_arg, "--phi0"));
    const std::size_t needed = onesided.empty() ? 0 : static_cast<std::size_t>(onesided.rbegin()->first);
    std::vector<Complex> values;
    if (needed > 0) {
        values = sequence_from_json(load_json_arg(zeta_arg, "--zeta"), needed, 1);
    }
    const UnimodularSeq zeta(std::move(values));
    const LaurentSymbol symbol = generate_symmetric_symbol(onesided, phi0, zeta);
    const CriterionVerdict v = check_zeta_condition(symbol, zeta, common.tol);
    write_text(common.out, symbol_to_json(symbol).dump(2) + "\n", out);
    return v.holds ? kPositive : kNegative;
}

struct ExploreArgs {
    int trials = 100;
    std::size_t band = 4;
    std::string mode = "random-zeta";
    double symmetric_fraction = 0.5;
};

ExploreMode parse_mode(const std::string& mode) {
    if (mode == "random-zeta") {
        return ExploreMode::random_zeta;
    }
    if (mode == "constant-zeta") {
        return ExploreMode::constant_zeta;
    }
    if (mode == "random-unitary") {
        return ExploreMode::random_unitary;
    }
    throw InputError("unknown explore mode \"" + mode + "\"");
}

int explore(const CommonOptions& common, const ExploreArgs& args, std::ostream& out) {
    const auto started = std::chrono::steady_clock::now();
    ExploreOptions options;
    options.trials = args.trials;
    options.dim = common.n;
    options.band = args.band;
    options.seed = common.seed;
    options.mode = parse_mode(args.mode);
    options.tol = common.tol;
    options.symmetric_fraction = args.symmetric_fraction;
    if (options.trials < 0 || options.band < 1 || options.dim <= options.band) {
        throw InputError("explore needs --trials >= 0 and --n > --band >= 1");
    }

    std::ofstream file;
    if (!common.out.empty()) {
        file.open(common.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw InputError("cannot write " + common.out);
        }
    }
    std::ostream& sink = common.out.empty() ? out : static_cast<std::ostream&>(file);

    json command = common_echo("explore", common);
    command["band"] = args.band;
    command["trials"] = args.trials;
    command["mode"] = args.mode;
    command["symmetric_fraction"] = args.symmetric_fraction;
    sink << json{{"schema_version", kSchemaVersion}, {"command", command}}.dump() << "\n";

    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t entry_agreements = 0;
    std::size_t entry_disagreements = 0;
    std::size_t holding = 0;
    std::optional<double> max_residual_holding;
    double max_residual = 0.0;
    json disagreement_trials = json::array();
    explore_problem(options, [&](const ExplorationRecord& rec) {
        sink << json{{"record", record_to_json(rec)}}.dump() << "\n";
        const SymmetryReport& r = rec.report;
        max_residual = std::max(max_residual, r.residual);
        if (r.one_sided) {
            if (*r.agree()) {
                ++agreements;
            } else {
                ++disagreements;
                disagreement_trials.push_back(rec.trial);
            }
            if (r.one_sided->holds) {
                ++holding;
                max_residual_holding = std::max(max_residual_holding.value_or(0.0), r.residual);
            }
        }
        if (r.entrywise) {
            ++(*r.entrywise_agree() ? entry_agreements : entry_disagreements);
        }
    });

    const json summary = {{"trials", args.trials},
                          {"agreements", agreements},
                          {"disagreements", disagreements},
                          {"entrywise_agreements", entry_agreements},
                          {"entrywise_disagreements", entry_disagreements},
                          {"condition_holding_trials", holding},
                          {"max_residual_when_condition_holds",
                           max_residual_holding ? json(*max_residual_holding) : json(nullptr)},
                          {"max_residual", max_residual},
                          {"disagreement_trials", disagreement_trials}};
    json tail = {{"summary", summary}};
    if (common.timing) {
        tail["runtime_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    sink << tail.dump() << "\n";
    sink.flush();
    if (!sink) {
        throw InputError("write failed for " + (common.out.empty() ? std::string("stdout") : common.out));
    }
    if (!common.out.empty()) {
        out << report_file(command, summary, common, started).dump(2) << "\n";
    }
    return entry_disagreements == 0 ? kPositive : kNegative;
}

void add_common(CLI::App* sub, CommonOptions& common, bool needs_n) {
    auto* n = sub->add_option("--n", common.n, "Truncation order N (section z^0 .. z^{N-1})")
                  ->check(CLI::PositiveNumber);
    if (needs_n) {
        n->required();
    }
    sub->add_option("--tol", common.tol, "Comparison tolerance")->capture_default_str();
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_option("--out", common.out, "Output path (default stdout)");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    sub->add_flag("--timing", common.timing, "Include runtime_ms in the report");
}

void add_conjugation(CLI::App* sub, ConjugationSpec& spec) {
    sub->add_option("--kind", spec.kind, "J | lambda | alpha | zeta | unitary-seed | matrix")
        ->check(CLI::IsMember({"J", "lambda", "alpha", "zeta", "unitary-seed", "matrix"}))
        ->capture_default_str();
    sub->add_option("--lambda", spec.lambda, "Unimodular lambda as JSON, e.g. {\"theta\": 1.57}");
    sub->add_option("--alpha", spec.alpha, "alpha_0.. sequence spec (JSON or @file)");
    sub->add_option("--zeta", spec.zeta, "zeta_1.. sequence spec (JSON or @file)");
    sub->add_option("--matrix", spec.matrix, "A-factor as {\"rows\": [[...]]} (JSON or @file)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conjugations and complex-symmetric Toeplitz sections on truncated H^2", "hardy"};
    app.require_subcommand(1);

    CommonOptions common;
    ConjugationSpec spec;
    int trials = 100;
    std::string symbol_path;
    std::string onesided;
    std::string phi0;
    ExploreArgs explore_args;

    auto* cc = app.add_subcommand("check-conjugation", "Build a conjugation and certify the axioms");
    add_common(cc, common, true);
    add_conjugation(cc, spec);
    cc->add_option("--trials", trials, "Sampled vector pairs")->capture_default_str();

    auto* cs = app.add_subcommand("check-symmetry", "Test whether T_phi is C-symmetric");
    add_common(cs, common, true);
    add_conjugation(cs, spec);
    cs->add_option("--symbol", symbol_path, "Symbol file")->required();

    auto* gs = app.add_subcommand("gen-symbol", "Complete a one-sided symbol to satisfy the zeta criterion");
    add_common(gs, common, false);
    gs->add_option("--onesided", onesided, "List of {n, re, im} with n >= 1 (JSON or @file)");
    gs->add_option("--phi0", phi0, "phi^(0) as JSON complex");
    gs->add_option("--zeta", spec.zeta, "zeta_1.. sequence spec (JSON or @file)");

    auto* ex = app.add_subcommand("explore", "Randomised comparison of coefficient criteria and the residual oracle");
    add_common(ex, common, true);
    ex->add_option("--band", explore_args.band, "Symbol band M")->capture_default_str();
    ex->add_option("--trials", explore_args.trials, "Number of trials")->capture_default_str();
    ex->add_option("--mode", explore_args.mode, "random-zeta | constant-zeta | random-unitary")
        ->check(CLI::IsMember({"random-zeta", "constant-zeta", "random-unitary"}))
        ->capture_default_str();
    ex->add_option("--symmetric-fraction", explore_args.symmetric_fraction,
                   "Share of trials whose symbol satisfies the one-sided criterion")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPositive;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPositive;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (cc->parsed()) {
            return check_conjugation(common, spec, trials, out);
        }
        if (cs->parsed()) {
            return check_symmetry(common, spec, symbol_path, out);
        }
        if (gs->parsed()) {
            return gen_symbol(common, onesided, phi0, spec.zeta, out);
        }
        return explore(common, explore_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace hardy::cli
