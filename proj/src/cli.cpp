#include "stepsha/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stepsha/codec.hpp"
#include "stepsha/corpus.hpp"
#include "stepsha/estimate.hpp"
#include "stepsha/search.hpp"

namespace stepsha::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int code(ExitStatus s) { return static_cast<int>(s); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path, std::ios::binary);
    if (!o || !(o << text)) throw UsageError("cannot write '" + path + "'");
}

struct CommonOptions {
    std::string variant = "sha256";
    int steps = 0;  // 0: keep the source's own step count
    std::string iv_file;
};

CollisionPair load_pair(const std::string& source, const CommonOptions& opt) {
    CollisionPair pair;
    if (source == "builtin-sha256") pair = builtin_corpus().sha256_pair;
    else if (source == "builtin-sha512") pair = builtin_corpus().sha512_pair;
    else if (source == "builtin")
        pair = parse_variant(opt.variant) == Variant::Sha256 ? builtin_corpus().sha256_pair
                                                             : builtin_corpus().sha512_pair;
    else pair = decode_pair(read_file(source));
    if (opt.steps != 0) pair.step_count = opt.steps;
    check_pair(pair);
    return pair;
}

RegisterState load_iv(const CommonOptions& opt, Variant v) {
    if (opt.iv_file.empty()) return standard_iv(params_for(v));
    return parse_iv(read_file(opt.iv_file), v);
}

DifferentialPath load_path(const std::string& source, Variant v) {
    if (source == "builtin") {
        if (v == Variant::Sha256) return builtin_corpus().sha256_path;
        return derive_path(builtin_corpus().sha512_pair, standard_iv(params_for(v)));
    }
    return decode_path(read_file(source));
}

std::string state_line(const RegisterState& s, const Sha2Params& p) {
    std::string out;
    for (std::size_t i = 0; i < 8; ++i) out += (i ? " " : "") + format_word(s[i], p);
    return out;
}

void print_header(std::ostream& out, const CollisionPair& pair, const CommonOptions& opt) {
    out << "variant: " << variant_name(pair.variant) << "\n"
        << "steps: " << pair.step_count << "\n"
        << "iv: " << (opt.iv_file.empty() ? "standard" : opt.iv_file) << "\n";
}

int cmd_verify(const std::string& source, const CommonOptions& opt, std::ostream& out) {
    const CollisionPair pair = load_pair(source, opt);
    const Sha2Params& p = params_for(pair.variant);
    const RegisterState iv = load_iv(opt, pair.variant);
    const RegisterState h1 = compress(iv, pair.m1, pair.step_count, p);
    const RegisterState h2 = compress(iv, pair.m2, pair.step_count, p);
    print_header(out, pair, opt);
    out << "h(m1): " << state_line(h1, p) << "\n"
        << "h(m2): " << state_line(h2, p) << "\n";
    if (pair.m1 == pair.m2) {
        out << "verdict: TRIVIAL (identical blocks)\n";
        return code(ExitStatus::Negative);
    }
    out << "verdict: " << (h1 == h2 ? "COLLISION" : "NO-COLLISION") << "\n";
    return code(h1 == h2 ? ExitStatus::Ok : ExitStatus::Negative);
}

void print_trace_table(std::ostream& out, const std::vector<DeltaVector>& trace, const Sha2Params& p) {
    const int width = static_cast<int>(p.hex_digits()) + 2;
    out << "step";
    for (char r : kRegisterNames) out << std::setw(width) << std::string("d") + r;
    out << "\n";
    for (std::size_t t = 0; t < trace.size(); ++t) {
        out << std::setw(4) << t;
        for (std::size_t r = 0; r < 8; ++r) out << std::setw(width) << format_delta(trace[t][r], p);
        out << "\n";
    }
}

int cmd_trace(const std::string& source, const std::string& path_source, const std::string& out_file,
              const CommonOptions& opt, std::ostream& out) {
    const CollisionPair pair = load_pair(source, opt);
    const Sha2Params& p = params_for(pair.variant);
    const RegisterState iv = load_iv(opt, pair.variant);
    const std::vector<DeltaVector> trace = trace_pair(iv, pair);

    print_header(out, pair, opt);
    print_trace_table(out, trace, p);
    if (!out_file.empty()) write_file(out_file, encode_path(DifferentialPath{pair.variant, trace}));
    if (path_source.empty()) return code(ExitStatus::Ok);

    const DifferentialPath path = load_path(path_source, pair.variant);
    if (path.variant != pair.variant) throw UsageError("path variant differs from pair variant");
    if (path.steps.size() != trace.size()) {
        throw UsageError("path has " + std::to_string(path.steps.size()) + " steps, trace has " +
                         std::to_string(trace.size()));
    }
    if (const auto d = check_path(trace, path)) {
        out << "path: MISMATCH, " << describe(*d, p) << "\n";
        return code(ExitStatus::Negative);
    }
    out << "path: MATCH\n";
    return code(ExitStatus::Ok);
}

int cmd_deltas(const std::string& source, const CommonOptions& opt, std::ostream& out) {
    const CollisionPair pair = load_pair(source, opt);
    const Sha2Params& p = params_for(pair.variant);
    const WordDeltas d = extract_word_deltas(pair);
    out << "variant: " << variant_name(pair.variant) << "\n";
    std::string nonzero;
    for (std::size_t i = 0; i < 16; ++i) {
        out << "dW" << std::left << std::setw(3) << i << std::right
            << (d.dw[i].is_zero() ? std::string("0") : format_delta_signed(d.dw[i], p)) << "\n";
        if (!d.dw[i].is_zero()) nonzero += (nonzero.empty() ? "" : ",") + std::to_string(i);
    }
    out << "nonzero: " << (nonzero.empty() ? "none" : nonzero) << "\n";
    return code(ExitStatus::Ok);
}

struct SearchOptions {
    std::string strategy = "random-prefix";
    std::string template_source;
    std::vector<int> indices{0, 1, 2, 3, 4, 5, 6, 7};
    bool allow_trivial = false;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string path_source;
    std::string out_file;
};

void print_estimate_lines(std::ostream& out, const Estimate& e) {
    out << format_estimate(e);
}

int cmd_search(const SearchOptions& so, const CommonOptions& opt, std::ostream& out) {
    CommonOptions pair_opt = opt;
    pair_opt.steps = 0;
    const std::string source = so.template_source.empty() ? "builtin" : so.template_source;
    const CollisionPair tmpl = load_pair(source, pair_opt);

    SearchConfig cfg;
    if (so.strategy == "replay") cfg.strategy.generator = Replay{tmpl};
    else if (so.strategy == "random-prefix") cfg.strategy.generator = RandomPrefix{tmpl, so.indices};
    else if (so.strategy == "fixed-deltas")
        cfg.strategy.generator = FixedDeltas{tmpl.variant, extract_word_deltas(tmpl)};
    else throw UsageError("unknown strategy '" + so.strategy + "'");
    cfg.strategy.allow_trivial = so.allow_trivial;
    if (!so.path_source.empty()) cfg.strategy.target_path = load_path(so.path_source, tmpl.variant);
    cfg.budget = so.budget;
    cfg.seed = so.seed;
    cfg.workers = so.workers;
    cfg.steps = opt.steps != 0 ? opt.steps : tmpl.step_count;
    if (!opt.iv_file.empty()) cfg.iv = load_iv(opt, tmpl.variant);

    const SearchReport r = search(cfg);
    if (!so.out_file.empty()) write_file(so.out_file, encode_report(r));

    out << "strategy: " << r.strategy << "\n"
        << "steps: " << r.steps << "\n"
        << "seed: " << r.seed << "\n"
        << "trials: " << r.trials << "\n"
        << "successes: " << r.successes << "\n"
        << "stored collisions: " << r.collisions.size() << " (+" << r.unlisted_successes << " unlisted)\n";
    print_estimate_lines(out, estimate_probability(r));
    if (r.path_checked) {
        out << "first divergence histogram:\n";
        for (const auto& [step, n] : r.divergence_histogram) {
            out << "  step " << std::setw(2) << step << ": " << n << "\n";
        }
    }
    out << "note: " << r.note << "\n";
    out << "--\n"
        << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s ("
        << (cfg.workers > 0 ? cfg.workers : default_workers()) << " workers)\n";
    return code(ExitStatus::Ok);
}

int cmd_estimate(const std::string& report_file, std::ostream& out) {
    const SearchReport r = decode_report(read_file(report_file));
    if (r.trials == 0) throw UsageError("report has zero trials");
    out << "strategy: " << r.strategy << "\n";
    print_estimate_lines(out, estimate_probability(r));
    return code(ExitStatus::Ok);
}

int cmd_selftest(std::ostream& out) {
    bool all = true;
    auto report = [&](bool ok, const std::string& name) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all = all && ok;
    };
    const VectorCorpus& c = builtin_corpus();

    for (const CollisionPair* pair : {&c.sha256_pair, &c.sha512_pair}) {
        const Sha2Params& p = params_for(pair->variant);
        const RegisterState iv = standard_iv(p);
        const bool collide = pair->m1 != pair->m2 && compress(iv, pair->m1, 22, p) == compress(iv, pair->m2, 22, p);
        report(collide, std::string(variant_name(pair->variant)) + " 22-step collision");
    }

    {
        const auto trace = trace_pair(standard_iv(params_for(Variant::Sha256)), c.sha256_pair);
        report(!check_path(trace, c.sha256_path).has_value(), "sha256 trace matches built-in path");
    }

    // Reported, not gated: W16 carries the -1 that offsets dh after step 15.
    for (const CollisionPair* pair : {&c.sha256_pair, &c.sha512_pair}) {
        const Sha2Params& p = params_for(pair->variant);
        const auto w1 = expand_message(pair->m1, 22, p);
        const auto w2 = expand_message(pair->m2, 22, p);
        out << "INFO " << variant_name(pair->variant) << " schedule deltas W16..W21:";
        for (std::size_t t = 16; t < 22; ++t) out << " " << format_delta(word_delta(w1[t], w2[t], p), p);
        out << "\n";
    }

    for (const StandardVector& v : standard_vectors()) {
        const int full = params_for(v.variant).max_steps;
        const bool ok = digest_hex(digest_padded(std::string_view(v.message), v.variant, full), v.variant) ==
                        v.digest_hex;
        report(ok, std::string(variant_name(v.variant)) + " standard digest of \"" + v.message + "\"");
    }

    out << (all ? "selftest: OK\n" : "selftest: FAILED\n");
    return code(all ? ExitStatus::Ok : ExitStatus::Negative);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Step-reduced SHA-2 collision workbench"};
    app.require_subcommand(1);

    CommonOptions common;
    SearchOptions so;
    std::string source;
    std::string path_source;
    std::string out_file;
    std::string report_file;

    auto add_common = [&](CLI::App* cmd, bool with_source) {
        if (with_source) {
            cmd->add_option("source", source, "builtin-sha256, builtin-sha512, builtin, or a pair JSON file")
                ->required();
        }
        cmd->add_option("--variant", common.variant, "sha256 or sha512 (selects 'builtin')")
            ->check(CLI::IsMember({"sha256", "sha512"}));
        cmd->add_option("--steps", common.steps, "number of rounds (default: the pair's own, 22)");
        cmd->add_option("--iv", common.iv_file, "file with 8 hex words a..h (default: standard IV)");
    };

    CLI::App* verify = app.add_subcommand("verify", "check whether a pair collides");
    add_common(verify, true);

    CLI::App* trace = app.add_subcommand("trace", "print per-step register differences");
    add_common(trace, true);
    trace->add_option("--path", path_source, "path JSON file, or 'builtin'");
    trace->add_option("--out", out_file, "write the traced path as JSON");

    CLI::App* deltas = app.add_subcommand("deltas", "list message word differences");
    add_common(deltas, true);

    CLI::App* srch = app.add_subcommand("search", "seeded randomized collision search");
    add_common(srch, false);
    srch->add_option("--strategy", so.strategy, "replay, random-prefix, or fixed-deltas")
        ->check(CLI::IsMember({"replay", "random-prefix", "fixed-deltas"}));
    srch->add_option("--template", so.template_source, "template pair (default: builtin for --variant)");
    srch->add_option("--indices", so.indices, "random-prefix word indices")->delimiter(',');
    srch->add_flag("--allow-trivial", so.allow_trivial, "accept all-zero fixed deltas");
    srch->add_option("--budget", so.budget, "number of trials (default 2^20)")->check(CLI::PositiveNumber);
    srch->add_option("--seed", so.seed, "generator seed");
    srch->add_option("--workers", so.workers, "worker threads (default: available)")->check(CLI::NonNegativeNumber);
    srch->add_option("--path", so.path_source, "target path JSON file, or 'builtin'");
    srch->add_option("--out", so.out_file, "write the report as JSON");

    CLI::App* est = app.add_subcommand("estimate", "success-probability estimate from a report");
    est->add_option("report", report_file, "report JSON file")->required();

    CLI::App* self = app.add_subcommand("selftest", "check the built-in vectors");

    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return code(ExitStatus::Usage);
    }

    try {
        if (verify->parsed()) return cmd_verify(source, common, out);
        if (trace->parsed()) return cmd_trace(source, path_source, out_file, common, out);
        if (deltas->parsed()) return cmd_deltas(source, common, out);
        if (srch->parsed()) return cmd_search(so, common, out);
        if (est->parsed()) return cmd_estimate(report_file, out);
        if (self->parsed()) return cmd_selftest(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return code(ExitStatus::Usage);
    }
    return code(ExitStatus::Usage);
}

}  // namespace stepsha::cli
