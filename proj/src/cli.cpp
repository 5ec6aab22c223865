#include "antirec/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "antirec/audit.hpp"
#include "antirec/error.hpp"
#include "antirec/forms.hpp"
#include "antirec/infer.hpp"
#include "antirec/machine.hpp"
#include "antirec/morphic.hpp"
#include "antirec/oeis.hpp"

#ifndef ANTIREC_DEFAULT_DATA_DIR
#define ANTIREC_DEFAULT_DATA_DIR "data/oeis"
#endif

namespace antirec::cli {

namespace {

using nlohmann::json;

// Numbers space-separated on one line.
template <class Range>
void print_line(std::ostream& out, const Range& xs) {
    bool first = true;
    for (const auto& x : xs) {
        if (!first) out << ' ';
        out << x;
        first = false;
    }
    out << '\n';
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ValidationError("cannot write " + path);
}

json report_json(const AuditReport& r) {
    json j{{"claim", r.claim}, {"range", r.range}, {"pass", r.pass}, {"notes", r.notes}};
    if (r.counterexample)
        j["counterexample"] = {{"index", r.counterexample->index},
                               {"value", r.counterexample->value},
                               {"detail", r.counterexample->detail}};
    else
        j["counterexample"] = nullptr;
    return j;
}

int emit_reports(const std::vector<AuditReport>& reports, bool as_json, std::ostream& out) {
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.pass;
        if (as_json) {
            out << report_json(r).dump() << '\n';
            continue;
        }
        out << r.line() << '\n';
        if (r.counterexample) out << "counterexample: " << r.counterexample->detail << '\n';
        for (const auto& n : r.notes) out << "note: " << n << '\n';
    }
    return ok ? kOk : kFailed;
}

std::filesystem::path data_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ANTIREC_DATA_DIR"); env && *env) return env;
    return ANTIREC_DEFAULT_DATA_DIR;
}

struct Options {
    bool json = false;
    std::string form;
    std::uint64_t count = 10;
    std::uint64_t upto = 10000;
    bool with_b = false;

    // guess
    int base = 0;
    std::size_t window = 2000;
    std::uint64_t verify = 100000;
    std::size_t max_states = 64;
    bool lsd = false;
    std::string out_path;
    std::string dot_path;

    // verify
    std::uint64_t lag = 1;
    std::string target;
    std::int64_t scale = 1, slope = 0, shift = 0, lower = 0, upper = 0;
    std::int64_t modulus = 0, residue = 0;
    std::size_t block_len = 0;
    std::vector<std::string> allowed;
    std::uint64_t blocks = 1000;
    std::size_t skip = 0;

    int k = 0;
    std::size_t terms = 10;
    bool force = false;

    std::string machine_path, subst_path, name = "dfao";

    std::string id, data, file, kind, cache;
    bool all = false, zero_term = false, online = false;
    std::int64_t index_shift = 0;
    int timeout = 30;
};

int cmd_generate(const Options& o, std::ostream& out) {
    auto t = generate(parse_form(o.form), o.count);
    if (o.json) {
        json j{{"form", t.form().coeffs()}, {"a", std::vector<std::int64_t>(t.a_values().begin(), t.a_values().end())}};
        if (o.with_b) j["b"] = std::vector<std::int64_t>(t.b_values().begin(), t.b_values().end());
        out << j.dump() << '\n';
        return kOk;
    }
    print_line(out, t.a_values());
    if (o.with_b) print_line(out, t.b_values());
    return kOk;
}

int cmd_diff(const Options& o, std::ostream& out) {
    auto w = difference_word(parse_form(o.form), o.count);
    if (o.json) {
        out << json{{"offset", w.offset}, {"digits", w.digits}}.dump() << '\n';
        return kOk;
    }
    out << "offset " << w.offset << '\n';
    print_line(out, w.digits);
    return kOk;
}

int cmd_gaps(const Options& o, std::ostream& out) {
    auto g = gaps(parse_form(o.form), o.count);
    if (o.json)
        out << json{{"gaps", g}}.dump() << '\n';
    else
        print_line(out, g);
    return kOk;
}

int cmd_guess(const Options& o, std::ostream& out, std::ostream& err) {
    const auto form = parse_form(o.form);
    GuessConfig cfg;
    cfg.base = o.base > 0 ? o.base : static_cast<int>(form.trace());
    cfg.window = o.window;
    cfg.verify_to = o.verify;
    cfg.max_states = o.max_states;
    cfg.reading = o.lsd ? Reading::lsd : Reading::msd;
    cfg.validate();

    const auto length = std::max<std::uint64_t>(cfg.window, cfg.verify_to);
    const auto word = difference_word(form, static_cast<std::size_t>(length));
    auto m = guess_dfao(word.digits, cfg);
    if (!m) {
        err << "no machine with at most " << cfg.max_states << " states fits the first " << cfg.window
            << " terms in base " << cfg.base << '\n';
        if (o.json) out << json{{"form", form.coeffs()}, {"found", false}}.dump() << '\n';
        return kFailed;
    }
    const auto cert = certify(*m, word.digits, cfg.verify_to);
    const auto text = serialize(*m);
    if (!o.out_path.empty()) write_output(o.out_path, text);
    if (!o.dot_path.empty()) write_output(o.dot_path, to_dot(*m, "a" + form.to_string()));
    if (o.json) {
        json j{{"form", form.coeffs()},
               {"found", true},
               {"base", cfg.base},
               {"reading", to_string(cfg.reading)},
               {"offset", word.offset},
               {"states", m->state_count()},
               {"certified_to", cert.upto},
               {"pass", cert.pass},
               {"machine", text}};
        if (cert.first_mismatch) j["first_mismatch"] = *cert.first_mismatch;
        out << j.dump() << '\n';
    } else if (o.out_path.empty()) {
        out << text;
    }
    err << m->state_count() << " states; d_n = A_(n+1) - " << form.kappa() << "n - " << word.offset << '\n';
    if (!cert.pass) {
        err << "certification failed at n = " << *cert.first_mismatch << ": expected " << cert.expected
            << ", machine gives " << cert.actual << '\n';
        return kFailed;
    }
    err << "certified against the generator for n < " << cert.upto << '\n';
    return kOk;
}

int cmd_verify_bounds(const Options& o, std::ostream& out) {
    const auto form = parse_form(o.form);
    std::vector<BoundSpec> specs;
    if (o.target.empty()) {
        specs = kimberling_bounds(form);
    } else {
        BoundSpec s;
        if (o.target == "A") {
            s.target = BoundTarget::A;
        } else if (o.target.size() >= 2 && o.target[0] == 'B') {
            s.target = BoundTarget::B;
            s.block = static_cast<std::size_t>(std::stoul(o.target.substr(1)));
        } else {
            throw DomainError("target must be A or B<j>, got '" + o.target + "'");
        }
        s.scale = o.scale;
        s.slope = o.slope;
        s.shift = o.shift;
        s.lower = o.lower;
        s.upper = o.upper;
        s.id = s.to_string();
        specs.push_back(s);
    }
    std::vector<AuditReport> reports;
    if (o.upto < 1) throw DomainError("--upto must be at least 1");
    const auto table = generate(form, o.upto);
    for (const auto& s : specs) reports.push_back(check_bounds(table, s, o.upto));
    return emit_reports(reports, o.json, out);
}

int cmd_bonacci(const Options& o, std::ostream& out) {
    const auto s = antibonacci_substitution(o.k);
    const auto m = minimize(substitution_to_dfao(s, natural_coding(s)));
    std::set<std::int64_t> outs;
    bool zero_edges = true;
    for (StateId q = 0; q < m.state_count(); ++q) {
        outs.insert(m.output(q));
        zero_edges = zero_edges && m.next(q, 0) == m.initial();
    }
    const bool distinct = outs.size() == m.state_count();
    std::vector<std::int64_t> terms;
    for (std::size_t n = 1; n <= o.terms; ++n) terms.push_back(antibonacci_term(o.k, n));
    if (!o.dot_path.empty()) write_output(o.dot_path, to_dot(m, "antibonacci" + std::to_string(o.k)));
    if (o.json) {
        json images = json::object();
        for (const auto& [a, w] : s.images()) images[std::to_string(a)] = w;
        out << json{{"k", o.k},
                    {"seed", s.seed()},
                    {"images", images},
                    {"terms", terms},
                    {"states", m.state_count()},
                    {"distinct_outputs", distinct},
                    {"zero_edges_to_initial", zero_edges}}
                   .dump()
            << '\n';
    } else {
        out << serialize(s);
        out << "terms ";
        print_line(out, terms);
        out << "states=" << m.state_count() << " distinct_outputs=" << (distinct ? "true" : "false")
            << " zero_edges_to_initial=" << (zero_edges ? "true" : "false") << '\n';
    }
    const bool ok = m.state_count() == static_cast<std::size_t>(o.k) && distinct && zero_edges;
    return ok ? kOk : kFailed;
}

int cmd_residue(const Options& o, std::ostream& out, std::ostream& err) {
    const auto form = parse_form(o.form);
    ResidueSystem rs = [&] {
        try {
            return derive_interval_substitution(form, !o.force);
        } catch (const PreconditionError& e) {
            throw PreconditionError(std::string(e.what()) + " (use --force to try anyway)");
        }
    }();
    const auto s = rs.substitution();
    if (!o.out_path.empty()) write_output(o.out_path, serialize(s));
    if (!o.dot_path.empty())
        write_output(o.dot_path, to_dot(substitution_to_dfao(s, natural_coding(s)), "residues"));
    if (o.json) {
        json images = json::object();
        for (const auto& [a, w] : s.images()) images[std::to_string(a)] = w;
        out << json{{"form", form.coeffs()},
                    {"modulus", rs.modulus},
                    {"seed", rs.seed},
                    {"letters", rs.letters},
                    {"images", images},
                    {"intervals_checked", rs.intervals_checked}}
                   .dump()
            << '\n';
    } else if (o.out_path.empty()) {
        out << serialize(s);
    }
    err << rs.letters.size() << " letters, modulus " << rs.modulus << ", consistent over "
        << rs.intervals_checked << " intervals\n";
    return kOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
    if (o.machine_path.empty() == o.subst_path.empty())
        throw DomainError("give exactly one of --machine and --substitution");
    Dfao m = [&] {
        if (!o.machine_path.empty()) return parse_dfao(read_input(o.machine_path));
        const auto s = parse_substitution(read_input(o.subst_path));
        return substitution_to_dfao(s, natural_coding(s));
    }();
    const auto text = to_dot(m, o.name);
    if (!o.out_path.empty())
        write_output(o.out_path, text);
    else
        out << text;
    return kOk;
}

int cmd_oeis_check(const Options& o, std::ostream& out) {
    std::vector<AuditReport> reports;
    if (!o.file.empty()) {
        if (o.kind.empty() || o.form.empty()) throw DomainError("--file needs --kind and --form");
        FixtureEntry e;
        e.id = o.id.empty() ? std::filesystem::path(o.file).stem().string() : o.id;
        e.kind = o.kind;
        e.form = parse_form(o.form);
        e.zero_term = o.zero_term;
        e.index_shift = o.index_shift;
        auto b = parse_bfile(read_input(o.file), e.id);
        if (b.entries.empty()) throw ValidationError(o.file + " has no entries");
        reports.push_back(compare(reference_sequence(e, b.entries.back().index + e.index_shift), b, e.index_shift));
        return emit_reports(reports, o.json, out);
    }
    const auto dir = data_dir(o.data);
    const auto manifest = load_manifest(dir);
    std::vector<std::string> ids;
    if (o.all) {
        for (const auto& [id, e] : manifest) ids.push_back(id);
    } else {
        if (o.id.empty()) throw DomainError("give --id, --all or --file");
        if (!manifest.contains(o.id)) throw ValidationError(o.id + " is not in " + (dir / "manifest.json").string());
        ids.push_back(o.id);
    }
    for (const auto& id : ids) {
        const auto& e = manifest.at(id);
        auto b = parse_bfile(read_input((dir / e.file).string()), id);
        if (b.entries.empty()) throw ValidationError(e.file + " has no entries");
        auto r = compare(reference_sequence(e, b.entries.back().index + e.index_shift), b, e.index_shift);
        if (!e.source.empty()) r.notes.push_back("reference data: " + e.source);
        reports.push_back(std::move(r));
    }
    return emit_reports(reports, o.json, out);
}

int cmd_oeis_fetch(const Options& o, std::ostream& out) {
    FetchOptions f;
    f.cache_dir = o.cache;
    f.online = o.online;
    f.timeout = std::chrono::seconds(o.timeout);
    const auto b = fetch(o.id, f);
    if (o.json) {
        json entries = json::array();
        for (const auto& e : b.entries) entries.push_back({e.index, e.value.str()});
        out << json{{"id", b.id}, {"entries", entries}}.dump() << '\n';
    } else {
        out << render(b);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Anti-recurrence sequences, their difference automata and substitutions"};
    app.name("antirec");
    app.fallthrough();
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "One JSON record per result");

    auto form_opt = [&](CLI::App* c) {
        return c->add_option("--form", o.form, "Coefficients, e.g. 1,2")->required();
    };

    auto* gen = app.add_subcommand("generate", "Print A_1..A_count");
    form_opt(gen);
    gen->add_option("--count", o.count, "Number of terms")->capture_default_str();
    gen->add_flag("--b", o.with_b, "Also print the complementary sequence B");

    auto* diff = app.add_subcommand("diff", "Difference word A_(n+1) - kappa n - c");
    form_opt(diff);
    diff->add_option("--count", o.count)->capture_default_str();

    auto* gp = app.add_subcommand("gaps", "A_(n+1) - A_n");
    form_opt(gp);
    gp->add_option("--count", o.count)->capture_default_str();

    auto* guess = app.add_subcommand("guess", "Guess and certify a machine for the difference word");
    form_opt(guess);
    guess->add_option("--base", o.base, "Input base (default: trace of the form)");
    guess->add_option("--window", o.window, "Terms used to separate states")->capture_default_str();
    guess->add_option("--verify", o.verify, "Certify against the generator below this index")->capture_default_str();
    guess->add_option("--max-states", o.max_states)->capture_default_str();
    guess->add_flag("--lsd", o.lsd, "Read digits least significant first");
    guess->add_option("--out", o.out_path, "Write the machine here instead of stdout");
    guess->add_option("--dot", o.dot_path, "Also write Graphviz DOT");

    auto* verify = app.add_subcommand("verify", "Finite-range checks");
    verify->require_subcommand(1);
    auto* zas = verify->add_subcommand("zaslavsky", "A_n - 5n + 2 = PD_(n-1) for the form (1,1)");
    zas->add_option("--upto", o.upto)->capture_default_str();
    zas->add_option("--lag", o.lag, "Compare with PD_(n-lag)")->capture_default_str();
    auto* bounds = verify->add_subcommand("bounds", "lower <= scale X_n - slope n + shift <= upper");
    form_opt(bounds);
    bounds->add_option("--upto", o.upto)->capture_default_str();
    bounds->add_option("--target", o.target, "A, B1, B2, ... (default: the known bound family)");
    bounds->add_option("--scale", o.scale)->capture_default_str();
    bounds->add_option("--slope", o.slope);
    bounds->add_option("--shift", o.shift);
    bounds->add_option("--lower", o.lower);
    bounds->add_option("--upper", o.upper);
    auto* mex = verify->add_subcommand("mex", "Block-by-block mex conditions");
    form_opt(mex);
    mex->add_option("--upto", o.upto)->capture_default_str();
    auto* div = verify->add_subcommand("divisibility", "A_n mod m != r");
    form_opt(div);
    div->add_option("--modulus", o.modulus)->required();
    div->add_option("--residue", o.residue)->capture_default_str();
    div->add_option("--upto", o.upto)->capture_default_str();
    auto* blk = verify->add_subcommand("blocks", "Gap words of fixed length lie in a given set");
    form_opt(blk);
    blk->add_option("--len", o.block_len)->required();
    blk->add_option("--allowed", o.allowed, "Comma-separated words, e.g. 696,876,687")->required()->delimiter(',');
    blk->add_option("--blocks", o.blocks)->capture_default_str();
    blk->add_option("--skip", o.skip, "Gaps to skip before the first block")->capture_default_str();

    auto* prog = app.add_subcommand("progression", "A_(n tau + 1) = A_1 + n tau kappa");
    form_opt(prog);
    prog->add_option("--blocks", o.blocks)->capture_default_str();

    auto* bon = app.add_subcommand("bonacci", "Anti-k-bonacci substitution and terms");
    bon->add_option("--k", o.k)->required();
    bon->add_option("--terms", o.terms)->capture_default_str();
    bon->add_option("--dot", o.dot_path, "Write the minimized machine as DOT");

    auto* res = app.add_subcommand("residue-subst", "Substitution on interval residues");
    form_opt(res);
    res->add_flag("--force", o.force, "Attempt forms that are not A1-bounded");
    res->add_option("--out", o.out_path);
    res->add_option("--dot", o.dot_path);

    auto* dot = app.add_subcommand("dot", "Render a machine or substitution file as DOT");
    dot->add_option("--machine", o.machine_path, "Serialized machine ('-' for stdin)");
    dot->add_option("--substitution", o.subst_path, "Serialized substitution ('-' for stdin)");
    dot->add_option("--name", o.name)->capture_default_str();
    dot->add_option("--out", o.out_path);

    auto* oeis = app.add_subcommand("oeis", "Reference data");
    oeis->require_subcommand(1);
    auto* chk = oeis->add_subcommand("check", "Compare shipped or given b-files with the generator");
    chk->add_option("--id", o.id);
    chk->add_flag("--all", o.all, "Every sequence in the manifest");
    chk->add_option("--data", o.data, "Fixture directory (default $ANTIREC_DATA_DIR or the source tree)");
    chk->add_option("--file", o.file, "Check this b-file instead");
    chk->add_option("--form", o.form);
    chk->add_option("--kind", o.kind, "A, A-diff, B, B1, B2, ...");
    chk->add_flag("--zero-term", o.zero_term, "Sequence starts with A_0 = 0");
    chk->add_option("--shift", o.index_shift)->capture_default_str();
    auto* fet = oeis->add_subcommand("fetch", "Print a b-file from the cache or oeis.org");
    fet->add_option("--id", o.id)->required();
    fet->add_option("--cache", o.cache, "Cache directory (default $ANTIREC_OEIS_CACHE or ./oeis-cache)");
    fet->add_flag("--online", o.online, "Allow network access");
    fet->add_option("--timeout", o.timeout, "Seconds")->capture_default_str();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kOk;
        err << app.help();
        return kUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out);
        if (diff->parsed()) return cmd_diff(o, out);
        if (gp->parsed()) return cmd_gaps(o, out);
        if (guess->parsed()) return cmd_guess(o, out, err);
        if (zas->parsed()) return emit_reports({check_zaslavsky(o.upto, o.lag)}, o.json, out);
        if (bounds->parsed()) return cmd_verify_bounds(o, out);
        if (mex->parsed()) return emit_reports({audit_mex(parse_form(o.form), o.upto)}, o.json, out);
        if (div->parsed())
            return emit_reports({check_divisibility(parse_form(o.form), o.modulus, o.residue, o.upto)}, o.json,
                                out);
        if (blk->parsed()) {
            std::set<GapWord> allowed;
            for (const auto& w : o.allowed) allowed.insert(parse_gap_word(w));
            return emit_reports({check_gap_blocks(parse_form(o.form), o.block_len, allowed, o.blocks, o.skip)},
                                o.json, out);
        }
        if (prog->parsed()) return emit_reports({check_progression(parse_form(o.form), o.blocks)}, o.json, out);
        if (bon->parsed()) return cmd_bonacci(o, out);
        if (res->parsed()) return cmd_residue(o, out, err);
        if (dot->parsed()) return cmd_dot(o, out);
        if (chk->parsed()) return cmd_oeis_check(o, out);
        if (fet->parsed()) return cmd_oeis_fetch(o, out);
    } catch (const ClosureFailure& e) {
        err << "antirec: " << e.what() << '\n';
        return kFailed;
    } catch (const RetrievalError& e) {
        err << "antirec: " << e.what() << '\n';
        return kFailed;
    } catch (const Error& e) {
        err << "antirec: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "antirec: invalid argument: " << e.what() << '\n';
        return kUsage;
    }
    err << app.help();
    return kUsage;
}

}  // namespace antirec::cli
