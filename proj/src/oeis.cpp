#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "antirec/oeis.hpp"

#include <httplib.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <random>
#include <sstream>

#include "antirec/error.hpp"
#include "antirec/machine.hpp"
#include "antirec/morphic.hpp"

namespace antirec {

namespace {

bool is_integer_token(std::string_view t) {
    std::size_t i = (t.size() > 1 && t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && ws(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !ws(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw RetrievalError("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string id) {
    BFile b;
    b.id = std::move(id);
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') {
            auto c = line.substr(first + 1);
            while (!c.empty() && (c.back() == '\r' || c.back() == ' ')) c.remove_suffix(1);
            if (!c.empty() && c.front() == ' ') c.remove_prefix(1);
            b.comments.emplace_back(c);
            continue;
        }
        auto tok = split_ws(line);
        if (tok.size() != 2) throw ParseError(line_no, "expected '<index> <value>'");
        if (!is_integer_token(tok[0]) || !is_integer_token(tok[1]))
            throw ParseError(line_no, "non-integer token in '" + std::string(line) + "'");
        std::int64_t index;
        try {
            index = std::stoll(std::string(tok[0]));
        } catch (const std::out_of_range&) {
            throw ParseError(line_no, "index out of range");
        }
        if (!b.entries.empty() && index <= b.entries.back().index)
            throw ParseError(line_no, "indices must strictly increase");
        b.entries.push_back({index, BigInt(std::string(tok[1]))});
    }
    return b;
}

std::string render(const BFile& b) {
    std::ostringstream os;
    for (const auto& c : b.comments) os << "# " << c << '\n';
    for (const auto& e : b.entries) os << e.index << ' ' << e.value << '\n';
    return os.str();
}

AuditReport compare(const SequenceFn& seq, const BFile& b, std::int64_t index_shift) {
    AuditReport r;
    r.claim = "oeis:" + (b.id.empty() ? std::string("unnamed") : b.id);
    const BigInt lo = std::numeric_limits<std::int64_t>::min();
    const BigInt hi = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : b.entries) {
        const auto got = seq(e.index + index_shift);
        if (!got) continue;
        ++r.range;
        if (e.value < lo || e.value > hi || e.value.convert_to<std::int64_t>() != *got) {
            std::ostringstream os;
            os << r.claim.substr(5) << "(" << e.index << ") = " << e.value << " but generated " << *got;
            r.fail(static_cast<std::uint64_t>(e.index), *got, os.str());
            break;
        }
    }
    if (r.range == 0) r.notes.push_back("no entry fell inside the generated range");
    return r;
}

std::map<std::string, FixtureEntry> load_manifest(const std::filesystem::path& dir) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad manifest in " + dir.string() + ": " + e.what());
    }
    std::map<std::string, FixtureEntry> out;
    for (const auto& [id, v] : j.items()) {
        FixtureEntry e;
        e.id = id;
        e.file = v.value("file", id + ".txt");
        e.kind = v.at("kind").get<std::string>();
        if (v.contains("form")) e.form = make_form(v.at("form").get<std::vector<std::int64_t>>());
        e.zero_term = v.value("zero_term", false);
        e.offset = v.value("offset", std::int64_t{1});
        e.index_shift = v.value("index_shift", std::int64_t{0});
        e.source = v.value("source", std::string{});
        out.emplace(id, std::move(e));
    }
    return out;
}

SequenceFn reference_sequence(const FixtureEntry& e, std::int64_t max_index) {
    if (max_index < 1) throw DomainError("max_index must be positive");
    const auto& kind = e.kind;
    if (kind == "period-doubling") {
        auto pd = std::make_shared<UniformSubstitution>(2, 0, std::map<Letter, Word>{{0, {0, 1}}, {1, {0, 0}}});
        return [pd, max_index](std::int64_t i) -> std::optional<std::int64_t> {
            if (i < 0 || i > max_index) return std::nullopt;
            return letter_at(*pd, static_cast<std::uint64_t>(i));
        };
    }
    if (kind == "choral") {
        // least significant ternary digit first: 0 -> 0, 2 -> 1, 1 -> look further
        auto m = std::make_shared<Dfao>(3, Reading::lsd, 0, std::vector<std::int64_t>{0, 0, 1},
                                        std::vector<StateId>{1, 0, 2, 1, 1, 1, 2, 2, 2});
        return [m, max_index](std::int64_t i) -> std::optional<std::int64_t> {
            if (i < 0 || i > max_index) return std::nullopt;
            return m->eval(static_cast<std::uint64_t>(i));
        };
    }
    if (!e.form) throw ValidationError("fixture " + e.id + " of kind " + kind + " needs a form");
    const auto k = static_cast<std::int64_t>(e.form->dimension());
    const auto n = static_cast<std::size_t>(kind == "A-diff" && !e.zero_term ? max_index + 1 : max_index);
    auto t = std::make_shared<GenerationTable>(generate(*e.form, n));
    const auto count = static_cast<std::int64_t>(t->size());
    if (kind == "A") {
        const bool z = e.zero_term;
        return [t, count, z](std::int64_t i) -> std::optional<std::int64_t> {
            if (z && i == 0) return 0;
            if (i < 1 || i > count) return std::nullopt;
            return t->a(static_cast<std::size_t>(i));
        };
    }
    if (kind == "A-diff") {
        const bool z = e.zero_term;
        return [t, count, z](std::int64_t i) -> std::optional<std::int64_t> {
            const auto hi = z ? i : i + 1;
            if (i < 1 || hi > count) return std::nullopt;
            const auto prev = hi == 1 ? 0 : t->a(static_cast<std::size_t>(hi - 1));
            return t->a(static_cast<std::size_t>(hi)) - prev;
        };
    }
    if (kind == "B") {
        return [t, count, k](std::int64_t i) -> std::optional<std::int64_t> {
            if (i < 1 || i > count * k) return std::nullopt;
            return t->b(static_cast<std::size_t>(i));
        };
    }
    if (kind.size() == 2 && kind[0] == 'B' && kind[1] >= '1' && kind[1] <= '9') {
        const auto j = static_cast<std::size_t>(kind[1] - '0');
        if (static_cast<std::int64_t>(j) > k) throw ValidationError("fixture " + e.id + ": " + kind + " exceeds the dimension");
        return [t, count, j](std::int64_t i) -> std::optional<std::int64_t> {
            if (i < 1 || i > count) return std::nullopt;
            return t->b_sub(j, static_cast<std::size_t>(i));
        };
    }
    throw ValidationError("fixture " + e.id + " has unknown kind '" + kind + "'");
}

void validate_id(std::string_view id) {
    bool ok = id.size() == 7 && id[0] == 'A';
    for (std::size_t i = 1; ok && i < id.size(); ++i) ok = id[i] >= '0' && id[i] <= '9';
    if (!ok) throw ValidationError("'" + std::string(id) + "' is not an OEIS id (A followed by six digits)");
}

std::string bfile_path(std::string_view id) {
    validate_id(id);
    return "/" + std::string(id) + "/b" + std::string(id.substr(1)) + ".txt";
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("ANTIREC_OEIS_CACHE"); env && *env) return env;
    return "oeis-cache";
}

BFile fetch(std::string_view id, const FetchOptions& opts) {
    validate_id(id);
    const auto dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;
    const auto cached = dir / (std::string(id) + ".txt");
    if (std::filesystem::exists(cached)) return parse_bfile(read_file(cached), std::string(id));
    if (!opts.online)
        throw RetrievalError(std::string(id) + " is not cached in " + dir.string() +
                             " and network access is disabled");

    httplib::Client cli(opts.server);
    cli.set_connection_timeout(opts.timeout);
    cli.set_read_timeout(opts.timeout);
    cli.set_follow_location(true);
    auto res = cli.Get(bfile_path(id));
    if (!res) throw RetrievalError("request for " + std::string(id) + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw RetrievalError("request for " + std::string(id) + " returned HTTP " + std::to_string(res->status));
    auto b = parse_bfile(res->body, std::string(id));

    // write then rename, so readers never see a partial file
    std::filesystem::create_directories(dir);
    auto tmp = dir / (std::string(id) + ".txt.tmp" + std::to_string(std::random_device{}()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << res->body;
        if (!out) throw RetrievalError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, cached);
    return b;
}

}  // namespace antirec
