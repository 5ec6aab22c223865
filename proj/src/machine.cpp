#include "antirec/machine.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "antirec/error.hpp"

namespace antirec {

std::string_view to_string(Reading r) { return r == Reading::msd ? "msd" : "lsd"; }

Reading parse_reading(std::string_view s) {
    if (s == "msd") return Reading::msd;
    if (s == "lsd") return Reading::lsd;
    throw DomainError("reading must be msd or lsd, got '" + std::string(s) + "'");
}

Dfao::Dfao(int base, Reading reading, StateId initial, std::vector<std::int64_t> outputs,
           std::vector<StateId> transitions)
    : base_(base),
      reading_(reading),
      initial_(initial),
      outputs_(std::move(outputs)),
      delta_(std::move(transitions)) {
    if (base_ < 2) throw DomainError("DFAO base must be at least 2");
    if (outputs_.empty()) throw DomainError("DFAO needs at least one state");
    if (initial_ >= outputs_.size()) throw DomainError("initial state out of range");
    if (delta_.size() != outputs_.size() * static_cast<std::size_t>(base_))
        throw DomainError("transition table is not total over states x digits");
    for (auto t : delta_)
        if (t >= outputs_.size()) throw DomainError("transition target out of range");
}

std::vector<int> digits_msd(std::uint64_t n, int base) {
    std::vector<int> d;
    while (n > 0) {
        d.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
        n /= static_cast<std::uint64_t>(base);
    }
    std::reverse(d.begin(), d.end());
    return d;
}

std::int64_t Dfao::eval(std::uint64_t n) const {
    const auto b = static_cast<std::uint64_t>(base_);
    std::array<int, 64> buf{};
    std::size_t len = 0;
    while (n > 0) {
        buf[len++] = static_cast<int>(n % b);
        n /= b;
    }
    StateId q = initial_;
    if (reading_ == Reading::msd) {
        for (std::size_t i = len; i-- > 0;) q = next(q, buf[i]);
    } else {
        for (std::size_t i = 0; i < len; ++i) q = next(q, buf[i]);
    }
    return outputs_[q];
}

StateId Dfao::run(const std::vector<int>& word) const {
    StateId q = initial_;
    for (int d : word) {
        if (d < 0 || d >= base_) throw DomainError("digit out of range for base");
        q = next(q, d);
    }
    return q;
}

namespace {

// Reachable states in breadth-first discovery order.
std::vector<StateId> bfs_order(const Dfao& m) {
    std::vector<StateId> order;
    std::vector<char> seen(m.state_count(), 0);
    order.push_back(m.initial());
    seen[m.initial()] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int d = 0; d < m.base(); ++d) {
            auto t = m.next(order[i], d);
            if (!seen[t]) {
                seen[t] = 1;
                order.push_back(t);
            }
        }
    }
    return order;
}

void require_compatible(const Dfao& m1, const Dfao& m2) {
    if (m1.base() != m2.base()) throw IncompatibleError("machines have different bases");
    if (m1.reading() != m2.reading())
        throw IncompatibleError("machines have different reading orders");
}

struct VectorHash {
    std::size_t operator()(const std::vector<StateId>& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

Dfao normalize(const Dfao& m) {
    auto order = bfs_order(m);
    std::vector<StateId> rename(m.state_count(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<StateId>(i);
    std::vector<std::int64_t> out;
    std::vector<StateId> delta;
    out.reserve(order.size());
    delta.reserve(order.size() * m.base());
    for (auto q : order) {
        out.push_back(m.output(q));
        for (int d = 0; d < m.base(); ++d) delta.push_back(rename[m.next(q, d)]);
    }
    return Dfao(m.base(), m.reading(), 0, std::move(out), std::move(delta));
}

Dfao minimize(const Dfao& input) {
    const Dfao m = normalize(input);
    const auto n = m.state_count();
    const int b = m.base();

    std::vector<std::size_t> cls(n);
    std::size_t classes = 0;
    {
        std::map<std::int64_t, std::size_t> by_output;
        for (std::size_t q = 0; q < n; ++q) {
            auto [it, fresh] = by_output.try_emplace(m.output(q), by_output.size());
            cls[q] = it->second;
        }
        classes = by_output.size();
    }
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> by_signature;
        std::vector<std::size_t> refined(n);
        std::vector<std::size_t> sig(b + 1);
        for (std::size_t q = 0; q < n; ++q) {
            sig[0] = cls[q];
            for (int d = 0; d < b; ++d) sig[d + 1] = cls[m.next(static_cast<StateId>(q), d)];
            auto [it, fresh] = by_signature.try_emplace(sig, by_signature.size());
            refined[q] = it->second;
        }
        cls.swap(refined);
        if (by_signature.size() == classes) break;
        classes = by_signature.size();
    }

    std::vector<std::int64_t> out(classes);
    std::vector<StateId> delta(classes * b);
    for (std::size_t q = 0; q < n; ++q) {
        out[cls[q]] = m.output(q);
        for (int d = 0; d < b; ++d)
            delta[cls[q] * b + d] = static_cast<StateId>(cls[m.next(static_cast<StateId>(q), d)]);
    }
    return normalize(Dfao(b, m.reading(), static_cast<StateId>(cls[m.initial()]), std::move(out),
                          std::move(delta)));
}

bool equivalent(const Dfao& m1_in, const Dfao& m2_in) {
    require_compatible(m1_in, m2_in);
    const Dfao m1 = minimize(m1_in);
    const Dfao m2 = minimize(m2_in);
    const int b = m1.base();
    if (m1.output(m1.initial()) != m2.output(m2.initial())) return false;

    using Pair = std::pair<StateId, StateId>;
    std::vector<char> seen(m1.state_count() * m2.state_count(), 0);
    auto key = [&](Pair p) { return p.first * m2.state_count() + p.second; };
    std::queue<Pair> work;
    auto push = [&](Pair p) {
        if (!seen[key(p)]) {
            seen[key(p)] = 1;
            work.push(p);
        }
    };

    if (m1.reading() == Reading::msd) {
        // Canonical words are empty or start with a nonzero digit; after
        // that first digit every continuation is canonical.
        for (int d = 1; d < b; ++d) push({m1.next(m1.initial(), d), m2.next(m2.initial(), d)});
        while (!work.empty()) {
            auto [p, q] = work.front();
            work.pop();
            if (m1.output(p) != m2.output(q)) return false;
            for (int d = 0; d < b; ++d) push({m1.next(p, d), m2.next(q, d)});
        }
        return true;
    }

    // lsd: canonical words are empty or end with a nonzero digit.
    push({m1.initial(), m2.initial()});
    while (!work.empty()) {
        auto [p, q] = work.front();
        work.pop();
        for (int d = 0; d < b; ++d) {
            auto np = m1.next(p, d);
            auto nq = m2.next(q, d);
            if (d != 0 && m1.output(np) != m2.output(nq)) return false;
            push({np, nq});
        }
    }
    return true;
}

bool isomorphic(const Dfao& m1, const Dfao& m2) { return normalize(m1) == normalize(m2); }

Dfao reverse_reading(const Dfao& input, std::size_t max_states) {
    const Dfao m = normalize(input);
    const auto n = m.state_count();
    const int b = m.base();

    std::vector<std::vector<StateId>> maps;
    std::unordered_map<std::vector<StateId>, StateId, VectorHash> index;
    std::vector<StateId> delta;

    std::vector<StateId> identity(n);
    for (std::size_t q = 0; q < n; ++q) identity[q] = static_cast<StateId>(q);
    index.emplace(identity, 0);
    maps.push_back(std::move(identity));

    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (int d = 0; d < b; ++d) {
            // h o delta_d
            std::vector<StateId> composed(n);
            for (std::size_t q = 0; q < n; ++q)
                composed[q] = maps[i][m.next(static_cast<StateId>(q), d)];
            auto [it, fresh] = index.try_emplace(composed, static_cast<StateId>(maps.size()));
            if (fresh) {
                if (maps.size() >= max_states)
                    throw RangeError("reading reversal exceeded " + std::to_string(max_states) +
                                     " intermediate states");
                maps.push_back(std::move(composed));
            }
            delta.push_back(it->second);
        }
    }

    std::vector<std::int64_t> out;
    out.reserve(maps.size());
    for (const auto& h : maps) out.push_back(m.output(h[m.initial()]));
    auto flipped = m.reading() == Reading::msd ? Reading::lsd : Reading::msd;
    return minimize(Dfao(b, flipped, 0, std::move(out), std::move(delta)));
}

Dfao lsd_to_msd(const Dfao& m, std::size_t max_states) {
    if (m.reading() != Reading::lsd) throw IncompatibleError("lsd_to_msd expects an lsd machine");
    return reverse_reading(m, max_states);
}

Dfao msd_to_lsd(const Dfao& m, std::size_t max_states) {
    if (m.reading() != Reading::msd) throw IncompatibleError("msd_to_lsd expects an msd machine");
    return reverse_reading(m, max_states);
}

std::string state_name(StateId q) {
    std::string s;
    std::uint64_t v = q;
    do {
        s.insert(s.begin(), static_cast<char>('a' + v % 26));
        v = v / 26;
    } while (v-- > 0);
    return s;
}

std::string to_dot(const Dfao& m, std::string_view graph_name) {
    auto order = bfs_order(m);
    std::vector<char> seen(m.state_count(), 0);
    for (auto q : order) seen[q] = 1;
    for (StateId q = 0; q < m.state_count(); ++q)
        if (!seen[q]) order.push_back(q);
    std::vector<std::string> name(m.state_count());
    for (std::size_t i = 0; i < order.size(); ++i) name[order[i]] = state_name(static_cast<StateId>(i));

    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    os << "  __start [shape=point, label=\"\"];\n";
    os << "  __start -> " << name[m.initial()] << ";\n";
    for (auto q : order) os << "  " << name[q] << " [label=\"" << name[q] << '/' << m.output(q) << "\"];\n";
    for (auto q : order)
        for (int d = 0; d < m.base(); ++d)
            os << "  " << name[q] << " -> " << name[m.next(q, d)] << " [label=\"" << d << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string serialize(const Dfao& m) {
    std::ostringstream os;
    os << "base " << m.base() << " reading " << to_string(m.reading()) << " initial " << m.initial()
       << '\n';
    for (StateId q = 0; q < m.state_count(); ++q) os << q << ' ' << m.output(q) << '\n';
    for (StateId q = 0; q < m.state_count(); ++q)
        for (int d = 0; d < m.base(); ++d) os << q << ' ' << d << ' ' << m.next(q, d) << '\n';
    return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

template <typename T>
T to_int(std::string_view tok, std::size_t line) {
    T v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Dfao parse_dfao(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false;
    int base = 0;
    Reading reading = Reading::msd;
    StateId initial = 0;
    std::map<StateId, std::int64_t> outputs;
    std::map<std::pair<StateId, int>, StateId> edges;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!have_header) {
            if (tok.size() != 6 || tok[0] != "base" || tok[2] != "reading" || tok[4] != "initial")
                throw ParseError(line_no, "expected 'base <b> reading <msd|lsd> initial <id>'");
            base = to_int<int>(tok[1], line_no);
            if (tok[3] != "msd" && tok[3] != "lsd") throw ParseError(line_no, "reading must be msd or lsd");
            reading = parse_reading(tok[3]);
            initial = to_int<StateId>(tok[5], line_no);
            have_header = true;
        } else if (tok.size() == 2) {
            auto q = to_int<StateId>(tok[0], line_no);
            if (!outputs.emplace(q, to_int<std::int64_t>(tok[1], line_no)).second)
                throw ParseError(line_no, "duplicate state " + std::to_string(q));
        } else if (tok.size() == 3) {
            auto from = to_int<StateId>(tok[0], line_no);
            auto digit = to_int<int>(tok[1], line_no);
            auto to = to_int<StateId>(tok[2], line_no);
            if (!edges.emplace(std::pair{from, digit}, to).second)
                throw ParseError(line_no, "duplicate transition");
        } else {
            throw ParseError(line_no, "expected '<id> <output>' or '<from> <digit> <to>'");
        }
    }
    if (!have_header) throw ParseError(line_no, "missing header line");
    if (base < 2) throw ParseError(1, "base must be at least 2");

    const auto n = outputs.size();
    std::vector<std::int64_t> out;
    out.reserve(n);
    for (StateId q = 0; q < n; ++q) {
        auto it = outputs.find(q);
        if (it == outputs.end()) throw ParseError(line_no, "state ids must be 0..n-1");
        out.push_back(it->second);
    }
    if (edges.size() != n * static_cast<std::size_t>(base))
        throw ParseError(line_no, "transition table is not total");
    std::vector<StateId> delta;
    delta.reserve(edges.size());
    for (StateId q = 0; q < n; ++q) {
        for (int d = 0; d < base; ++d) {
            auto it = edges.find({q, d});
            if (it == edges.end()) throw ParseError(line_no, "missing transition");
            delta.push_back(it->second);
        }
    }
    try {
        return Dfao(base, reading, initial, std::move(out), std::move(delta));
    } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
    }
}

}  // namespace antirec
