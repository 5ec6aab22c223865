#include "antirec/audit.hpp"

#include <algorithm>
#include <sstream>

#include "antirec/checked.hpp"
#include "antirec/error.hpp"
#include "antirec/morphic.hpp"

namespace antirec {

void AuditReport::fail(std::uint64_t index, std::int64_t value, std::string detail) {
    if (counterexample) return;
    pass = false;
    counterexample = Counterexample{index, value, std::move(detail)};
}

std::string AuditReport::line() const {
    std::ostringstream os;
    os << "claim=" << claim << " range=" << range << " pass=" << (pass ? "true" : "false") << " cex=";
    if (counterexample)
        os << counterexample->index << ':' << counterexample->value;
    else
        os << "none";
    return os.str();
}

std::string AuditReport::text() const {
    std::ostringstream os;
    os << claim << ": " << (pass ? "PASS" : "FAIL") << ", checked up to " << range << '\n';
    if (counterexample)
        os << "  counterexample at n = " << counterexample->index << ": " << counterexample->detail
           << '\n';
    for (const auto& n : notes) os << "  note: " << n << '\n';
    return os.str();
}

AuditReport merge(const AuditReport& x, const AuditReport& y) {
    if (x.claim != y.claim) throw IncompatibleError("cannot merge reports for different claims");
    AuditReport r = x;
    r.range = x.range + y.range;
    if (y.counterexample && (!x.counterexample || y.counterexample->index < x.counterexample->index)) {
        r.counterexample = y.counterexample;
        r.pass = false;
    }
    for (const auto& n : y.notes)
        if (std::find(r.notes.begin(), r.notes.end(), n) == r.notes.end()) r.notes.push_back(n);
    return r;
}

std::int64_t BoundSpec::value(std::int64_t x, std::uint64_t n) const {
    return checked::add(
        checked::sub(checked::mul(scale, x), checked::mul(slope, static_cast<std::int64_t>(n))), shift);
}

std::string BoundSpec::to_string() const {
    std::ostringstream os;
    os << lower << " <= ";
    if (scale != 1) os << scale;
    if (target == BoundTarget::A)
        os << "A_n";
    else
        os << "B^" << block << "_n";
    if (slope != 0) os << (slope < 0 ? " + " : " - ") << (slope < 0 ? -slope : slope) << "n";
    if (shift != 0) os << (shift < 0 ? " - " : " + ") << (shift < 0 ? -shift : shift);
    os << " <= " << upper;
    return os.str();
}

void BoundSpec::validate() const {
    if (lower > upper) throw DomainError("bound has lower > upper");
    if (scale == 0) throw DomainError("bound scale must be nonzero");
    if (block == 0) throw DomainError("B blocks are numbered from 1");
}

namespace {

void require_range(std::uint64_t upto) {
    if (upto < 1) throw DomainError("audit range must be at least 1");
}

// The B^1 line of the (2,1) family is wider than its siblings; keep it as
// printed but say so.
constexpr const char* kWideNote = "width 4 as printed; the other lines have width 3";

BoundSpec bound(std::string id, BoundTarget t, std::size_t block, std::int64_t scale,
                std::int64_t slope, std::int64_t shift, std::int64_t lo, std::int64_t hi,
                std::string note = {}) {
    return BoundSpec{std::move(id), t, block, scale, slope, shift, lo, hi, std::move(note)};
}

}  // namespace

std::vector<BoundSpec> kimberling_bounds(const LinearForm& form) {
    using T = BoundTarget;
    if (form == make_form({1, 2}))
        return {bound("kimberling(1,2):A", T::A, 1, 1, 7, 3, 0, 2),
                bound("kimberling(1,2):B1", T::B, 1, 3, 7, 6, 0, 3),
                bound("kimberling(1,2):B2", T::B, 2, 3, 7, 2, 0, 3)};
    if (form == make_form({2, 1}))
        return {bound("kimberling(2,1):A", T::A, 1, 1, 7, 4, 0, 3),
                bound("kimberling(2,1):B1", T::B, 1, 3, 7, 6, 0, 4, kWideNote),
                bound("kimberling(2,1):B2", T::B, 2, 3, 7, 2, 0, 3)};
    throw DomainError("no bound family known for " + form.to_string());
}

AuditReport check_bounds(const GenerationTable& table, const BoundSpec& spec, std::uint64_t upto) {
    require_range(upto);
    spec.validate();
    if (spec.target == BoundTarget::B && spec.block > table.form().dimension())
        throw DimensionError("B^" + std::to_string(spec.block) + " does not exist for " +
                             table.form().to_string());
    if (upto > table.size()) throw IndexError("table holds fewer than " + std::to_string(upto) + " blocks");
    AuditReport r;
    r.claim = "bounds:" + (spec.id.empty() ? spec.to_string() : spec.id);
    r.range = upto;
    if (!spec.note.empty()) r.notes.push_back(spec.note);
    for (std::uint64_t n = 1; n <= upto; ++n) {
        const auto x = spec.target == BoundTarget::A ? table.a(n) : table.b_sub(spec.block, n);
        const auto v = spec.value(x, n);
        if (v < spec.lower || v > spec.upper) {
            std::ostringstream os;
            os << (spec.target == BoundTarget::A ? "A" : "B^" + std::to_string(spec.block)) << "_" << n
               << " = " << x << " gives " << v << ", outside [" << spec.lower << ", " << spec.upper
               << "]";
            r.fail(n, v, os.str());
            break;
        }
    }
    return r;
}

AuditReport check_bounds(const LinearForm& form, const BoundSpec& spec, std::uint64_t upto) {
    require_range(upto);
    return check_bounds(generate(form, upto), spec, upto);
}

AuditReport check_zaslavsky(std::uint64_t upto, std::uint64_t lag) {
    require_range(upto);
    if (lag > 1) throw DomainError("lag must be 0 or 1");
    const UniformSubstitution pd(2, 0, {{0, {0, 1}}, {1, {0, 0}}});
    const auto word = fixed_point(pd, upto + 1);
    const auto table = generate(make_form({1, 1}), upto);
    AuditReport r;
    r.claim = lag == 1 ? "zaslavsky" : "zaslavsky-lag" + std::to_string(lag);
    r.range = upto;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        const auto lhs = table.a(n) - 5 * static_cast<std::int64_t>(n) + 2;
        const auto pd_n = word[n - lag];
        if (lhs != pd_n) {
            std::ostringstream os;
            os << "A_" << n << " - 5n + 2 = " << lhs << " but PD_" << n - lag << " = " << pd_n;
            r.fail(n, lhs, os.str());
            break;
        }
    }
    return r;
}

AuditReport audit_mex(const GenerationTable& table, std::uint64_t upto) {
    require_range(upto);
    if (upto > table.size()) throw IndexError("table holds fewer than " + std::to_string(upto) + " blocks");
    const auto& form = table.form();
    const std::size_t k = form.dimension();
    AuditReport r;
    r.claim = "mex:" + form.to_string();
    r.range = upto;

    std::ostringstream init;
    init << "initial values (";
    for (std::size_t j = 1; j <= k; ++j) init << table.b_sub(j, 1) << ", ";
    init << table.a(1) << ")";
    r.notes.push_back(init.str());
    for (std::size_t j = 1; j <= k; ++j) {
        if (table.b_sub(j, 1) != static_cast<std::int64_t>(j)) {
            r.fail(1, table.b_sub(j, 1), "B^" + std::to_string(j) + "_1 should be " + std::to_string(j));
            return r;
        }
    }

    // placed[v]: v occurred among A_m or B_m for some block m already passed
    std::vector<char> placed;
    std::vector<char> is_a;
    auto mark = [](std::vector<char>& bits, std::int64_t v) {
        if (v < 0) return;
        const auto u = static_cast<std::size_t>(v);
        if (u >= bits.size()) bits.resize(std::max(2 * bits.size(), u + 1), 0);
        bits[u] = 1;
    };
    auto test = [](const std::vector<char>& bits, std::int64_t v) {
        return v >= 0 && static_cast<std::size_t>(v) < bits.size() && bits[static_cast<std::size_t>(v)];
    };
    std::int64_t low = 1;  // smallest value not yet placed

    for (std::uint64_t n = 1; n <= upto; ++n) {
        while (test(placed, low)) ++low;
        const auto b1 = table.b_sub(1, n);
        if (low < b1) {
            r.fail(n, b1,
                   "B^1_" + std::to_string(n) + " = " + std::to_string(b1) + " but " +
                       std::to_string(low) + " was never placed");
            break;
        }
        if (b1 < 1 || test(placed, b1)) {
            r.fail(n, b1, "B^1_" + std::to_string(n) + " = " + std::to_string(b1) + " is already placed");
            break;
        }
        bool ok = true;
        for (std::size_t j = 2; j <= k && ok; ++j) {
            const auto prev = table.b_sub(j - 1, n);
            const auto cur = table.b_sub(j, n);
            if (cur - 1 != prev && !test(is_a, cur - 1)) {
                r.fail(n, cur,
                       "B^" + std::to_string(j) + "_" + std::to_string(n) + " - 1 = " +
                           std::to_string(cur - 1) + " is neither B^" + std::to_string(j - 1) + "_" +
                           std::to_string(n) + " nor an earlier A");
                ok = false;
            }
        }
        if (!ok) break;
        std::int64_t sum = 0;
        for (std::size_t j = 1; j <= k; ++j)
            sum = checked::add(sum, checked::mul(form.coeffs()[j - 1], table.b_sub(j, n)));
        const auto a = table.a(n);
        if (a != sum) {
            r.fail(n, a,
                   "A_" + std::to_string(n) + " = " + std::to_string(a) + " but the form gives " +
                       std::to_string(sum));
            break;
        }
        for (std::size_t j = 1; j <= k; ++j) mark(placed, table.b_sub(j, n));
        mark(placed, a);
        mark(is_a, a);
    }
    return r;
}

AuditReport audit_mex(const LinearForm& form, std::uint64_t upto) {
    require_range(upto);
    return audit_mex(generate(form, upto), upto);
}

AuditReport check_progression(const LinearForm& form, std::uint64_t upto_blocks) {
    require_range(upto_blocks);
    const auto tau = static_cast<std::uint64_t>(form.trace());
    const auto step = checked::mul(form.trace(), form.kappa());
    const auto last = checked::add(checked::mul(static_cast<std::int64_t>(upto_blocks),
                                                static_cast<std::int64_t>(tau)),
                                   std::int64_t{1});
    const auto table = generate(form, static_cast<std::size_t>(last));
    AuditReport r;
    r.claim = "progression:" + form.to_string();
    r.range = upto_blocks;
    const auto a1 = table.a(1);
    for (std::uint64_t n = 0; n <= upto_blocks; ++n) {
        const auto idx = n * tau + 1;
        const auto want = a1 + static_cast<std::int64_t>(n) * step;
        const auto got = table.a(idx);
        if (got != want) {
            std::ostringstream os;
            os << "A_" << idx << " = " << got << " but A_1 + " << n << "*" << step << " = " << want;
            r.fail(n, got, os.str());
            break;
        }
    }
    return r;
}

AuditReport check_divisibility(const LinearForm& form, std::int64_t modulus,
                               std::int64_t forbidden_residue, std::uint64_t upto) {
    require_range(upto);
    if (modulus < 2) throw DomainError("modulus must be at least 2");
    if (forbidden_residue < 0 || forbidden_residue >= modulus)
        throw DomainError("residue must lie in [0, modulus)");
    const auto table = generate(form, upto);
    AuditReport r;
    r.claim = "divisibility:" + form.to_string() + ":mod" + std::to_string(modulus) + "!=" +
              std::to_string(forbidden_residue);
    r.range = upto;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        if (table.a(n) % modulus == forbidden_residue) {
            r.fail(n, table.a(n),
                   "A_" + std::to_string(n) + " = " + std::to_string(table.a(n)) + " is " +
                       std::to_string(forbidden_residue) + " mod " + std::to_string(modulus));
            break;
        }
    }
    return r;
}

GapWord parse_gap_word(std::string_view text) {
    GapWord w;
    if (text.empty()) throw DomainError("empty gap word");
    if (text.find('.') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw DomainError("bad gap word '" + std::string(text) + "'");
            w.push_back(c - '0');
        }
        return w;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto dot = text.find('.', pos);
        if (dot == std::string_view::npos) dot = text.size();
        auto part = text.substr(pos, dot - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
            throw DomainError("bad gap word '" + std::string(text) + "'");
        w.push_back(std::stoll(std::string(part)));
        pos = dot + 1;
    }
    return w;
}

std::string gap_word_to_string(const GapWord& w) {
    const bool small = std::all_of(w.begin(), w.end(), [](auto g) { return g >= 0 && g <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i > 0) s += '.';
        s += std::to_string(w[i]);
    }
    return s;
}

AuditReport check_gap_blocks(const LinearForm& form, std::size_t block_len,
                             const std::set<GapWord>& allowed, std::uint64_t upto_blocks,
                             std::size_t skip) {
    require_range(upto_blocks);
    if (block_len < 1) throw DomainError("block length must be at least 1");
    const auto g = gaps(form, skip + block_len * upto_blocks + 1);
    AuditReport r;
    r.claim = "gap-blocks:" + form.to_string() + ":" + std::to_string(block_len);
    r.range = upto_blocks;
    for (std::uint64_t n = 0; n < upto_blocks; ++n) {
        auto first = g.begin() + static_cast<std::ptrdiff_t>(skip + n * block_len);
        GapWord w(first, first + static_cast<std::ptrdiff_t>(block_len));
        if (!allowed.contains(w)) {
            // index: the block number from 1; value: first gap of the block
            r.fail(n + 1, w.front(),
                   "block " + std::to_string(n + 1) + " is " + gap_word_to_string(w) +
                       ", starting at A_" + std::to_string(skip + n * block_len + 1));
            break;
        }
    }
    return r;
}

AuditReport check_b_derivation(const LinearForm& form, std::uint64_t upto) {
    require_range(upto);
    const bool pell = form == make_form({1, 2});
    if (!pell && !(form == make_form({2, 1})))
        throw DomainError("B closed forms are only known for (1,2) and (2,1)");
    const auto table = generate(form, upto);
    AuditReport r;
    r.claim = "b-derivation:" + form.to_string();
    r.range = upto;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        const auto a = table.a(n);
        std::int64_t b1, b2;
        if (pell) {
            b2 = (a + 2) / 3;
            b1 = a - 2 * b2;
        } else {
            b1 = a / 3;
            b2 = a - 2 * b1;
        }
        if (b1 != table.b_sub(1, n) || b2 != table.b_sub(2, n)) {
            std::ostringstream os;
            os << "from A_" << n << " = " << a << " got (" << b1 << ", " << b2 << "), table has ("
               << table.b_sub(1, n) << ", " << table.b_sub(2, n) << ")";
            r.fail(n, a, os.str());
            break;
        }
    }
    return r;
}

}  // namespace antirec
