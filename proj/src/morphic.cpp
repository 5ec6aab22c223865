#include "antirec/morphic.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "antirec/checked.hpp"

namespace antirec {

UniformSubstitution::UniformSubstitution(std::size_t length, Letter seed,
                                         std::map<Letter, Word> images)
    : length_(length), seed_(seed), images_(std::move(images)) {
    if (length_ < 2) throw DomainError("substitution length must be at least 2");
    if (!images_.contains(seed_)) throw DomainError("seed has no image");
    for (const auto& [letter, w] : images_) {
        if (w.size() != length_)
            throw DomainError("image of " + std::to_string(letter) + " has length " +
                              std::to_string(w.size()) + ", expected " + std::to_string(length_));
        for (auto x : w)
            if (!images_.contains(x))
                throw DomainError("letter " + std::to_string(x) + " has no image");
    }
    if (images_.at(seed_).front() != seed_)
        throw DomainError("image of the seed must start with the seed");
}

const Word& UniformSubstitution::image(Letter a) const {
    auto it = images_.find(a);
    if (it == images_.end()) throw DomainError("letter " + std::to_string(a) + " is not in the alphabet");
    return it->second;
}

std::vector<Letter> UniformSubstitution::alphabet() const {
    std::vector<Letter> out;
    out.reserve(images_.size());
    for (const auto& [letter, w] : images_) out.push_back(letter);
    return out;
}

Word fixed_point(const UniformSubstitution& s, std::size_t count) {
    Word w;
    if (count == 0) return w;
    w.reserve(count + s.length());
    w.push_back(s.seed());
    // w[0] = seed expands to the seed image, whose first letter is w[0] itself.
    for (std::size_t i = 0; w.size() < count; ++i) {
        const auto& img = s.image(w[i]);
        w.insert(w.end(), img.begin() + (i == 0 ? 1 : 0), img.end());
    }
    w.resize(count);
    return w;
}

Letter letter_at(const UniformSubstitution& s, std::uint64_t n) {
    Letter a = s.seed();
    for (int d : digits_msd(n, static_cast<int>(s.length()))) a = s.image(a)[d];
    return a;
}

CobhamPair dfao_to_substitution(const Dfao& m) {
    if (m.reading() != Reading::msd) throw IncompatibleError("Cobham conversion needs an msd machine");
    if (m.next(m.initial(), 0) != m.initial())
        throw NoFixedPointError("delta(q0, 0) != q0: the substitution has no fixed point from q0");
    std::map<Letter, Word> images;
    Coding coding;
    for (StateId q = 0; q < m.state_count(); ++q) {
        Word w(static_cast<std::size_t>(m.base()));
        for (int d = 0; d < m.base(); ++d) w[d] = m.next(q, d);
        images.emplace(q, std::move(w));
        coding.emplace(q, m.output(q));
    }
    return {UniformSubstitution(static_cast<std::size_t>(m.base()), m.initial(), std::move(images)),
            std::move(coding)};
}

Dfao substitution_to_dfao(const UniformSubstitution& s, const Coding& coding) {
    std::vector<Letter> order{s.seed()};
    for (auto a : s.alphabet())
        if (a != s.seed()) order.push_back(a);
    std::map<Letter, StateId> id;
    for (std::size_t i = 0; i < order.size(); ++i) id.emplace(order[i], static_cast<StateId>(i));

    std::vector<std::int64_t> out;
    std::vector<StateId> delta;
    for (auto a : order) {
        auto c = coding.find(a);
        if (c == coding.end()) throw DomainError("coding has no value for letter " + std::to_string(a));
        out.push_back(c->second);
        for (auto x : s.image(a)) delta.push_back(id.at(x));
    }
    return Dfao(static_cast<int>(s.length()), Reading::msd, 0, std::move(out), std::move(delta));
}

Coding natural_coding(const UniformSubstitution& s) {
    Coding c;
    for (auto a : s.alphabet()) c.emplace(a, a);
    return c;
}

UniformSubstitution antibonacci_substitution(int k) {
    if (k < 2) throw DomainError("anti-k-bonacci needs k >= 2");
    const Letter i = k / 2;
    const Letter kk = k;
    std::map<Letter, Word> images;
    if (k % 2 == 0) {
        // letters are the residues a in 1..k; only position i+1 depends on a
        for (Letter a = 1; a <= kk; ++a) {
            Word w;
            for (Letter l = 1; l <= kk; ++l) {
                if (l <= i)
                    w.push_back(i + 1 - l);
                else if (l == i + 1)
                    w.push_back(kk + 1 - a);
                else
                    w.push_back(kk + 1 - (l - i));
            }
            images.emplace(a, std::move(w));
        }
    } else {
        // residues a lie in i+1..i+k and are stored shifted, x = a - k + i
        for (Letter x = 0; x < kk; ++x) {
            const Letter a = x + kk - i;
            Word w;
            for (Letter l = 1; l <= kk; ++l) {
                Letter r;
                if (a <= kk) {
                    if (l <= i)
                        r = kk + 1 - l;
                    else if (l == i + 1)
                        r = kk + i + 2 - a;
                    else
                        r = 2 * kk + 1 - l;
                } else {
                    if (l <= i + 1)
                        r = kk + 1 - l;
                    else if (l == i + 2)
                        r = 2 * kk + i + 1 - a;
                    else
                        r = 2 * kk + 1 - l;
                }
                w.push_back(r - kk + i);
            }
            images.emplace(x, std::move(w));
        }
    }
    return UniformSubstitution(static_cast<std::size_t>(k), i, std::move(images));
}

std::int64_t antibonacci_term(int k, std::uint64_t n) {
    if (n < 1) throw DomainError("anti-k-bonacci terms are indexed from 1");
    static thread_local std::map<int, UniformSubstitution> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, antibonacci_substitution(k)).first;
    const std::int64_t kk = k;
    const std::int64_t kappa = kk * kk + 1;
    const std::int64_t t = kk * (kk + 1) / 2;
    return checked::add(checked::mul(kappa, static_cast<std::int64_t>(n - 1)),
                        t - kk / 2 + letter_at(it->second, n - 1));
}

UniformSubstitution ResidueSystem::substitution() const {
    return UniformSubstitution(static_cast<std::size_t>(form.trace()), seed, word_map);
}

std::int64_t ResidueSystem::term(std::uint64_t n) const {
    if (n < 1) throw DomainError("anti-recurrence terms are indexed from 1");
    return checked::add(checked::mul(modulus, static_cast<std::int64_t>(n - 1)),
                        letter_at(substitution(), n - 1));
}

ResidueSystem derive_interval_substitution(const LinearForm& form, bool require_a1_bounded) {
    if (require_a1_bounded && !is_a1_bounded(form))
        throw PreconditionError("form " + form.to_string() + " is not A_1-bounded");
    const std::int64_t tau = form.trace();
    const std::int64_t kappa = form.kappa();
    const std::size_t max_letters =
        require_a1_bounded ? static_cast<std::size_t>(2 * tau - 1) : static_cast<std::size_t>(kappa);
    const std::size_t cap = 10 * static_cast<std::size_t>(2 * tau - 1);
    const auto ut = static_cast<std::size_t>(tau);

    AntiRecurrenceGenerator gen(form);
    std::vector<std::int64_t> a;
    auto letter = [&](std::size_t h) {
        while (a.size() < h) a.push_back(gen.next().a);
        const auto r = a[h - 1] - kappa * static_cast<std::int64_t>(h - 1);
        if (r < 1 || r > kappa)
            throw ClosureFailure("A_" + std::to_string(h) + " = " + std::to_string(a[h - 1]) +
                                     " lies outside its interval",
                                 h);
        return r;
    };

    std::map<Letter, Word> images;
    std::set<Letter> seen;
    std::size_t last_new = 1;
    std::size_t j = 1;
    for (;; ++j) {
        const Letter key = letter(j);
        Word img;
        img.reserve(ut);
        for (std::size_t h = (j - 1) * ut + 1; h <= j * ut; ++h) img.push_back(letter(h));

        auto it = images.find(key);
        if (it == images.end()) {
            seen.insert(key);
            seen.insert(img.begin(), img.end());
            images.emplace(key, std::move(img));
            last_new = j;
        } else if (it->second != img) {
            std::ostringstream os;
            os << "letter " << key << " maps to two different words";
            throw ClosureFailure(os.str(), j);
        } else {
            seen.insert(img.begin(), img.end());
        }
        if (seen.size() > max_letters)
            throw ClosureFailure("alphabet exceeds " + std::to_string(max_letters) + " letters", j);

        const bool closed = seen.size() == images.size();
        if (closed && j >= last_new + cap) break;
        if (!closed && j > last_new + cap) throw ClosureFailure("substitution does not close", j);
    }

    ResidueSystem rs{form, kappa, {}, std::move(images), letter(1), j};
    rs.letters.assign(seen.begin(), seen.end());
    return rs;
}

std::string serialize(const UniformSubstitution& s) {
    std::ostringstream os;
    os << "length " << s.length() << " seed " << s.seed() << '\n';
    for (const auto& [letter, w] : s.images()) {
        os << letter << ':';
        for (auto x : w) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

namespace {

Letter parse_letter(std::string_view tok, std::size_t line) {
    Letter v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

UniformSubstitution parse_substitution(std::string_view text) {
    std::size_t line_no = 0;
    std::optional<std::pair<std::size_t, Letter>> header;
    std::map<Letter, Word> images;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok.size() != 4 || tok[0] != "length" || tok[2] != "seed")
                throw ParseError(line_no, "expected 'length <L> seed <s>'");
            auto len = parse_letter(tok[1], line_no);
            if (len < 2) throw ParseError(line_no, "length must be at least 2");
            header.emplace(static_cast<std::size_t>(len), parse_letter(tok[3], line_no));
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, "expected '<letter>: <image>'");
        auto lhs = tokens(line.substr(0, colon));
        if (lhs.size() != 1) throw ParseError(line_no, "expected a single letter before ':'");
        Word w;
        for (auto t : tokens(line.substr(colon + 1))) w.push_back(parse_letter(t, line_no));
        if (!images.emplace(parse_letter(lhs[0], line_no), std::move(w)).second)
            throw ParseError(line_no, "duplicate letter");
    }
    if (!header) throw ParseError(line_no, "missing header line");
    try {
        return UniformSubstitution(header->first, header->second, std::move(images));
    } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
    }
}

}  // namespace antirec
