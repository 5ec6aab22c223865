#include "antirec/infer.hpp"

#include <algorithm>
#include <vector>

#include "antirec/error.hpp"

namespace antirec {

void GuessConfig::validate() const {
    if (base < 2) throw DomainError("guess base must be at least 2");
    if (window < static_cast<std::size_t>(base))
        throw InsufficientDataError("guess window must hold at least one term per digit");
    if (verify_to < window) throw DomainError("verify_to must be at least the window");
    if (max_states < 1) throw DomainError("max_states must be at least 1");
}

namespace {

// A prefix word is tracked by the index it spells (value) and by how
// continuations map to indices:
//   msd: continuation u of length L  -> value * base^L + u
//   lsd: continuation with value u   -> value + step * u, step = base^|w|
struct Prefix {
    std::uint64_t value = 0;
    std::uint64_t step = 1;
};

class Guesser {
public:
    Guesser(std::span<const std::int64_t> seq, const GuessConfig& cfg)
        : seq_(seq.first(cfg.window)), base_(static_cast<std::uint64_t>(cfg.base)), cfg_(cfg) {}

    std::optional<Dfao> run() {
        std::vector<Prefix> reps{Prefix{}};
        std::vector<StateId> delta;
        for (std::size_t s = 0; s < reps.size(); ++s) {
            for (int d = 0; d < cfg_.base; ++d) {
                auto child = extend(reps[s], static_cast<std::uint64_t>(d));
                if (child.value >= seq_.size()) return std::nullopt;  // no data left
                std::optional<StateId> target;
                for (std::size_t t = 0; t < reps.size(); ++t) {
                    if (dominated_by(child, reps[t])) {
                        target = static_cast<StateId>(t);
                        break;
                    }
                }
                if (!target) {
                    if (reps.size() >= cfg_.max_states) return std::nullopt;
                    target = static_cast<StateId>(reps.size());
                    reps.push_back(child);
                }
                delta.push_back(*target);
            }
        }
        std::vector<std::int64_t> out;
        out.reserve(reps.size());
        for (const auto& r : reps) out.push_back(seq_[r.value]);
        return minimize(Dfao(cfg_.base, cfg_.reading, 0, std::move(out), std::move(delta)));
    }

private:
    Prefix extend(const Prefix& p, std::uint64_t d) const {
        if (cfg_.reading == Reading::msd) return {p.value * base_ + d, 1};
        // Any step at or beyond the window only reaches the u = 0 term.
        const std::uint64_t w = seq_.size();
        return {p.value + d * p.step, p.step >= w ? w : std::min<std::uint64_t>(p.step * base_, w)};
    }

    // True iff every continuation of c that lands inside the window also
    // lands inside the window from r, with the same value there.
    bool dominated_by(const Prefix& c, const Prefix& r) const {
        using u128 = unsigned __int128;
        const u128 w = seq_.size();
        if (cfg_.reading == Reading::msd) {
            if (c.value == r.value) return true;
            for (u128 pw = 1; c.value * pw < w && pw <= w; pw *= base_) {
                for (u128 u = 0; u < pw; ++u) {
                    const u128 i = c.value * pw + u;
                    if (i >= w) break;
                    const u128 j = r.value * pw + u;
                    if (j >= w || seq_[static_cast<std::size_t>(i)] != seq_[static_cast<std::size_t>(j)])
                        return false;
                }
            }
            return true;
        }
        if (c.value == r.value && c.step == r.step) return true;
        for (u128 u = 0;; ++u) {
            const u128 i = c.value + c.step * u;
            if (i >= w) break;
            const u128 j = r.value + r.step * u;
            if (j >= w || seq_[static_cast<std::size_t>(i)] != seq_[static_cast<std::size_t>(j)])
                return false;
        }
        return true;
    }

    std::span<const std::int64_t> seq_;
    std::uint64_t base_;
    const GuessConfig& cfg_;
};

}  // namespace

std::optional<Dfao> guess_dfao(std::span<const std::int64_t> seq, const GuessConfig& cfg) {
    cfg.validate();
    if (seq.size() < cfg.window)
        throw InsufficientDataError("sequence has " + std::to_string(seq.size()) +
                                    " terms, window needs " + std::to_string(cfg.window));
    return Guesser(seq, cfg).run();
}

Certification certify(const Dfao& m, const IndexOracle& oracle, std::uint64_t upto) {
    Certification c;
    c.upto = upto;
    for (std::uint64_t n = 0; n < upto; ++n) {
        const auto want = oracle(n);
        const auto got = m.eval(n);
        if (want != got) {
            c.first_mismatch = n;
            c.expected = want;
            c.actual = got;
            return c;
        }
    }
    c.pass = true;
    return c;
}

Certification certify(const Dfao& m, std::span<const std::int64_t> seq, std::uint64_t upto) {
    upto = std::min<std::uint64_t>(upto, seq.size());
    return certify(m, [&](std::uint64_t n) { return seq[n]; }, upto);
}

}  // namespace antirec
