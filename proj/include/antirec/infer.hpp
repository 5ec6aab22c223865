#pragma once

/**
 * @file infer.hpp
 * @brief Guessing a DFAO from a finite prefix of a sequence, and certifying it.
 *
 * Every input prefix w selects the subsequence of indices that continue w.
 * Two prefixes are merged when the later one's subsequence agrees with the
 * earlier one's wherever the window provides data. This is a heuristic: a
 * guess must be certified against an independent source before it is used.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "antirec/machine.hpp"

namespace antirec {

struct GuessConfig {
    int base = 2;
    // Terms used to separate classes.
    std::size_t window = 2000;
    // Terms used for certification after a guess.
    std::uint64_t verify_to = 100000;
    std::size_t max_states = 64;
    Reading reading = Reading::msd;

    // DomainError unless base >= 2, verify_to >= window, max_states >= 1;
    // InsufficientDataError if window < base.
    void validate() const;
};

// Returns the minimized hypothesis, or nullopt when the construction does not
// close within max_states or runs past the window. The hypothesis always
// agrees with seq on every index below cfg.window.
// Throws InsufficientDataError if seq is shorter than cfg.window.
std::optional<Dfao> guess_dfao(std::span<const std::int64_t> seq, const GuessConfig& cfg);

struct Certification {
    bool pass = false;
    std::uint64_t upto = 0;
    std::optional<std::uint64_t> first_mismatch;
    std::int64_t expected = 0;  // oracle value at the mismatch
    std::int64_t actual = 0;    // machine value at the mismatch
};

using IndexOracle = std::function<std::int64_t(std::uint64_t)>;

// pass iff m.eval(n) == oracle(n) for all 0 <= n < upto.
Certification certify(const Dfao& m, const IndexOracle& oracle, std::uint64_t upto);
// Same, with the oracle given as a table; upto is clamped to seq.size().
Certification certify(const Dfao& m, std::span<const std::int64_t> seq, std::uint64_t upto);

}  // namespace antirec
