#pragma once

/**
 * @file machine.hpp
 * @brief Deterministic finite automata with output (DFAOs) over digit alphabets.
 *
 * A machine reads the base-b expansion of n and reports the output of the
 * state it stops in. The canonical input for n is its expansion without
 * leading zeros (n = 0 is the empty word), fed most significant digit first
 * for Reading::msd and least significant first for Reading::lsd.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace antirec {

enum class Reading { msd, lsd };

std::string_view to_string(Reading r);
Reading parse_reading(std::string_view s);

using StateId = std::uint32_t;

class Dfao {
public:
    // transitions is row-major: transitions[q * base + d] = delta(q, d).
    // Throws DomainError unless the table is total and all ids are in range.
    Dfao(int base, Reading reading, StateId initial, std::vector<std::int64_t> outputs,
         std::vector<StateId> transitions);

    int base() const noexcept { return base_; }
    Reading reading() const noexcept { return reading_; }
    StateId initial() const noexcept { return initial_; }
    std::size_t state_count() const noexcept { return outputs_.size(); }

    std::int64_t output(StateId q) const { return outputs_.at(q); }
    StateId next(StateId q, int digit) const { return delta_[q * base_ + digit]; }

    const std::vector<std::int64_t>& outputs() const noexcept { return outputs_; }
    const std::vector<StateId>& transitions() const noexcept { return delta_; }

    std::int64_t eval(std::uint64_t n) const;

    // State reached on an explicit digit word, read left to right. Digits
    // must be in 0..base-1.
    StateId run(const std::vector<int>& word) const;

    bool operator==(const Dfao&) const = default;

private:
    int base_;
    Reading reading_;
    StateId initial_;
    std::vector<std::int64_t> outputs_;
    std::vector<StateId> delta_;
};

// Base-b digits of n, most significant first; empty for n = 0.
std::vector<int> digits_msd(std::uint64_t n, int base);

// Drops unreachable states and renumbers the rest in breadth-first order
// from the initial state (digits in increasing order).
Dfao normalize(const Dfao& m);

// Moore partition refinement seeded by output classes. The result is
// normalized, so equal functions give identical machines.
Dfao minimize(const Dfao& m);

// True iff both machines give the same output on every canonical input.
// Throws IncompatibleError on base or reading mismatch.
bool equivalent(const Dfao& m1, const Dfao& m2);

// Same machine up to renaming of reachable states.
bool isomorphic(const Dfao& m1, const Dfao& m2);

// Swaps the reading order while preserving the integer function. States of
// the result are composed transition maps; the intermediate construction is
// capped at max_states and the result is minimized.
inline constexpr std::size_t kReversalStateCap = 1'000'000;
Dfao reverse_reading(const Dfao& m, std::size_t max_states = kReversalStateCap);
Dfao lsd_to_msd(const Dfao& m, std::size_t max_states = kReversalStateCap);
Dfao msd_to_lsd(const Dfao& m, std::size_t max_states = kReversalStateCap);

// "a", "b", ..., "z", "aa", "ab", ...
std::string state_name(StateId q);

// Graphviz rendering. Nodes are labeled "<name>/<output>" with names
// assigned in breadth-first order from the initial state.
std::string to_dot(const Dfao& m, std::string_view graph_name = "dfao");

// Plain-text format:
//   base <b> reading <msd|lsd> initial <id>
//   <id> <output>              (one line per state, ids 0..n-1 in order)
//   <from> <digit> <to>        (one line per transition)
std::string serialize(const Dfao& m);
Dfao parse_dfao(std::string_view text);

}  // namespace antirec
