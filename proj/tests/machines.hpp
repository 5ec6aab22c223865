#pragma once

// Hand-built machines shared by several test files.

#include <random>

#include "antirec/machine.hpp"

namespace fixtures {

// a/0 -> (a, b), b/1 -> (a, a): the period-doubling automaton.
inline antirec::Dfao period_doubling() {
    return antirec::Dfao(2, antirec::Reading::msd, 0, {0, 1}, {0, 1, 0, 0});
}

// Same function, states listed in the other order.
inline antirec::Dfao period_doubling_relabeled() {
    return antirec::Dfao(2, antirec::Reading::msd, 1, {1, 0}, {1, 1, 1, 0});
}

// Period doubling with state a split into two indistinguishable copies a, a'.
// a -> (a', b), b -> (a', a), a' -> (a, b).
inline antirec::Dfao period_doubling_duplicated() {
    return antirec::Dfao(2, antirec::Reading::msd, 0, {0, 1, 0}, {2, 1, 2, 0, 0, 1});
}

// PD read least significant digit first: parity of the run of trailing 1s.
// States: even run, odd run, finished-even, finished-odd.
inline antirec::Dfao period_doubling_lsd() {
    return antirec::Dfao(2, antirec::Reading::lsd, 0, {0, 1, 0, 1},
                         {2, 1,  // even: 0 ends the run, 1 flips
                          3, 0,  // odd
                          2, 2,  // finished
                          3, 3});
}

inline antirec::Dfao constant(int base, std::int64_t value,
                              antirec::Reading reading = antirec::Reading::msd) {
    return antirec::Dfao(base, reading, 0, {value}, std::vector<antirec::StateId>(base, 0));
}

inline antirec::Dfao random_machine(std::mt19937_64& rng, int base, std::size_t states, int outputs,
                                    antirec::Reading reading = antirec::Reading::msd) {
    std::uniform_int_distribution<antirec::StateId> pick(0, static_cast<antirec::StateId>(states - 1));
    std::uniform_int_distribution<int> out(0, outputs - 1);
    std::vector<std::int64_t> o(states);
    for (auto& x : o) x = out(rng);
    std::vector<antirec::StateId> d(states * base);
    for (auto& x : d) x = pick(rng);
    return antirec::Dfao(base, reading, pick(rng), std::move(o), std::move(d));
}

}  // namespace fixtures
