#include <doctest.h>

#include <random>

#include "antirec/error.hpp"
#include "antirec/forms.hpp"
#include "antirec/infer.hpp"
#include "machines.hpp"
#include "oracle.hpp"

using namespace antirec;
using V = std::vector<std::int64_t>;

namespace {

V pd_prefix(std::size_t n) {
    V s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = oracle::period_doubling(i);
    return s;
}

V machine_prefix(const Dfao& m, std::size_t n) {
    V s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = m.eval(i);
    return s;
}

}  // namespace

TEST_CASE("guess recovers period doubling") {
    auto seq = pd_prefix(2000);
    auto m = guess_dfao(seq, {.base = 2});
    REQUIRE(m);
    CHECK(m->state_count() == 2);
    CHECK(isomorphic(*m, fixtures::period_doubling()));
    // a -> ab, b -> aa
    CHECK(m->next(0, 0) == 0);
    CHECK(m->next(0, 1) == 1);
    CHECK(m->next(1, 0) == 0);
    CHECK(m->next(1, 1) == 0);
    CHECK(certify(*m, [](std::uint64_t n) { return std::int64_t{oracle::period_doubling(n)}; }, 100000)
              .pass);
}

TEST_CASE("guess in lsd order and convert") {
    auto seq = pd_prefix(4000);
    auto lsd = guess_dfao(seq, {.base = 2, .window = 4000, .reading = Reading::lsd});
    REQUIRE(lsd);
    CHECK(lsd->reading() == Reading::lsd);
    CHECK(equivalent(*lsd, fixtures::period_doubling_lsd()));
    auto msd = lsd_to_msd(*lsd);
    CHECK(equivalent(msd, fixtures::period_doubling()));
    for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(msd.eval(n) == oracle::period_doubling(n));
}

TEST_CASE("guess the anti-Pell difference machine") {
    auto word = difference_word(make_form({1, 2}), 200000);
    auto m = guess_dfao(word.digits, {.base = 3});
    REQUIRE(m);
    CHECK(m->state_count() <= 5);
    for (std::uint64_t n = 0; n < 3000; n += 3) REQUIRE(m->eval(n) == 1);
    auto cert = certify(*m, word.digits, 200000);
    CHECK(cert.pass);
    CHECK(cert.upto == 200000);
    // A_12 = 7 * 11 + 4 + d_11
    CHECK(7 * 11 + word.offset + m->eval(11) == 83);
}

TEST_CASE("constant sequences give one state") {
    V five(2000, 5);
    auto m = guess_dfao(five, {.base = 4});
    REQUIRE(m);
    CHECK(m->state_count() == 1);
    CHECK(m->eval(123456) == 5);
}

TEST_CASE("guess configuration errors") {
    auto seq = pd_prefix(2000);
    CHECK_THROWS_AS(guess_dfao(seq, {.base = 2, .window = 1}), InsufficientDataError);
    CHECK_THROWS_AS(guess_dfao(V(100, 0), {.base = 2}), InsufficientDataError);
    CHECK_THROWS_AS(guess_dfao(seq, {.base = 1}), DomainError);
    CHECK_THROWS_AS(guess_dfao(seq, {.base = 2, .window = 2000, .verify_to = 10}), DomainError);
    CHECK_THROWS_AS(guess_dfao(seq, {.base = 2, .max_states = 0}), DomainError);
    CHECK_FALSE(guess_dfao(seq, {.base = 2, .max_states = 1}));
}

TEST_CASE("non-automatic data yields no hypothesis") {
    // squares mod 1000 have no small base-2 automaton
    V sq(2000);
    for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = static_cast<std::int64_t>((i * i) % 1000);
    CHECK_FALSE(guess_dfao(sq, {.base = 2, .max_states = 16}));
}

TEST_CASE("certify") {
    auto zero = fixtures::constant(2, 0);
    auto c = certify(zero, [](std::uint64_t n) { return std::int64_t{oracle::period_doubling(n)}; }, 10);
    CHECK_FALSE(c.pass);
    REQUIRE(c.first_mismatch);
    CHECK(*c.first_mismatch == 1);
    CHECK(c.expected == 1);
    CHECK(c.actual == 0);

    auto ok = certify(fixtures::period_doubling(), pd_prefix(500), 10000);
    CHECK(ok.pass);
    CHECK(ok.upto == 500);
}

TEST_CASE("property: hypotheses agree with the data on the window") {
    std::mt19937_64 rng(42);
    int produced = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int base = 2 + trial % 3;
        auto reading = trial % 2 ? Reading::lsd : Reading::msd;
        auto src = fixtures::random_machine(rng, base, 1 + trial % 5, 3);
        auto seq = machine_prefix(src, 3000);
        // sprinkle a few corrupt terms so the data is not exactly automatic
        if (trial % 3 == 0)
            for (int i = 0; i < 3; ++i) seq[rng() % seq.size()] += 7;
        auto m = guess_dfao(seq, {.base = base, .window = 3000, .verify_to = 3000, .reading = reading});
        if (!m) continue;
        ++produced;
        for (std::uint64_t n = 0; n < 3000; ++n) REQUIRE(m->eval(n) == seq[n]);
    }
    CHECK(produced > 20);
}

TEST_CASE("property: guessing is idempotent on certified machines") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        int base = 2 + trial % 3;
        auto src = fixtures::random_machine(rng, base, 1 + trial % 5, 3);
        auto first = guess_dfao(machine_prefix(src, 2000), {.base = base});
        REQUIRE(first);
        if (!certify(*first, [&](std::uint64_t n) { return src.eval(n); }, 100000).pass) continue;
        auto second = guess_dfao(machine_prefix(*first, 2000), {.base = base});
        REQUIRE(second);
        CHECK(equivalent(*first, *second));
        CHECK(equivalent(*first, src));
    }
}

TEST_CASE("property: enlarging the window never loses states") {
    std::vector<std::pair<V, int>> sequences;
    sequences.emplace_back(pd_prefix(20000), 2);
    for (const V& c : {V{1, 2}, V{2, 1}, V{1, 1, 1}, V{1, 3}, V{1, 1, 1, 1}}) {
        auto f = make_form(c);
        sequences.emplace_back(difference_word(f, 20000).digits, static_cast<int>(f.trace()));
    }
    for (const auto& [seq, base] : sequences) {
        std::size_t prev = 0;
        for (std::size_t w : {50, 200, 800, 2000, 8000, 20000}) {
            auto m = guess_dfao(seq, {.base = base, .window = w, .verify_to = w});
            if (!m) continue;
            CHECK(m->state_count() >= prev);
            prev = m->state_count();
        }
        CHECK(prev > 0);
    }
}
