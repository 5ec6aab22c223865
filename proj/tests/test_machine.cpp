#include <doctest.h>

#include <random>

#include "antirec/error.hpp"
#include "antirec/machine.hpp"
#include "machines.hpp"
#include "oracle.hpp"

using namespace antirec;

TEST_CASE("eval follows the canonical msd expansion") {
    auto pd = fixtures::period_doubling();
    CHECK(pd.eval(9) == 1);
    CHECK(pd.eval(0) == 0);
    for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(pd.eval(n) == oracle::period_doubling(n));

    // delta(q0, 0) = q0, so padding with leading zeros changes nothing
    for (std::uint64_t n = 0; n < 200; ++n) {
        auto w = digits_msd(n, 2);
        w.insert(w.begin(), {0, 0, 0});
        REQUIRE(pd.output(pd.run(w)) == pd.eval(n));
    }
}

TEST_CASE("lsd machines read the least significant digit first") {
    auto lsd = fixtures::period_doubling_lsd();
    for (std::uint64_t n = 0; n < 4096; ++n) REQUIRE(lsd.eval(n) == oracle::period_doubling(n));
}

TEST_CASE("constructor validates the table") {
    CHECK_THROWS_AS(Dfao(1, Reading::msd, 0, {0}, {0}), DomainError);
    CHECK_THROWS_AS(Dfao(2, Reading::msd, 0, {0}, {0}), DomainError);
    CHECK_THROWS_AS(Dfao(2, Reading::msd, 0, {0}, {0, 1}), DomainError);
    CHECK_THROWS_AS(Dfao(2, Reading::msd, 3, {0}, {0, 0}), DomainError);
}

TEST_CASE("minimize") {
    auto pd = fixtures::period_doubling();
    auto m = minimize(pd);
    CHECK(m.state_count() == 2);
    CHECK(isomorphic(m, pd));

    auto dup = minimize(fixtures::period_doubling_duplicated());
    CHECK(fixtures::period_doubling_duplicated().state_count() == 3);
    CHECK(dup.state_count() == 2);
    CHECK(isomorphic(dup, pd));

    CHECK(minimize(fixtures::period_doubling_relabeled()) == minimize(pd));
}

TEST_CASE("equivalent") {
    auto pd = fixtures::period_doubling();
    CHECK(equivalent(pd, fixtures::period_doubling_relabeled()));
    CHECK(equivalent(pd, fixtures::period_doubling_duplicated()));
    CHECK_FALSE(equivalent(pd, fixtures::constant(2, 0)));
    CHECK_THROWS_AS(equivalent(pd, fixtures::constant(3, 0)), IncompatibleError);
    CHECK_THROWS_AS(equivalent(pd, fixtures::period_doubling_lsd()), IncompatibleError);

    // Differ only on a non-canonical (leading-zero) word: still equivalent.
    // q0 -0-> sink with output 9, q0 -1-> sink with output 0.
    Dfao padded(2, Reading::msd, 0, {0, 9, 0}, {1, 2, 1, 1, 2, 2});
    auto zero = fixtures::constant(2, 0);
    CHECK(minimize(padded).state_count() == 3);
    CHECK(equivalent(padded, zero));
}

TEST_CASE("equivalent decides eval agreement exactly on small machines") {
    std::mt19937_64 rng(99);
    int agree = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto reading = trial % 2 ? Reading::lsd : Reading::msd;
        auto m1 = fixtures::random_machine(rng, 2, 3, 2, reading);
        auto m2 = fixtures::random_machine(rng, 2, 3, 2, reading);
        // a distinguishing canonical word has length <= 9 + 1
        bool brute = true;
        for (std::uint64_t n = 0; n < (1u << 12); ++n)
            if (m1.eval(n) != m2.eval(n)) {
                brute = false;
                break;
            }
        agree += brute;
        REQUIRE(equivalent(m1, m2) == brute);
    }
    CHECK(agree > 0);
}

TEST_CASE("property: minimize preserves eval; equivalent is an equivalence") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int base = 2 + trial % 3;
        auto reading = trial % 2 ? Reading::lsd : Reading::msd;
        auto m = fixtures::random_machine(rng, base, 1 + trial % 7, 3, reading);
        auto mm = minimize(m);
        CHECK(mm.state_count() <= m.state_count());
        for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(m.eval(n) == mm.eval(n));
        CHECK(equivalent(m, mm));
        CHECK(equivalent(m, m));
        CHECK(minimize(mm) == mm);
    }
    // transitivity on triples drawn from a small pool so that some agree
    std::vector<Dfao> pool;
    for (int i = 0; i < 12; ++i) pool.push_back(fixtures::random_machine(rng, 2, 2, 2));
    pool.push_back(fixtures::period_doubling());
    pool.push_back(fixtures::period_doubling_relabeled());
    pool.push_back(fixtures::period_doubling_duplicated());
    for (const auto& x : pool)
        for (const auto& y : pool) {
            REQUIRE(equivalent(x, y) == equivalent(y, x));
            for (const auto& z : pool)
                if (equivalent(x, y) && equivalent(y, z)) REQUIRE(equivalent(x, z));
        }
}

TEST_CASE("reading reversal") {
    auto c = lsd_to_msd(fixtures::constant(3, 4, Reading::lsd));
    CHECK(c.reading() == Reading::msd);
    CHECK(c.state_count() == 1);
    CHECK(c.eval(17) == 4);

    auto pd = lsd_to_msd(fixtures::period_doubling_lsd());
    CHECK(equivalent(pd, fixtures::period_doubling()));
    for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(pd.eval(n) == fixtures::period_doubling().eval(n));

    CHECK_THROWS_AS(lsd_to_msd(fixtures::period_doubling()), IncompatibleError);
    CHECK_THROWS_AS(msd_to_lsd(fixtures::period_doubling_lsd()), IncompatibleError);

    auto round = lsd_to_msd(msd_to_lsd(fixtures::period_doubling()));
    CHECK(equivalent(round, minimize(fixtures::period_doubling())));
    CHECK(isomorphic(round, fixtures::period_doubling()));
}

TEST_CASE("property: reversal preserves the integer function") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int base = 2 + trial % 3;
        auto reading = trial % 2 ? Reading::lsd : Reading::msd;
        auto m = fixtures::random_machine(rng, base, 1 + trial % 6, 3, reading);
        auto r = reverse_reading(m);
        CHECK(r.reading() != m.reading());
        for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(r.eval(n) == m.eval(n));
        CHECK(equivalent(reverse_reading(r), minimize(m)));
    }
}

TEST_CASE("reversal respects its state cap") {
    std::mt19937_64 rng(11);
    auto m = fixtures::random_machine(rng, 3, 8, 4);
    CHECK_THROWS_AS(reverse_reading(m, 2), RangeError);
}

TEST_CASE("state names") {
    CHECK(state_name(0) == "a");
    CHECK(state_name(25) == "z");
    CHECK(state_name(26) == "aa");
    CHECK(state_name(27) == "ab");
}

TEST_CASE("to_dot") {
    auto dot = to_dot(fixtures::period_doubling());
    CHECK(dot.find("label=\"a/0\"") != std::string::npos);
    CHECK(dot.find("label=\"b/1\"") != std::string::npos);
    CHECK(dot.find("a -> b [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("__start -> a") != std::string::npos);

    // names follow breadth-first order, not internal ids
    auto relabeled = to_dot(fixtures::period_doubling_relabeled());
    CHECK(relabeled == dot);

    auto single = to_dot(fixtures::constant(3, 7));
    CHECK(single.find("label=\"a/7\"") != std::string::npos);
    for (int d = 0; d < 3; ++d)
        CHECK(single.find("a -> a [label=\"" + std::to_string(d) + "\"]") != std::string::npos);
    CHECK(single.find("b [") == std::string::npos);
}

TEST_CASE("serialization") {
    auto pd = fixtures::period_doubling();
    const std::string text = serialize(pd);
    CHECK(text ==
          "base 2 reading msd initial 0\n"
          "0 0\n"
          "1 1\n"
          "0 0 0\n"
          "0 1 1\n"
          "1 0 0\n"
          "1 1 0\n");
    CHECK(parse_dfao(text) == pd);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = fixtures::random_machine(rng, 2 + trial % 4, 1 + trial % 9, 5,
                                          trial % 2 ? Reading::lsd : Reading::msd);
        auto s = serialize(m);
        REQUIRE(parse_dfao(s) == m);
        REQUIRE(serialize(parse_dfao(s)) == s);
    }

    CHECK_THROWS_AS(parse_dfao(""), ParseError);
    CHECK_THROWS_AS(parse_dfao("base 2 reading xsd initial 0\n0 0\n0 0 0\n0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dfao("base 2 reading msd initial 0\n0 0\n0 0 0\n"), ParseError);
    try {
        parse_dfao("base 2 reading msd initial 0\n0 zero\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}
