#include <doctest.h>

#include <algorithm>
#include <random>

#include "antirec/error.hpp"
#include "antirec/forms.hpp"
#include "oracle.hpp"

using namespace antirec;
using V = std::vector<std::int64_t>;

TEST_CASE("make_form derives trace and kappa") {
    auto f = make_form({1, 1});
    CHECK(f.dimension() == 2);
    CHECK(f.trace() == 2);
    CHECK(f.kappa() == 5);

    CHECK(make_form({1, 2}).kappa() == 7);
    auto t = make_form({1, 1, 1, 1});
    CHECK(t.dimension() == 4);
    CHECK(t.trace() == 4);
    CHECK(t.kappa() == 17);
}

TEST_CASE("make_form rejects bad input") {
    CHECK_THROWS_AS(make_form({3}), DimensionError);
    CHECK_THROWS_AS(make_form({}), DimensionError);
    CHECK_THROWS_AS(make_form({1, 0}), DomainError);
    CHECK_THROWS_AS(make_form({1, -2}), DomainError);
    CHECK_THROWS_AS(parse_form("1,x"), DomainError);
    CHECK_THROWS_AS(parse_form("9999"), DimensionError);
    CHECK(parse_form(" 1, 2 ").coeffs() == V{1, 2});
}

TEST_CASE("generate reproduces the listed prefixes") {
    auto fib = generate(make_form({1, 1}), 6);
    CHECK(V(fib.a_values().begin(), fib.a_values().end()) == V{3, 9, 13, 18, 23, 29});
    CHECK(V(fib.b_values().begin(), fib.b_values().end()) ==
          V{1, 2, 4, 5, 6, 7, 8, 10, 11, 12, 14, 15});

    auto pell = generate(make_form({1, 2}), 5);
    CHECK(V(pell.a_values().begin(), pell.a_values().end()) == V{5, 11, 20, 26, 34});

    auto jac = generate(make_form({2, 1}), 5);
    CHECK(V(jac.a_values().begin(), jac.a_values().end()) == V{4, 11, 19, 25, 32});

    CHECK_THROWS_AS(generate(make_form({1, 1}), 0), EmptyRangeError);
}

TEST_CASE("generate agrees with the brute-force oracle") {
    for (const V& c : {V{1, 1}, V{1, 2}, V{2, 1}, V{1, 3}, V{1, 4}, V{3, 1, 2}, V{1, 1, 1, 1, 1}}) {
        auto t = generate(make_form(c), 3000);
        auto o = oracle::anti_recurrence(c, 3000);
        CHECK(V(t.a_values().begin(), t.a_values().end()) == o.a);
        CHECK(V(t.b_values().begin(), t.b_values().end()) == o.b);
    }
}

TEST_CASE("b_subseq splits B into k interleaved sequences") {
    CHECK(b_subseq(make_form({1, 2}), 1, 5) == V{1, 3, 6, 8, 10});
    CHECK(b_subseq(make_form({1, 2}), 2, 5) == V{2, 4, 7, 9, 12});
    CHECK(b_subseq(make_form({1, 1}), 1, 4) == V{1, 4, 6, 8});
    CHECK_THROWS_AS(b_subseq(make_form({1, 2}), 3, 5), IndexError);
    CHECK_THROWS_AS(b_subseq(make_form({1, 2}), 0, 5), IndexError);
}

TEST_CASE("first_anti and A1-boundedness") {
    CHECK(first_anti(make_form({1, 1})) == 3);
    CHECK(first_anti(make_form({1, 4})) == 9);
    CHECK(first_anti(make_form({1, 1, 1, 1, 1})) == 15);

    CHECK(is_a1_bounded(make_form({1, 2})));
    CHECK_FALSE(is_a1_bounded(make_form({1, 3})));
    CHECK(is_a1_bounded(make_form({1, 1, 1})));
}

TEST_CASE("gaps") {
    CHECK(gaps(make_form({1, 1}), 8) == V{6, 4, 5, 5, 6, 4, 6});
    CHECK(gaps(make_form({1, 2}), 7) == V{6, 9, 6, 8, 7, 6});
    CHECK(gaps(make_form({1, 1, 1}), 4) == V{10, 11, 9});
    CHECK_THROWS_AS(gaps(make_form({1, 1}), 1), EmptyRangeError);
}

TEST_CASE("difference_word normalizes by the window minimum") {
    auto pell = difference_word(make_form({1, 2}), 6);
    CHECK(pell.offset == 4);
    CHECK(pell.digits == V{1, 0, 2, 1, 2, 2});

    // A_{n+1} - 5n = 3 + PD_n
    auto fib = difference_word(make_form({1, 1}), 5);
    CHECK(fib.offset == 3);
    CHECK(fib.digits == V{0, 1, 0, 0, 0});

    // A = 10, 26, 45 gives raw 10, 9, 11.
    auto tetra = difference_word(make_form({1, 1, 1, 1}), 3);
    CHECK(tetra.offset == 9);
    CHECK(tetra.digits == V{1, 0, 2});
}

TEST_CASE("overflow is reported, not wrapped") {
    const std::int64_t big = std::int64_t{1} << 61;
    CHECK_THROWS_AS(make_form({big, big, big, big}), RangeError);
    auto f = make_form({big / 2, 1});
    CHECK_THROWS_AS(generate(f, 10), RangeError);
}

namespace {

LinearForm random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(2, 5);
    std::uniform_int_distribution<int> coef(1, 4);
    V c(dim(rng));
    for (auto& x : c) x = coef(rng);
    return make_form(c);
}

bool is_interval(std::span<const std::int64_t> s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] != s[i - 1] + 1) return false;
    return true;
}

}  // namespace

TEST_CASE("property: table invariants on random forms") {
    std::mt19937_64 rng(20241018);
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_form(rng);
        const auto k = static_cast<std::int64_t>(f.dimension());
        const std::size_t n = 600;
        auto t = generate(f, n);
        INFO("form " << f.to_string());

        // complementarity over [1, B_{kN}]
        auto top = t.b_values().back();
        std::vector<int> hits(top + 1, 0);
        for (auto v : t.a_values())
            if (v <= top) ++hits[v];
        for (auto v : t.b_values()) ++hits[v];
        CHECK(std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; }));

        CHECK(std::is_sorted(t.a_values().begin(), t.a_values().end()));
        CHECK(std::adjacent_find(t.a_values().begin(), t.a_values().end()) == t.a_values().end());

        for (std::size_t m = 1; m <= n; ++m) {
            std::int64_t s = 0;
            for (std::size_t j = 1; j <= f.dimension(); ++j) s += f.coeffs()[j - 1] * t.b_sub(j, m);
            REQUIRE(s == t.a(m));
        }

        // gap bound, with equality exactly when the two blocks are
        // intervals whose union is an interval
        for (std::size_t m = 1; m < n; ++m) {
            auto gap = t.a(m + 1) - t.a(m);
            REQUIRE(gap >= k * f.trace());
            auto lo = t.block(m);
            auto hi = t.block(m + 1);
            bool joined = is_interval(lo) && is_interval(hi) && hi.front() == lo.back() + 1;
            REQUIRE((gap == k * f.trace()) == joined);
        }

        // tau + t_{k-1} <= A_1, with equality iff a_2 = ... = a_k = 1
        auto lower = f.trace() + (k - 1) * k / 2;
        if (std::all_of(f.coeffs().begin() + 1, f.coeffs().end(), [](auto c) { return c == 1; }))
            CHECK(t.a(1) == lower);
        else
            CHECK(t.a(1) > lower);
        CHECK(t.a(1) == first_anti(f));
    }
}

TEST_CASE("A_1 lower bound is attained beyond (1,1)") {
    for (const V& c : {V{1, 1}, V{2, 1}, V{1, 1, 1}, V{4, 1, 1, 1}}) {
        auto f = make_form(c);
        auto k = static_cast<std::int64_t>(f.dimension());
        CHECK(first_anti(f) == f.trace() + (k - 1) * k / 2);
    }
    CHECK(first_anti(make_form({1, 2})) > 3 + 1);
}

TEST_CASE("property: determinism and prefix stability") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_form(rng);
        auto small = generate(f, 200);
        auto again = generate(f, 200);
        auto large = generate(f, 500);
        CHECK(small == again);
        CHECK(std::equal(small.a_values().begin(), small.a_values().end(), large.a_values().begin()));
        CHECK(std::equal(small.b_values().begin(), small.b_values().end(), large.b_values().begin()));
    }
}
