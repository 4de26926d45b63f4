#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quotring/quotring.hpp"

using namespace quotring;

namespace {
const IntegerRing Z;
const FpPolyRing F2(2);
const FpPolyRing F3(3);
}  // namespace

TEST_CASE("integer egcd on fixed inputs") {
    Egcd<IntegerRing> e = egcd(Z, BigInt(4), BigInt(36));
    CHECK(e.g == 4);
    CHECK(BigInt(4) * e.u + BigInt(36) * e.v == e.g);

    Egcd<IntegerRing> zz = egcd(Z, BigInt(0), BigInt(0));
    CHECK(zz.g == 0);
    CHECK(zz.u == 0);
    CHECK(zz.v == 0);
}

TEST_CASE("egcd satisfies the Bezout identity and returns the canonical gcd") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 500; ++t) {
        BigInt a = qtest::rand_int(rng, -1000000, 1000000);
        BigInt b = qtest::rand_int(rng, -1000000, 1000000);
        Egcd<IntegerRing> e = egcd(Z, a, b);
        CHECK(a * e.u + b * e.v == e.g);
        CHECK(e.g >= 0);
        CHECK(e.g == boost::multiprecision::gcd(a, b));
        if (!(e.g == 0)) {
            CHECK(a % e.g == 0);
            CHECK(b % e.g == 0);
        }
    }
}

TEST_CASE("polynomial egcd over small prime fields") {
    // long-division oracle: (x+1)^2 = x^2+1 over F_2, so x+1 divides both
    // inputs and is the monic gcd
    FpPoly xp1 = F2.from_coeffs({1, 1});
    FpPoly x2p1 = F2.from_coeffs({1, 0, 1});
    CHECK(F2.mul(xp1, xp1) == x2p1);
    CHECK(F2.divmod(x2p1, xp1).second == F2.zero());

    Egcd<FpPolyRing> e = egcd(F2, x2p1, xp1);
    CHECK(e.g == xp1);
    CHECK(F2.add(F2.mul(x2p1, e.u), F2.mul(xp1, e.v)) == e.g);

    std::mt19937_64 rng(202);
    for (const FpPolyRing* r : {&F2, &F3}) {
        for (int t = 0; t < 200; ++t) {
            FpPoly a = qtest::rand_poly(*r, 6, rng);
            FpPoly b = qtest::rand_poly(*r, 6, rng);
            Egcd<FpPolyRing> g = egcd(*r, a, b);
            CHECK(r->add(r->mul(a, g.u), r->mul(b, g.v)) == g.g);
            if (!g.g.is_zero()) {
                CHECK(g.g.coeffs.back() == 1);  // monic
                CHECK(r->divmod(a, g.g).second == r->zero());
                CHECK(r->divmod(b, g.g).second == r->zero());
            }
        }
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(Z, BigInt(36), BigInt(4)) == 9);
    CHECK(exact_div(Z, BigInt(-36), BigInt(4)) == -9);
    CHECK(exact_div(Z, BigInt(7), BigInt(1)) == 7);
    CHECK_THROWS_AS(exact_div(Z, BigInt(7), BigInt(2)), NotDivisible);
    CHECK_THROWS_AS(exact_div(Z, BigInt(7), BigInt(0)), DivisionByZero);

    FpPoly x2 = F3.from_coeffs({0, 0, 1});
    FpPoly x = F3.from_coeffs({0, 1});
    CHECK(exact_div(F3, x2, x) == x);
    CHECK_THROWS_AS(exact_div(F3, F3.from_coeffs({1, 0, 1}), x), NotDivisible);
}

TEST_CASE("canonical associates") {
    auto [a6, u6] = Z.canonical(BigInt(-6));
    CHECK(a6 == 6);
    CHECK(u6 == -1);
    auto [z, uz] = Z.canonical(BigInt(0));
    CHECK(z == 0);
    CHECK(uz == 1);

    // 2x+2 = (x+1)*2 over F_3
    FpPoly p = F3.from_coeffs({2, 2});
    auto [assoc, unit] = F3.canonical(p);
    CHECK(assoc == F3.from_coeffs({1, 1}));
    CHECK(unit == F3.constant(2));
    CHECK(F3.mul(assoc, unit) == p);

    std::mt19937_64 rng(303);
    for (int t = 0; t < 200; ++t) {
        BigInt v = qtest::rand_int(rng, -500, 500);
        auto [c, u] = Z.canonical(v);
        CHECK(Z.mul(c, u) == v);
        CHECK(Z.is_unit(u));
        CHECK(Z.canonical(c).second == 1);  // idempotent
        FpPoly q = qtest::rand_poly(F3, 5, rng);
        auto [cq, uq] = F3.canonical(q);
        CHECK(F3.mul(cq, uq) == q);
        CHECK(F3.is_unit(uq));
        CHECK(F3.canonical(cq).second == F3.one());
    }
}

TEST_CASE("stable lift on fixed inputs") {
    CHECK(stable_lift(Z, BigInt(3), BigInt(4), BigInt(10)) == 0);
    // candidates in enumeration order: 0 -> 2, 1 -> 5, -1 -> -1 coprime to 10
    CHECK(stable_lift(Z, BigInt(2), BigInt(3), BigInt(10)) == -1);
    CHECK(stable_lift(Z, BigInt(0), BigInt(1), BigInt(10)) == 1);

    CHECK_THROWS_AS(stable_lift(Z, BigInt(2), BigInt(4), BigInt(10)),
                    PreconditionViolated);
    CHECK_THROWS_AS(stable_lift(Z, BigInt(1), BigInt(1), BigInt(0)),
                    PreconditionViolated);
}

TEST_CASE("stable lift output is coprime and first in order") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 300; ++t) {
        BigInt a = qtest::rand_int(rng, -50, 50);
        BigInt b = qtest::rand_int(rng, -50, 50);
        BigInt c = qtest::rand_int(rng, 1, 60);
        if (!(gcd(Z, gcd(Z, a, b), c) == 1)) continue;
        BigInt r = stable_lift(Z, a, b, c);
        CHECK(gcd(Z, a + b * r, c) == 1);
        // nothing earlier in enumeration order works
        for (std::uint64_t k = 0;; ++k) {
            BigInt cand = Z.enumerate(k);
            if (cand == r) break;
            CHECK(!(gcd(Z, a + b * cand, c) == 1));
        }
    }
}

TEST_CASE("stable lift over F_2[x]") {
    FpPoly a = F2.from_coeffs({0, 1});     // x
    FpPoly b = F2.from_coeffs({1, 1});     // x+1
    FpPoly c = F2.from_coeffs({0, 0, 1});  // x^2
    // r = 0 leaves gcd x; r = 1 gives x + (x+1) = 1
    CHECK(stable_lift(F2, a, b, c) == F2.one());
}

TEST_CASE("enumeration order") {
    std::vector<BigInt> zs;
    for (std::uint64_t k = 0; k < 7; ++k) zs.push_back(Z.enumerate(k));
    CHECK(zs == std::vector<BigInt>{BigInt(0), BigInt(1), BigInt(-1), BigInt(2),
                                    BigInt(-2), BigInt(3), BigInt(-3)});

    std::vector<FpPoly> f2s;
    for (std::uint64_t k = 0; k < 8; ++k) f2s.push_back(F2.enumerate(k));
    std::vector<FpPoly> expect{F2.zero(),
                               F2.one(),
                               F2.from_coeffs({0, 1}),
                               F2.from_coeffs({1, 1}),
                               F2.from_coeffs({0, 0, 1}),
                               F2.from_coeffs({1, 0, 1}),
                               F2.from_coeffs({0, 1, 1}),
                               F2.from_coeffs({1, 1, 1})};
    CHECK(f2s == expect);

    // F_3 degree-1 block: x, x+1, x+2, 2x, 2x+1, 2x+2
    CHECK(F3.enumerate(3) == F3.from_coeffs({0, 1}));
    CHECK(F3.enumerate(6) == F3.from_coeffs({0, 2}));
    CHECK(F3.enumerate(9) == F3.from_coeffs({0, 0, 1}));
}

TEST_CASE("enumeration is injective on a long prefix") {
    std::set<std::string> seen;
    for (std::uint64_t k = 0; k < 10000; ++k)
        CHECK(seen.insert(to_text(Z, Z.enumerate(k))).second);
    seen.clear();
    for (std::uint64_t k = 0; k < 10000; ++k)
        CHECK(seen.insert(to_text(F2, F2.enumerate(k))).second);
    seen.clear();
    for (std::uint64_t k = 0; k < 10000; ++k)
        CHECK(seen.insert(to_text(F3, F3.enumerate(k))).second);
}

TEST_CASE("enum_less agrees with enumeration indices") {
    for (std::uint64_t i = 0; i < 150; ++i) {
        for (std::uint64_t j = 0; j < 150; ++j) {
            CHECK(Z.enum_less(Z.enumerate(i), Z.enumerate(j)) == (i < j));
            CHECK(F3.enum_less(F3.enumerate(i), F3.enumerate(j)) == (i < j));
        }
    }
}

TEST_CASE("polynomial ring requires a prime characteristic") {
    CHECK_THROWS_AS(FpPolyRing(4), InvalidRing);
    CHECK_THROWS_AS(FpPolyRing(1), InvalidRing);
    CHECK_THROWS_AS(FpPolyRing(0), InvalidRing);
    CHECK(FpPolyRing(7).characteristic() == 7);
}

TEST_CASE("truncated integer division invariants") {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 300; ++t) {
        BigInt a = qtest::rand_int(rng, -10000, 10000);
        BigInt b = qtest::rand_int(rng, -200, 200);
        if (b == 0) continue;
        auto [q, r] = Z.divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(boost::multiprecision::abs(r) < boost::multiprecision::abs(b));
    }
}

TEST_CASE("polynomial division invariants") {
    std::mt19937_64 rng(606);
    for (int t = 0; t < 300; ++t) {
        FpPoly a = qtest::rand_poly(F3, 7, rng);
        FpPoly b = qtest::rand_poly(F3, 4, rng);
        if (b.is_zero()) continue;
        auto [q, r] = F3.divmod(a, b);
        CHECK(F3.add(F3.mul(q, b), r) == a);
        CHECK(r.degree() < b.degree());
    }
}
