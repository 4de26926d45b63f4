#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "quotring/quotring.hpp"

using namespace quotring;
using qtest::all_residues;

namespace {

const IntegerRing Z;
const FpPolyRing F2(2);

Modulus<IntegerRing> zmod(long m) { return Modulus<IntegerRing>(Z, BigInt(m)); }

std::vector<BigInt> reps(const std::vector<Residue<IntegerRing>>& xs) {
    std::vector<BigInt> out;
    for (const auto& x : xs) out.push_back(x.rep());
    return out;
}

std::vector<BigInt> ints(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

using ZChain = ChainSystem<IntegerRing>;

ZChain make_chain(const Modulus<IntegerRing>& m, std::initializer_list<int> phis) {
    std::vector<Residue<IntegerRing>> f;
    for (int v : phis) f.push_back(m.reduce(BigInt(v)));
    return ZChain(std::span<const Residue<IntegerRing>>(f));
}

}  // namespace

TEST_CASE("solution set of 4x=24 mod 36") {
    Modulus<IntegerRing> m36 = zmod(36);
    SolutionSet<IntegerRing> s = solve(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    CHECK(s.coeff * s.gen == s.rhs);
    CHECK((s.gen.rep() == 15 || s.gen.rep() == 33));
    CHECK(s.ann.rep() == 9);
    CHECK(reps(enumerate_solutions(s)) == ints({6, 15, 24, 33}));
    CHECK(reps(generating_solutions(s)) == ints({15, 33}));
}

TEST_CASE("unit coefficient gives a unique solution") {
    Modulus<IntegerRing> m36 = zmod(36);
    SolutionSet<IntegerRing> s = solve(m36.one(), m36.reduce(BigInt(5)));
    CHECK(s.gen.rep() == 5);
    CHECK(s.ann.is_zero());
    CHECK(reps(enumerate_solutions(s)) == ints({5}));
}

TEST_CASE("unsolvable equations are reported") {
    Modulus<IntegerRing> m36 = zmod(36);
    CHECK(!solvable(m36.reduce(BigInt(4)), m36.reduce(BigInt(5))));
    CHECK_THROWS_AS(solve(m36.reduce(BigInt(4)), m36.reduce(BigInt(5))), Unsolvable);
    CHECK_THROWS_AS(solve(m36.zero(), m36.one()), Unsolvable);
}

TEST_CASE("zero coefficient degrades consistently") {
    Modulus<IntegerRing> m12 = zmod(12);
    SolutionSet<IntegerRing> s = solve(m12.zero(), m12.zero());
    CHECK(s.gen == m12.one());
    CHECK(s.ann == m12.one());
    CHECK(enumerate_solutions(s).size() == 12);
    // divisors of the whole ring are exactly the units
    auto gens = generating_solutions(s);
    auto units = qtest::units_of(m12);
    CHECK(reps(gens) == reps(units));
}

TEST_CASE("solvability and generating structure match the scans") {
    for (long mv : {6L, 8L, 9L, 12L}) {
        Modulus<IntegerRing> m = zmod(mv);
        for (const auto& a : all_residues(m)) {
            BigInt ga = gcd_with_modulus(a);
            for (const auto& b : all_residues(m)) {
                bool expect = !qtest::scan_solutions(a, b).empty();
                CHECK(solvable(a, b) == expect);
                CHECK(solvable(a, b) == (b.rep() % ga == 0));
                if (!expect) continue;
                SolutionSet<IntegerRing> s = solve(a, b);
                CHECK(a * s.gen == b);
                auto sols = enumerate_solutions(s);
                CHECK(reps(sols) == reps(qtest::scan_solutions(a, b)));
                for (const auto& y : sols) CHECK(divides(s.gen, y));
                auto gens = generating_solutions(s);
                CHECK(reps(gens) == reps(qtest::scan_generating(a, b)));
                for (const auto& g1 : gens)
                    for (const auto& g2 : gens) CHECK(associates(g1, g2));
            }
        }
    }
}

TEST_CASE("example rows over Z_72") {
    Modulus<IntegerRing> m72 = zmod(72);
    SolutionSet<IntegerRing> s1 = solve(m72.reduce(BigInt(4)), m72.reduce(BigInt(8)));
    CHECK(reps(enumerate_solutions(s1)) == ints({2, 20, 38, 56}));
    CHECK(reps(generating_solutions(s1)) == ints({2, 38}));

    SolutionSet<IntegerRing> s2 = solve(m72.reduce(BigInt(8)), m72.reduce(BigInt(24)));
    CHECK(reps(enumerate_solutions(s2)) == ints({3, 12, 21, 30, 39, 48, 57, 66}));
    CHECK(reps(generating_solutions(s2)) == ints({3, 21, 39, 57}));

    SolutionSet<IntegerRing> s3 = solve(m72.reduce(BigInt(4)), m72.reduce(BigInt(24)));
    CHECK(reps(enumerate_solutions(s3)) == ints({6, 24, 42, 60}));
    CHECK(reps(generating_solutions(s3)) == ints({6, 42}));
}

TEST_CASE("product of generating and non-generating solutions may not generate") {
    Modulus<IntegerRing> m72 = zmod(72);
    // 2 generates 4x=8; 12 solves 8x=24 without generating; 2*12 = 24
    SolutionSet<IntegerRing> s2 = solve(m72.reduce(BigInt(8)), m72.reduce(BigInt(24)));
    CHECK(!is_generating(s2, m72.reduce(BigInt(12))));
    SolutionSet<IntegerRing> s3 = solve(m72.reduce(BigInt(4)), m72.reduce(BigInt(24)));
    Residue<IntegerRing> prod = m72.reduce(BigInt(2)) * m72.reduce(BigInt(12));
    CHECK(prod.rep() == 24);
    CHECK(!is_generating(s3, prod));
}

TEST_CASE("is_generating rejects non-solutions") {
    Modulus<IntegerRing> m36 = zmod(36);
    SolutionSet<IntegerRing> s = solve(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    CHECK(is_generating(s, s.gen));
    CHECK(is_generating(s, m36.reduce(BigInt(33))));
    CHECK(!is_generating(s, m36.reduce(BigInt(6))));   // solution, not generating
    CHECK(!is_generating(s, m36.reduce(BigInt(15 + 1))));  // not a solution
}

TEST_CASE("minimal generating solutions") {
    Modulus<IntegerRing> m72 = zmod(72);
    CHECK(min_generating(m72.reduce(BigInt(4)), m72.reduce(BigInt(8))).rep() == 2);
    CHECK(min_generating(m72.one(), m72.reduce(BigInt(17))).rep() == 17);

    Modulus<IntegerRing> m8 = zmod(8);
    // scan of Z_8: solutions of 2x=4 are 2 and 6, both generating
    auto gens = qtest::scan_generating(m8.reduce(BigInt(2)), m8.reduce(BigInt(4)));
    CHECK(reps(gens) == ints({2, 6}));
    CHECK(min_generating(m8.reduce(BigInt(2)), m8.reduce(BigInt(4))).rep() == 2);

    CHECK_THROWS_AS(min_generating(m8.reduce(BigInt(2)), m8.one()), Unsolvable);
}

TEST_CASE("minimal generating solution solves and is minimal everywhere") {
    for (long mv : {6L, 9L, 12L, 16L}) {
        Modulus<IntegerRing> m = zmod(mv);
        for (const auto& a : all_residues(m)) {
            for (const auto& b : all_residues(m)) {
                if (!solvable(a, b)) continue;
                Residue<IntegerRing> t = min_generating(a, b);
                CHECK(a * t == b);
                auto gens = qtest::scan_generating(a, b);
                REQUIRE(!gens.empty());
                CHECK(t == gens.front());  // scan returns enumeration order
            }
        }
    }
}

TEST_CASE("chain system over Z_72") {
    Modulus<IntegerRing> m72 = zmod(72);
    ZChain cs = make_chain(m72, {4, 8, 24});
    CHECK(cs.ratio(1, 0).rep() == 2);
    CHECK(cs.ratio(2, 1).rep() == 3);
    CHECK(cs.ratio(2, 0).rep() == 6);
    CHECK(cs.ratio(1, 0) * cs.ratio(2, 1) == cs.ratio(2, 0));
    // the composite ratio generates the long equation
    SolutionSet<IntegerRing> s = solve(m72.reduce(BigInt(4)), m72.reduce(BigInt(24)));
    CHECK(is_generating(s, cs.ratio(2, 0)));
}

TEST_CASE("chain system of units and over Z_16") {
    Modulus<IntegerRing> m12 = zmod(12);
    ZChain ones = make_chain(m12, {1, 1, 1});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(ones.ratio(i, j) == m12.one());

    Modulus<IntegerRing> m16 = zmod(16);
    ZChain cs = make_chain(m16, {2, 4, 8});
    // scan oracle: generating solutions of 2x=4 in Z_16 are 2 and 10
    CHECK(reps(qtest::scan_generating(m16.reduce(BigInt(2)), m16.reduce(BigInt(4)))) ==
          ints({2, 10}));
    CHECK(cs.ratio(1, 0).rep() == 2);
    CHECK(cs.ratio(2, 1).rep() == 2);
    CHECK(cs.ratio(2, 0).rep() == 4);
    // the composite ratio 4 shows up among the scanned generators of 2x=8
    std::vector<BigInt> long_gens =
        reps(qtest::scan_generating(m16.reduce(BigInt(2)), m16.reduce(BigInt(8))));
    CHECK(std::find(long_gens.begin(), long_gens.end(), BigInt(4)) != long_gens.end());
}

TEST_CASE("invalid chains are rejected") {
    Modulus<IntegerRing> m12 = zmod(12);
    std::vector<Residue<IntegerRing>> one{m12.reduce(BigInt(2))};
    CHECK_THROWS_AS(ZChain(std::span<const Residue<IntegerRing>>(one)), InvalidChain);
    CHECK_THROWS_AS(make_chain(m12, {2, 0}), InvalidChain);
    CHECK_THROWS_AS(make_chain(m12, {4, 2}), InvalidChain);  // 4 does not divide 2
    CHECK_THROWS_AS(make_chain(m12, {2, 3}), InvalidChain);
    // units divide everything, so (5, 3) is a valid chain in Z_12
    CHECK(make_chain(m12, {5, 3}).ratio(1, 0).rep() == 3);
}

TEST_CASE("every ratio generates its equation on small chains") {
    for (long mv : {12L, 18L, 24L}) {
        Modulus<IntegerRing> m = zmod(mv);
        auto elems = all_residues(m);
        for (const auto& f1 : elems) {
            if (f1.is_zero()) continue;
            for (const auto& f2 : elems) {
                if (f2.is_zero() || !divides(f1, f2)) continue;
                for (const auto& f3 : elems) {
                    if (f3.is_zero() || !divides(f2, f3)) continue;
                    std::vector<Residue<IntegerRing>> f{f1, f2, f3};
                    ZChain cs((std::span<const Residue<IntegerRing>>(f)));
                    for (std::size_t i = 0; i < 3; ++i)
                        for (std::size_t j = 0; j < i; ++j)
                            CHECK(is_generating(solve(f[j], f[i]), cs.ratio(i, j)));
                }
            }
        }
    }
}

TEST_CASE("composites of minimal generating solutions generate") {
    for (long mv = 2; mv <= 40; ++mv) {
        Modulus<IntegerRing> m = zmod(mv);
        auto elems = all_residues(m);
        const std::size_t n = elems.size();
        // memoized minimal generating solutions for every solvable pair
        std::vector<std::vector<std::optional<Residue<IntegerRing>>>> table(
            n, std::vector<std::optional<Residue<IntegerRing>>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!elems[i].is_zero() && !elems[j].is_zero() &&
                    divides(elems[i], elems[j]))
                    table[i][j] = min_generating(elems[i], elems[j]);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!table[i][j]) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (!table[j][k]) continue;
                    Residue<IntegerRing> prod = *table[i][j] * *table[j][k];
                    CHECK(is_generating(solve(elems[i], elems[k]), prod));
                }
            }
        }
    }
}

TEST_CASE("minimal ratios and mirrored annihilator ratios are associates") {
    for (long mv : {6L, 8L, 9L, 12L, 36L}) {
        Modulus<IntegerRing> m = zmod(mv);
        for (const auto& b : all_residues(m)) {
            for (const auto& a : all_residues(m)) {
                if (a.is_zero() || !divides(b, a)) continue;
                Residue<IntegerRing> lhs = min_generating(b, a);
                Residue<IntegerRing> rhs =
                    min_generating(annihilator(a), annihilator(b));
                CHECK(associates(lhs, rhs));
            }
        }
    }
}

TEST_CASE("permutation product identity") {
    Modulus<IntegerRing> m72 = zmod(72);
    ZChain cs = make_chain(m72, {4, 8, 24});

    std::vector<std::size_t> id{0, 1, 2};
    CHECK(verify_perm_identity(cs, std::span<const std::size_t>(id)));

    // 3-cycle: ratio(2,0) against ratio(1,0)*ratio(2,1)
    std::vector<std::size_t> cyc{1, 2, 0};
    CHECK(verify_perm_identity(cs, std::span<const std::size_t>(cyc)));

    std::vector<std::size_t> bad{0, 0, 2};
    CHECK_THROWS_AS(verify_perm_identity(cs, std::span<const std::size_t>(bad)),
                    PreconditionViolated);

    // all permutations on an n = 4 chain
    Modulus<IntegerRing> m48 = zmod(48);
    ZChain cs4 = make_chain(m48, {2, 4, 12, 24});
    std::vector<std::size_t> perm{0, 1, 2, 3};
    do {
        CHECK(verify_perm_identity(cs4, std::span<const std::size_t>(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("permutation identity on random chains") {
    std::mt19937_64 rng(77);
    for (long mv : {24L, 36L, 72L}) {
        Modulus<IntegerRing> m = zmod(mv);
        for (int t = 0; t < 10; ++t) {
            auto factors = qtest::rand_chain(m, 4, rng);
            ZChain cs((std::span<const Residue<IntegerRing>>(factors)));
            std::vector<std::size_t> perm{0, 1, 2, 3};
            do {
                CHECK(verify_perm_identity(cs, std::span<const std::size_t>(perm)));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("gcd probe over Z_72") {
    Modulus<IntegerRing> m72 = zmod(72);
    ProbeReport<IntegerRing> r =
        gcd_solution_probe(m72.reduce(BigInt(4)), m72.reduce(BigInt(8)));
    CHECK(r.gcd_all == 2);
    CHECK(r.gcd_all_is_solution);
    REQUIRE(r.bad_pairs.size() == 1);
    CHECK(r.bad_pairs[0].x.rep() == 20);
    CHECK(r.bad_pairs[0].y.rep() == 56);
    CHECK(r.bad_pairs[0].g == 4);
    CHECK(!r.truncated);
}

TEST_CASE("gcd probe can flag the whole-set gcd") {
    Modulus<IntegerRing> m36 = zmod(36);
    ProbeReport<IntegerRing> r =
        gcd_solution_probe(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    CHECK(r.gcd_all == 3);  // gcd(6, 15, 24, 33)
    CHECK(!r.gcd_all_is_solution);
}

TEST_CASE("gcd probe trivial case and cap") {
    Modulus<IntegerRing> m36 = zmod(36);
    ProbeReport<IntegerRing> r = gcd_solution_probe(m36.one(), m36.reduce(BigInt(7)));
    CHECK(r.gcd_all == 7);
    CHECK(r.gcd_all_is_solution);
    CHECK(r.bad_pairs.empty());

    // 4x=24 mod 36 has five failing pairs; a cap of three truncates
    ProbeReport<IntegerRing> capped =
        gcd_solution_probe(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)), 3);
    CHECK(capped.truncated);
    CHECK(capped.bad_pairs.size() == 3);
    ProbeReport<IntegerRing> full =
        gcd_solution_probe(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    CHECK(full.bad_pairs.size() == 5);
    CHECK(!full.truncated);
}

TEST_CASE("enumeration bound is enforced") {
    Modulus<IntegerRing> m36 = zmod(36);
    SolutionSet<IntegerRing> s = solve(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    CHECK_THROWS_AS(enumerate_solutions(s, 2), TooLarge);
    CHECK_THROWS_AS(min_generating(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)), 2),
                    TooLarge);
}

TEST_CASE("linear equations over F_2[x]") {
    // R_m for m = x^2+1 = (x+1)^2 over F_2
    Modulus<FpPolyRing> m(F2, F2.from_coeffs({1, 0, 1}));
    Residue<FpPolyRing> xp1 = m.reduce(F2.from_coeffs({1, 1}));
    SolutionSet<FpPolyRing> s = solve(xp1, m.zero());
    auto sols = enumerate_solutions(s);
    CHECK(sols.size() == 2);  // 0 and x+1
    CHECK(sols[0].is_zero());
    CHECK(sols[1].rep() == F2.from_coeffs({1, 1}));

    for (const auto& a : all_residues(m))
        for (const auto& b : all_residues(m)) {
            CHECK(solvable(a, b) == !qtest::scan_solutions(a, b).empty());
            if (!solvable(a, b)) continue;
            auto got = enumerate_solutions(solve(a, b));
            auto expect = qtest::scan_solutions(a, b);
            CHECK(got.size() == expect.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
        }
}
