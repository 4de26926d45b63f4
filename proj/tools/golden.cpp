#include "golden.hpp"

#include <algorithm>
#include <sstream>

#include "quotring/quotring.hpp"

namespace quotring_cli {

namespace {

using namespace quotring;

using ZRes = Residue<IntegerRing>;

std::vector<BigInt> reps_of(const std::vector<ZRes>& xs) {
    std::vector<BigInt> out;
    out.reserve(xs.size());
    for (const ZRes& x : xs) out.push_back(x.rep());
    return out;
}

std::string join(const std::vector<BigInt>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << xs[i];
    }
    return os.str();
}

std::vector<BigInt> ints(std::initializer_list<int> xs) {
    std::vector<BigInt> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

std::vector<GoldenClaim> golden_claims() {
    using namespace quotring;
    std::vector<GoldenClaim> claims;
    IntegerRing z;
    Modulus<IntegerRing> m6(z, BigInt(6));
    Modulus<IntegerRing> m36(z, BigInt(36));
    Modulus<IntegerRing> m72(z, BigInt(72));

    {  // 4 = 2*5 in Z_6 with 5 the unique unit factor
        ZRes x = m6.reduce(BigInt(4));
        ZRes e = unit_part(x);
        bool pass = gcd_with_modulus(x) == 2 && e.rep() == 5 && is_unit(e) &&
                    m6.reduce(BigInt(2)) * e == x;
        claims.push_back({"z6 unit decomposition 4=2*5", pass,
                          "unit factor " + e.rep().str()});
    }
    {  // 8 = 4*e in Z_36 with e a unit, e among 11 and 29
        ZRes x = m36.reduce(BigInt(8));
        ZRes e = unit_part(x);
        bool pass = gcd_with_modulus(x) == 4 && is_unit(e) &&
                    m36.reduce(BigInt(4)) * e == x &&
                    (e.rep() == 11 || e.rep() == 29) &&
                    m36.reduce(BigInt(4)) * m36.reduce(BigInt(11)) == x &&
                    m36.reduce(BigInt(4)) * m36.reduce(BigInt(29)) == x;
        claims.push_back({"z36 unit decomposition 8=4*e", pass,
                          "unit factor " + e.rep().str()});
    }

    SolutionSet<IntegerRing> s36 = solve(m36.reduce(BigInt(4)), m36.reduce(BigInt(24)));
    {
        std::vector<BigInt> sols = reps_of(enumerate_solutions(s36));
        bool pass = sols == ints({6, 15, 24, 33});
        claims.push_back({"z36 solution set of 4x=24", pass, "solutions " + join(sols)});
    }
    {
        std::vector<BigInt> ann =
            reps_of(enumerate_solutions(solve(m36.reduce(BigInt(4)), m36.zero())));
        bool pass = s36.ann.rep() == 9 && ann == ints({0, 9, 18, 27});
        claims.push_back({"z36 annihilator of 4", pass, "annihilator set " + join(ann)});
    }
    {
        std::vector<BigInt> gen = reps_of(generating_solutions(s36));
        bool pass = gen == ints({15, 33});
        claims.push_back({"z36 generating solutions of 4x=24", pass,
                          "generating " + join(gen)});
    }
    {
        ZRes a = m36.reduce(BigInt(15)), b = m36.reduce(BigInt(33));
        auto w = associate_witness(a, b);
        bool pass = associates(a, b) && w.has_value() && is_unit(*w) &&
                    (w->rep() == 7 || w->rep() == 31) &&
                    a * m36.reduce(BigInt(7)) == b && a * m36.reduce(BigInt(31)) == b &&
                    is_unit(m36.reduce(BigInt(7))) && is_unit(m36.reduce(BigInt(31)));
        claims.push_back({"z36 15 and 33 are associates", pass,
                          "witness unit " + (w ? w->rep().str() : std::string("none"))});
    }

    struct Row {
        int a, b;
        std::vector<BigInt> sols, gens;
    };
    std::vector<Row> table{
        {4, 8, ints({2, 20, 38, 56}), ints({2, 38})},
        {8, 24, ints({3, 12, 21, 30, 39, 48, 57, 66}), ints({3, 21, 39, 57})},
        {4, 24, ints({6, 24, 42, 60}), ints({6, 42})},
    };
    for (const Row& row : table) {
        SolutionSet<IntegerRing> s = solve(m72.reduce(BigInt(row.a)), m72.reduce(BigInt(row.b)));
        std::vector<BigInt> sols = reps_of(enumerate_solutions(s));
        std::vector<BigInt> gens = reps_of(generating_solutions(s));
        bool pass = sols == row.sols && gens == row.gens;
        claims.push_back({"z72 table row " + std::to_string(row.a) + "x=" +
                              std::to_string(row.b),
                          pass, "solutions " + join(sols) + " generating " + join(gens)});
    }
    {  // product of a generating and a non-generating solution need not generate
        ZRes prod = m72.reduce(BigInt(2)) * m72.reduce(BigInt(12));
        SolutionSet<IntegerRing> s = solve(m72.reduce(BigInt(4)), m72.reduce(BigInt(24)));
        bool pass = prod.rep() == 24 && !is_generating(s, prod);
        claims.push_back({"z72 product 2*12=24 does not generate 4x=24", pass,
                          "is_generating " + std::string(is_generating(s, prod) ? "true" : "false")});
    }

    ProbeReport<IntegerRing> probe =
        gcd_solution_probe(m72.reduce(BigInt(4)), m72.reduce(BigInt(8)));
    {
        bool pass = probe.gcd_all == 2 && probe.gcd_all_is_solution;
        claims.push_back({"z72 gcd of all solutions of 4x=8 solves", pass,
                          "gcd " + probe.gcd_all.str()});
    }
    {
        bool found = false;
        for (const auto& bad : probe.bad_pairs)
            if (bad.x.rep() == 20 && bad.y.rep() == 56 && bad.g == 4) found = true;
        bool pass = found && gcd(z, BigInt(20), BigInt(56)) == 4;
        claims.push_back({"z72 gcd of the pair 20,56 does not solve", pass,
                          std::to_string(probe.bad_pairs.size()) + " failing pair(s)"});
    }

    return claims;
}

}  // namespace quotring_cli
