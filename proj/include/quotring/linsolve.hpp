#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quotring/residue.hpp"

namespace quotring {

/**
 * Full solution set of a solvable equation coeff * x = rhs in R_m, stored as
 * a generating particular solution plus the annihilator generator of the
 * coefficient: the solutions are exactly {gen + ann*t : t in R_m} and gen
 * divides every one of them.
 */
template <euclidean_domain R>
struct SolutionSet {
    Residue<R> coeff;
    Residue<R> rhs;
    Residue<R> gen;
    Residue<R> ann;
};

/// Solvability of a*x = b: the gcd of a representative of a with the modulus
/// must divide a representative of b.
template <euclidean_domain R>
bool solvable(const Residue<R>& a, const Residue<R>& b) {
    detail::require_same_modulus(a, b);
    const R& r = a.ring();
    return r.divmod(b.rep(), gcd_with_modulus(a)).second == r.zero();
}

/**
 * Solves a*x = b in R_m. Writing g_a = (a, m) and g_b = (b, m) for the
 * canonical gcds of representatives with the modulus, the returned
 * generating solution is reduce(g_b / g_a) * unit_part(a)^-1 * unit_part(b),
 * and ann generates the annihilator of a. Throws Unsolvable with the failed
 * divisibility witness when g_a does not divide b.
 */
template <euclidean_domain R>
SolutionSet<R> solve(const Residue<R>& a, const Residue<R>& b) {
    detail::require_same_modulus(a, b);
    const R& r = a.ring();
    typename R::Elem ga = gcd_with_modulus(a);
    if (!(r.divmod(b.rep(), ga).second == r.zero()))
        throw Unsolvable("solve: gcd(coeff, modulus) = " + r.text(ga) +
                         " does not divide the right side " + r.text(b.rep()));
    typename R::Elem gb = gcd_with_modulus(b);
    typename R::Elem scale = exact_div(r, gb, ga);
    Residue<R> gen = a.modulus().reduce(scale) * invert(unit_part(a)) * unit_part(b);
    assert(a * gen == b);
    return SolutionSet<R>{a, b, gen, annihilator(a)};
}

/// Number of solutions of the stored equation.
template <euclidean_domain R>
BigInt solution_count(const SolutionSet<R>& s) {
    return s.coeff.ring().quotient_card(gcd_with_modulus(s.coeff));
}

/**
 * All solutions, sorted in enumeration order. Throws TooLarge when the
 * solution count exceeds the bound.
 */
template <euclidean_domain R>
std::vector<Residue<R>> enumerate_solutions(const SolutionSet<R>& s,
                                            std::uint64_t bound = kEnumBound) {
    const R& r = s.coeff.ring();
    BigInt count = solution_count(s);
    if (count > bound)
        throw TooLarge("enumerate_solutions: solution set exceeds the bound");
    auto n = count.template convert_to<std::uint64_t>();
    std::vector<Residue<R>> out;
    out.reserve(n);
    for (std::uint64_t t = 0; t < n; ++t)
        out.push_back(s.coeff.modulus().reduce(
            r.add(s.gen.rep(), r.mul(s.ann.rep(), r.enumerate(t)))));
    std::sort(out.begin(), out.end(),
              [](const Residue<R>& x, const Residue<R>& y) { return enum_less(x, y); });
    assert(std::adjacent_find(out.begin(), out.end()) == out.end());
    return out;
}

/**
 * True iff x is a solution that divides every solution. Non-solutions are
 * never generating. For solutions the associate criterion against the stored
 * generating solution decides; debug builds cross-check small solution sets
 * by direct enumeration.
 */
template <euclidean_domain R>
bool is_generating(const SolutionSet<R>& s, const Residue<R>& x) {
    detail::require_same_modulus(s.coeff, x);
    if (!(s.coeff * x == s.rhs)) return false;
    bool result = associates(x, s.gen);
#ifndef NDEBUG
    if (solution_count(s) <= 4096) {
        bool brute = true;
        for (const Residue<R>& y : enumerate_solutions(s))
            if (!divides(x, y)) brute = false;
        assert(brute == result);
    }
#endif
    return result;
}

/// All generating solutions, sorted in enumeration order; they are pairwise
/// associates and the list is never empty.
template <euclidean_domain R>
std::vector<Residue<R>> generating_solutions(const SolutionSet<R>& s,
                                             std::uint64_t bound = kEnumBound) {
    std::vector<Residue<R>> out;
    for (const Residue<R>& x : enumerate_solutions(s, bound))
        if (associates(x, s.gen)) out.push_back(x);
    assert(!out.empty());
    return out;
}

/**
 * The generating solution of a*x = b that is minimal in enumeration order.
 * Every generating solution has the form gen*e with e a unit, so the scan
 * runs over the units of R_m; this requires R_m itself to be enumerable
 * within the bound.
 */
template <euclidean_domain R>
Residue<R> min_generating(const Residue<R>& a, const Residue<R>& b,
                          std::uint64_t bound = kEnumBound) {
    SolutionSet<R> s = solve(a, b);
    auto card = a.modulus().card_upto(bound);
    if (!card) throw TooLarge("min_generating: quotient ring exceeds the bound");
    std::optional<Residue<R>> best;
    for (std::uint64_t k = 0; k < *card; ++k) {
        Residue<R> e = a.modulus().element(k);
        if (!is_unit(e)) continue;
        Residue<R> x = s.gen * e;
        if (!(a * x == b)) continue;
        if (!best || enum_less(x, *best)) best = x;
    }
    assert(best.has_value());
    return *best;
}

/**
 * A divisibility chain f_0 | f_1 | ... | f_{n-1} of nonzero residues
 * together with a consistent table of generating solutions: ratio(i, j)
 * generates the solutions of f_j * x = f_i, adjacent ratios are the minimal
 * generating solutions, and every longer ratio is the product of the
 * adjacent ones it spans. The product construction makes
 * ratio(i+1, i-1) = ratio(i, i-1) * ratio(i+1, i) hold exactly.
 */
template <euclidean_domain R>
class ChainSystem {
public:
    explicit ChainSystem(std::span<const Residue<R>> factors,
                         std::uint64_t bound = kEnumBound) {
        if (factors.size() < 2)
            throw InvalidChain("chain needs at least two entries");
        for (std::size_t i = 1; i < factors.size(); ++i)
            detail::require_same_modulus(factors[0], factors[i]);
        for (const Residue<R>& f : factors)
            if (f.is_zero()) throw InvalidChain("chain entries must be nonzero");
        for (std::size_t i = 0; i + 1 < factors.size(); ++i)
            if (!divides(factors[i], factors[i + 1]))
                throw InvalidChain("chain divisibility fails");
        factors_.assign(factors.begin(), factors.end());
        ratios_.reserve(factors_.size());
        ratios_.emplace_back();  // row 0 is empty
        for (std::size_t i = 1; i < factors_.size(); ++i) {
            std::vector<Residue<R>> row;
            row.reserve(i);
            Residue<R> adj = min_generating(factors_[i - 1], factors_[i], bound);
            for (std::size_t j = 0; j < i; ++j) {
                if (j == i - 1) {
                    row.push_back(adj);
                } else {
                    // ratio(i, j) = ratio(i, i-1) * ratio(i-1, j)
                    row.push_back(adj * ratios_[i - 1][j]);
                }
            }
            ratios_.push_back(std::move(row));
        }
        for (std::size_t i = 1; i < factors_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                assert(factors_[j] * ratio(i, j) == factors_[i]);
    }

    std::size_t size() const { return factors_.size(); }
    const Modulus<R>& modulus() const { return factors_.front().modulus(); }
    const std::vector<Residue<R>>& factors() const { return factors_; }

    /// Stored generating solution of factors()[j] * x = factors()[i], i > j.
    const Residue<R>& ratio(std::size_t i, std::size_t j) const {
        assert(j < i && i < factors_.size());
        return ratios_[i][j];
    }

    /// ratio extended by the empty product on the diagonal.
    Residue<R> ratio_or_one(std::size_t i, std::size_t j) const {
        if (i == j) return modulus().one();
        return ratio(i, j);
    }

private:
    std::vector<Residue<R>> factors_;
    std::vector<std::vector<Residue<R>>> ratios_;
};

template <euclidean_domain R>
ChainSystem<R> chain_system(std::span<const Residue<R>> factors,
                            std::uint64_t bound = kEnumBound) {
    return ChainSystem<R>(factors, bound);
}

/**
 * Checks the permutation product identity on a chain system: for a
 * permutation s of {0..n-1} the product of ratio(k, s(k)) over the
 * descending columns (k > s(k)) equals the product of ratio(s(k), k) over
 * the others. The analogous identity on raw 1-based indices is verified
 * with exact fraction arithmetic alongside.
 */
template <euclidean_domain R>
bool verify_perm_identity(const ChainSystem<R>& cs, std::span<const std::size_t> sigma) {
    const std::size_t n = cs.size();
    if (sigma.size() != n)
        throw PreconditionViolated("permutation size differs from chain length");
    std::vector<bool> seen(n, false);
    for (std::size_t v : sigma) {
        if (v >= n || seen[v])
            throw PreconditionViolated("not a permutation");
        seen[v] = true;
    }
    Residue<R> lhs = cs.modulus().one();
    Residue<R> rhs = cs.modulus().one();
    BigInt n1 = 1, d1 = 1, n2 = 1, d2 = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t img = sigma[k];
        if (k > img) {
            lhs = lhs * cs.ratio(k, img);
            n1 *= BigInt(k + 1);
            d1 *= BigInt(img + 1);
        } else {
            rhs = rhs * cs.ratio_or_one(img, k);
            n2 *= BigInt(img + 1);
            d2 *= BigInt(k + 1);
        }
    }
    bool index_identity = n1 * d2 == n2 * d1;
    return index_identity && lhs == rhs;
}

inline constexpr std::size_t kProbePairCap = 1000;

/**
 * Empirical report on gcds of solutions: the gcd of all solutions of a
 * solvable equation is always attained by a generating solution up to
 * associates, but the gcd of just two solutions may fail to solve the
 * equation. bad_pairs lists such pairs, capped.
 */
template <euclidean_domain R>
struct ProbeReport {
    typename R::Elem gcd_all;  ///< canonical gcd of all lifted solutions
    bool gcd_all_is_solution;
    struct BadPair {
        Residue<R> x;
        Residue<R> y;
        typename R::Elem g;
    };
    std::vector<BadPair> bad_pairs;
    bool truncated;
    std::size_t solution_count;
};

template <euclidean_domain R>
ProbeReport<R> gcd_solution_probe(const Residue<R>& a, const Residue<R>& b,
                                  std::size_t pair_cap = kProbePairCap,
                                  std::uint64_t bound = kEnumBound) {
    const R& r = a.ring();
    SolutionSet<R> s = solve(a, b);
    std::vector<Residue<R>> sols = enumerate_solutions(s, bound);
    typename R::Elem g = r.zero();
    for (const Residue<R>& x : sols) g = gcd(r, g, x.rep());
    ProbeReport<R> report{g, a * a.modulus().reduce(g) == b, {}, false, sols.size()};
    for (std::size_t i = 0; i < sols.size(); ++i) {
        for (std::size_t j = i + 1; j < sols.size(); ++j) {
            typename R::Elem gp = gcd(r, sols[i].rep(), sols[j].rep());
            if (a * a.modulus().reduce(gp) == b) continue;
            if (report.bad_pairs.size() >= pair_cap) {
                report.truncated = true;
                return report;
            }
            report.bad_pairs.push_back({sols[i], sols[j], gp});
        }
    }
    return report;
}

}  // namespace quotring
