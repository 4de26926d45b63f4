#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "quotring/linsolve.hpp"
#include "quotring/matrix.hpp"

namespace quotring {

/// The diagonal matrix carrying the chain's factors.
template <euclidean_domain R>
ResidueMatrix<R> diagonal_matrix(const ChainSystem<R>& cs) {
    ResidueMatrix<R> d(cs.modulus(), cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) d.set(i, i, cs.factors()[i]);
    return d;
}

namespace detail {

template <euclidean_domain R>
void require_compatible(const ResidueMatrix<R>& h, const ChainSystem<R>& cs) {
    if (h.size() != cs.size())
        throw DimensionMismatch("matrix size differs from chain length");
    if (!(h.modulus() == cs.modulus()))
        throw ModulusMismatch("matrix modulus differs from chain modulus");
}

}  // namespace detail

/**
 * Membership in the Zelisko group of diag(factors): H belongs iff it is
 * invertible and every entry below the diagonal is divisible in R_m by the
 * chain's ratio at that position. Equivalently, there is an invertible S
 * with H * Phi = Phi * S.
 */
template <euclidean_domain R>
bool zelisko_member(const ResidueMatrix<R>& h, const ChainSystem<R>& cs) {
    detail::require_compatible(h, cs);
    if (!is_invertible(h)) return false;
    for (std::size_t i = 1; i < h.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!divides(cs.ratio(i, j), h.at(i, j))) return false;
    return true;
}

namespace detail {

// Any element of the solution coset keeps the witness identity valid; the
// minimal one pins the output and maps the identity matrix to itself.
template <euclidean_domain R>
Residue<R> minimal_solution(const Residue<R>& a, const Residue<R>& b) {
    SolutionSet<R> s = solve(a, b);
    if (solution_count(s) > kEnumBound) return s.gen;
    return enumerate_solutions(s).front();
}

}  // namespace detail

/**
 * An invertible S with H * Phi = Phi * S for a member H. Below the diagonal
 * S carries the minimal solution of ratio(i, j) * t = H(i, j); above the
 * diagonal it carries ratio(j, i) * H(i, j); the diagonal is copied. The
 * identity and the invertibility of S are verified exactly before returning.
 */
template <euclidean_domain R>
ResidueMatrix<R> zelisko_witness(const ResidueMatrix<R>& h, const ChainSystem<R>& cs) {
    if (!zelisko_member(h, cs))
        throw NotAMember("witness requires a Zelisko group member");
    const std::size_t n = h.size();
    ResidueMatrix<R> s(h.modulus(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                s.set(i, j, h.at(i, j));
            } else if (i < j) {
                s.set(i, j, cs.ratio(j, i) * h.at(i, j));
            } else {
                s.set(i, j, detail::minimal_solution(cs.ratio(i, j), h.at(i, j)));
            }
        }
    }
    ResidueMatrix<R> phi = diagonal_matrix(cs);
    if (!(h * phi == phi * s) || !is_invertible(s))
        throw Error("zelisko_witness: internal verification failed");
    return s;
}

inline constexpr int kSampleRetries = 10'000;

/**
 * Deterministic random member: free entries are drawn uniformly from R_m,
 * entries below the diagonal are multiplied by the chain ratio, and drawing
 * repeats until the result is invertible.
 */
template <euclidean_domain R>
ResidueMatrix<R> zelisko_sample(const ChainSystem<R>& cs, std::uint64_t seed,
                                int max_tries = kSampleRetries) {
    auto card = cs.modulus().card_upto(kEnumBound);
    if (!card) throw TooLarge("zelisko_sample: quotient ring exceeds the bound");
    std::mt19937_64 rng(seed);
    const std::size_t n = cs.size();
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        ResidueMatrix<R> h(cs.modulus(), n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Residue<R> free = cs.modulus().element(rng() % *card);
                if (i > j) {
                    h.set(i, j, cs.ratio(i, j) * free);
                } else {
                    h.set(i, j, free);
                }
            }
        }
        if (is_invertible(h)) {
            assert(zelisko_member(h, cs));
            return h;
        }
    }
    throw SamplingExhausted("zelisko_sample: no invertible draw found");
}

inline constexpr std::uint64_t kBruteMatrixCap = 10'000'000;

/**
 * Definition-level membership oracle: solves factor_i * s = factor_j * H(i, j)
 * entrywise, then searches the finite product of solution cosets for an
 * invertible S. Intended for tiny moduli and n <= 3; the candidate count is
 * capped.
 */
template <euclidean_domain R>
bool zelisko_member_brute(const ResidueMatrix<R>& h, const ChainSystem<R>& cs,
                          std::uint64_t cap = kBruteMatrixCap) {
    detail::require_compatible(h, cs);
    if (!is_invertible(h)) return false;
    const std::size_t n = h.size();
    std::vector<std::vector<Residue<R>>> cosets;
    cosets.reserve(n * n);
    BigInt total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Residue<R>& fi = cs.factors()[i];
            Residue<R> rhs = cs.factors()[j] * h.at(i, j);
            if (!solvable(fi, rhs)) return false;
            cosets.push_back(enumerate_solutions(solve(fi, rhs)));
            total *= BigInt(cosets.back().size());
        }
    }
    if (total > cap)
        throw TooLarge("zelisko_member_brute: candidate space exceeds the cap");
    std::vector<std::size_t> idx(n * n, 0);
    while (true) {
        ResidueMatrix<R> s(h.modulus(), n);
        for (std::size_t k = 0; k < n * n; ++k)
            s.set(k / n, k % n, cosets[k][idx[k]]);
        if (is_invertible(s)) return true;
        std::size_t k = 0;
        while (k < n * n && ++idx[k] == cosets[k].size()) {
            idx[k] = 0;
            ++k;
        }
        if (k == n * n) return false;
    }
}

/**
 * Determinant identity behind the witness construction: weighting the
 * below-diagonal entries of a free matrix by ratio(i, j) and weighting the
 * above-diagonal entries by the mirrored ratio(j, i) yields matrices with
 * equal determinants. Always true for a consistently built chain system.
 */
template <euclidean_domain R>
bool mirrored_det_equal(const ChainSystem<R>& cs, const ResidueMatrix<R>& hfree) {
    detail::require_compatible(hfree, cs);
    const std::size_t n = hfree.size();
    ResidueMatrix<R> lower(hfree.modulus(), n);
    ResidueMatrix<R> upper(hfree.modulus(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) {
                lower.set(i, j, cs.ratio(i, j) * hfree.at(i, j));
                upper.set(i, j, hfree.at(i, j));
            } else if (i < j) {
                lower.set(i, j, hfree.at(i, j));
                upper.set(i, j, cs.ratio(j, i) * hfree.at(i, j));
            } else {
                lower.set(i, j, hfree.at(i, j));
                upper.set(i, j, hfree.at(i, j));
            }
        }
    }
    return det(lower) == det(upper);
}

/**
 * Membership form over the domain R itself (not a quotient): for a chain
 * phi_0 | phi_1 | ... of nonzero elements, H belongs iff det(H) is a unit of
 * R and the entry at (i, j) below the diagonal is divisible by the exact
 * ratio phi_i / phi_j.
 */
template <euclidean_domain R>
bool zelisko_member_domain(const DomainMatrix<R>& h,
                           std::span<const typename R::Elem> phi) {
    const R& r = h.ring();
    if (phi.size() != h.size())
        throw DimensionMismatch("chain length differs from matrix size");
    for (const auto& f : phi)
        if (f == r.zero()) throw InvalidChain("chain entries must be nonzero");
    std::vector<typename R::Elem> step;  // step[k] = phi_{k+1} / phi_k
    step.reserve(phi.size() - 1);
    for (std::size_t k = 0; k + 1 < phi.size(); ++k) {
        auto [q, rem] = r.divmod(phi[k + 1], phi[k]);
        if (!(rem == r.zero())) throw InvalidChain("chain divisibility fails");
        step.push_back(std::move(q));
    }
    if (!r.is_unit(det(h))) return false;
    for (std::size_t i = 1; i < h.size(); ++i) {
        typename R::Elem ratio = r.one();
        for (std::size_t j = i; j-- > 0;) {
            ratio = r.mul(ratio, step[j]);  // now phi_i / phi_j
            if (!(r.divmod(h.at(i, j), ratio).second == r.zero())) return false;
        }
    }
    return true;
}

}  // namespace quotring
