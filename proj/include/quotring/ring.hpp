#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "quotring/bigint.hpp"
#include "quotring/errors.hpp"

namespace quotring {

/**
 * An effective commutative domain with Euclidean division, canonical
 * associates and a total enumeration of its elements.
 *
 * Both instantiations shipped here (IntegerRing, FpPolyRing) are Euclidean,
 * which supplies exact gcds with Bezout coefficients and makes the
 * coprimality lift below terminate. Canonical associates (nonnegative
 * integers, monic polynomials) pin every gcd-valued quantity to a unique
 * representative.
 */
template <typename R>
concept euclidean_domain =
    std::copyable<R> && std::equality_comparable<R> &&
    requires(const R& r, const typename R::Elem& a, const typename R::Elem& b,
             std::uint64_t k) {
        requires std::regular<typename R::Elem>;
        { r.zero() } -> std::same_as<typename R::Elem>;
        { r.one() } -> std::same_as<typename R::Elem>;
        { r.add(a, b) } -> std::same_as<typename R::Elem>;
        { r.sub(a, b) } -> std::same_as<typename R::Elem>;
        { r.neg(a) } -> std::same_as<typename R::Elem>;
        { r.mul(a, b) } -> std::same_as<typename R::Elem>;
        { r.divmod(a, b) } -> std::same_as<std::pair<typename R::Elem, typename R::Elem>>;
        { r.mod_rep(a, b) } -> std::same_as<typename R::Elem>;
        { r.canonical(a) } -> std::same_as<std::pair<typename R::Elem, typename R::Elem>>;
        { r.is_unit(a) } -> std::same_as<bool>;
        { r.unit_inv(a) } -> std::same_as<typename R::Elem>;
        { r.enumerate(k) } -> std::same_as<typename R::Elem>;
        { r.enum_less(a, b) } -> std::same_as<bool>;
        { r.quotient_card(a) } -> std::same_as<BigInt>;
        { r.name() } -> std::same_as<std::string>;
        { r.text(a) } -> std::same_as<std::string>;
    };

template <euclidean_domain R>
struct Egcd {
    typename R::Elem g;  ///< canonical-associate gcd
    typename R::Elem u;
    typename R::Elem v;  ///< g = a*u + b*v
};

/// Extended Euclidean algorithm. egcd(0, 0) = (0, 0, 0).
template <euclidean_domain R>
Egcd<R> egcd(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    using E = typename R::Elem;
    const E zero = r.zero();
    if (a == zero && b == zero) return {zero, zero, zero};
    E r0 = a, r1 = b;
    E s0 = r.one(), s1 = zero;
    E t0 = zero, t1 = r.one();
    while (!(r1 == zero)) {
        auto [q, rem] = r.divmod(r0, r1);
        r0 = std::exchange(r1, std::move(rem));
        E s2 = r.sub(s0, r.mul(q, s1));
        s0 = std::exchange(s1, std::move(s2));
        E t2 = r.sub(t0, r.mul(q, t1));
        t0 = std::exchange(t1, std::move(t2));
    }
    auto [g, unit] = r.canonical(r0);
    if (!(unit == r.one())) {
        E w = r.unit_inv(unit);
        s0 = r.mul(s0, w);
        t0 = r.mul(t0, w);
    }
    return {std::move(g), std::move(s0), std::move(t0)};
}

template <euclidean_domain R>
typename R::Elem gcd(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    if constexpr (requires { { r.gcd(a, b) } -> std::same_as<typename R::Elem>; }) {
        return r.gcd(a, b);
    } else {
        return egcd(r, a, b).g;
    }
}

template <euclidean_domain R>
typename R::Elem gcd_all(const R& r, std::span<const typename R::Elem> xs) {
    typename R::Elem g = r.zero();
    for (const auto& x : xs) g = gcd(r, g, x);
    return g;
}

/// Exact quotient a/b; throws NotDivisible unless b | a.
template <euclidean_domain R>
typename R::Elem exact_div(const R& r, const typename R::Elem& a,
                           const typename R::Elem& b) {
    auto [q, rem] = r.divmod(a, b);
    if (!(rem == r.zero()))
        throw NotDivisible("exact_div: division leaves a remainder");
    return q;
}

inline constexpr std::uint64_t kStableLiftBound = 1'000'000;

/**
 * The first r in enumeration order with gcd(a + b*r, c) = 1.
 *
 * Requires gcd(a, b, c) = 1 and c != 0. Under those hypotheses such an r
 * exists for every ring modelled here, so the candidate bound is a
 * diagnostic safety net, not a tunable.
 */
template <euclidean_domain R>
typename R::Elem stable_lift(const R& r, const typename R::Elem& a,
                             const typename R::Elem& b, const typename R::Elem& c,
                             std::uint64_t bound = kStableLiftBound) {
    if (c == r.zero())
        throw PreconditionViolated("stable_lift: c must be nonzero");
    if (!(gcd(r, gcd(r, a, b), c) == r.one()))
        throw PreconditionViolated("stable_lift: gcd(a, b, c) must be 1");
    for (std::uint64_t k = 0; k <= bound; ++k) {
        typename R::Elem cand = r.enumerate(k);
        if (gcd(r, r.add(a, r.mul(b, cand)), c) == r.one()) return cand;
    }
    throw SearchExhausted("stable_lift: no admissible r within the search bound");
}

}  // namespace quotring
