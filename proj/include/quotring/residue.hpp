#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <utility>

#include "quotring/ring.hpp"

namespace quotring {

template <euclidean_domain R>
class Residue;

inline constexpr std::uint64_t kEnumBound = 1'000'000;

/**
 * The data defining a quotient ring R_m = R/mR: the coefficient ring and the
 * generator m of the ideal. m is stored as its canonical associate and must
 * be neither zero nor a unit, so R_m is a proper nontrivial quotient.
 */
template <euclidean_domain R>
class Modulus {
public:
    using Elem = typename R::Elem;

    Modulus(R ring, const Elem& m) : ring_(std::move(ring)), m_(ring_.zero()) {
        auto [assoc, unit] = ring_.canonical(m);
        (void)unit;
        if (assoc == ring_.zero()) throw InvalidModulus("modulus is zero");
        if (ring_.is_unit(assoc)) throw InvalidModulus("modulus is a unit");
        m_ = std::move(assoc);
    }

    const R& ring() const { return ring_; }
    const Elem& value() const { return m_; }

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.ring_ == b.ring_ && a.m_ == b.m_;
    }

    /// Number of elements of R_m.
    BigInt card() const { return ring_.quotient_card(m_); }

    /// card() when it does not exceed cap, nullopt otherwise.
    std::optional<std::uint64_t> card_upto(std::uint64_t cap) const {
        BigInt c = card();
        if (c > cap) return std::nullopt;
        return c.template convert_to<std::uint64_t>();
    }

    /// Canonical representative of a + mR.
    Elem rep_of(const Elem& a) const { return ring_.mod_rep(a, m_); }

    Residue<R> reduce(const Elem& a) const;
    Residue<R> zero() const;
    Residue<R> one() const;

    /// k-th element of R_m in enumeration order; the first card() indices
    /// yield every element exactly once.
    Residue<R> element(std::uint64_t k) const;

private:
    R ring_;
    Elem m_;
};

/**
 * Canonical residue a + mR, carrying its modulus. Arithmetic is defined
 * between residues of one modulus only; mixing moduli throws
 * ModulusMismatch. Values are immutable after construction.
 */
template <euclidean_domain R>
class Residue {
public:
    using Elem = typename R::Elem;

    Residue(const Modulus<R>& mod, const Elem& value)
        : mod_(mod), rep_(mod.rep_of(value)) {}

    const Elem& rep() const { return rep_; }
    const Modulus<R>& modulus() const { return mod_; }
    const R& ring() const { return mod_.ring(); }

    bool is_zero() const { return rep_ == ring().zero(); }

    /// Equal iff the moduli agree and the canonical representatives match.
    friend bool operator==(const Residue& x, const Residue& y) {
        return x.mod_ == y.mod_ && x.rep_ == y.rep_;
    }

    friend Residue operator+(const Residue& x, const Residue& y) {
        x.require_same(y);
        return Residue(x.mod_, x.ring().add(x.rep_, y.rep_));
    }

    friend Residue operator-(const Residue& x, const Residue& y) {
        x.require_same(y);
        return Residue(x.mod_, x.ring().sub(x.rep_, y.rep_));
    }

    friend Residue operator*(const Residue& x, const Residue& y) {
        x.require_same(y);
        return Residue(x.mod_, x.ring().mul(x.rep_, y.rep_));
    }

    Residue operator-() const { return Residue(mod_, ring().neg(rep_)); }

private:
    void require_same(const Residue& y) const {
        if (!(mod_ == y.mod_))
            throw ModulusMismatch("residue arithmetic across different moduli");
    }

    Modulus<R> mod_;
    Elem rep_;
};

template <euclidean_domain R>
Residue<R> Modulus<R>::reduce(const Elem& a) const {
    return Residue<R>(*this, a);
}

template <euclidean_domain R>
Residue<R> Modulus<R>::zero() const {
    return reduce(ring_.zero());
}

template <euclidean_domain R>
Residue<R> Modulus<R>::one() const {
    return reduce(ring_.one());
}

template <euclidean_domain R>
Residue<R> Modulus<R>::element(std::uint64_t k) const {
    return reduce(ring_.enumerate(k));
}

namespace detail {

template <euclidean_domain R>
void require_same_modulus(const Residue<R>& x, const Residue<R>& y) {
    if (!(x.modulus() == y.modulus()))
        throw ModulusMismatch("operands live in different quotient rings");
}

}  // namespace detail

/// Enumeration order on residues, induced by the order on canonical
/// representatives.
template <euclidean_domain R>
bool enum_less(const Residue<R>& x, const Residue<R>& y) {
    return x.ring().enum_less(x.rep(), y.rep());
}

/**
 * The canonical gcd of a representative of x with the modulus. It does not
 * depend on the chosen representative, and two residues are associates in
 * R_m exactly when these values coincide.
 */
template <euclidean_domain R>
typename R::Elem gcd_with_modulus(const Residue<R>& x) {
    return gcd(x.ring(), x.rep(), x.modulus().value());
}

/// True iff a representative of x is coprime to the modulus.
template <euclidean_domain R>
bool is_unit(const Residue<R>& x) {
    return gcd_with_modulus(x) == x.ring().one();
}

/// Multiplicative inverse in R_m; throws NotAUnit if none exists.
template <euclidean_domain R>
Residue<R> invert(const Residue<R>& x) {
    Egcd<R> e = egcd(x.ring(), x.rep(), x.modulus().value());
    if (!(e.g == x.ring().one()))
        throw NotAUnit("invert: residue is not a unit");
    return x.modulus().reduce(e.u);
}

/**
 * Unit factor of the decomposition x = reduce(gcd_with_modulus(x)) * e with
 * e a unit of R_m. The decomposition is not unique; this routine pins one
 * value deterministically: factor a = g*a1, m = g*m1, take the Bezout
 * relation a1*u + m1*v = 1, shift u by the first stable lift r0 so that
 * u + r0*m1 is coprime to m, and return the inverse of its residue. For
 * x = 0 the decomposition degenerates and e = 1 by convention.
 */
template <euclidean_domain R>
Residue<R> unit_part(const Residue<R>& x) {
    const R& r = x.ring();
    if (x.is_zero()) return x.modulus().one();
    const typename R::Elem& m = x.modulus().value();
    typename R::Elem g = gcd_with_modulus(x);
    typename R::Elem a1 = exact_div(r, x.rep(), g);
    typename R::Elem m1 = exact_div(r, m, g);
    Egcd<R> e = egcd(r, a1, m1);
    assert(e.g == r.one());
    typename R::Elem r0 = stable_lift(r, e.u, m1, m);
    return invert(x.modulus().reduce(r.add(e.u, r.mul(r0, m1))));
}

/// Divisibility in R_m: true iff y = x*t has a solution t.
template <euclidean_domain R>
bool divides(const Residue<R>& x, const Residue<R>& y) {
    detail::require_same_modulus(x, y);
    const R& r = x.ring();
    return r.divmod(y.rep(), gcd_with_modulus(x)).second == r.zero();
}

/// Associate test: x and y differ by a unit factor of R_m iff their
/// representatives have the same canonical gcd with the modulus.
template <euclidean_domain R>
bool associates(const Residue<R>& x, const Residue<R>& y) {
    detail::require_same_modulus(x, y);
    return gcd_with_modulus(x) == gcd_with_modulus(y);
}

/// Generator of the annihilator ideal {s in R_m : x*s = 0}, namely the
/// residue of m / gcd_with_modulus(x).
template <euclidean_domain R>
Residue<R> annihilator(const Residue<R>& x) {
    const R& r = x.ring();
    const typename R::Elem& m = x.modulus().value();
    return x.modulus().reduce(exact_div(r, m, gcd_with_modulus(x)));
}

/**
 * A unit e with y = x*e, when x and y are associates; nullopt otherwise.
 * Among all valid witnesses the minimal one in enumeration order is
 * returned whenever the witness coset is small enough to rank (it always is
 * at desk scale); beyond the bound an unranked valid witness is returned.
 */
template <euclidean_domain R>
std::optional<Residue<R>> associate_witness(const Residue<R>& x, const Residue<R>& y) {
    detail::require_same_modulus(x, y);
    if (!associates(x, y)) return std::nullopt;
    const R& r = x.ring();
    Residue<R> e0 = unit_part(y) * invert(unit_part(x));
    assert(x * e0 == y);
    // All witnesses form e0 + Ann(x); rank the coset when it is enumerable.
    typename R::Elem g = gcd_with_modulus(x);
    BigInt coset = r.quotient_card(g);
    if (coset > kEnumBound) return e0;
    auto n = coset.template convert_to<std::uint64_t>();
    Residue<R> alpha = annihilator(x);
    std::optional<Residue<R>> best;
    for (std::uint64_t t = 0; t < n; ++t) {
        Residue<R> cand =
            x.modulus().reduce(r.add(e0.rep(), r.mul(alpha.rep(), r.enumerate(t))));
        if (!is_unit(cand)) continue;
        if (!best || enum_less(cand, *best)) best = cand;
    }
    return best;
}

}  // namespace quotring
