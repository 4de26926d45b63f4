#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "quotring/bigint.hpp"
#include "quotring/errors.hpp"

namespace quotring {

/// The rational integers with arbitrary-precision arithmetic. Canonical
/// associates are the nonnegative representatives; the units are 1 and -1.
struct IntegerRing {
    using Elem = BigInt;

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem neg(const Elem& a) const { return Elem(-a); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }

    /// Truncated division: a = q*b + r with |r| < |b| and r carrying the
    /// sign of a.
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b == 0) throw DivisionByZero("integer divmod: zero divisor");
        return {Elem(a / b), Elem(a % b)};
    }

    /// Representative of a + mZ in [0, |m|).
    Elem mod_rep(const Elem& a, const Elem& m) const {
        if (m == 0) throw DivisionByZero("integer mod_rep: zero modulus");
        Elem mm = boost::multiprecision::abs(m);
        Elem r = Elem(a % mm);
        if (r < 0) r += mm;
        return r;
    }

    std::pair<Elem, Elem> canonical(const Elem& a) const {
        if (a < 0) return {Elem(-a), Elem(-1)};
        return {a, Elem(1)};
    }

    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }

    Elem unit_inv(const Elem& u) const {
        if (!is_unit(u)) throw NotAUnit("integer unit_inv: not a unit");
        return u;  // 1 and -1 are self-inverse
    }

    Elem gcd(const Elem& a, const Elem& b) const {
        return boost::multiprecision::gcd(a, b);
    }

    /// 0, 1, -1, 2, -2, 3, -3, ...
    Elem enumerate(std::uint64_t k) const {
        if (k % 2 == 1) return Elem((k + 1) / 2);
        return Elem(-Elem(k / 2));
    }

    /// Total order matching enumerate: smaller magnitude first, and for equal
    /// magnitude the nonnegative element first.
    bool enum_less(const Elem& a, const Elem& b) const {
        Elem aa = boost::multiprecision::abs(a);
        Elem bb = boost::multiprecision::abs(b);
        if (aa != bb) return aa < bb;
        return !(a < 0) && b < 0;
    }

    BigInt quotient_card(const Elem& m) const {
        if (m == 0) throw DivisionByZero("integer quotient_card: zero modulus");
        return boost::multiprecision::abs(m);
    }

    std::string name() const { return "Z"; }
    std::string text(const Elem& a) const { return a.str(); }
};

}  // namespace quotring
