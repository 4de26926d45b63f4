#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quotring/bigint.hpp"
#include "quotring/errors.hpp"

namespace quotring {

/// Dense univariate polynomial over a prime field. Coefficients are stored
/// ascending by degree in [0, p) with no trailing zeros; the zero polynomial
/// is the empty sequence, so representations are unique per element.
struct FpPoly {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

    bool is_zero() const { return coeffs.empty(); }

    /// Degree, with degree(0) = -1.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(coeffs.size()) - 1;
    }
};

/// The polynomial ring F_p[x] for a prime p < 2^31. Canonical associates are
/// monic; the units are the nonzero constants.
class FpPolyRing {
public:
    using Elem = FpPoly;

    explicit FpPolyRing(std::uint32_t p) : p_(p) {
        if (p >= (1u << 31) || !prime(p))
            throw InvalidRing("FpPolyRing: p must be a prime below 2^31");
    }

    friend bool operator==(const FpPolyRing&, const FpPolyRing&) = default;

    std::uint32_t characteristic() const { return p_; }

    Elem zero() const { return {}; }
    Elem one() const { return constant(1); }

    Elem constant(std::uint64_t c) const {
        Elem e;
        auto v = static_cast<std::uint32_t>(c % p_);
        if (v != 0) e.coeffs.push_back(v);
        return e;
    }

    /// Builds a polynomial from possibly out-of-range coefficients.
    Elem from_coeffs(std::span<const std::int64_t> cs) const {
        Elem e;
        e.coeffs.reserve(cs.size());
        for (std::int64_t c : cs) {
            std::int64_t v = c % static_cast<std::int64_t>(p_);
            if (v < 0) v += p_;
            e.coeffs.push_back(static_cast<std::uint32_t>(v));
        }
        trim(e);
        return e;
    }

    Elem from_coeffs(std::initializer_list<std::int64_t> cs) const {
        return from_coeffs(std::span<const std::int64_t>(cs.begin(), cs.size()));
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem e;
        std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        e.coeffs.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = coeff(a, i) + coeff(b, i);
            e.coeffs[i] = static_cast<std::uint32_t>(s % p_);
        }
        trim(e);
        return e;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem e;
        std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        e.coeffs.resize(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t s = coeff(a, i) + p_ - coeff(b, i);
            e.coeffs[i] = static_cast<std::uint32_t>(s % p_);
        }
        trim(e);
        return e;
    }

    Elem neg(const Elem& a) const { return sub(zero(), a); }

    Elem mul(const Elem& a, const Elem& b) const {
        if (a.is_zero() || b.is_zero()) return {};
        Elem e;
        e.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (a.coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
                std::uint64_t s = e.coeffs[i + j] +
                                  static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j];
                e.coeffs[i + j] = static_cast<std::uint32_t>(s % p_);
            }
        }
        trim(e);
        return e;
    }

    /// Long division: a = q*b + r with deg r < deg b.
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b.is_zero()) throw DivisionByZero("polynomial divmod: zero divisor");
        if (a.degree() < b.degree()) return {zero(), a};
        std::vector<std::uint32_t> rem = a.coeffs;
        const std::size_t db = b.coeffs.size() - 1;
        const std::uint64_t lead_inv = finv(b.coeffs.back());
        std::vector<std::uint32_t> quo(a.coeffs.size() - db, 0);
        for (std::size_t sh = quo.size(); sh-- > 0;) {
            std::uint64_t c = rem[sh + db];
            if (c == 0) continue;
            std::uint64_t f = (c * lead_inv) % p_;
            quo[sh] = static_cast<std::uint32_t>(f);
            for (std::size_t t = 0; t <= db; ++t) {
                std::uint64_t s = rem[sh + t] + static_cast<std::uint64_t>(p_) -
                                  (f * b.coeffs[t]) % p_;
                rem[sh + t] = static_cast<std::uint32_t>(s % p_);
            }
        }
        rem.resize(db);
        Elem q{std::move(quo)};
        Elem r{std::move(rem)};
        trim(q);
        trim(r);
        return {std::move(q), std::move(r)};
    }

    Elem mod_rep(const Elem& a, const Elem& m) const { return divmod(a, m).second; }

    std::pair<Elem, Elem> canonical(const Elem& a) const {
        if (a.is_zero()) return {zero(), one()};
        std::uint32_t lc = a.coeffs.back();
        if (lc == 1) return {a, one()};
        return {scale(a, finv(lc)), constant(lc)};
    }

    bool is_unit(const Elem& a) const { return a.degree() == 0; }

    Elem unit_inv(const Elem& u) const {
        if (!is_unit(u)) throw NotAUnit("polynomial unit_inv: not a unit");
        return constant(finv(u.coeffs[0]));
    }

    Elem gcd(const Elem& a, const Elem& b) const {
        Elem x = a, y = b;
        while (!y.is_zero()) {
            Elem r = divmod(x, y).second;
            x = std::move(y);
            y = std::move(r);
        }
        return canonical(x).first;
    }

    /// Enumeration by degree, then by the coefficient tuple read from the
    /// highest degree down with digits 0 < 1 < ... < p-1. For F_2 this is
    /// 0, 1, x, x+1, x^2, x^2+1, x^2+x, ...
    Elem enumerate(std::uint64_t k) const {
        if (k == 0) return {};
        std::uint64_t base = 1;  // p^d
        std::size_t d = 0;
        while (base <= (k / p_)) {
            base *= p_;
            ++d;
        }
        std::uint64_t t = k - base;
        Elem e;
        e.coeffs.assign(d + 1, 0);
        e.coeffs[d] = static_cast<std::uint32_t>(1 + t / base);
        std::uint64_t rest = t % base;
        for (std::size_t i = 0; i < d; ++i) {
            e.coeffs[i] = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
        }
        return e;
    }

    bool enum_less(const Elem& a, const Elem& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.coeffs.size(); i-- > 0;) {
            if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
        }
        return false;
    }

    BigInt quotient_card(const Elem& m) const {
        if (m.is_zero())
            throw DivisionByZero("polynomial quotient_card: zero modulus");
        return boost::multiprecision::pow(BigInt(p_),
                                          static_cast<unsigned>(m.degree()));
    }

    std::string name() const { return "F_" + std::to_string(p_) + "[x]"; }

    /// Ascending coefficient list, e.g. "[1,0,2]"; the zero polynomial is "[]".
    std::string text(const Elem& a) const {
        std::string out = "[";
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(a.coeffs[i]);
        }
        out += ']';
        return out;
    }

private:
    std::uint32_t p_;

    static void trim(Elem& e) {
        while (!e.coeffs.empty() && e.coeffs.back() == 0) e.coeffs.pop_back();
    }

    static std::uint64_t coeff(const Elem& e, std::size_t i) {
        return i < e.coeffs.size() ? e.coeffs[i] : 0;
    }

    Elem scale(const Elem& a, std::uint64_t s) const {
        Elem e;
        e.coeffs.reserve(a.coeffs.size());
        for (std::uint32_t c : a.coeffs)
            e.coeffs.push_back(static_cast<std::uint32_t>((c * s) % p_));
        trim(e);
        return e;
    }

    std::uint32_t finv(std::uint32_t a) const {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = p_, nr = a % p_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (r != 1) throw NotAUnit("FpPolyRing: coefficient not invertible");
        if (t < 0) t += p_;
        return static_cast<std::uint32_t>(t);
    }

    static bool prime(std::uint32_t p) {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t i = 3; i * i <= p; i += 2)
            if (p % i == 0) return false;
        return true;
    }
};

}  // namespace quotring
