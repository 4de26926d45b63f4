#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "quotring/matrix.hpp"
#include "quotring/zelisko.hpp"

namespace quotring {

/**
 * Diagonalization P * A * Q = diag(factors) with invertible P, Q. The
 * factors are canonical (nonnegative / monic), form a divisibility chain,
 * and trailing entries are zero exactly when A is singular.
 */
template <euclidean_domain R>
struct SmithResult {
    DomainMatrix<R> left;                    ///< P
    DomainMatrix<R> right;                   ///< Q
    std::vector<typename R::Elem> factors;   ///< length n, zeros trailing
};

namespace detail {

// Unimodular 2x2 row transform on rows k and i of a (mirrored on p): pivot
// a(k,k) becomes gcd(a(k,k), a(i,k)) and a(i,k) becomes zero. Pure shears
// are applied when the pivot already divides the target.
template <euclidean_domain R>
void smith_row_step(const R& r, DomainMatrix<R>& a, DomainMatrix<R>& p,
                    std::size_t k, std::size_t i) {
    using E = typename R::Elem;
    E y = a.at(i, k);
    if (y == r.zero()) return;
    E x = a.at(k, k);
    if (!(x == r.zero())) {
        auto [q, rem] = r.divmod(y, x);
        if (rem == r.zero()) {
            for (std::size_t c = 0; c < a.size(); ++c) {
                a.set(i, c, r.sub(a.at(i, c), r.mul(q, a.at(k, c))));
                p.set(i, c, r.sub(p.at(i, c), r.mul(q, p.at(k, c))));
            }
            return;
        }
    }
    Egcd<R> e = egcd(r, x, y);
    E xd = exact_div(r, x, e.g);
    E yd = exact_div(r, y, e.g);
    for (std::size_t c = 0; c < a.size(); ++c) {
        E ak = a.at(k, c), ai = a.at(i, c);
        a.set(k, c, r.add(r.mul(e.u, ak), r.mul(e.v, ai)));
        a.set(i, c, r.sub(r.mul(xd, ai), r.mul(yd, ak)));
        E pk = p.at(k, c), pi = p.at(i, c);
        p.set(k, c, r.add(r.mul(e.u, pk), r.mul(e.v, pi)));
        p.set(i, c, r.sub(r.mul(xd, pi), r.mul(yd, pk)));
    }
}

// Column counterpart on columns k and j (mirrored on q).
template <euclidean_domain R>
void smith_col_step(const R& r, DomainMatrix<R>& a, DomainMatrix<R>& q,
                    std::size_t k, std::size_t j) {
    using E = typename R::Elem;
    E y = a.at(k, j);
    if (y == r.zero()) return;
    E x = a.at(k, k);
    if (!(x == r.zero())) {
        auto [quo, rem] = r.divmod(y, x);
        if (rem == r.zero()) {
            for (std::size_t rr = 0; rr < a.size(); ++rr) {
                a.set(rr, j, r.sub(a.at(rr, j), r.mul(quo, a.at(rr, k))));
                q.set(rr, j, r.sub(q.at(rr, j), r.mul(quo, q.at(rr, k))));
            }
            return;
        }
    }
    Egcd<R> e = egcd(r, x, y);
    E xd = exact_div(r, x, e.g);
    E yd = exact_div(r, y, e.g);
    for (std::size_t rr = 0; rr < a.size(); ++rr) {
        E ak = a.at(rr, k), aj = a.at(rr, j);
        a.set(rr, k, r.add(r.mul(e.u, ak), r.mul(e.v, aj)));
        a.set(rr, j, r.sub(r.mul(xd, aj), r.mul(yd, ak)));
        E qk = q.at(rr, k), qj = q.at(rr, j);
        q.set(rr, k, r.add(r.mul(e.u, qk), r.mul(e.v, qj)));
        q.set(rr, j, r.sub(r.mul(xd, qj), r.mul(yd, qk)));
    }
}

}  // namespace detail

/**
 * Smith normal form with transforming matrices, by elementary row and column
 * reduction with gcd-improving Bezout pivots. Square input only.
 */
template <euclidean_domain R>
SmithResult<R> smith(const DomainMatrix<R>& input) {
    const R& r = input.ring();
    const std::size_t n = input.size();
    DomainMatrix<R> a = input;
    DomainMatrix<R> p = DomainMatrix<R>::identity(r, n);
    DomainMatrix<R> q = DomainMatrix<R>::identity(r, n);

    auto swap_rows = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t c = 0; c < n; ++c) {
            auto t = a.at(x, c);
            a.set(x, c, a.at(y, c));
            a.set(y, c, t);
            auto s = p.at(x, c);
            p.set(x, c, p.at(y, c));
            p.set(y, c, s);
        }
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (std::size_t rr = 0; rr < n; ++rr) {
            auto t = a.at(rr, x);
            a.set(rr, x, a.at(rr, y));
            a.set(rr, y, t);
            auto s = q.at(rr, x);
            q.set(rr, x, q.at(rr, y));
            q.set(rr, y, s);
        }
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) == r.zero()) {
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = k; j < n && !found; ++j)
                    if (!(a.at(i, j) == r.zero())) {
                        swap_rows(k, i);
                        swap_cols(k, j);
                        found = true;
                    }
            if (!found) break;  // remaining block is zero
        }
        while (true) {
            for (std::size_t i = k + 1; i < n; ++i) detail::smith_row_step(r, a, p, k, i);
            for (std::size_t j = k + 1; j < n; ++j) detail::smith_col_step(r, a, q, k, j);
            bool clean = true;
            for (std::size_t i = k + 1; i < n && clean; ++i)
                if (!(a.at(i, k) == r.zero())) clean = false;
            for (std::size_t j = k + 1; j < n && clean; ++j)
                if (!(a.at(k, j) == r.zero())) clean = false;
            if (clean) break;
        }
    }

    std::size_t rank = 0;
    while (rank < n && !(a.at(rank, rank) == r.zero())) ++rank;

    // Enforce the divisibility chain on the nonzero diagonal.
    std::size_t k = 0;
    while (k + 1 < rank) {
        if (r.divmod(a.at(k + 1, k + 1), a.at(k, k)).second == r.zero()) {
            ++k;
            continue;
        }
        // pull the offending entry into row k, then re-reduce the 2x2 block
        for (std::size_t c = 0; c < n; ++c) {
            a.set(k, c, r.add(a.at(k, c), a.at(k + 1, c)));
            p.set(k, c, r.add(p.at(k, c), p.at(k + 1, c)));
        }
        detail::smith_col_step(r, a, q, k, k + 1);
        detail::smith_row_step(r, a, p, k, k + 1);
        if (k > 0) --k;
    }

    // Canonicalize the diagonal by unit row scalings.
    std::vector<typename R::Elem> factors;
    factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [assoc, unit] = r.canonical(a.at(i, i));
        if (!(unit == r.one())) {
            typename R::Elem w = r.unit_inv(unit);
            for (std::size_t c = 0; c < n; ++c) {
                a.set(i, c, r.mul(w, a.at(i, c)));
                p.set(i, c, r.mul(w, p.at(i, c)));
            }
        }
        factors.push_back(a.at(i, i));
    }

#ifndef NDEBUG
    {
        DomainMatrix<R> d(r, n);
        for (std::size_t i = 0; i < n; ++i) d.set(i, i, factors[i]);
        assert(p * input * q == d);
    }
#endif
    return SmithResult<R>{std::move(p), std::move(q), std::move(factors)};
}

/**
 * Right-associate test for nonsingular matrices: A = B * U for some
 * invertible U. Matrices with different Smith forms are never right
 * associates; with a common form diag(factors) the test reduces to a single
 * Zelisko-group coset check on the left transforming matrices.
 */
template <euclidean_domain R>
bool right_associate(const DomainMatrix<R>& a, const DomainMatrix<R>& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("right_associate: size mismatch");
    if (!(a.ring() == b.ring()))
        throw ModulusMismatch("right_associate: ring mismatch");
    const R& r = a.ring();
    if (det(a) == r.zero() || det(b) == r.zero())
        throw SingularInput("right_associate requires nonsingular inputs");
    SmithResult<R> sa = smith(a);
    SmithResult<R> sb = smith(b);
    if (!(sa.factors == sb.factors)) return false;
    DomainMatrix<R> h = sb.left * inverse_unimodular(sa.left);
    return zelisko_member_domain(h, std::span<const typename R::Elem>(sa.factors));
}

/**
 * Completes a relatively prime row (a_0, ..., a_{n-1}) with a_0 != 0 and
 * n >= 3 to an invertible matrix of the bordered shape
 *
 *   [ u_{n-1}  0 ... 0  u_0     ]
 *   [ 0        1 ... 0  u_1     ]
 *   [ ...              ...      ]
 *   [ 0        0 ... 1  u_{n-2} ]
 *   [ a_0      a_1 ...  a_{n-1} ]
 *
 * with determinant exactly 1. A single coprimality lift against a_0 turns
 * the middle entries into shear coefficients, and a signed Bezout pair for
 * the resulting d = a_{n-1} + sum r_i a_i closes the corner.
 */
template <euclidean_domain R>
DomainMatrix<R> complete_row(const R& r, std::span<const typename R::Elem> row) {
    using E = typename R::Elem;
    const std::size_t n = row.size();
    if (n < 3)
        throw PreconditionViolated("complete_row: need at least three entries");
    if (row[0] == r.zero())
        throw PreconditionViolated("complete_row: leading entry must be nonzero");
    if (!(gcd_all(r, row) == r.one()))
        throw PreconditionViolated("complete_row: entries must be relatively prime");

    // gcd of the middle block a_1..a_{n-2} with Bezout expansion
    E gmid = r.zero();
    std::vector<E> bez(n - 2, r.zero());
    for (std::size_t i = 0; i + 2 < n; ++i) {
        Egcd<R> e = egcd(r, gmid, row[i + 1]);
        for (std::size_t t = 0; t < i; ++t) bez[t] = r.mul(bez[t], e.u);
        bez[i] = e.v;
        gmid = e.g;
    }

    E lift = stable_lift(r, row[n - 1], gmid, row[0]);
    std::vector<E> shear(n - 2, r.zero());
    E d = row[n - 1];
    for (std::size_t i = 0; i + 2 < n; ++i) {
        shear[i] = r.mul(lift, bez[i]);
        d = r.add(d, r.mul(shear[i], row[i + 1]));
    }
    // x*d - y*a_0 = 1
    Egcd<R> e = egcd(r, d, row[0]);
    assert(e.g == r.one());
    E x = e.u;
    E y = r.neg(e.v);

    DomainMatrix<R> m(r, n);
    m.set(0, 0, x);
    m.set(0, n - 1, y);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        m.set(i, i, r.one());
        m.set(i, n - 1, r.neg(shear[i - 1]));
    }
    for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, row[j]);
    assert(det(m) == r.one());
    return m;
}

}  // namespace quotring
