#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "quotring/residue.hpp"

namespace quotring {

namespace detail {

// Samuelson-Berkowitz determinant: division-free, valid over any commutative
// ring. Works on a flat row-major array through a small ops adapter.
template <class Ops>
typename Ops::Elem det_berkowitz(const Ops& op,
                                 const std::vector<typename Ops::Elem>& a,
                                 std::size_t n) {
    using E = typename Ops::Elem;
    assert(n >= 1 && a.size() == n * n);
    auto at = [&](std::size_t i, std::size_t j) -> const E& { return a[i * n + j]; };
    // c holds the characteristic polynomial coefficients of the leading
    // r x r block, highest power first.
    std::vector<E> c{op.one(), op.neg(at(0, 0))};
    for (std::size_t r = 2; r <= n; ++r) {
        std::vector<E> v;
        v.reserve(r + 1);
        v.push_back(op.one());
        v.push_back(op.neg(at(r - 1, r - 1)));
        std::vector<E> w;
        w.reserve(r - 1);
        for (std::size_t i = 0; i + 1 < r; ++i) w.push_back(at(i, r - 1));
        for (std::size_t k = 2; k <= r; ++k) {
            E dot = op.zero();
            for (std::size_t i = 0; i + 1 < r; ++i)
                dot = op.add(dot, op.mul(at(r - 1, i), w[i]));
            v.push_back(op.neg(dot));
            if (k == r) break;
            std::vector<E> w2;
            w2.reserve(r - 1);
            for (std::size_t i = 0; i + 1 < r; ++i) {
                E s = op.zero();
                for (std::size_t j = 0; j + 1 < r; ++j)
                    s = op.add(s, op.mul(at(i, j), w[j]));
                w2.push_back(std::move(s));
            }
            w = std::move(w2);
        }
        std::vector<E> cn(r + 1, op.zero());
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < c.size() && j <= i; ++j)
                if (i - j < v.size()) cn[i] = op.add(cn[i], op.mul(c[j], v[i - j]));
        c = std::move(cn);
    }
    // char poly constant term is (-1)^n det
    return n % 2 == 0 ? c[n] : op.neg(c[n]);
}

template <class Ops>
std::vector<typename Ops::Elem> matmul_flat(const Ops& op,
                                            const std::vector<typename Ops::Elem>& a,
                                            const std::vector<typename Ops::Elem>& b,
                                            std::size_t n) {
    using E = typename Ops::Elem;
    std::vector<E> out(n * n, op.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[i * n + j] =
                    op.add(out[i * n + j], op.mul(a[i * n + k], b[k * n + j]));
    return out;
}

// Adjugate via cofactor minors; adj(A) * A = det(A) * I.
template <class Ops>
std::vector<typename Ops::Elem> adjugate_flat(const Ops& op,
                                              const std::vector<typename Ops::Elem>& a,
                                              std::size_t n) {
    using E = typename Ops::Elem;
    std::vector<E> adj(n * n, op.zero());
    if (n == 1) {
        adj[0] = op.one();
        return adj;
    }
    std::vector<E> minor((n - 1) * (n - 1), op.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t col = 0; col < n; ++col) {
                    if (col == j) continue;
                    minor[mi++] = a[r * n + col];
                }
            }
            E cof = det_berkowitz(op, minor, n - 1);
            if ((i + j) % 2 == 1) cof = op.neg(cof);
            adj[j * n + i] = std::move(cof);  // transposed cofactor
        }
    }
    return adj;
}

template <euclidean_domain R>
struct DomainOps {
    using Elem = typename R::Elem;
    const R* r;
    Elem zero() const { return r->zero(); }
    Elem one() const { return r->one(); }
    Elem add(const Elem& a, const Elem& b) const { return r->add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return r->mul(a, b); }
    Elem neg(const Elem& a) const { return r->neg(a); }
};

// Arithmetic on canonical representatives, reduced after every operation.
template <euclidean_domain R>
struct ModOps {
    using Elem = typename R::Elem;
    const Modulus<R>* m;
    Elem zero() const { return m->ring().zero(); }
    Elem one() const { return m->ring().one(); }
    Elem add(const Elem& a, const Elem& b) const {
        return m->rep_of(m->ring().add(a, b));
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return m->rep_of(m->ring().mul(a, b));
    }
    Elem neg(const Elem& a) const { return m->rep_of(m->ring().neg(a)); }
};

}  // namespace detail

/// Dense square matrix over the coefficient ring, n >= 2.
template <euclidean_domain R>
class DomainMatrix {
public:
    using Elem = typename R::Elem;

    DomainMatrix(R ring, std::size_t n)
        : ring_(std::move(ring)), n_(n), e_(n * n, ring_.zero()) {
        if (n < 2) throw DimensionMismatch("matrix dimension must be at least 2");
    }

    static DomainMatrix identity(R ring, std::size_t n) {
        DomainMatrix m(std::move(ring), n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.ring_.one());
        return m;
    }

    static DomainMatrix from_rows(R ring, const std::vector<std::vector<Elem>>& rows) {
        DomainMatrix m(std::move(ring), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw DimensionMismatch("matrix rows must form a square");
            for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t size() const { return n_; }

    const Elem& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Elem& v) { e_[i * n_ + j] = v; }

    const std::vector<Elem>& flat() const { return e_; }

    friend bool operator==(const DomainMatrix& a, const DomainMatrix& b) {
        return a.ring_ == b.ring_ && a.n_ == b.n_ && a.e_ == b.e_;
    }

    friend DomainMatrix operator*(const DomainMatrix& a, const DomainMatrix& b) {
        if (!(a.ring_ == b.ring_))
            throw ModulusMismatch("matrix product across different rings");
        if (a.n_ != b.n_) throw DimensionMismatch("matrix product size mismatch");
        DomainMatrix out(a.ring_, a.n_);
        out.e_ = detail::matmul_flat(detail::DomainOps<R>{&a.ring_}, a.e_, b.e_, a.n_);
        return out;
    }

private:
    R ring_;
    std::size_t n_;
    std::vector<Elem> e_;
};

template <euclidean_domain R>
typename R::Elem det(const DomainMatrix<R>& m) {
    return detail::det_berkowitz(detail::DomainOps<R>{&m.ring()}, m.flat(), m.size());
}

/// True iff det is a unit of the ring, i.e. the matrix lies in GL_n(R).
template <euclidean_domain R>
bool is_unimodular(const DomainMatrix<R>& m) {
    return m.ring().is_unit(det(m));
}

/// Exact inverse of a matrix with unit determinant.
template <euclidean_domain R>
DomainMatrix<R> inverse_unimodular(const DomainMatrix<R>& m) {
    const R& r = m.ring();
    typename R::Elem d = det(m);
    if (!r.is_unit(d)) throw SingularInput("inverse requires a unit determinant");
    typename R::Elem dinv = r.unit_inv(d);
    auto adj = detail::adjugate_flat(detail::DomainOps<R>{&r}, m.flat(), m.size());
    DomainMatrix<R> out(r, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.set(i, j, r.mul(adj[i * m.size() + j], dinv));
    return out;
}

/// Dense square matrix over R_m with one shared modulus, n >= 2. Entries are
/// stored as canonical representatives.
template <euclidean_domain R>
class ResidueMatrix {
public:
    using Elem = typename R::Elem;

    ResidueMatrix(const Modulus<R>& mod, std::size_t n)
        : mod_(mod), n_(n), e_(n * n, mod.ring().zero()) {
        if (n < 2) throw DimensionMismatch("matrix dimension must be at least 2");
    }

    static ResidueMatrix identity(const Modulus<R>& mod, std::size_t n) {
        ResidueMatrix m(mod, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, mod.ring().one());
        return m;
    }

    static ResidueMatrix from_rows(const Modulus<R>& mod,
                                   const std::vector<std::vector<Elem>>& rows) {
        ResidueMatrix m(mod, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size())
                throw DimensionMismatch("matrix rows must form a square");
            for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static ResidueMatrix reduce(const DomainMatrix<R>& m, const Modulus<R>& mod) {
        ResidueMatrix out(mod, m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out.set(i, j, m.at(i, j));
        return out;
    }

    const Modulus<R>& modulus() const { return mod_; }
    std::size_t size() const { return n_; }

    Residue<R> at(std::size_t i, std::size_t j) const {
        return mod_.reduce(e_[i * n_ + j]);
    }
    const Elem& rep_at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, const Elem& v) {
        e_[i * n_ + j] = mod_.rep_of(v);
    }
    void set(std::size_t i, std::size_t j, const Residue<R>& v) {
        if (!(v.modulus() == mod_))
            throw ModulusMismatch("entry modulus differs from matrix modulus");
        e_[i * n_ + j] = v.rep();
    }

    const std::vector<Elem>& flat() const { return e_; }

    friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
        return a.mod_ == b.mod_ && a.n_ == b.n_ && a.e_ == b.e_;
    }

    friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
        if (!(a.mod_ == b.mod_))
            throw ModulusMismatch("matrix product across different moduli");
        if (a.n_ != b.n_) throw DimensionMismatch("matrix product size mismatch");
        ResidueMatrix out(a.mod_, a.n_);
        out.e_ = detail::matmul_flat(detail::ModOps<R>{&a.mod_}, a.e_, b.e_, a.n_);
        return out;
    }

private:
    Modulus<R> mod_;
    std::size_t n_;
    std::vector<Elem> e_;
};

template <euclidean_domain R>
Residue<R> det(const ResidueMatrix<R>& m) {
    return m.modulus().reduce(detail::det_berkowitz(
        detail::ModOps<R>{&m.modulus()}, m.flat(), m.size()));
}

/// True iff det is a unit of R_m, i.e. the matrix lies in GL_n(R_m).
template <euclidean_domain R>
bool is_invertible(const ResidueMatrix<R>& m) {
    return is_unit(det(m));
}

/// Inverse over R_m via adjugate times det^-1; total whenever the
/// determinant is a unit, no pivoting involved.
template <euclidean_domain R>
ResidueMatrix<R> inverse(const ResidueMatrix<R>& m) {
    Residue<R> d = det(m);
    Residue<R> dinv = invert(d);  // throws NotAUnit when not invertible
    auto adj = detail::adjugate_flat(detail::ModOps<R>{&m.modulus()}, m.flat(), m.size());
    ResidueMatrix<R> out(m.modulus(), m.size());
    const R& r = m.modulus().ring();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.set(i, j, r.mul(adj[i * m.size() + j], dinv.rep()));
    assert(m * out == ResidueMatrix<R>::identity(m.modulus(), m.size()));
    return out;
}

}  // namespace quotring
