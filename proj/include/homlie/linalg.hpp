#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homlie/matrix.hpp"

namespace homlie {

// Reduced row echelon form, in place on a copy.  Returns the rref matrix and
// the pivot column of each nonzero row.
template <ExactField K>
std::pair<Matrix<K>, std::vector<std::size_t>> rref(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        K inv = K::one(m.desc()) / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
    return rref(m).second.size();
}

// One particular solution of A x = b, with all free variables set to zero.
// The choice is deterministic so downstream section constructions are
// reproducible bit for bit.
template <ExactField K>
std::optional<Vec<K>> solve_linear(const Matrix<K>& a, const Vec<K>& b) {
    if (b.size() != a.rows()) throw ShapeError("solve_linear rhs length mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1, a.desc());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [red, pivots] = rref(std::move(aug));
    for (std::size_t p : pivots)
        if (p == a.cols()) return std::nullopt;
    Vec<K> x = vec_zero<K>(a.cols(), a.desc());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = red.at(r, a.cols());
    return x;
}

// Row-space subspace of K^n with canonical reduced-echelon basis; equality of
// subspaces is matrix equality of the stored bases.
template <ExactField K>
class Subspace {
public:
    using Desc = typename K::Desc;

    static Subspace zero(std::size_t ambient, Desc desc) {
        return Subspace(Matrix<K>(0, ambient, desc));
    }
    static Subspace full(std::size_t ambient, Desc desc) {
        return Subspace(Matrix<K>::identity(ambient, desc));
    }
    static Subspace span_of_rows(const Matrix<K>& rows) {
        auto [red, pivots] = rref(rows);
        Matrix<K> basis(pivots.size(), rows.cols(), rows.desc());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) basis.at(i, j) = red.at(i, j);
        return Subspace(std::move(basis));
    }

    Subspace() = default;
    static Subspace span(const std::vector<Vec<K>>& gens, std::size_t ambient, Desc desc) {
        return span_of_rows(Matrix<K>::from_rows(gens, ambient, desc));
    }

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    Desc desc() const { return basis_.desc(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }

    // Coordinates of v in the echelon basis, if v lies in the subspace.
    std::optional<Vec<K>> coords(const Vec<K>& v) const {
        if (v.size() != ambient()) throw DimensionMismatch("coords: ambient mismatch");
        Vec<K> rest = v;
        Vec<K> cs = vec_zero<K>(dim(), desc());
        for (std::size_t i = 0; i < dim(); ++i) {
            K c = rest[pivots_[i]];
            if (c.is_zero()) continue;
            cs[i] = c;
            vec_add_scaled(rest, -c, basis_.row(i));
        }
        if (!vec_is_zero(rest)) return std::nullopt;
        return cs;
    }

    bool contains(const Vec<K>& v) const { return coords(v).has_value(); }
    bool contains(const Subspace& other) const {
        if (other.ambient() != ambient()) throw DimensionMismatch("contains: ambient mismatch");
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

    Subspace sum(const Subspace& o) const {
        check(o);
        return span_of_rows(basis_.vstack(o.basis_));
    }

    // Row-space intersection: solve u^T A = v^T B via the kernel of [A^T | -B^T].
    Subspace intersect(const Subspace& o) const {
        check(o);
        std::size_t da = dim(), db = o.dim();
        Matrix<K> sys(ambient(), da + db, desc());
        for (std::size_t i = 0; i < ambient(); ++i) {
            for (std::size_t j = 0; j < da; ++j) sys.at(i, j) = basis_.at(j, i);
            for (std::size_t j = 0; j < db; ++j) sys.at(i, da + j) = -o.basis_.at(j, i);
        }
        Subspace ker = kernel_of(sys);
        std::vector<Vec<K>> gens;
        for (std::size_t i = 0; i < ker.dim(); ++i) {
            Vec<K> uv = ker.basis_vector(i);
            Vec<K> w = vec_zero<K>(ambient(), desc());
            for (std::size_t j = 0; j < da; ++j) vec_add_scaled(w, uv[j], basis_.row(j));
            gens.push_back(std::move(w));
        }
        return span(gens, ambient(), desc());
    }

    // x such that x * basis = v (unique), as a plain change to subspace coords.
    Vec<K> coords_or_throw(const Vec<K>& v, const char* what = "vector not in subspace") const {
        auto c = coords(v);
        if (!c) throw InternalInconsistency(what);
        return *c;
    }

    static Subspace kernel_of(const Matrix<K>& m);
    static Subspace image_of(const Matrix<K>& m) {
        return span_of_rows(m.transpose());
    }

private:
    explicit Subspace(Matrix<K> basis) : basis_(std::move(basis)) {
        pivots_.clear();
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::size_t j = 0;
            while (j < basis_.cols() && basis_.at(i, j).is_zero()) ++j;
            pivots_.push_back(j);
        }
    }

    void check(const Subspace& o) const {
        if (o.ambient() != ambient()) throw DimensionMismatch("subspace ambient mismatch");
        if (!(o.desc() == desc())) throw FieldMismatch("subspaces over different fields");
    }

    Matrix<K> basis_;              // rref, no zero rows
    std::vector<std::size_t> pivots_;
};

template <ExactField K>
Subspace<K> Subspace<K>::kernel_of(const Matrix<K>& m) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec<K>> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec<K> v = vec_zero<K>(m.cols(), m.desc());
        v[c] = K::one(m.desc());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, c);
        gens.push_back(std::move(v));
    }
    return span(gens, m.cols(), m.desc());
}

template <ExactField K>
struct RowReduceResult {
    Matrix<K> rref;
    std::size_t rank = 0;
    Subspace<K> kernel;
    Subspace<K> image;
};

template <ExactField K>
RowReduceResult<K> row_reduce(const Matrix<K>& m) {
    auto [red, pivots] = rref(m);
    return RowReduceResult<K>{red, pivots.size(), Subspace<K>::kernel_of(m), Subspace<K>::image_of(m)};
}

// Quotient of K^n by a relation subspace R, presented by a projection P and a
// section S with P*S = id and Ker P = R.  Quotient coordinates are indexed by
// the non-pivot columns of R's echelon basis.
template <ExactField K>
class PresentedQuotient {
public:
    using Desc = typename K::Desc;

    PresentedQuotient() = default;

    explicit PresentedQuotient(Subspace<K> rel) : rel_(std::move(rel)) {
        const std::size_t n = rel_.ambient();
        const Desc d = rel_.desc();
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : rel_.pivots()) is_pivot[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t c = 0; c < n; ++c)
            if (!is_pivot[c]) free.push_back(c);
        const std::size_t q = free.size();
        p_ = Matrix<K>(q, n, d);
        s_ = Matrix<K>(n, q, d);
        for (std::size_t j = 0; j < q; ++j) {
            p_.at(j, free[j]) = K::one(d);
            s_.at(free[j], j) = K::one(d);
        }
        // reducing x modulo R zeroes the pivot coordinates and adjusts the free ones
        for (std::size_t r = 0; r < rel_.dim(); ++r)
            for (std::size_t j = 0; j < q; ++j)
                p_.at(j, rel_.pivots()[r]) = -rel_.basis().at(r, free[j]);
    }

    std::size_t ambient() const { return rel_.ambient(); }
    std::size_t dim() const { return p_.rows(); }
    Desc desc() const { return rel_.desc(); }
    const Subspace<K>& relations() const { return rel_; }
    const Matrix<K>& projection() const { return p_; }
    const Matrix<K>& section() const { return s_; }

    Vec<K> project(const Vec<K>& ambient_vec) const { return p_.apply(ambient_vec); }
    Vec<K> lift(const Vec<K>& quotient_vec) const { return s_.apply(quotient_vec); }

    // Induced map on the quotient of an ambient-level map F with F(R) <= R'.
    // Certification of that containment is the caller's business.
    Matrix<K> induced(const Matrix<K>& f, const PresentedQuotient& target) const {
        return target.p_ * f * s_;
    }
    Matrix<K> induced_endo(const Matrix<K>& f) const { return induced(f, *this); }

    bool maps_relations_into(const Matrix<K>& f, const Subspace<K>& target_rel) const {
        for (std::size_t i = 0; i < rel_.dim(); ++i)
            if (!target_rel.contains(f.apply(rel_.basis_vector(i)))) return false;
        return true;
    }

private:
    Subspace<K> rel_;
    Matrix<K> p_, s_;
};

// Quotient of a subspace `a` by a subspace `b` <= a, in the echelon
// coordinates of `a`.
template <ExactField K>
PresentedQuotient<K> quotient_of(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("quotient ambient mismatch");
    if (!a.contains(b)) throw PreconditionViolated("quotient: relations not contained in the space");
    std::vector<Vec<K>> rel_in_a;
    for (std::size_t i = 0; i < b.dim(); ++i)
        rel_in_a.push_back(a.coords_or_throw(b.basis_vector(i)));
    return PresentedQuotient<K>(Subspace<K>::span(rel_in_a, a.dim(), a.desc()));
}

// Preimage of a subspace U under the linear map F: the kernel of P_U * F.
template <ExactField K>
Subspace<K> preimage(const Matrix<K>& f, const Subspace<K>& u) {
    if (u.ambient() != f.rows()) throw DimensionMismatch("preimage shape mismatch");
    PresentedQuotient<K> q(u);
    return Subspace<K>::kernel_of(q.projection() * f);
}

// Image of a subspace under a linear map, as a subspace of the codomain.
template <ExactField K>
Subspace<K> image_of_subspace(const Matrix<K>& f, const Subspace<K>& u) {
    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < u.dim(); ++i) gens.push_back(f.apply(u.basis_vector(i)));
    return Subspace<K>::span(gens, f.rows(), f.desc());
}

}  // namespace homlie
