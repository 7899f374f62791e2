#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/linalg.hpp"

namespace homlie {

// Cubic coefficient tensor t[i][j][k]; also reused for products and actions
// (where the three index ranges may differ).
template <ExactField K>
class Tensor3 {
public:
    using Desc = typename K::Desc;

    Tensor3() : n1_(0), n2_(0), n3_(0) {}
    Tensor3(std::size_t n1, std::size_t n2, std::size_t n3, Desc desc)
        : n1_(n1), n2_(n2), n3_(n3), desc_(desc), data_(n1 * n2 * n3, K::zero(desc)) {}

    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    std::size_t n3() const { return n3_; }
    Desc desc() const { return desc_; }

    K& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n2_ + j) * n3_ + k]; }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n2_ + j) * n3_ + k];
    }

    Vec<K> slice(std::size_t i, std::size_t j) const {
        Vec<K> v;
        v.reserve(n3_);
        for (std::size_t k = 0; k < n3_; ++k) v.push_back(at(i, j, k));
        return v;
    }
    void set_slice(std::size_t i, std::size_t j, const Vec<K>& v) {
        for (std::size_t k = 0; k < n3_; ++k) at(i, j, k) = v[k];
    }

    // bilinear extension: sum_{i,j} x_i y_j t[i][j][.]
    Vec<K> apply(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != n1_ || y.size() != n2_) throw ShapeError("tensor apply shape mismatch");
        Vec<K> r = vec_zero<K>(n3_, desc_);
        for (std::size_t i = 0; i < n1_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n2_; ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                for (std::size_t k = 0; k < n3_; ++k) r[k] += c * at(i, j, k);
            }
        }
        return r;
    }

    bool operator==(const Tensor3& o) const {
        return n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_ && data_ == o.data_;
    }

private:
    std::size_t n1_, n2_, n3_;
    Desc desc_;
    std::vector<K> data_;
};

struct AxiomViolation {
    std::string axiom;
    std::vector<std::size_t> indices;        // 1-based basis indices, paper style
    std::vector<std::string> residual;       // coordinates of the residual vector
};

template <typename T>
struct Validated {
    std::optional<T> value;
    std::vector<AxiomViolation> violations;
    bool ok() const { return value.has_value(); }
};

template <ExactField K>
std::vector<std::string> residual_strings(const Vec<K>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

// (L, alpha_L): structure constants c[i][j][k] meaning [e_i, e_j] = sum_k c[i][j][k] e_k,
// and alpha as a matrix whose column i is alpha(e_i).
template <ExactField K>
class HomLieAlgebra {
public:
    using Desc = typename K::Desc;

    HomLieAlgebra() : dim_(0) {}
    HomLieAlgebra(std::size_t dim, Tensor3<K> bracket, Matrix<K> alpha)
        : dim_(dim), bracket_(std::move(bracket)), alpha_(std::move(alpha)) {}

    static HomLieAlgebra abelian(std::size_t dim, Matrix<K> alpha) {
        Tensor3<K> t(dim, dim, dim, alpha.desc());
        return HomLieAlgebra(dim, std::move(t), std::move(alpha));
    }

    std::size_t dim() const { return dim_; }
    Desc desc() const { return alpha_.desc(); }
    const Tensor3<K>& bracket_tensor() const { return bracket_; }
    const Matrix<K>& alpha() const { return alpha_; }

    Vec<K> bracket(std::size_t i, std::size_t j) const { return bracket_.slice(i, j); }
    Vec<K> bracket_of(const Vec<K>& x, const Vec<K>& y) const { return bracket_.apply(x, y); }
    Vec<K> alpha_of(const Vec<K>& x) const { return alpha_.apply(x); }

    // ad(x): y -> [x, y]
    Matrix<K> ad(const Vec<K>& x) const {
        Matrix<K> m(dim_, dim_, desc());
        for (std::size_t j = 0; j < dim_; ++j)
            m.set_col(j, bracket_of(x, vec_unit<K>(dim_, j, desc())));
        return m;
    }

    bool is_abelian() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!vec_is_zero(bracket_.slice(i, j))) return false;
        return true;
    }

    Subspace<K> derived() const {
        std::vector<Vec<K>> gens;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) gens.push_back(bracket_.slice(i, j));
        return Subspace<K>::span(gens, dim_, desc());
    }

    // commutator span [H, K'] of two subspaces
    Subspace<K> commutator(const Subspace<K>& h, const Subspace<K>& k) const {
        if (h.ambient() != dim_ || k.ambient() != dim_)
            throw DimensionMismatch("commutator ambient mismatch");
        std::vector<Vec<K>> gens;
        for (std::size_t a = 0; a < h.dim(); ++a)
            for (std::size_t b = 0; b < k.dim(); ++b)
                gens.push_back(bracket_of(h.basis_vector(a), k.basis_vector(b)));
        return Subspace<K>::span(gens, dim_, desc());
    }

    // Z(L) = kernel of x -> ([x, e_1], ..., [x, e_n])
    Subspace<K> center() const {
        Matrix<K> stacked(dim_ * dim_, dim_, desc());
        for (std::size_t j = 0; j < dim_; ++j) {
            // column i of block j: [e_i, e_j]
            for (std::size_t i = 0; i < dim_; ++i) {
                Vec<K> v = bracket_.slice(i, j);
                for (std::size_t k = 0; k < dim_; ++k) stacked.at(j * dim_ + k, i) = v[k];
            }
        }
        return Subspace<K>::kernel_of(stacked);
    }

    Subspace<K> alpha_image() const { return Subspace<K>::image_of(alpha_); }

private:
    std::size_t dim_;
    Tensor3<K> bracket_;
    Matrix<K> alpha_;
};

template <ExactField K>
Validated<HomLieAlgebra<K>> validate_hom_lie(std::size_t dim, const Tensor3<K>& bracket,
                                             const Matrix<K>& alpha) {
    if (bracket.n1() != dim || bracket.n2() != dim || bracket.n3() != dim)
        throw ShapeError("bracket tensor must be dim^3");
    if (alpha.rows() != dim || alpha.cols() != dim) throw ShapeError("alpha must be dim x dim");
    const auto desc = alpha.desc();
    Validated<HomLieAlgebra<K>> out;

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            Vec<K> r = vec_add(bracket.slice(i, j), bracket.slice(j, i));
            if (i == j) r = bracket.slice(i, i);
            if (!vec_is_zero(r))
                out.violations.push_back({"skew-symmetry", {i + 1, j + 1}, residual_strings(r)});
        }

    HomLieAlgebra<K> cand(dim, bracket, alpha);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            Vec<K> r = vec_sub(alpha.apply(bracket.slice(i, j)),
                               cand.bracket_of(alpha.col(i), alpha.col(j)));
            if (!vec_is_zero(r))
                out.violations.push_back({"multiplicativity", {i + 1, j + 1}, residual_strings(r)});
        }

    // Hom-Jacobi on ordered basis triples; multilinearity plus skew-symmetry
    // make i <= j <= k sufficient.
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = j; k < dim; ++k) {
                Vec<K> r = cand.bracket_of(alpha.col(i), bracket.slice(j, k));
                r = vec_add(r, cand.bracket_of(alpha.col(k), bracket.slice(i, j)));
                r = vec_add(r, cand.bracket_of(alpha.col(j), bracket.slice(k, i)));
                if (!vec_is_zero(r))
                    out.violations.push_back(
                        {"hom-jacobi", {i + 1, j + 1, k + 1}, residual_strings(r)});
            }

    if (out.violations.empty()) out.value = std::move(cand);
    return out;
}

template <ExactField K>
Validated<HomLieAlgebra<K>> validate_hom_lie(const HomLieAlgebra<K>& l) {
    return validate_hom_lie(l.dim(), l.bracket_tensor(), l.alpha());
}

// Morphisms carry only their coordinate matrix; source/target live at the call site.
template <ExactField K>
struct HomMorphism {
    Matrix<K> matrix;
};

template <ExactField K>
Validated<HomMorphism<K>> check_morphism(const Matrix<K>& f, const HomLieAlgebra<K>& src,
                                         const HomLieAlgebra<K>& tgt) {
    if (f.cols() != src.dim() || f.rows() != tgt.dim())
        throw ShapeError("morphism matrix shape mismatch");
    Validated<HomMorphism<K>> out;
    Matrix<K> tw = f * src.alpha() - tgt.alpha() * f;
    if (!tw.is_zero())
        out.violations.push_back({"alpha-equivariance", {}, residual_strings(tw.col(0))});
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i + 1; j < src.dim(); ++j) {
            Vec<K> r = vec_sub(f.apply(src.bracket(i, j)), tgt.bracket_of(f.col(i), f.col(j)));
            if (!vec_is_zero(r))
                out.violations.push_back({"bracket-preservation", {i + 1, j + 1}, residual_strings(r)});
        }
    if (out.violations.empty()) out.value = HomMorphism<K>{f};
    return out;
}

template <ExactField K>
struct SubstructureReport {
    bool is_subalgebra = false;       // H bracket-closed and alpha-invariant
    bool is_ideal = false;            // [H, L] <= H and alpha-invariant
    bool alpha_invariant = false;
    Subspace<K> commutator;           // [H, K']
    Subspace<K> center;               // Z(L)
};

template <ExactField K>
bool is_alpha_invariant(const HomLieAlgebra<K>& l, const Subspace<K>& h) {
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (!h.contains(l.alpha_of(h.basis_vector(i)))) return false;
    return true;
}

template <ExactField K>
bool is_bracket_closed(const HomLieAlgebra<K>& l, const Subspace<K>& h) {
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t b = a + 1; b < h.dim(); ++b)
            if (!h.contains(l.bracket_of(h.basis_vector(a), h.basis_vector(b)))) return false;
    return true;
}

template <ExactField K>
bool is_ideal(const HomLieAlgebra<K>& l, const Subspace<K>& h) {
    if (!is_alpha_invariant(l, h)) return false;
    for (std::size_t a = 0; a < h.dim(); ++a)
        for (std::size_t j = 0; j < l.dim(); ++j)
            if (!h.contains(l.bracket_of(h.basis_vector(a), vec_unit<K>(l.dim(), j, l.desc()))))
                return false;
    return true;
}

template <ExactField K>
SubstructureReport<K> substructures(const HomLieAlgebra<K>& l, const Subspace<K>& h,
                                    const Subspace<K>& k) {
    if (h.ambient() != l.dim() || k.ambient() != l.dim())
        throw DimensionMismatch("substructures ambient mismatch");
    SubstructureReport<K> rep;
    rep.alpha_invariant = is_alpha_invariant(l, h);
    rep.is_subalgebra = rep.alpha_invariant && is_bracket_closed(l, h);
    rep.is_ideal = is_ideal(l, h);
    rep.commutator = l.commutator(h, k);
    rep.center = l.center();
    return rep;
}

// The sub-Hom-Lie algebra carried by an alpha-invariant, bracket-closed
// subspace, in that subspace's echelon coordinates; also returns the
// inclusion matrix.
template <ExactField K>
struct SubAlgebra {
    HomLieAlgebra<K> alg;
    Matrix<K> inclusion;  // dim L x dim H
    Subspace<K> space;
};

template <ExactField K>
SubAlgebra<K> sub_algebra(const HomLieAlgebra<K>& l, const Subspace<K>& h) {
    if (!is_alpha_invariant(l, h)) throw NotAlphaInvariant("subspace is not alpha-invariant");
    if (!is_bracket_closed(l, h)) throw PreconditionViolated("subspace is not bracket-closed");
    const std::size_t m = h.dim();
    Tensor3<K> c(m, m, m, l.desc());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            c.set_slice(a, b,
                        h.coords_or_throw(l.bracket_of(h.basis_vector(a), h.basis_vector(b))));
    Matrix<K> alpha(m, m, l.desc());
    for (std::size_t a = 0; a < m; ++a)
        alpha.set_col(a, h.coords_or_throw(l.alpha_of(h.basis_vector(a))));
    Matrix<K> incl = h.basis().transpose();
    return SubAlgebra<K>{HomLieAlgebra<K>(m, std::move(c), std::move(alpha)), std::move(incl), h};
}

template <ExactField K>
struct QuotientAlgebra {
    HomLieAlgebra<K> alg;
    PresentedQuotient<K> quotient;
    HomMorphism<K> projection;
};

template <ExactField K>
QuotientAlgebra<K> quotient_algebra(const HomLieAlgebra<K>& l, const Subspace<K>& h) {
    if (h.ambient() != l.dim()) throw DimensionMismatch("quotient ambient mismatch");
    if (!is_alpha_invariant(l, h)) throw NotAlphaInvariant("quotient by non-alpha-invariant subspace");
    if (!is_ideal(l, h)) throw NotAnIdeal("quotient by a non-ideal");
    PresentedQuotient<K> q(h);
    const std::size_t m = q.dim();
    Tensor3<K> c(m, m, m, l.desc());
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            c.set_slice(a, b, q.project(l.bracket_of(q.lift(vec_unit<K>(m, a, l.desc())),
                                                     q.lift(vec_unit<K>(m, b, l.desc())))));
    Matrix<K> alpha = q.induced_endo(l.alpha());
    HomLieAlgebra<K> alg(m, std::move(c), std::move(alpha));
    auto v = validate_hom_lie(alg);
    if (!v.ok()) throw InternalInconsistency("quotient of a valid algebra failed validation");
    HomMorphism<K> proj{q.projection()};
    return QuotientAlgebra<K>{std::move(alg), std::move(q), std::move(proj)};
}

template <ExactField K>
struct PerfectnessFlags {
    bool perfect = false;
    bool alpha_perfect = false;
    bool alpha_surjective = false;
    Subspace<K> alpha_image;
    Subspace<K> derived;
    Subspace<K> alpha_derived;  // [alpha(L), alpha(L)]
};

template <ExactField K>
PerfectnessFlags<K> perfectness_flags(const HomLieAlgebra<K>& l) {
    PerfectnessFlags<K> f;
    f.alpha_image = l.alpha_image();
    f.derived = l.derived();
    f.alpha_derived = l.commutator(f.alpha_image, f.alpha_image);
    f.perfect = f.derived.dim() == l.dim();
    f.alpha_perfect = f.alpha_derived.dim() == l.dim();
    f.alpha_surjective = f.alpha_image.dim() == l.dim();
    return f;
}

// Transports structure constants along an invertible change of basis; new
// basis vector j is column j of p (in old coordinates).
template <ExactField K>
HomLieAlgebra<K> change_basis(const HomLieAlgebra<K>& l, const Matrix<K>& p) {
    const std::size_t n = l.dim();
    Matrix<K> pinv(n, n, l.desc());
    for (std::size_t j = 0; j < n; ++j) {
        auto col = solve_linear(p, vec_unit<K>(n, j, l.desc()));
        if (!col) throw PreconditionViolated("change of basis is not invertible");
        pinv.set_col(j, *col);
    }
    Tensor3<K> c(n, n, n, l.desc());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            c.set_slice(a, b, pinv.apply(l.bracket_of(p.col(a), p.col(b))));
    return HomLieAlgebra<K>(n, std::move(c), pinv * l.alpha() * p);
}

}  // namespace homlie
