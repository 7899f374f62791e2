#pragma once

// Shared constructions for the test suites: the bundled example algebras and
// random generators for valid Hom-Lie algebras and snake diagrams.

#include <random>
#include <vector>

#include "homlie/homlie.hpp"

namespace testutil {

using namespace homlie;

using Q = Rational;
using QD = Rational::Desc;

inline Q q(long n) { return Q(n); }
inline Q q(long n, long d) { return Q(n, d); }

// Remark 3.7 b): [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1, alpha = 0; perfect, not alpha-perfect.
template <ExactField K>
HomLieAlgebra<K> remark37b(typename K::Desc d) {
    Tensor3<K> c(3, 3, 3, d);
    auto one = K::one(d);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, K v) {
        c.at(i, j, k) = v;
        c.at(j, i, k) = -v;
    };
    set(0, 1, 2, one);
    set(0, 2, 1, one);
    set(1, 2, 0, one);
    Matrix<K> alpha(3, 3, d);
    auto v = validate_hom_lie(3, c, alpha);
    return *v.value;
}

// Remark 3.7 c): [e1,e2]=e2, alpha = diag(1,2); alpha surjective, not alpha-perfect.
template <ExactField K>
HomLieAlgebra<K> remark37c(typename K::Desc d) {
    Tensor3<K> c(2, 2, 2, d);
    c.at(0, 1, 1) = K::one(d);
    c.at(1, 0, 1) = -K::one(d);
    Matrix<K> alpha(2, 2, d);
    alpha.at(0, 0) = K::one(d);
    alpha.at(1, 1) = scalar_from_int<K>(d, 2);
    auto v = validate_hom_lie(2, c, alpha);
    return *v.value;
}

// so(3)-type: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 with alpha = id.
template <ExactField K>
HomLieAlgebra<K> so3_id(typename K::Desc d) {
    Tensor3<K> c(3, 3, 3, d);
    auto one = K::one(d);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, K v) {
        c.at(i, j, k) = v;
        c.at(j, i, k) = -v;
    };
    set(0, 1, 2, one);
    set(1, 2, 0, one);
    set(2, 0, 1, one);
    auto v = validate_hom_lie(3, c, Matrix<K>::identity(3, d));
    return *v.value;
}

// the 2-dimensional algebra of Example 2.3 c): [e1,e2]=e1, alpha = [[1,1],[0,1]] (columns).
template <ExactField K>
HomLieAlgebra<K> ex12c(typename K::Desc d) {
    Tensor3<K> c(2, 2, 2, d);
    c.at(0, 1, 0) = K::one(d);
    c.at(1, 0, 0) = -K::one(d);
    Matrix<K> alpha = Matrix<K>::identity(2, d);
    alpha.at(0, 1) = K::one(d);
    auto v = validate_hom_lie(2, c, alpha);
    return *v.value;
}

// the section-3 example over Q(sqrt 2): so(3) bracket, alpha-perfect twist.
inline HomLieAlgebra<QuadExt> sec3_sqrt2() {
    auto d = QuadExt::make_desc(2);
    Tensor3<QuadExt> c(3, 3, 3, d);
    QuadExt one = QuadExt::one(d);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, QuadExt v) {
        c.at(i, j, k) = v;
        c.at(j, i, k) = -v;
    };
    set(0, 1, 2, one);
    set(1, 2, 0, one);
    set(2, 0, 1, one);
    QuadExt h(d, mpq_class(0), mpq_class(1, 2));  // sqrt(2)/2 = (1/2) w
    Matrix<QuadExt> alpha(3, 3, d);
    alpha.at(0, 0) = h;
    alpha.at(0, 2) = h;
    alpha.at(1, 1) = -one;
    alpha.at(2, 0) = h;
    alpha.at(2, 2) = -h;
    auto v = validate_hom_lie(3, c, alpha);
    return *v.value;
}

// Hom-associative examples

// Example 4.4 c): e1 e1 = e2, alpha(e1) = e1 + e2, alpha(e2) = e2.
inline HomAssocAlgebra<Q> ex44c() {
    QD d;
    Tensor3<Q> p(2, 2, 2, d);
    p.at(0, 0, 1) = q(1);
    Matrix<Q> alpha = Matrix<Q>::identity(2, d);
    alpha.at(1, 0) = q(1);
    auto v = validate_assoc(2, p, alpha);
    return *v.value;
}

// Example 4.4 d): e1e1=e2, e1e2=e2e1=e3, alpha(e1)=e1+e2+e3, alpha(e2)=alpha(e3)=0.
inline HomAssocAlgebra<Q> ex44d() {
    QD d;
    Tensor3<Q> p(3, 3, 3, d);
    p.at(0, 0, 1) = q(1);
    p.at(0, 1, 2) = q(1);
    p.at(1, 0, 2) = q(1);
    Matrix<Q> alpha(3, 3, d);
    alpha.at(0, 0) = q(1);
    alpha.at(1, 0) = q(1);
    alpha.at(2, 0) = q(1);
    auto v = validate_assoc(3, p, alpha);
    return *v.value;
}

// upper-triangular 2x2 matrices, basis (E11, E12, E22), alpha = id.
inline HomAssocAlgebra<Q> ut2() {
    QD d;
    Tensor3<Q> p(3, 3, 3, d);
    p.at(0, 0, 0) = q(1);  // E11 E11 = E11
    p.at(0, 1, 1) = q(1);  // E11 E12 = E12
    p.at(1, 2, 1) = q(1);  // E12 E22 = E12
    p.at(2, 2, 2) = q(1);  // E22 E22 = E22
    auto v = validate_assoc(3, p, Matrix<Q>::identity(3, d));
    return *v.value;
}

// ut2 twisted by conjugation with I + E12: Hom-associative, fails the
// alpha-identity condition.
inline HomAssocAlgebra<Q> ut2_twisted() {
    QD d;
    // alpha(E11) = E11 - E12, alpha(E12) = E12, alpha(E22) = E22 + E12
    Matrix<Q> alpha = Matrix<Q>::identity(3, d);
    alpha.at(1, 0) = q(-1);
    alpha.at(1, 2) = q(1);
    HomAssocAlgebra<Q> base = ut2();
    Tensor3<Q> p(3, 3, 3, d);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) p.set_slice(i, j, alpha.apply(base.prod(i, j)));
    auto v = validate_assoc(3, p, alpha);
    return *v.value;
}

// random generators (deterministic; std::mt19937 is fully specified)

template <ExactField K>
K random_scalar(typename K::Desc d, std::mt19937& rng, int lo = -2, int hi = 2) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return scalar_from_int<K>(d, dist(rng));
}

template <ExactField K>
Matrix<K> random_matrix(std::size_t r, std::size_t c, typename K::Desc d, std::mt19937& rng) {
    Matrix<K> m(r, c, d);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar<K>(d, rng);
    return m;
}

template <ExactField K>
Matrix<K> random_invertible(std::size_t n, typename K::Desc d, std::mt19937& rng) {
    while (true) {
        Matrix<K> m = random_matrix<K>(n, n, d, rng);
        if (rank(m) == n) return m;
    }
}

// A random valid multiplicative Hom-Lie algebra: one of several seed familes,
// pushed through a random change of basis.
template <ExactField K>
HomLieAlgebra<K> random_hom_lie(typename K::Desc d, std::mt19937& rng, std::size_t max_dim = 4) {
    std::uniform_int_distribution<int> pick(0, 4);
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    HomLieAlgebra<K> seed = HomLieAlgebra<K>::abelian(1, Matrix<K>::identity(1, d));
    switch (pick(rng)) {
        case 0: {  // abelian with arbitrary alpha
            std::size_t n = dim_dist(rng);
            seed = HomLieAlgebra<K>::abelian(n, random_matrix<K>(n, n, d, rng));
            break;
        }
        case 1: {  // arbitrary skew bracket with alpha = 0 (Hom-Jacobi is vacuous)
            std::size_t n = dim_dist(rng);
            Tensor3<K> c(n, n, n, d);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        K v = random_scalar<K>(d, rng);
                        c.at(i, j, k) = v;
                        c.at(j, i, k) = -v;
                    }
            seed = HomLieAlgebra<K>(n, std::move(c), Matrix<K>(n, n, d));
            break;
        }
        case 2: {  // [e1,e2] = e2 with alpha = diag(1, t)
            Tensor3<K> c(2, 2, 2, d);
            c.at(0, 1, 1) = K::one(d);
            c.at(1, 0, 1) = -K::one(d);
            Matrix<K> alpha(2, 2, d);
            alpha.at(0, 0) = K::one(d);
            alpha.at(1, 1) = random_scalar<K>(d, rng);
            seed = HomLieAlgebra<K>(2, std::move(c), std::move(alpha));
            break;
        }
        case 3:  // so(3) with alpha = id
            seed = so3_id<K>(d);
            break;
        default: {  // Heisenberg [e1,e2] = e3 with alpha(e1)=a e1, alpha(e2)=b e2,
                    // alpha(e3)=ab e3 (an endomorphism family)
            Tensor3<K> c(3, 3, 3, d);
            c.at(0, 1, 2) = K::one(d);
            c.at(1, 0, 2) = -K::one(d);
            K a = random_scalar<K>(d, rng), b = random_scalar<K>(d, rng);
            Matrix<K> alpha(3, 3, d);
            alpha.at(0, 0) = a;
            alpha.at(1, 1) = b;
            alpha.at(2, 2) = a * b;
            seed = HomLieAlgebra<K>(3, std::move(c), std::move(alpha));
            break;
        }
    }
    auto checked = validate_hom_lie(seed);
    if (!checked.ok()) throw InternalInconsistency("random seed algebra invalid");
    return change_basis(*checked.value, random_invertible<K>(seed.dim(), d, rng));
}

}  // namespace testutil
