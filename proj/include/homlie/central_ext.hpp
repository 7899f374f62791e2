#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/diagram.hpp"
#include "homlie/homology.hpp"

namespace homlie {

// An extension 0 -> M -> K' -pi-> L -> 0 with M = Ker pi.
template <ExactField K>
struct ExtensionData {
    HomLieAlgebra<K> total;   // K'
    HomLieAlgebra<K> base;    // L
    Matrix<K> pi;
    Subspace<K> kernel;       // Ker pi, an alpha-invariant ideal of K'
};

template <ExactField K>
ExtensionData<K> make_extension(const HomLieAlgebra<K>& total, const Matrix<K>& pi,
                                const HomLieAlgebra<K>& base) {
    if (rank(pi) != base.dim()) throw PreconditionViolated("extension: pi is not surjective");
    if (!check_morphism(pi, total, base).ok())
        throw PreconditionViolated("extension: pi is not a morphism");
    Subspace<K> ker = Subspace<K>::kernel_of(pi);
    if (!is_ideal(total, ker))
        throw InternalInconsistency("kernel of a morphism must be an alpha-invariant ideal");
    return ExtensionData<K>{total, base, pi, ker};
}

struct ExtensionClass {
    bool central = false;
    bool alpha_central = false;
};

template <ExactField K>
ExtensionClass classify_extension(const ExtensionData<K>& e) {
    ExtensionClass c;
    Subspace<K> z = e.total.center();
    c.central = z.contains(e.kernel);
    c.alpha_central = true;
    for (std::size_t i = 0; i < e.kernel.dim(); ++i)
        if (!z.contains(e.total.alpha_of(e.kernel.basis_vector(i)))) {
            c.alpha_central = false;
            break;
        }
    if (c.central && !c.alpha_central)
        throw InternalInconsistency("central extension must be alpha-central");
    return c;
}

template <ExactField K>
struct UceTensorResult {
    TensorProduct<K> tensor;    // L * L
    ExtensionData<K> ext;       // psi : L * L ->> L
    std::size_t h2 = 0;         // dim Ker psi = dim H_2^alpha(L)
    bool kernel_central = false;
    bool total_perfect = false;
};

// Thm 3.4: for perfect L, psi : L * L ->> L is the universal central extension;
// its kernel has the dimension of H_2^alpha(L) (Remark 3.5), asserted here
// against the chain-complex route.
template <ExactField K>
UceTensorResult<K> uce_via_tensor(const HomLieAlgebra<K>& l) {
    if (!perfectness_flags(l).perfect)
        throw PreconditionViolated("universal central extension requires a perfect algebra");
    UceTensorResult<K> out;
    out.tensor = tensor_product(l, l, adjoint_action(l), adjoint_action(l));
    PsiReport<K> psi = psi_maps(out.tensor);
    if (!psi.psi_n_morphism) throw InternalInconsistency("psi is not a morphism");
    out.ext = make_extension(out.tensor.result, psi.psi_n, l);
    out.h2 = psi.ker_n.dim();
    out.kernel_central = psi.ker_n_central;
    out.total_perfect = perfectness_flags(out.tensor.result).perfect;
    H2Report<K> h2c = h2_alpha(l);
    if (h2c.complex_dim != out.h2)
        throw InternalInconsistency("Ker(psi) dimension disagrees with H_2^alpha(L)");
    return out;
}

// uce_alpha(L) = (alpha(L) ^ alpha(L)) / I_L for alpha-perfect L, with
//   [{a, b}, {c, d}] = {[a, b], [c, d]}  and  alpha~{a, b} = {alpha(a), alpha(b)}.
// Coordinates are wedges of the echelon basis of the image subspace alpha(L).
template <ExactField K>
struct UceAlpha {
    HomLieAlgebra<K> base;
    Subspace<K> w;                       // alpha(L)
    Subspace<K> i_l;                     // relation span inside Lambda^2 W
    PresentedQuotient<K> quot;
    HomLieAlgebra<K> result;
    Matrix<K> u_alpha;                   // uce_alpha(L) -> L
    bool u_surjective = false;
    bool kernel_central = false;
    bool result_alpha_perfect = false;
};

template <ExactField K>
UceAlpha<K> uce_alpha(const HomLieAlgebra<K>& l) {
    auto flags = perfectness_flags(l);
    if (!flags.alpha_perfect)
        throw PreconditionViolated("uce_alpha requires an alpha-perfect algebra");
    UceAlpha<K> out;
    out.base = l;
    out.w = flags.alpha_image;
    const std::size_t r = out.w.dim();
    const auto desc = l.desc();
    auto pairs = wedge_tuples(r, 2);
    const std::size_t amb = pairs.size();

    // coordinates of an L-vector in the W basis; alpha-perfectness guarantees
    // representability of every bracket value
    auto w_coords = [&](const Vec<K>& v) {
        auto c = out.w.coords(v);
        if (!c) throw InternalInconsistency("bracket value escaped alpha(L)");
        return *c;
    };
    auto wedge2 = [&](const Vec<K>& a, const Vec<K>& b) {
        return wedge_expand<K>({a, b}, r, pairs, desc);
    };

    // I_L = span of -[x1,x2]^alpha(x3) + [x1,x3]^alpha(x2) - [x2,x3]^alpha(x1)
    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < l.dim(); ++j)
            for (std::size_t k = 0; k < l.dim(); ++k) {
                Vec<K> g = vec_neg(wedge2(w_coords(l.bracket(i, j)), w_coords(l.alpha().col(k))));
                g = vec_add(g, wedge2(w_coords(l.bracket(i, k)), w_coords(l.alpha().col(j))));
                g = vec_sub(g, wedge2(w_coords(l.bracket(j, k)), w_coords(l.alpha().col(i))));
                gens.push_back(std::move(g));
            }
    out.i_l = Subspace<K>::span(gens, amb, desc);
    out.quot = PresentedQuotient<K>(out.i_l);
    const std::size_t q = out.quot.dim();

    // ambient bracket on Lambda^2 W: (w_a ^ w_b, w_c ^ w_d) -> [w_a,w_b] ^ [w_c,w_d]
    auto amb_bracket = [&](const Vec<K>& u, const Vec<K>& v) {
        Vec<K> res = vec_zero<K>(amb, desc);
        for (std::size_t pu = 0; pu < amb; ++pu) {
            if (u[pu].is_zero()) continue;
            Vec<K> z1 = w_coords(l.bracket_of(out.w.basis_vector(pairs[pu][0]),
                                              out.w.basis_vector(pairs[pu][1])));
            for (std::size_t pv = 0; pv < amb; ++pv) {
                if (v[pv].is_zero()) continue;
                Vec<K> z2 = w_coords(l.bracket_of(out.w.basis_vector(pairs[pv][0]),
                                                  out.w.basis_vector(pairs[pv][1])));
                vec_add_scaled(res, u[pu] * v[pv], wedge2(z1, z2));
            }
        }
        return res;
    };
    // alpha~ on the ambient: Lambda^2 of alpha restricted to W
    Matrix<K> alpha_w(r, r, desc);
    for (std::size_t a = 0; a < r; ++a)
        alpha_w.set_col(a, w_coords(l.alpha_of(out.w.basis_vector(a))));
    Matrix<K> alpha_amb(amb, amb, desc);
    for (std::size_t p = 0; p < amb; ++p)
        alpha_amb.set_col(p, wedge2(alpha_w.col(pairs[p][0]), alpha_w.col(pairs[p][1])));

    // well-definedness certificates
    for (std::size_t t = 0; t < out.i_l.dim(); ++t) {
        Vec<K> rel = out.i_l.basis_vector(t);
        for (std::size_t v = 0; v < amb; ++v) {
            Vec<K> ev = vec_unit<K>(amb, v, desc);
            if (!out.i_l.contains(amb_bracket(rel, ev)) || !out.i_l.contains(amb_bracket(ev, rel)))
                throw InternalInconsistency("uce bracket does not absorb I_L");
        }
        if (!out.i_l.contains(alpha_amb.apply(rel)))
            throw InternalInconsistency("alpha~ does not preserve I_L");
    }

    Tensor3<K> c(q, q, q, desc);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            c.set_slice(a, b,
                        out.quot.project(amb_bracket(out.quot.lift(vec_unit<K>(q, a, desc)),
                                                     out.quot.lift(vec_unit<K>(q, b, desc)))));
    auto val = validate_hom_lie(q, c, out.quot.induced_endo(alpha_amb));
    if (!val.ok()) throw InternalInconsistency("uce_alpha failed Hom-Lie validation");
    out.result = *val.value;

    // u_alpha{w_a, w_b} = [w_a, w_b]
    Matrix<K> u_amb(l.dim(), amb, desc);
    for (std::size_t p = 0; p < amb; ++p)
        u_amb.set_col(p, l.bracket_of(out.w.basis_vector(pairs[p][0]),
                                      out.w.basis_vector(pairs[p][1])));
    for (std::size_t t = 0; t < out.i_l.dim(); ++t)
        if (!vec_is_zero(u_amb.apply(out.i_l.basis_vector(t))))
            throw InternalInconsistency("u_alpha does not annihilate I_L");
    out.u_alpha = u_amb * out.quot.section();
    if (!check_morphism(out.u_alpha, out.result, l).ok())
        throw InternalInconsistency("u_alpha is not a morphism");
    out.u_surjective = rank(out.u_alpha) == l.dim();
    Subspace<K> ker_u = Subspace<K>::kernel_of(out.u_alpha);
    out.kernel_central = out.result.center().contains(ker_u);
    out.result_alpha_perfect = perfectness_flags(out.result).alpha_perfect;
    return out;
}

// Thm 3.10: alpha(L) * alpha(L) ~= uce_alpha(L) via alpha(l) * alpha(l') -> {alpha(l), alpha(l')}.
template <ExactField K>
struct UceComparison {
    UceAlpha<K> uce;
    TensorProduct<K> tensor;       // alpha(L) * alpha(L)
    Matrix<K> iso;                 // tensor -> uce
    bool bijective = false;
    bool morphism = false;
    bool commutes_over_l = false;  // u_alpha o iso = psi
};

template <ExactField K>
UceComparison<K> uce_alpha_vs_tensor(const HomLieAlgebra<K>& l) {
    auto flags = perfectness_flags(l);
    if (!flags.alpha_perfect)
        throw PreconditionViolated("uce comparison requires an alpha-perfect algebra");
    UceComparison<K> out;
    out.uce = uce_alpha(l);

    SubAlgebra<K> w_sub = sub_algebra(l, flags.alpha_image);
    HomAction<K> adj = adjoint_action(w_sub.alg);
    out.tensor = tensor_product(w_sub.alg, w_sub.alg, adj, adj);

    const std::size_t r = flags.alpha_image.dim();
    const auto desc = l.desc();
    auto pairs = wedge_tuples(r, 2);
    Matrix<K> to_wedge(pairs.size(), r * r, desc);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            to_wedge.set_col(tensor_index(i, j, r),
                             wedge_expand<K>({vec_unit<K>(r, i, desc), vec_unit<K>(r, j, desc)},
                                             r, pairs, desc));
    if (!out.tensor.quot.maps_relations_into(to_wedge, out.uce.i_l))
        throw InternalInconsistency("D(alpha(L), alpha(L)) does not map into I_L");
    out.iso = out.uce.quot.projection() * to_wedge * out.tensor.quot.section();
    out.bijective = out.tensor.dim() == out.uce.result.dim() &&
                    rank(out.iso) == out.uce.result.dim();
    out.morphism = check_morphism(out.iso, out.tensor.result, out.uce.result).ok();

    // psi(w * w') = [w, w'] on the tensor side, in L coordinates
    PsiReport<K> psi = psi_maps(out.tensor);
    Matrix<K> psi_in_l = w_sub.inclusion * psi.psi_n;
    out.commutes_over_l = (out.uce.u_alpha * out.iso) == psi_in_l;
    return out;
}

// Thm 2.14 verifier: for an alpha-invariant ideal M of a perfect L, the
// sequence Ker(M*L -> M) -> H_2(L) -> H_2(L/M) -> M/[L,M] -> 0 is exact.
template <ExactField K>
struct Thm214Report {
    std::size_t dim_ker_psi_m = 0, h2_l = 0, h2_q = 0, dim_m_mod_lm = 0;
    bool exact_at_h2_l = false;
    bool exact_at_h2_q = false;
    bool right_surjective = false;
    bool snake_ok = false;
    bool coker_identification = false;  // Im psi_E = [L, M]
    bool ok() const {
        return exact_at_h2_l && exact_at_h2_q && right_surjective && snake_ok &&
               coker_identification;
    }
};

template <ExactField K>
Thm214Report<K> verify_theorem_2_14(const HomLieAlgebra<K>& l, const Subspace<K>& m_space) {
    if (!perfectness_flags(l).perfect)
        throw PreconditionViolated("thm 2.14 requires a perfect algebra");
    if (!is_ideal(l, m_space))
        throw PreconditionViolated("thm 2.14: subspace is not an alpha-invariant ideal");

    Prop210Result<K> p210 = verify_prop_2_10(l, m_space);
    if (!p210.report.ok()) throw InternalInconsistency("prop 2.10 row is not exact");
    const auto desc = l.desc();
    SubAlgebra<K> m_sub = sub_algebra(l, m_space);

    PsiReport<K> psi_ml = psi_maps(p210.t_ml);  // psi_M : M*L -> M
    PsiReport<K> psi_lm = psi_maps(p210.t_lm);  // psi_N : L*M -> M
    PsiReport<K> psi_ll = psi_maps(p210.t_ll);
    PsiReport<K> psi_qq = psi_maps(p210.t_qq);

    // left vertical psi_E(x, y) = psi_M(x) + alpha_M(psi_N(y)), into M coordinates
    Matrix<K> alpha_m = m_sub.alg.alpha();
    Matrix<K> psi_e = psi_ml.psi_m.hstack(alpha_m * psi_lm.psi_n);

    LinearDiagram<K> diag;
    diag.f = p210.sigma;
    diag.g = p210.tau;
    diag.fp = m_sub.inclusion;
    diag.gp = p210.quotient.projection.matrix;
    diag.psi1 = psi_e;
    diag.psi2 = psi_ll.psi_n;
    diag.psi3 = psi_qq.psi_n;
    SnakeResult<K> snake = snake_sequence(diag);

    Thm214Report<K> rep;
    rep.snake_ok = snake.six_term_exact;
    rep.h2_l = snake.ker2.dim();
    rep.h2_q = snake.ker3.dim();
    rep.dim_ker_psi_m = psi_ml.ker_m.dim();
    rep.dim_m_mod_lm = snake.cok1.dim();

    // cross-route checks of the homology identifications
    if (h2_alpha(l).complex_dim != rep.h2_l)
        throw InternalInconsistency("Ker psi_LL disagrees with H_2(L)");
    if (h2_alpha(p210.quotient.alg).complex_dim != rep.h2_q)
        throw InternalInconsistency("Ker psi_QQ disagrees with H_2(L/M)");

    // Coker psi_E = M/[L,M]: the image of psi_E is the commutator [L, M]
    Subspace<K> im_psi_e = Subspace<K>::image_of(psi_e);
    Subspace<K> lm_in_m;
    {
        Subspace<K> lm = l.commutator(Subspace<K>::full(l.dim(), desc), m_space);
        std::vector<Vec<K>> coords;
        for (std::size_t i = 0; i < lm.dim(); ++i)
            coords.push_back(m_space.coords_or_throw(lm.basis_vector(i)));
        lm_in_m = Subspace<K>::span(coords, m_space.dim(), desc);
    }
    rep.coker_identification = im_psi_e == lm_in_m;

    // the literal four-term sequence of the theorem:
    //   Ker(psi_M : M*L -> M) --sigma'|--> Ker psi_LL --tau|--> Ker psi_QQ --delta--> Coker psi_E -> 0
    Matrix<K> sigma1(p210.t_ll.dim(), p210.t_ml.dim(), desc);
    for (std::size_t j = 0; j < p210.t_ml.dim(); ++j)
        for (std::size_t i = 0; i < p210.t_ll.dim(); ++i) sigma1.at(i, j) = p210.sigma.at(i, j);
    std::vector<Vec<K>> first_gens;
    for (std::size_t i = 0; i < psi_ml.ker_m.dim(); ++i) {
        Vec<K> im = sigma1.apply(psi_ml.ker_m.basis_vector(i));
        first_gens.push_back(snake.ker2.coords_or_throw(im, "sigma'(Ker psi_M) left Ker psi_LL"));
    }
    Subspace<K> im_first = Subspace<K>::span(first_gens, snake.ker2.dim(), desc);
    rep.exact_at_h2_l = im_first == Subspace<K>::kernel_of(snake.k23);
    rep.exact_at_h2_q = Subspace<K>::image_of(snake.k23) == Subspace<K>::kernel_of(snake.connecting);
    rep.right_surjective = rank(snake.connecting) == snake.cok1.dim();
    return rep;
}

}  // namespace homlie
