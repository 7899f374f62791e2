#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/actions.hpp"

namespace homlie {

// Basis of M (x) N is e_i (x) f_j in lexicographic order, i major.
inline std::size_t tensor_index(std::size_t i, std::size_t j, std::size_t nn) {
    return i * nn + j;
}

template <ExactField K>
Vec<K> kron(const Vec<K>& u, const Vec<K>& v, typename K::Desc desc) {
    Vec<K> r = vec_zero<K>(u.size() * v.size(), desc);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = u[i] * v[j];
    }
    return r;
}

template <ExactField K>
Matrix<K> kron_matrix(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols(), a.desc());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l)
            r.set_col(tensor_index(j, l, b.cols()), kron(a.col(j), b.col(l), a.desc()));
    return r;
}

// Relation subspace D(M, N) of M (x) N, instantiated on basis tuples.  Family
// c) is only quadratic, not bilinear; its polarization defect is exactly a
// family-d) element, so instantiating c) on basis pairs and d) on basis
// quadruples spans all instances (char 0 or p > 3).
template <ExactField K>
Subspace<K> build_D(const HomLieAlgebra<K>& m, const HomLieAlgebra<K>& n,
                    const HomAction<K>& act_mn, const HomAction<K>& act_nm) {
    auto compat = check_compatibility(act_mn, act_nm);
    if (!compat.compatible)
        throw IncompatibleActions("build_D requires compatible actions (condition " +
                                  std::to_string(compat.witness->condition) + ")");
    const std::size_t nm = m.dim(), nn = n.dim();
    const auto desc = m.desc();
    const std::size_t amb = nm * nn;
    std::vector<Vec<K>> gens;
    auto unit_m = [&](std::size_t i) { return vec_unit<K>(nm, i, desc); };
    auto unit_n = [&](std::size_t j) { return vec_unit<K>(nn, j, desc); };

    // a) [m,m'] (x) alpha_N(n) - alpha_M(m) (x) ^{m'}n + alpha_M(m') (x) ^m n
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            for (std::size_t s = 0; s < nn; ++s) {
                Vec<K> g = kron(m.bracket(i, j), n.alpha().col(s), desc);
                g = vec_sub(g, kron(m.alpha().col(i), act_mn.act(j, s), desc));
                g = vec_add(g, kron(m.alpha().col(j), act_mn.act(i, s), desc));
                gens.push_back(std::move(g));
            }
    // b) alpha_M(m) (x) [n,n'] - ^{n'}m (x) alpha_N(n) + ^n m (x) alpha_N(n')
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t t = 0; t < nn; ++t) {
                Vec<K> g = kron(m.alpha().col(i), n.bracket(s, t), desc);
                g = vec_sub(g, kron(act_nm.act(t, i), n.alpha().col(s), desc));
                g = vec_add(g, kron(act_nm.act(s, i), n.alpha().col(t), desc));
                gens.push_back(std::move(g));
            }
    // c) ^n m (x) ^m n
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            gens.push_back(kron(act_nm.act(s, i), act_mn.act(i, s), desc));
    // d) ^n m (x) ^{m'}n' + ^{n'}m' (x) ^m n
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t k = 0; k < nm; ++k)
                for (std::size_t t = 0; t < nn; ++t) {
                    Vec<K> g = kron(act_nm.act(s, i), act_mn.act(k, t), desc);
                    g = vec_add(g, kron(act_nm.act(t, k), act_mn.act(i, s), desc));
                    gens.push_back(std::move(g));
                }
    // e) [^n m, ^{n'}m'] (x) alpha_N(^{m''}n'') + cyclic
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t k = 0; k < nm; ++k)
                for (std::size_t t = 0; t < nn; ++t)
                    for (std::size_t u = 0; u < nm; ++u)
                        for (std::size_t v = 0; v < nn; ++v) {
                            Vec<K> a1 = act_nm.act(s, i);  // ^n m
                            Vec<K> a2 = act_nm.act(t, k);  // ^{n'}m'
                            Vec<K> a3 = act_nm.act(v, u);  // ^{n''}m''
                            Vec<K> b1 = act_mn.act(i, s);  // ^m n
                            Vec<K> b2 = act_mn.act(k, t);  // ^{m'}n'
                            Vec<K> b3 = act_mn.act(u, v);  // ^{m''}n''
                            Vec<K> g = kron(m.bracket_of(a1, a2), n.alpha_of(b3), desc);
                            g = vec_add(g, kron(m.bracket_of(a2, a3), n.alpha_of(b1), desc));
                            g = vec_add(g, kron(m.bracket_of(a3, a1), n.alpha_of(b2), desc));
                            gens.push_back(std::move(g));
                        }

    return Subspace<K>::span(gens, amb, desc);
}

// The Hom-Lie tensor product M * N as a presented quotient of M (x) N.
template <ExactField K>
struct TensorProduct {
    HomLieAlgebra<K> m, n;
    HomAction<K> act_mn, act_nm;
    Subspace<K> d;
    PresentedQuotient<K> quot;
    HomLieAlgebra<K> result;

    std::size_t ambient_dim() const { return m.dim() * n.dim(); }
    std::size_t dim() const { return result.dim(); }

    // ambient bracket [m (x) n, m' (x) n'] = - ^n m (x) ^{m'} n'
    Vec<K> ambient_bracket(const Vec<K>& u, const Vec<K>& v) const {
        const std::size_t nm = m.dim(), nn = n.dim();
        Vec<K> r = vec_zero<K>(nm * nn, m.desc());
        for (std::size_t i = 0; i < nm; ++i)
            for (std::size_t j = 0; j < nn; ++j) {
                const K& cu = u[tensor_index(i, j, nn)];
                if (cu.is_zero()) continue;
                for (std::size_t k = 0; k < nm; ++k)
                    for (std::size_t l = 0; l < nn; ++l) {
                        const K& cv = v[tensor_index(k, l, nn)];
                        if (cv.is_zero()) continue;
                        vec_add_scaled(r, -(cu * cv),
                                       kron(act_nm.act(j, i), act_mn.act(k, l), m.desc()));
                    }
            }
        return r;
    }

    // class of e_i (x) f_j
    Vec<K> star(std::size_t i, std::size_t j) const {
        return quot.project(vec_unit<K>(ambient_dim(), tensor_index(i, j, n.dim()), m.desc()));
    }

    Vec<K> star_of(const Vec<K>& mv, const Vec<K>& nv) const {
        return quot.project(kron(mv, nv, m.desc()));
    }
};

template <ExactField K>
TensorProduct<K> tensor_product(const HomLieAlgebra<K>& m, const HomLieAlgebra<K>& n,
                                const HomAction<K>& act_mn, const HomAction<K>& act_nm) {
    {
        auto v1 = validate_action(act_mn.tensor(), m, n);
        auto v2 = validate_action(act_nm.tensor(), n, m);
        if (!v1.ok() || !v2.ok())
            throw PreconditionViolated("tensor_product: actions are not Hom-actions");
    }
    TensorProduct<K> t;
    t.m = m;
    t.n = n;
    t.act_mn = act_mn;
    t.act_nm = act_nm;
    t.d = build_D(m, n, act_mn, act_nm);
    t.quot = PresentedQuotient<K>(t.d);

    const std::size_t amb = t.ambient_dim();
    const auto desc = m.desc();

    // well-definedness certificate: the bracket absorbs D on both sides
    for (std::size_t r = 0; r < t.d.dim(); ++r) {
        Vec<K> rel = t.d.basis_vector(r);
        for (std::size_t v = 0; v < amb; ++v) {
            Vec<K> ev = vec_unit<K>(amb, v, desc);
            if (!t.d.contains(t.ambient_bracket(rel, ev)))
                throw InternalInconsistency("bracket(D, ambient) escaped D");
            if (!t.d.contains(t.ambient_bracket(ev, rel)))
                throw InternalInconsistency("bracket(ambient, D) escaped D");
        }
    }
    Matrix<K> alpha_amb = kron_matrix(m.alpha(), n.alpha());
    if (!t.quot.maps_relations_into(alpha_amb, t.d))
        throw InternalInconsistency("alpha_M (x) alpha_N does not preserve D");

    const std::size_t q = t.quot.dim();
    Tensor3<K> c(q, q, q, desc);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            c.set_slice(a, b,
                        t.quot.project(t.ambient_bracket(t.quot.lift(vec_unit<K>(q, a, desc)),
                                                         t.quot.lift(vec_unit<K>(q, b, desc)))));
    Matrix<K> alpha_q = t.quot.induced_endo(alpha_amb);
    auto val = validate_hom_lie(q, c, alpha_q);
    if (!val.ok())
        throw InternalInconsistency("tensor product failed Hom-Lie validation (axiom " +
                                    val.violations.front().axiom + ")");
    t.result = *val.value;
    return t;
}

template <ExactField K>
struct PsiReport {
    Matrix<K> psi_m, psi_n;            // quotient coords -> M / N coords
    bool psi_m_morphism = false, psi_n_morphism = false;
    Subspace<K> ker_m, ker_n;          // subspaces of the tensor product
    Subspace<K> center;                // Z(M * N)
    bool ker_m_central = false, ker_n_central = false;
    bool induced_action_trivial_m = false, induced_action_trivial_n = false;
};

// Lemma 2.12 b): the actions of M and N on M * N.
template <ExactField K>
HomAction<K> induced_action_on_tensor(const TensorProduct<K>& t, bool side_m) {
    const std::size_t nm = t.m.dim(), nn = t.n.dim(), q = t.quot.dim();
    const auto desc = t.m.desc();
    const std::size_t actor_dim = side_m ? nm : nn;
    Tensor3<K> a(actor_dim, q, q, desc);
    for (std::size_t i = 0; i < actor_dim; ++i)
        for (std::size_t qq = 0; qq < q; ++qq) {
            Vec<K> amb = t.quot.lift(vec_unit<K>(q, qq, desc));
            Vec<K> out = vec_zero<K>(nm * nn, desc);
            for (std::size_t k = 0; k < nm; ++k)
                for (std::size_t l = 0; l < nn; ++l) {
                    const K& ckl = amb[tensor_index(k, l, nn)];
                    if (ckl.is_zero()) continue;
                    Vec<K> term;
                    if (side_m) {
                        // ^{m'}(m (x) n) = [m', m] (x) alpha_N(n) + alpha_M(m) (x) ^{m'}n
                        term = kron(t.m.bracket(i, k), t.n.alpha().col(l), desc);
                        term = vec_add(term,
                                       kron(t.m.alpha().col(k), t.act_mn.act(i, l), desc));
                    } else {
                        // ^{n'}(m (x) n) = ^{n'}m (x) alpha_N(n) + alpha_M(m) (x) [n', n]
                        term = kron(t.act_nm.act(i, k), t.n.alpha().col(l), desc);
                        term = vec_add(term, kron(t.m.alpha().col(k), t.n.bracket(i, l), desc));
                    }
                    vec_add_scaled(out, ckl, term);
                }
            a.set_slice(i, qq, t.quot.project(out));
        }
    return HomAction<K>(side_m ? t.m : t.n, t.result, std::move(a));
}

template <ExactField K>
PsiReport<K> psi_maps(const TensorProduct<K>& t) {
    const std::size_t nm = t.m.dim(), nn = t.n.dim();
    const auto desc = t.m.desc();
    PsiReport<K> rep;
    Matrix<K> psi_m_amb(nm, nm * nn, desc), psi_n_amb(nn, nm * nn, desc);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nn; ++j) {
            psi_m_amb.set_col(tensor_index(i, j, nn), vec_neg(t.act_nm.act(j, i)));
            psi_n_amb.set_col(tensor_index(i, j, nn), t.act_mn.act(i, j));
        }
    for (std::size_t r = 0; r < t.d.dim(); ++r) {
        if (!vec_is_zero(psi_m_amb.apply(t.d.basis_vector(r))))
            throw InternalInconsistency("psi_M does not annihilate D");
        if (!vec_is_zero(psi_n_amb.apply(t.d.basis_vector(r))))
            throw InternalInconsistency("psi_N does not annihilate D");
    }
    rep.psi_m = psi_m_amb * t.quot.section();
    rep.psi_n = psi_n_amb * t.quot.section();
    rep.psi_m_morphism = check_morphism(rep.psi_m, t.result, t.m).ok();
    rep.psi_n_morphism = check_morphism(rep.psi_n, t.result, t.n).ok();
    rep.ker_m = Subspace<K>::kernel_of(rep.psi_m);
    rep.ker_n = Subspace<K>::kernel_of(rep.psi_n);
    rep.center = t.result.center();
    rep.ker_m_central = rep.center.contains(rep.ker_m);
    rep.ker_n_central = rep.center.contains(rep.ker_n);

    // Lemma 2.12 d): Im psi acts trivially on Ker psi via the induced actions
    HomAction<K> act_m_t = induced_action_on_tensor(t, true);
    HomAction<K> act_n_t = induced_action_on_tensor(t, false);
    Subspace<K> im_m = Subspace<K>::image_of(rep.psi_m);
    Subspace<K> im_n = Subspace<K>::image_of(rep.psi_n);
    rep.induced_action_trivial_m = true;
    for (std::size_t a = 0; a < im_m.dim() && rep.induced_action_trivial_m; ++a)
        for (std::size_t b = 0; b < rep.ker_m.dim(); ++b)
            if (!vec_is_zero(act_m_t.act_of(im_m.basis_vector(a), rep.ker_m.basis_vector(b)))) {
                rep.induced_action_trivial_m = false;
                break;
            }
    rep.induced_action_trivial_n = true;
    for (std::size_t a = 0; a < im_n.dim() && rep.induced_action_trivial_n; ++a)
        for (std::size_t b = 0; b < rep.ker_n.dim(); ++b)
            if (!vec_is_zero(act_n_t.act_of(im_n.basis_vector(a), rep.ker_n.basis_vector(b)))) {
                rep.induced_action_trivial_n = false;
                break;
            }
    return rep;
}

// Lemma 2.12 e) identities, checked on all basis pairs; returns the first
// failing identity (i, ii, iii) or 0.
template <ExactField K>
int lemma_2_12_e_defect(const TensorProduct<K>& t) {
    PsiReport<K> psi = psi_maps(t);
    HomAction<K> act_m_t = induced_action_on_tensor(t, true);
    HomAction<K> act_n_t = induced_action_on_tensor(t, false);
    const std::size_t q = t.quot.dim();
    const auto desc = t.m.desc();
    Matrix<K> alpha_t = t.result.alpha();
    for (std::size_t i = 0; i < t.m.dim(); ++i)
        for (std::size_t a = 0; a < q; ++a) {
            Vec<K> lhs = psi.psi_m.apply(act_m_t.act(i, a));
            Vec<K> rhs = t.m.bracket_of(t.m.alpha().col(i), psi.psi_m.col(a));
            if (!(lhs == rhs)) return 1;
        }
    for (std::size_t i = 0; i < t.n.dim(); ++i)
        for (std::size_t a = 0; a < q; ++a) {
            Vec<K> lhs = psi.psi_n.apply(act_n_t.act(i, a));
            Vec<K> rhs = t.n.bracket_of(t.n.alpha().col(i), psi.psi_n.col(a));
            if (!(lhs == rhs)) return 2;
        }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            Vec<K> ea = vec_unit<K>(q, a, desc);
            Vec<K> eb = vec_unit<K>(q, b, desc);
            Vec<K> via_m = act_m_t.act_of(psi.psi_m.col(a), eb);
            Vec<K> via_n = act_n_t.act_of(psi.psi_n.col(a), eb);
            Vec<K> br = t.result.bracket_of(alpha_t.apply(ea), eb);
            if (!(via_m == br) || !(via_n == br)) return 3;
        }
    return 0;
}

// f * g for action-preserving morphisms f: M -> M', g: N -> N'.
template <ExactField K>
HomMorphism<K> functorial_tensor(const Matrix<K>& f, const Matrix<K>& g,
                                 const TensorProduct<K>& src, const TensorProduct<K>& tgt) {
    // preservation: f(^n m) = ^{g(n)} f(m) and g(^m n) = ^{f(m)} g(n)
    for (std::size_t j = 0; j < src.n.dim(); ++j)
        for (std::size_t i = 0; i < src.m.dim(); ++i) {
            Vec<K> lhs = f.apply(src.act_nm.act(j, i));
            Vec<K> rhs = tgt.act_nm.act_of(g.col(j), f.col(i));
            if (!(lhs == rhs))
                throw PreconditionViolated("functorial_tensor: f does not preserve the N-action at (n_" +
                                           std::to_string(j + 1) + ", m_" + std::to_string(i + 1) + ")");
            lhs = g.apply(src.act_mn.act(i, j));
            rhs = tgt.act_mn.act_of(f.col(i), g.col(j));
            if (!(lhs == rhs))
                throw PreconditionViolated("functorial_tensor: g does not preserve the M-action at (m_" +
                                           std::to_string(i + 1) + ", n_" + std::to_string(j + 1) + ")");
        }
    Matrix<K> amb = kron_matrix(f, g);
    if (!src.quot.maps_relations_into(amb, tgt.d))
        throw InternalInconsistency("f (x) g does not map D into D'");
    Matrix<K> induced = tgt.quot.projection() * amb * src.quot.section();
    auto chk = check_morphism(induced, src.result, tgt.result);
    if (!chk.ok()) throw InternalInconsistency("f * g is not a morphism");
    return *chk.value;
}

// The symmetry M * N ~= N * M, m * n -> -(n * m).  The sign makes the
// pairing axiom c) land exactly on a family-d) relation; the unsigned swap is
// not a morphism (visible already on the so(3) self-tensor).
template <ExactField K>
struct SwapIso {
    HomMorphism<K> map;
    bool bijective = false;
};

template <ExactField K>
SwapIso<K> swap_iso(const TensorProduct<K>& t_mn, const TensorProduct<K>& t_nm) {
    const std::size_t nm = t_mn.m.dim(), nn = t_mn.n.dim();
    const auto desc = t_mn.m.desc();
    Matrix<K> sw(nn * nm, nm * nn, desc);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            sw.at(tensor_index(j, i, nm), tensor_index(i, j, nn)) = -K::one(desc);
    if (!t_mn.quot.maps_relations_into(sw, t_nm.d))
        throw InternalInconsistency("swap does not map D(M,N) into D(N,M)");
    Matrix<K> induced = t_nm.quot.projection() * sw * t_mn.quot.section();
    auto chk = check_morphism(induced, t_mn.result, t_nm.result);
    if (!chk.ok()) throw InternalInconsistency("swap is not a morphism");
    SwapIso<K> iso{*chk.value, false};
    iso.bijective =
        t_mn.dim() == t_nm.dim() && rank(induced) == t_mn.dim();
    return iso;
}

// Hom-Lie pairings (Def 2.5) and their factorization through M * N.
template <ExactField K>
struct PairingReport {
    bool is_pairing = false;
    std::vector<AxiomViolation> violations;
    std::optional<Matrix<K>> induced;   // theta with theta o star = h
    bool factors = false;
    bool morphism = false;
};

template <ExactField K>
PairingReport<K> pairing_check_and_factor(const Tensor3<K>& h, const HomLieAlgebra<K>& target,
                                          const TensorProduct<K>& t) {
    const std::size_t nm = t.m.dim(), nn = t.n.dim();
    if (h.n1() != nm || h.n2() != nn || h.n3() != target.dim())
        throw ShapeError("pairing tensor shape mismatch");
    PairingReport<K> rep;
    const auto desc = t.m.desc();

    // a) h([m,m'], alpha_N(n)) = h(alpha_M(m), ^{m'}n) - h(alpha_M(m'), ^m n)
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            for (std::size_t s = 0; s < nn; ++s) {
                Vec<K> lhs = h.apply(t.m.bracket(i, j), t.n.alpha().col(s));
                Vec<K> rhs = h.apply(t.m.alpha().col(i), t.act_mn.act(j, s));
                rhs = vec_sub(rhs, h.apply(t.m.alpha().col(j), t.act_mn.act(i, s)));
                Vec<K> r = vec_sub(lhs, rhs);
                if (!vec_is_zero(r))
                    rep.violations.push_back({"pairing-a", {i + 1, j + 1, s + 1}, residual_strings(r)});
            }
    // b) h(alpha_M(m), [n,n']) = h(^{n'}m, alpha_N(n)) - h(^n m, alpha_N(n'))
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t u = 0; u < nn; ++u) {
                Vec<K> lhs = h.apply(t.m.alpha().col(i), t.n.bracket(s, u));
                Vec<K> rhs = h.apply(t.act_nm.act(u, i), t.n.alpha().col(s));
                rhs = vec_sub(rhs, h.apply(t.act_nm.act(s, i), t.n.alpha().col(u)));
                Vec<K> r = vec_sub(lhs, rhs);
                if (!vec_is_zero(r))
                    rep.violations.push_back({"pairing-b", {i + 1, s + 1, u + 1}, residual_strings(r)});
            }
    // c) h(^n m, ^{m'}n') = -[h(m,n), h(m',n')]
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s)
            for (std::size_t k = 0; k < nm; ++k)
                for (std::size_t u = 0; u < nn; ++u) {
                    Vec<K> lhs = h.apply(t.act_nm.act(s, i), t.act_mn.act(k, u));
                    Vec<K> rhs = vec_neg(target.bracket_of(h.slice(i, s), h.slice(k, u)));
                    Vec<K> r = vec_sub(lhs, rhs);
                    if (!vec_is_zero(r))
                        rep.violations.push_back(
                            {"pairing-c", {i + 1, s + 1, k + 1, u + 1}, residual_strings(r)});
                }
    // d) h o (alpha_M x alpha_N) = alpha_L o h
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s) {
            Vec<K> lhs = h.apply(t.m.alpha().col(i), t.n.alpha().col(s));
            Vec<K> rhs = target.alpha_of(h.slice(i, s));
            Vec<K> r = vec_sub(lhs, rhs);
            if (!vec_is_zero(r))
                rep.violations.push_back({"pairing-d", {i + 1, s + 1}, residual_strings(r)});
        }
    rep.is_pairing = rep.violations.empty();
    if (!rep.is_pairing) return rep;

    Matrix<K> h_amb(target.dim(), nm * nn, desc);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t s = 0; s < nn; ++s) h_amb.set_col(tensor_index(i, s, nn), h.slice(i, s));
    rep.factors = true;
    for (std::size_t r = 0; r < t.d.dim(); ++r)
        if (!vec_is_zero(h_amb.apply(t.d.basis_vector(r)))) rep.factors = false;
    if (!rep.factors) return rep;
    Matrix<K> theta = h_amb * t.quot.section();
    rep.induced = theta;
    // theta o star = h holds by construction on classes; checked directly
    bool agrees = true;
    for (std::size_t i = 0; i < nm && agrees; ++i)
        for (std::size_t s = 0; s < nn && agrees; ++s)
            agrees = theta.apply(t.star(i, s)) == h.slice(i, s);
    if (!agrees) throw InternalInconsistency("theta o star != h");
    rep.morphism = check_morphism(theta, t.result, target).ok();
    return rep;
}

// Prop 2.9: a short exact sequence M1 >-f-> M2 -g->> M3 and a Hom-Lie algebra N
// with mutually compatible actions preserved by f and g yield an exact sequence
//   M1 * N -> M2 * N -> M3 * N -> 0.
template <ExactField K>
struct Prop29Input {
    HomLieAlgebra<K> m1, m2, m3, n;
    Matrix<K> f, g;
    HomAction<K> m1n, nm1, m2n, nm2, m3n, nm3;  // actions both ways per factor
};

template <ExactField K>
struct TensorExactnessReport {
    bool right_surjective = false;
    bool middle_exact = false;
    std::size_t dim_left = 0, dim_mid = 0, dim_right = 0;
    bool ok() const { return right_surjective && middle_exact; }
};

template <ExactField K>
TensorExactnessReport<K> verify_prop_2_9(const Prop29Input<K>& in) {
    if (rank(in.g) != in.m3.dim()) throw PreconditionViolated("prop 2.9: g not surjective");
    if (Subspace<K>::kernel_of(in.f).dim() != 0)
        throw PreconditionViolated("prop 2.9: f not injective");
    if (!(Subspace<K>::image_of(in.f) == Subspace<K>::kernel_of(in.g)))
        throw PreconditionViolated("prop 2.9: sequence not exact at M2");
    if (!check_morphism(in.f, in.m1, in.m2).ok() || !check_morphism(in.g, in.m2, in.m3).ok())
        throw PreconditionViolated("prop 2.9: f or g is not a morphism");

    TensorProduct<K> t1 = tensor_product(in.m1, in.n, in.m1n, in.nm1);
    TensorProduct<K> t2 = tensor_product(in.m2, in.n, in.m2n, in.nm2);
    TensorProduct<K> t3 = tensor_product(in.m3, in.n, in.m3n, in.nm3);
    Matrix<K> id_n = Matrix<K>::identity(in.n.dim(), in.n.desc());
    HomMorphism<K> f_star = functorial_tensor(in.f, id_n, t1, t2);
    HomMorphism<K> g_star = functorial_tensor(in.g, id_n, t2, t3);

    TensorExactnessReport<K> rep;
    rep.dim_left = t1.dim();
    rep.dim_mid = t2.dim();
    rep.dim_right = t3.dim();
    rep.right_surjective = rank(g_star.matrix) == t3.dim();
    rep.middle_exact =
        Subspace<K>::image_of(f_star.matrix) == Subspace<K>::kernel_of(g_star.matrix);
    return rep;
}

// Prop 2.10: for an ideal M of L,
//   (M*L) x| (L*M) -sigma-> L*L -tau-> L/M * L/M -> 0
// is exact; sigma(x, y) = sigma'(x) + sigma''(alpha_{L*M}(y)).
template <ExactField K>
struct Prop210Result {
    TensorExactnessReport<K> report;
    TensorProduct<K> t_ml, t_lm, t_ll, t_qq;
    Matrix<K> sigma;                    // (M*L) (+) (L*M) -> L*L
    Matrix<K> tau;                      // L*L -> Q*Q
    QuotientAlgebra<K> quotient;
};

template <ExactField K>
Prop210Result<K> verify_prop_2_10(const HomLieAlgebra<K>& l, const Subspace<K>& m_space) {
    if (!is_ideal(l, m_space))
        throw PreconditionViolated("prop 2.10: the given subspace is not an alpha-invariant ideal");
    Prop210Result<K> out;
    SubAlgebra<K> m_sub = sub_algebra(l, m_space);
    out.quotient = quotient_algebra(l, m_space);
    const auto& q_alg = out.quotient.alg;

    HomAction<K> l_on_m = bracket_action_on_ideal(l, m_sub);
    HomAction<K> m_on_l = bracket_action_of_sub(m_sub, l);
    out.t_ml = tensor_product(m_sub.alg, l, m_on_l, l_on_m);
    out.t_lm = tensor_product(l, m_sub.alg, l_on_m, m_on_l);
    out.t_ll = tensor_product(l, l, adjoint_action(l), adjoint_action(l));
    out.t_qq = tensor_product(q_alg, q_alg, adjoint_action(q_alg), adjoint_action(q_alg));

    Matrix<K> id_l = Matrix<K>::identity(l.dim(), l.desc());
    HomMorphism<K> sigma1 = functorial_tensor(m_sub.inclusion, id_l, out.t_ml, out.t_ll);
    HomMorphism<K> sigma2 = functorial_tensor(id_l, m_sub.inclusion, out.t_lm, out.t_ll);
    HomMorphism<K> tau =
        functorial_tensor(out.quotient.projection.matrix, out.quotient.projection.matrix,
                          out.t_ll, out.t_qq);
    out.tau = tau.matrix;

    // sigma(x, y) = sigma'(x) + sigma''(alpha_{L*M}(y))
    Matrix<K> second = sigma2.matrix * out.t_lm.result.alpha();
    out.sigma = sigma1.matrix.hstack(second);

    out.report.dim_left = out.t_ml.dim() + out.t_lm.dim();
    out.report.dim_mid = out.t_ll.dim();
    out.report.dim_right = out.t_qq.dim();
    out.report.right_surjective = rank(out.tau) == out.t_qq.dim();
    out.report.middle_exact =
        Subspace<K>::image_of(out.sigma) == Subspace<K>::kernel_of(out.tau);
    return out;
}

}  // namespace homlie
