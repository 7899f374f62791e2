#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlie/hom_lie.hpp"

namespace homlie {

// Hom-action of (L, alpha_L) on (M, alpha_M): tensor a[i][j][k] meaning
// ^{e_i} m_j = sum_k a[i][j][k] m_k.
template <ExactField K>
class HomAction {
public:
    HomAction() = default;
    HomAction(HomLieAlgebra<K> actor, HomLieAlgebra<K> actee, Tensor3<K> tensor)
        : actor_(std::move(actor)), actee_(std::move(actee)), a_(std::move(tensor)) {}

    const HomLieAlgebra<K>& actor() const { return actor_; }
    const HomLieAlgebra<K>& actee() const { return actee_; }
    const Tensor3<K>& tensor() const { return a_; }

    Vec<K> act(std::size_t i, std::size_t j) const { return a_.slice(i, j); }
    Vec<K> act_of(const Vec<K>& x, const Vec<K>& m) const { return a_.apply(x, m); }

    // matrix of m -> ^x m for a fixed actor vector
    Matrix<K> act_matrix(const Vec<K>& x) const {
        const std::size_t nm = actee_.dim();
        Matrix<K> r(nm, nm, actee_.desc());
        for (std::size_t j = 0; j < nm; ++j)
            r.set_col(j, act_of(x, vec_unit<K>(nm, j, actee_.desc())));
        return r;
    }

    bool is_trivial() const {
        for (std::size_t i = 0; i < actor_.dim(); ++i)
            for (std::size_t j = 0; j < actee_.dim(); ++j)
                if (!vec_is_zero(a_.slice(i, j))) return false;
        return true;
    }

    // span of all action values ^L M
    Subspace<K> value_span() const {
        std::vector<Vec<K>> gens;
        for (std::size_t i = 0; i < actor_.dim(); ++i)
            for (std::size_t j = 0; j < actee_.dim(); ++j) gens.push_back(a_.slice(i, j));
        return Subspace<K>::span(gens, actee_.dim(), actee_.desc());
    }

private:
    HomLieAlgebra<K> actor_, actee_;
    Tensor3<K> a_;
};

template <ExactField K>
Validated<HomAction<K>> validate_action(const Tensor3<K>& a, const HomLieAlgebra<K>& l,
                                        const HomLieAlgebra<K>& m) {
    if (a.n1() != l.dim() || a.n2() != m.dim() || a.n3() != m.dim())
        throw ShapeError("action tensor shape mismatch");
    Validated<HomAction<K>> out;
    HomAction<K> cand(l, m, a);

    // a) ^{[x,y]} alpha_M(m) = ^{alpha_L(x)}(^y m) - ^{alpha_L(y)}(^x m)
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j)
            for (std::size_t s = 0; s < m.dim(); ++s) {
                Vec<K> ms = vec_unit<K>(m.dim(), s, m.desc());
                Vec<K> lhs = cand.act_of(l.bracket(i, j), m.alpha_of(ms));
                Vec<K> rhs = cand.act_of(l.alpha().col(i), cand.act(j, s));
                rhs = vec_sub(rhs, cand.act_of(l.alpha().col(j), cand.act(i, s)));
                Vec<K> r = vec_sub(lhs, rhs);
                if (!vec_is_zero(r))
                    out.violations.push_back({"action-a", {i + 1, j + 1, s + 1}, residual_strings(r)});
            }

    // b) ^{alpha_L(x)} [m, m'] = [^x m, alpha_M(m')] + [alpha_M(m), ^x m']
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t s = 0; s < m.dim(); ++s)
            for (std::size_t t = s + 1; t < m.dim(); ++t) {
                Vec<K> mt = vec_unit<K>(m.dim(), t, m.desc());
                Vec<K> msv = vec_unit<K>(m.dim(), s, m.desc());
                Vec<K> lhs = cand.act_of(l.alpha().col(i), m.bracket(s, t));
                Vec<K> rhs = m.bracket_of(cand.act(i, s), m.alpha_of(mt));
                rhs = vec_add(rhs, m.bracket_of(m.alpha_of(msv), cand.act(i, t)));
                Vec<K> r = vec_sub(lhs, rhs);
                if (!vec_is_zero(r))
                    out.violations.push_back({"action-b", {i + 1, s + 1, t + 1}, residual_strings(r)});
            }

    // c) alpha_M(^x m) = ^{alpha_L(x)} alpha_M(m)
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t s = 0; s < m.dim(); ++s) {
            Vec<K> ms = vec_unit<K>(m.dim(), s, m.desc());
            Vec<K> r = vec_sub(m.alpha_of(cand.act(i, s)),
                               cand.act_of(l.alpha().col(i), m.alpha_of(ms)));
            if (!vec_is_zero(r))
                out.violations.push_back({"action-c", {i + 1, s + 1}, residual_strings(r)});
        }

    if (out.violations.empty()) out.value = std::move(cand);
    return out;
}

template <ExactField K>
HomAction<K> trivial_action(const HomLieAlgebra<K>& l, const HomLieAlgebra<K>& m) {
    return HomAction<K>(l, m, Tensor3<K>(l.dim(), m.dim(), m.dim(), m.desc()));
}

// L acting on itself by its own bracket
template <ExactField K>
HomAction<K> adjoint_action(const HomLieAlgebra<K>& l) {
    return HomAction<K>(l, l, l.bracket_tensor());
}

// Bracket action of the whole algebra on an ideal, expressed in the ideal's
// echelon coordinates (actee = the ideal as its own algebra).
template <ExactField K>
HomAction<K> bracket_action_on_ideal(const HomLieAlgebra<K>& l, const SubAlgebra<K>& ideal) {
    const std::size_t n = l.dim(), m = ideal.alg.dim();
    Tensor3<K> a(n, m, m, l.desc());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.set_slice(i, j,
                        ideal.space.coords_or_throw(
                            l.bracket_of(vec_unit<K>(n, i, l.desc()), ideal.space.basis_vector(j)),
                            "bracket does not preserve the ideal"));
    return HomAction<K>(l, ideal.alg, std::move(a));
}

// Bracket action of a subalgebra/ideal on the whole algebra.
template <ExactField K>
HomAction<K> bracket_action_of_sub(const SubAlgebra<K>& sub, const HomLieAlgebra<K>& l) {
    const std::size_t m = sub.alg.dim(), n = l.dim();
    Tensor3<K> a(m, n, n, l.desc());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.set_slice(i, j, l.bracket_of(sub.space.basis_vector(i), vec_unit<K>(n, j, l.desc())));
    return HomAction<K>(sub.alg, l, std::move(a));
}

// Pullback of an action along a morphism f: K' -> L (the actor side).
template <ExactField K>
HomAction<K> pullback_action(const HomLieAlgebra<K>& src, const Matrix<K>& f,
                             const HomAction<K>& act) {
    const std::size_t n = src.dim(), m = act.actee().dim();
    Tensor3<K> a(n, m, m, act.actee().desc());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.set_slice(i, j, act.act_of(f.col(i), vec_unit<K>(m, j, act.actee().desc())));
    return HomAction<K>(src, act.actee(), std::move(a));
}

struct CompatibilityWitness {
    int condition = 0;                       // 1 or 2, in the order of Def 2.1
    std::vector<std::size_t> indices;        // 1-based (m, n, primed) basis indices
    std::vector<std::string> lhs, rhs;
};

template <ExactField K>
struct CompatibilityReport {
    bool compatible = true;
    std::optional<CompatibilityWitness> witness;
};

// Def 2.1: ^{(^m n)} m' = [m', ^n m]  and  ^{(^n m)} n' = [n', ^m n].
// Both sides are trilinear once the inner action value is expanded, so basis
// triples suffice.  The first failing triple in lexicographic order is reported.
template <ExactField K>
CompatibilityReport<K> check_compatibility(const HomAction<K>& act_mn, const HomAction<K>& act_nm) {
    const auto& m_alg = act_mn.actor();
    const auto& n_alg = act_mn.actee();
    CompatibilityReport<K> rep;
    auto mismatch = [&](int cond, std::size_t i, std::size_t j, std::size_t k, const Vec<K>& lhs,
                        const Vec<K>& rhs) {
        rep.compatible = false;
        rep.witness = CompatibilityWitness{
            cond, {i + 1, j + 1, k + 1}, residual_strings(lhs), residual_strings(rhs)};
    };
    for (std::size_t i = 0; i < m_alg.dim() && rep.compatible; ++i)
        for (std::size_t j = 0; j < n_alg.dim() && rep.compatible; ++j) {
            Vec<K> mn = act_mn.act(i, j);   // ^{m_i} n_j in N
            Vec<K> nm = act_nm.act(j, i);   // ^{n_j} m_i in M
            for (std::size_t k = 0; k < m_alg.dim() && rep.compatible; ++k) {
                Vec<K> mk = vec_unit<K>(m_alg.dim(), k, m_alg.desc());
                Vec<K> lhs = act_nm.act_of(mn, mk);
                Vec<K> rhs = m_alg.bracket_of(mk, nm);
                if (!(lhs == rhs)) mismatch(1, i, j, k, lhs, rhs);
            }
            for (std::size_t k = 0; k < n_alg.dim() && rep.compatible; ++k) {
                Vec<K> nk = vec_unit<K>(n_alg.dim(), k, n_alg.desc());
                Vec<K> lhs = act_mn.act_of(nm, nk);
                Vec<K> rhs = n_alg.bracket_of(nk, mn);
                if (!(lhs == rhs)) mismatch(2, i, j, k, lhs, rhs);
            }
        }
    return rep;
}

// Semi-direct product M x| L with
//   [(m1,x1),(m2,x2)] = ([m1,m2] + ^{alpha_L(x1)} m2 - ^{alpha_L(x2)} m1, [x1,x2])
// and alpha = alpha_M (+) alpha_L.  M occupies the first block of coordinates.
template <ExactField K>
struct SemidirectProduct {
    HomLieAlgebra<K> alg;
    Matrix<K> incl_m;   // i : M -> M x| L
    Matrix<K> proj_l;   // pi : M x| L -> L
    Matrix<K> sect_l;   // s : L -> M x| L, pi o s = id
};

template <ExactField K>
SemidirectProduct<K> semidirect(const HomLieAlgebra<K>& m, const HomLieAlgebra<K>& l,
                                const HomAction<K>& act) {
    auto va = validate_action(act.tensor(), l, m);
    if (!va.ok()) throw PreconditionViolated("semidirect: not a Hom-action (axiom " +
                                             va.violations.front().axiom + ")");
    const std::size_t nm = m.dim(), nl = l.dim(), n = nm + nl;
    const auto desc = m.desc();
    auto embed_m = [&](const Vec<K>& v) {
        Vec<K> r = vec_zero<K>(n, desc);
        for (std::size_t i = 0; i < nm; ++i) r[i] = v[i];
        return r;
    };
    auto part_m = [&](std::size_t i) { return i < nm; };

    Tensor3<K> c(n, n, n, desc);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> mv = vec_zero<K>(n, desc);
            Vec<K> lv = vec_zero<K>(nl, desc);
            if (part_m(i) && part_m(j)) {
                mv = embed_m(m.bracket(i, j));
            } else if (!part_m(i) && part_m(j)) {
                mv = embed_m(act.act_of(l.alpha().col(i - nm), vec_unit<K>(nm, j, desc)));
            } else if (part_m(i) && !part_m(j)) {
                mv = vec_neg(embed_m(act.act_of(l.alpha().col(j - nm), vec_unit<K>(nm, i, desc))));
            } else {
                lv = l.bracket(i - nm, j - nm);
            }
            for (std::size_t k = 0; k < nl; ++k) mv[nm + k] += lv[k];
            c.set_slice(i, j, mv);
        }

    Matrix<K> alpha(n, n, desc);
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j) alpha.at(i, j) = m.alpha().at(i, j);
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nl; ++j) alpha.at(nm + i, nm + j) = l.alpha().at(i, j);

    auto v = validate_hom_lie(n, c, alpha);
    if (!v.ok()) throw InternalInconsistency("semidirect product failed validation");

    Matrix<K> incl(n, nm, desc), proj(nl, n, desc), sect(n, nl, desc);
    for (std::size_t i = 0; i < nm; ++i) incl.at(i, i) = K::one(desc);
    for (std::size_t i = 0; i < nl; ++i) {
        proj.at(i, nm + i) = K::one(desc);
        sect.at(nm + i, i) = K::one(desc);
    }
    return SemidirectProduct<K>{*v.value, std::move(incl), std::move(proj), std::move(sect)};
}

// Der_alpha(L, M) for a Hom-module (M, action): linear maps d with
//   d[x,y] = ^{alpha_L(x)} d(y) - ^{alpha_L(y)} d(x)   and   alpha_M o d = d o alpha_L.
// Unknowns are vectorized row-major: entry (r, c) of d at index r*dim L + c.
template <ExactField K>
std::vector<Matrix<K>> derivation_space(const HomLieAlgebra<K>& l, const HomAction<K>& mod) {
    if (!mod.actee().is_abelian()) throw PreconditionViolated("derivations need a Hom-module (abelian actee)");
    const std::size_t n = l.dim(), m = mod.actee().dim();
    const auto desc = l.desc();
    const std::size_t unknowns = m * n;
    std::vector<Vec<K>> eqs;

    auto var = [&](std::size_t r, std::size_t c) { return r * n + c; };

    // condition a) on pairs i < j
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec<K> br = l.bracket(i, j);
            Matrix<K> ai = mod.act_matrix(l.alpha().col(i));
            Matrix<K> aj = mod.act_matrix(l.alpha().col(j));
            for (std::size_t row = 0; row < m; ++row) {
                Vec<K> eq = vec_zero<K>(unknowns, desc);
                for (std::size_t k = 0; k < n; ++k) eq[var(row, k)] += br[k];
                // - (a_i * D e_j)_row  + (a_j * D e_i)_row
                for (std::size_t t = 0; t < m; ++t) {
                    eq[var(t, j)] -= ai.at(row, t);
                    eq[var(t, i)] += aj.at(row, t);
                }
                eqs.push_back(std::move(eq));
            }
        }

    // condition b): alpha_M D - D alpha_L = 0
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t col = 0; col < n; ++col) {
            Vec<K> eq = vec_zero<K>(unknowns, desc);
            for (std::size_t t = 0; t < m; ++t) eq[var(t, col)] += mod.actee().alpha().at(row, t);
            for (std::size_t t = 0; t < n; ++t) eq[var(row, t)] -= l.alpha().at(t, col);
            eqs.push_back(std::move(eq));
        }

    Subspace<K> sol = Subspace<K>::kernel_of(
        Matrix<K>::from_rows(eqs, unknowns, desc));
    std::vector<Matrix<K>> basis;
    for (std::size_t b = 0; b < sol.dim(); ++b) {
        Vec<K> v = sol.basis_vector(b);
        Matrix<K> d(m, n, desc);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) d.at(r, c) = v[var(r, c)];
        basis.push_back(std::move(d));
    }
    return basis;
}

template <ExactField K>
bool is_derivation(const HomLieAlgebra<K>& l, const HomAction<K>& mod, const Matrix<K>& d) {
    const std::size_t n = l.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec<K> lhs = d.apply(l.bracket(i, j));
            Vec<K> rhs = mod.act_of(l.alpha().col(i), d.col(j));
            rhs = vec_sub(rhs, mod.act_of(l.alpha().col(j), d.col(i)));
            if (!(lhs == rhs)) return false;
        }
    return (mod.actee().alpha() * d) == (d * l.alpha());
}

// Prop 1.12: given f : K' -> L and a derivation d : K' -> M (for the action
// pulled back along f), h(x) = (d(x), f(x)) is the unique morphism into M x| L
// with pi o h = f and theta o h = d.
template <ExactField K>
Matrix<K> correpresent(const HomLieAlgebra<K>& src, const Matrix<K>& f, const Matrix<K>& d,
                       const HomLieAlgebra<K>& l, const HomAction<K>& mod) {
    HomAction<K> pulled = pullback_action(src, f, mod);
    if (!is_derivation(src, pulled, d))
        throw PreconditionViolated("correpresent: d is not a derivation for the pulled-back action");
    return d.vstack(f);
}

template <ExactField K>
std::pair<Matrix<K>, Matrix<K>> decompose_to_semidirect(const Matrix<K>& h, std::size_t nm) {
    Matrix<K> d(nm, h.cols(), h.desc());
    Matrix<K> f(h.rows() - nm, h.cols(), h.desc());
    for (std::size_t j = 0; j < h.cols(); ++j) {
        for (std::size_t i = 0; i < nm; ++i) d.at(i, j) = h.at(i, j);
        for (std::size_t i = nm; i < h.rows(); ++i) f.at(i - nm, j) = h.at(i, j);
    }
    return {std::move(d), std::move(f)};
}

// Theorem 1.13 verifier for a short exact sequence N >-> K' ->> L and a
// Hom-module M over L whose action satisfies ^{alpha_L(l)} m = ^l m.
struct Thm113Report {
    bool precondition_ok = true;
    std::optional<AxiomViolation> precondition_witness;
    std::size_t dim_der_l = 0, dim_der_k = 0, dim_hom = 0, dim_nab = 0;
    bool delta_injective = false;
    bool exact_at_der_k = false;
    bool ok() const { return precondition_ok && delta_injective && exact_at_der_k; }
};

template <ExactField K>
Thm113Report theorem_1_13(const HomLieAlgebra<K>& k_alg, const Matrix<K>& pi,
                          const HomLieAlgebra<K>& l, const HomAction<K>& mod) {
    Thm113Report rep;
    if (rank(pi) != l.dim()) throw PreconditionViolated("thm 1.13: pi is not surjective");
    auto pim = check_morphism(pi, k_alg, l);
    if (!pim.ok()) throw PreconditionViolated("thm 1.13: pi is not a morphism");
    auto va = validate_action(mod.tensor(), l, mod.actee());
    if (!va.ok() || !mod.actee().is_abelian())
        throw PreconditionViolated("thm 1.13: M is not a Hom-module over L");

    // the alpha-invariance condition on the action: ^{alpha(l)} m = ^l m
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = 0; j < mod.actee().dim(); ++j) {
            Vec<K> lhs = mod.act_of(l.alpha().col(i), vec_unit<K>(mod.actee().dim(), j, l.desc()));
            Vec<K> r = vec_sub(lhs, mod.act(i, j));
            if (!vec_is_zero(r)) {
                rep.precondition_ok = false;
                rep.precondition_witness =
                    AxiomViolation{"alpha-invariance of action", {i + 1, j + 1}, residual_strings(r)};
                return rep;
            }
        }

    const auto desc = l.desc();
    Subspace<K> n_space = Subspace<K>::kernel_of(pi);
    SubAlgebra<K> n_alg = sub_algebra(k_alg, n_space);  // Ker pi is an alpha-invariant ideal
    Subspace<K> nn = n_alg.alg.derived();
    PresentedQuotient<K> nab = PresentedQuotient<K>(nn);  // N^{ab} in N coordinates
    rep.dim_nab = nab.dim();

    // Hom-module structure of N^{ab} over L: ^l nbar = class of [x_l, n],
    // with x_l the deterministic solve_linear section of pi.
    std::vector<Matrix<K>> act_nab(l.dim(), Matrix<K>(nab.dim(), nab.dim(), desc));
    for (std::size_t i = 0; i < l.dim(); ++i) {
        auto xl = solve_linear(pi, vec_unit<K>(l.dim(), i, desc));
        if (!xl) throw InternalInconsistency("surjective pi has no preimage");
        Matrix<K> a(nab.dim(), nab.dim(), desc);
        for (std::size_t q = 0; q < nab.dim(); ++q) {
            Vec<K> n_coord = nab.lift(vec_unit<K>(nab.dim(), q, desc));
            Vec<K> n_amb = vec_zero<K>(k_alg.dim(), desc);
            for (std::size_t t = 0; t < n_space.dim(); ++t)
                vec_add_scaled(n_amb, n_coord[t], n_space.basis_vector(t));
            Vec<K> br = k_alg.bracket_of(*xl, n_amb);
            a.set_col(q, nab.project(n_space.coords_or_throw(br, "[x_l, N] left N")));
        }
        act_nab[i] = std::move(a);
    }

    HomAction<K> mod_k = pullback_action(k_alg, pi, mod);
    auto der_l = derivation_space(l, mod);
    auto der_k = derivation_space(k_alg, mod_k);
    rep.dim_der_l = der_l.size();
    rep.dim_der_k = der_k.size();

    const std::size_t nm = mod.actee().dim();
    // Hom_L(N^{ab}, M): F with F * act_nab(l) = act_M(l) * F for all basis l
    {
        const std::size_t unknowns = nm * nab.dim();
        std::vector<Vec<K>> eqs;
        for (std::size_t i = 0; i < l.dim(); ++i) {
            Matrix<K> am = mod.act_matrix(vec_unit<K>(l.dim(), i, desc));
            for (std::size_t r = 0; r < nm; ++r)
                for (std::size_t c = 0; c < nab.dim(); ++c) {
                    Vec<K> eq = vec_zero<K>(unknowns, desc);
                    for (std::size_t t = 0; t < nab.dim(); ++t)
                        eq[r * nab.dim() + t] += act_nab[i].at(t, c);
                    for (std::size_t t = 0; t < nm; ++t)
                        eq[t * nab.dim() + c] -= am.at(r, t);
                    eqs.push_back(std::move(eq));
                }
        }
        rep.dim_hom = Subspace<K>::kernel_of(Matrix<K>::from_rows(eqs, unknowns, desc)).dim();
    }

    // Delta(d) = d o pi and rho(delta) = delta restricted to N, taken on N^{ab}
    // representatives; both in vectorized Hom coordinates.
    const std::size_t hom_km = nm * k_alg.dim();
    auto vec_of = [&](const Matrix<K>& mat) {
        Vec<K> v = vec_zero<K>(mat.rows() * mat.cols(), desc);
        for (std::size_t r = 0; r < mat.rows(); ++r)
            for (std::size_t c = 0; c < mat.cols(); ++c) v[r * mat.cols() + c] = mat.at(r, c);
        return v;
    };
    std::vector<Vec<K>> im_delta_gens;
    for (const auto& d : der_l) im_delta_gens.push_back(vec_of(d * pi));
    Subspace<K> im_delta = Subspace<K>::span(im_delta_gens, hom_km, desc);
    rep.delta_injective = im_delta.dim() == der_l.size();

    // representatives of N^{ab} basis inside K'
    Matrix<K> reps(k_alg.dim(), nab.dim(), desc);
    for (std::size_t q = 0; q < nab.dim(); ++q) {
        Vec<K> n_coord = nab.lift(vec_unit<K>(nab.dim(), q, desc));
        Vec<K> amb = vec_zero<K>(k_alg.dim(), desc);
        for (std::size_t t = 0; t < n_space.dim(); ++t)
            vec_add_scaled(amb, n_coord[t], n_space.basis_vector(t));
        reps.set_col(q, amb);
    }
    std::vector<Vec<K>> der_k_vecs;
    for (const auto& d : der_k) der_k_vecs.push_back(vec_of(d));
    Subspace<K> der_k_space = Subspace<K>::span(der_k_vecs, hom_km, desc);
    // rho on vectorized Hom(K', M) is right multiplication by the representative
    // matrix; Ker rho is cut out inside the derivation space.
    {
        std::vector<Vec<K>> rows;
        for (std::size_t r = 0; r < nm; ++r)
            for (std::size_t c = 0; c < nab.dim(); ++c) {
                Vec<K> eq = vec_zero<K>(hom_km, desc);
                for (std::size_t t = 0; t < k_alg.dim(); ++t)
                    eq[r * k_alg.dim() + t] = reps.at(t, c);
                rows.push_back(std::move(eq));
            }
        Subspace<K> ker_rho_full = Subspace<K>::kernel_of(
            Matrix<K>::from_rows(rows, hom_km, desc));
        Subspace<K> ker_in_der = ker_rho_full.intersect(der_k_space);
        rep.exact_at_der_k = ker_in_der == im_delta;
    }
    return rep;
}

}  // namespace homlie
