#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "homlie/actions.hpp"
#include "homlie/tensor.hpp"

namespace homlie {

// Strictly increasing index tuples of length k out of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> wedge_tuples(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

// Expands a wedge of k arbitrary vectors in the increasing-tuple basis,
// with sign bookkeeping by sorting.
template <ExactField K>
Vec<K> wedge_expand(const std::vector<Vec<K>>& vs, std::size_t n,
                    const std::vector<std::vector<std::size_t>>& basis,
                    typename K::Desc desc) {
    const std::size_t k = vs.size();
    Vec<K> out = vec_zero<K>(basis.size(), desc);
    if (k == 0) {
        if (!out.empty()) out[0] = K::one(desc);
        return out;
    }
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        K coeff = K::one(desc);
        bool zero = false;
        for (std::size_t t = 0; t < k && !zero; ++t) {
            if (vs[t][idx[t]].is_zero()) zero = true;
            else coeff *= vs[t][idx[t]];
        }
        if (!zero) {
            std::vector<std::size_t> sorted = idx;
            bool repeat = false;
            int sign = 1;
            for (std::size_t a = 0; a < k && !repeat; ++a)
                for (std::size_t b = a + 1; b < k && !repeat; ++b) {
                    if (sorted[a] == sorted[b]) repeat = true;
                }
            if (!repeat) {
                // bubble-sort parity
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = a + 1; b < k; ++b)
                        if (sorted[a] > sorted[b]) {
                            std::swap(sorted[a], sorted[b]);
                            sign = -sign;
                        }
                auto pos = std::lower_bound(basis.begin(), basis.end(), sorted);
                std::size_t w = static_cast<std::size_t>(pos - basis.begin());
                out[w] += sign > 0 ? coeff : -coeff;
            }
        }
        std::size_t t = 0;
        while (t < k) {
            if (++idx[t] < n) break;
            idx[t] = 0;
            ++t;
        }
        if (t == k) break;
    }
    return out;
}

// C_n = M (x) Lambda^n L with the alpha-twisted boundary
//   d_n(m (x) x_1 ^ ... ^ x_n) =
//     sum_i (-1)^i ^{x_i}m (x) alpha(x_1) ^ ... ^ [omit i] ^ ... ^ alpha(x_n)
//   + sum_{i<j} (-1)^{i+j} alpha_M(m) (x) [x_i,x_j] ^ alpha(x_1) ^ ...[omit i,j]... ^ alpha(x_n)
template <ExactField K>
class ChainComplexAlpha {
public:
    ChainComplexAlpha(const HomLieAlgebra<K>& l, const HomAction<K>& mod, std::size_t max_degree)
        : l_(l), mod_(mod), max_(max_degree) {
        if (!mod.actee().is_abelian())
            throw PreconditionViolated("chain complex needs a Hom-module (abelian actee)");
        if (max_degree > l.dim() + 1) throw DegreeError("max degree exceeds dim L + 1");
        const auto desc = l.desc();
        const std::size_t m = mod.actee().dim();
        for (std::size_t k = 0; k <= max_; ++k) tuples_.push_back(wedge_tuples(l.dim(), k));
        d_.resize(max_ + 1);
        d_[0] = Matrix<K>(0, m * tuples_[0].size(), desc);
        for (std::size_t deg = 1; deg <= max_; ++deg) {
            const auto& hi = tuples_[deg];
            const auto& lo = tuples_[deg - 1];
            const std::size_t lo_wedge = lo.size();
            Matrix<K> d(m * lo_wedge, m * hi.size(), desc);
            for (std::size_t s = 0; s < m; ++s) {
                Vec<K> ms = vec_unit<K>(m, s, desc);
                for (std::size_t w = 0; w < hi.size(); ++w) {
                    const auto& tup = hi[w];
                    Vec<K> col = vec_zero<K>(m * lo_wedge, desc);
                    // action term
                    for (std::size_t i = 0; i < deg; ++i) {
                        Vec<K> coeff_m = mod_.act(tup[i], s);
                        if (vec_is_zero(coeff_m)) continue;
                        std::vector<Vec<K>> rest;
                        for (std::size_t a = 0; a < deg; ++a)
                            if (a != i) rest.push_back(l_.alpha().col(tup[a]));
                        Vec<K> wpart = wedge_expand(rest, l_.dim(), lo, desc);
                        int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1} with 0-based i
                        for (std::size_t r = 0; r < m; ++r)
                            for (std::size_t q = 0; q < lo_wedge; ++q) {
                                K c = coeff_m[r] * wpart[q];
                                if (sign < 0) c = -c;
                                col[r * lo_wedge + q] += c;
                            }
                    }
                    // bracket term
                    Vec<K> am = mod_.actee().alpha_of(ms);
                    if (!vec_is_zero(am) && deg >= 2) {
                        for (std::size_t i = 0; i < deg; ++i)
                            for (std::size_t j = i + 1; j < deg; ++j) {
                                std::vector<Vec<K>> slots;
                                slots.push_back(l_.bracket(tup[i], tup[j]));
                                for (std::size_t a = 0; a < deg; ++a)
                                    if (a != i && a != j) slots.push_back(l_.alpha().col(tup[a]));
                                Vec<K> wpart = wedge_expand(slots, l_.dim(), lo, desc);
                                int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+(j+1)}
                                for (std::size_t r = 0; r < m; ++r)
                                    for (std::size_t q = 0; q < lo_wedge; ++q) {
                                        K c = am[r] * wpart[q];
                                        if (sign < 0) c = -c;
                                        col[r * lo_wedge + q] += c;
                                    }
                            }
                    }
                    d.set_col(s * hi.size() + w, col);
                }
            }
            d_[deg] = std::move(d);
        }
        for (std::size_t deg = 1; deg < max_; ++deg)
            if (!(d_[deg] * d_[deg + 1]).is_zero())
                throw InternalInconsistency("d o d != 0 at degree " + std::to_string(deg + 1));
    }

    const HomLieAlgebra<K>& algebra() const { return l_; }
    const HomAction<K>& module() const { return mod_; }
    std::size_t max_degree() const { return max_; }
    std::size_t space_dim(std::size_t n) const {
        return mod_.actee().dim() * tuples_.at(n).size();
    }
    const Matrix<K>& boundary(std::size_t n) const { return d_.at(n); }

private:
    HomLieAlgebra<K> l_;
    HomAction<K> mod_;
    std::size_t max_;
    std::vector<std::vector<std::vector<std::size_t>>> tuples_;
    std::vector<Matrix<K>> d_;
};

template <ExactField K>
struct HomologyResult {
    std::size_t dim = 0;
    Subspace<K> representatives;  // a complement of Im d_{n+1} inside Ker d_n
};

template <ExactField K>
HomologyResult<K> homology_dim(const ChainComplexAlpha<K>& cc, std::size_t n) {
    if (n + 1 > cc.max_degree()) throw DegreeError("homology degree needs boundary n+1");
    Subspace<K> ker = Subspace<K>::kernel_of(cc.boundary(n));
    Subspace<K> im = Subspace<K>::image_of(cc.boundary(n + 1));
    PresentedQuotient<K> q = quotient_of(ker, im);
    std::vector<Vec<K>> reps;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        Vec<K> in_ker = q.lift(vec_unit<K>(q.dim(), i, ker.desc()));
        Vec<K> amb = vec_zero<K>(cc.space_dim(n), ker.desc());
        for (std::size_t t = 0; t < ker.dim(); ++t)
            vec_add_scaled(amb, in_ker[t], ker.basis_vector(t));
        reps.push_back(std::move(amb));
    }
    return HomologyResult<K>{q.dim(), Subspace<K>::span(reps, cc.space_dim(n), ker.desc())};
}

// The trivial one-dimensional module K with alpha_K = id.
template <ExactField K>
HomAction<K> trivial_module(const HomLieAlgebra<K>& l) {
    HomLieAlgebra<K> field_alg =
        HomLieAlgebra<K>::abelian(1, Matrix<K>::identity(1, l.desc()));
    return trivial_action(l, field_alg);
}

template <ExactField K>
struct H2Report {
    std::size_t complex_dim = 0;
    std::optional<std::size_t> tensor_dim;  // only for perfect L
    bool routes_agree = true;
};

// H_2^alpha(L) by the chain complex; for perfect L also via Ker(L*L -> L)
// (Remark 3.5 bridge), with the equality asserted.
template <ExactField K>
H2Report<K> h2_alpha(const HomLieAlgebra<K>& l) {
    std::size_t maxdeg = std::min<std::size_t>(3, l.dim() + 1);
    ChainComplexAlpha<K> cc(l, trivial_module(l), maxdeg);
    H2Report<K> rep;
    if (l.dim() < 2) {
        rep.complex_dim = 0;  // Lambda^2 of a 0/1-dim space vanishes
    } else {
        rep.complex_dim = homology_dim(cc, 2).dim;
    }
    if (perfectness_flags(l).perfect) {
        TensorProduct<K> t = tensor_product(l, l, adjoint_action(l), adjoint_action(l));
        PsiReport<K> psi = psi_maps(t);
        rep.tensor_dim = psi.ker_n.dim();
        rep.routes_agree = *rep.tensor_dim == rep.complex_dim;
    }
    return rep;
}

// Closed form for H_1 with a trivial module: (M (x) L) / (alpha_M(M) (x) [L,L]).
// Refuses non-trivial actions; the paper's formula presumes triviality.
template <ExactField K>
std::size_t h1_via_formula(const HomLieAlgebra<K>& l, const HomAction<K>& mod) {
    if (!mod.is_trivial())
        throw PreconditionViolated("H_1 closed form requires a trivial module");
    const std::size_t m = mod.actee().dim(), n = l.dim();
    const auto desc = l.desc();
    Subspace<K> am = Subspace<K>::image_of(mod.actee().alpha());
    Subspace<K> der = l.derived();
    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < am.dim(); ++i)
        for (std::size_t j = 0; j < der.dim(); ++j)
            gens.push_back(kron(am.basis_vector(i), der.basis_vector(j), desc));
    return m * n - Subspace<K>::span(gens, m * n, desc).dim();
}

}  // namespace homlie
