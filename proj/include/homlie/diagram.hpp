#pragma once

#include <optional>
#include <string>

#include "homlie/linalg.hpp"

namespace homlie {

// Two-row diagram for the Snake Lemma:
//
//          A --f--> B --g--> C --> 0     (exact at B, g surjective)
//          |        |        |
//         psi1     psi2     psi3
//          v        v        v
//   0 --> A' --f'-> B' --g'-> C'         (f' injective, exact at B')
//
// Dimensions are implicit in the matrix shapes.
template <ExactField K>
struct LinearDiagram {
    Matrix<K> f, g;        // top row
    Matrix<K> fp, gp;      // bottom row
    Matrix<K> psi1, psi2, psi3;
};

template <ExactField K>
struct SnakeResult {
    Subspace<K> ker1, ker2, ker3;
    PresentedQuotient<K> cok1, cok2, cok3;
    // maps of the six-term sequence, in kernel-basis / cokernel coordinates
    Matrix<K> k12, k23, connecting, c12, c23;
    bool exact_at_ker2 = false, exact_at_ker3 = false;
    bool exact_at_cok1 = false, exact_at_cok2 = false;
    bool six_term_exact = false;
    std::optional<std::string> failure_position;
};

namespace detail {

// image of a matrix acting on the canonical basis of its domain
template <ExactField K>
Subspace<K> column_space(const Matrix<K>& m) {
    return Subspace<K>::image_of(m);
}

}  // namespace detail

template <ExactField K>
SnakeResult<K> snake_sequence(const LinearDiagram<K>& d) {
    const auto desc = d.f.desc();
    const std::size_t na = d.f.cols(), nb = d.g.cols(), nc = d.g.rows();
    const std::size_t nap = d.fp.cols(), nbp = d.gp.cols(), ncp = d.gp.rows();
    if (d.f.rows() != nb || d.fp.rows() != nbp)
        throw ShapeError("snake: row maps do not compose");
    if (d.psi1.cols() != na || d.psi1.rows() != nap || d.psi2.cols() != nb ||
        d.psi2.rows() != nbp || d.psi3.cols() != nc || d.psi3.rows() != ncp)
        throw ShapeError("snake: vertical maps do not fit the rows");

    // declared exactness / commutativity obligations
    if (rank(d.g) != nc) throw PreconditionViolated("snake: top row not surjective at C");
    if (!(Subspace<K>::image_of(d.f) == Subspace<K>::kernel_of(d.g)))
        throw PreconditionViolated("snake: top row not exact at B");
    if (Subspace<K>::kernel_of(d.fp).dim() != 0)
        throw PreconditionViolated("snake: bottom row map A' -> B' not injective");
    if (!(Subspace<K>::image_of(d.fp) == Subspace<K>::kernel_of(d.gp)))
        throw PreconditionViolated("snake: bottom row not exact at B'");
    if (!(d.psi2 * d.f == d.fp * d.psi1))
        throw PreconditionViolated("snake: left square does not commute");
    if (!(d.psi3 * d.g == d.gp * d.psi2))
        throw PreconditionViolated("snake: right square does not commute");

    SnakeResult<K> res;
    res.ker1 = Subspace<K>::kernel_of(d.psi1);
    res.ker2 = Subspace<K>::kernel_of(d.psi2);
    res.ker3 = Subspace<K>::kernel_of(d.psi3);
    res.cok1 = PresentedQuotient<K>(Subspace<K>::image_of(d.psi1));
    res.cok2 = PresentedQuotient<K>(Subspace<K>::image_of(d.psi2));
    res.cok3 = PresentedQuotient<K>(Subspace<K>::image_of(d.psi3));

    // kernel-to-kernel maps in the kernels' echelon bases
    auto restrict = [&](const Matrix<K>& map, const Subspace<K>& from, const Subspace<K>& to) {
        Matrix<K> r(to.dim(), from.dim(), desc);
        for (std::size_t j = 0; j < from.dim(); ++j)
            r.set_col(j, to.coords_or_throw(map.apply(from.basis_vector(j)),
                                            "snake: restriction leaves the kernel"));
        return r;
    };
    res.k12 = restrict(d.f, res.ker1, res.ker2);
    res.k23 = restrict(d.g, res.ker2, res.ker3);
    res.c12 = res.cok2.projection() * d.fp * res.cok1.section();
    res.c23 = res.cok3.projection() * d.gp * res.cok2.section();

    // connecting map: lift along g, push through psi2, pull back along f',
    // project to Coker psi1
    res.connecting = Matrix<K>(res.cok1.dim(), res.ker3.dim(), desc);
    for (std::size_t j = 0; j < res.ker3.dim(); ++j) {
        Vec<K> c = res.ker3.basis_vector(j);
        auto b = solve_linear(d.g, c);
        if (!b) throw InternalInconsistency("snake: surjective g has no lift");
        Vec<K> y = d.psi2.apply(*b);
        auto a = solve_linear(d.fp, y);
        if (!a) throw InternalInconsistency("snake: pushed lift not in Im f'");
        res.connecting.set_col(j, res.cok1.project(*a));
    }

    auto exact_at = [&](const Matrix<K>& in, const Matrix<K>& out) {
        return detail::column_space(in) == Subspace<K>::kernel_of(out);
    };
    res.exact_at_ker2 = exact_at(res.k12, res.k23);
    res.exact_at_ker3 = exact_at(res.k23, res.connecting);
    res.exact_at_cok1 = exact_at(res.connecting, res.c12);
    res.exact_at_cok2 = exact_at(res.c12, res.c23);
    res.six_term_exact =
        res.exact_at_ker2 && res.exact_at_ker3 && res.exact_at_cok1 && res.exact_at_cok2;
    if (!res.exact_at_ker2) res.failure_position = "Ker psi2";
    else if (!res.exact_at_ker3) res.failure_position = "Ker psi3";
    else if (!res.exact_at_cok1) res.failure_position = "Coker psi1";
    else if (!res.exact_at_cok2) res.failure_position = "Coker psi2";
    return res;
}

}  // namespace homlie
