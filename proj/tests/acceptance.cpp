// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.  Everything runs in seconds over exact arithmetic.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "homlie/cli.hpp"
#include "snake_oracle.hpp"
#include "test_helpers.hpp"

using namespace homlie;
using homlie::cli::run_command;
using testutil::q;
using testutil::QD;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note
              << "\n";
    if (!ok) ++failures;
}

std::string corpus(const std::string& name) { return std::string(CORPUS_DIR) + "/" + name; }

struct CompatPair {
    std::string label;
    HomLieAlgebra<Rational> m, n;
    HomAction<Rational> mn, nm;
};

std::vector<CompatPair> corpus_pairs() {
    QD d;
    std::vector<CompatPair> out;
    auto self = [&](const std::string& label, HomLieAlgebra<Rational> l) {
        auto adj = adjoint_action(l);
        out.push_back({label + " adjoint", l, l, adj, adj});
    };
    self("remark37b", testutil::remark37b<Rational>(d));
    self("remark37c", testutil::remark37c<Rational>(d));
    self("so3", testutil::so3_id<Rational>(d));
    self("ex12c", testutil::ex12c<Rational>(d));
    self("heisenberg", [&] {
        Tensor3<Rational> c(3, 3, 3, d);
        c.at(0, 1, 2) = q(1);
        c.at(1, 0, 2) = q(-1);
        return HomLieAlgebra<Rational>(3, c, Matrix<Rational>::identity(3, d));
    }());

    // ideal pairs of Remark 3.7 c)
    auto l = testutil::remark37c<Rational>(d);
    auto e2 = Subspace<Rational>::span({Vec<Rational>{q(0), q(1)}}, 2, d);
    auto ideal = sub_algebra(l, e2);
    out.push_back({"ideal <e2> with L", ideal.alg, l, bracket_action_of_sub(ideal, l),
                   bracket_action_on_ideal(l, ideal)});
    out.push_back({"L with ideal <e2>", l, ideal.alg, bracket_action_on_ideal(l, ideal),
                   bracket_action_of_sub(ideal, l)});

    // trivial pairs
    auto ab2 = HomLieAlgebra<Rational>::abelian(2, Matrix<Rational>::identity(2, d));
    out.push_back({"remark37c with abelian (trivial)", l, ab2, trivial_action(l, ab2),
                   trivial_action(ab2, l)});

    // the Lemma 4.5 action pairs of the Hom-associative corpus
    for (auto [name, a] : {std::pair<std::string, HomAssocAlgebra<Rational>>{"ex44c", testutil::ex44c()},
                           {"ex44d", testutil::ex44d()},
                           {"ut2", testutil::ut2()}}) {
        auto cp = cyclic_presentation(a);
        auto acts = lemma_4_5_actions(cp);
        out.push_back({name + " with L^alpha", cp.a_lie, cp.l_alpha, acts.a_on_l, acts.l_on_a});
    }
    return out;
}

}  // namespace

int main() {
    QD d;

    criterion(1, "paper-example corpus validates with the published flags", [&] {
        auto f37b = perfectness_flags(testutil::remark37b<Rational>(d));
        if (!(f37b.perfect && !f37b.alpha_perfect)) return false;
        auto f37c = perfectness_flags(testutil::remark37c<Rational>(d));
        if (!(f37c.alpha_surjective && f37c.alpha_derived.dim() == 1)) return false;
        if (!perfectness_flags(testutil::sec3_sqrt2()).alpha_perfect) return false;
        for (auto a : {testutil::ex44c(), testutil::ex44d()}) {
            if (!validate_assoc(a.dim(), a.product_tensor(), a.alpha()).ok()) return false;
            if (!alpha_identity_check(a).holds) return false;
        }
        // the same data exactly as shipped in the corpus files, through the CLI
        if (run_command({"validate", corpus("remark37b.hla")}).exit_code != 0) return false;
        if (run_command({"validate", corpus("ex44d.hla")}).exit_code != 0) return false;
        if (run_command({"validate", corpus("sec3_sqrt2.hla")}).exit_code != 0) return false;
        return true;
    });

    criterion(2, "homology sanity on the corpus plus 100 random algebras (Q and GF(5))", [&] {
        std::mt19937 rng(20260810);
        auto fd = PrimeField::make_desc(5);
        auto check_one = [&](auto l) {
            using K = std::remove_cvref_t<decltype(l.alpha().at(0, 0))>;
            std::size_t maxdeg = std::min<std::size_t>(l.dim() + 1, 3);
            ChainComplexAlpha<K> cc(l, trivial_module(l), maxdeg);  // asserts d o d = 0
            if (homology_dim(cc, 0).dim != 1) return false;         // H0 = K / ^L K
            if (maxdeg >= 2 && homology_dim(cc, 1).dim != l.dim() - l.derived().dim())
                return false;
            return true;
        };
        for (auto l : {testutil::remark37b<Rational>(d), testutil::remark37c<Rational>(d),
                       testutil::so3_id<Rational>(d), testutil::ex12c<Rational>(d)})
            if (!check_one(l)) return false;
        if (!check_one(testutil::sec3_sqrt2())) return false;
        if (!check_one(testutil::so3_id<PrimeField>(fd))) return false;
        // H0 = M / ^L M with a nontrivial module: the ex12c ideal module
        {
            auto l = testutil::ex12c<Rational>(d);
            auto m = HomLieAlgebra<Rational>::abelian(1, Matrix<Rational>::identity(1, d));
            Tensor3<Rational> a(2, 1, 1, d);
            a.at(1, 0, 0) = q(-1);
            auto va = validate_action(a, l, m);
            if (!va.ok()) return false;
            ChainComplexAlpha<Rational> cc(l, *va.value, 1);
            if (homology_dim(cc, 0).dim != m.dim() - va.value->value_span().dim()) return false;
        }
        for (int t = 0; t < 50; ++t) {
            if (!check_one(testutil::random_hom_lie<Rational>(d, rng))) return false;
            if (!check_one(testutil::random_hom_lie<PrimeField>(fd, rng))) return false;
        }
        return true;
    });

    criterion(3, "tensor axioms, well-definedness certificates, and the symmetry iso", [&] {
        for (const auto& pair : corpus_pairs()) {
            // construction re-validates skew, Hom-Jacobi, multiplicativity with
            // zero residuals and certifies that the bracket absorbs D
            TensorProduct<Rational> t = tensor_product(pair.m, pair.n, pair.mn, pair.nm);
            if (!validate_hom_lie(t.result).ok()) return false;
            TensorProduct<Rational> t_rev = tensor_product(pair.n, pair.m, pair.nm, pair.mn);
            if (!swap_iso(t, t_rev).bijective) return false;
        }
        // the GF(5) and Q(sqrt 2) self-tensors as well
        auto fd = PrimeField::make_desc(5);
        auto l5 = testutil::so3_id<PrimeField>(fd);
        auto t5 = tensor_product(l5, l5, adjoint_action(l5), adjoint_action(l5));
        if (!validate_hom_lie(t5.result).ok()) return false;
        auto ls = testutil::sec3_sqrt2();
        auto ts = tensor_product(ls, ls, adjoint_action(ls), adjoint_action(ls));
        if (!validate_hom_lie(ts.result).ok()) return false;
        return swap_iso(ts, ts).bijective;
    });

    criterion(4, "Prop 2.8 dimension formula on at least 10 instances", [&] {
        std::mt19937 rng(88);
        int done = 0;
        // corpus instances
        struct Inst { HomLieAlgebra<Rational> m, n; };
        auto ab2 = HomLieAlgebra<Rational>::abelian(2, Matrix<Rational>::identity(2, d));
        std::vector<Inst> fixed = {
            {testutil::remark37c<Rational>(d), testutil::remark37c<Rational>(d)},
            {testutil::remark37c<Rational>(d), ab2},
            {testutil::so3_id<Rational>(d), ab2},
            {testutil::ex12c<Rational>(d), testutil::remark37c<Rational>(d)},
        };
        for (const auto& inst : fixed) {
            auto t = tensor_product(inst.m, inst.n, trivial_action(inst.m, inst.n),
                                    trivial_action(inst.n, inst.m));
            std::size_t expect = (inst.m.dim() - inst.m.derived().dim()) *
                                 (inst.n.dim() - inst.n.derived().dim());
            if (t.dim() != expect || !t.result.is_abelian()) return false;
            ++done;
        }
        while (done < 12) {
            auto m = testutil::random_hom_lie<Rational>(d, rng, 3);
            auto n = testutil::random_hom_lie<Rational>(d, rng, 3);
            if (rank(m.alpha()) != m.dim() || rank(n.alpha()) != n.dim()) continue;
            auto t = tensor_product(m, n, trivial_action(m, n), trivial_action(n, m));
            std::size_t expect =
                (m.dim() - m.derived().dim()) * (n.dim() - n.derived().dim());
            if (t.dim() != expect) return false;
            ++done;
        }
        return done >= 10;
    });

    criterion(5, "Remark 3.5 bridge: dim Ker(L*L -> L) = dim H_2 on perfect corpus algebras", [&] {
        for (auto l : {testutil::so3_id<Rational>(d), testutil::remark37b<Rational>(d)}) {
            auto rep = h2_alpha(l);
            if (!rep.tensor_dim.has_value() || !rep.routes_agree) return false;
        }
        auto rep = h2_alpha(testutil::sec3_sqrt2());
        if (!rep.tensor_dim.has_value() || !rep.routes_agree) return false;
        auto fd = PrimeField::make_desc(5);
        auto rep5 = h2_alpha(testutil::so3_id<PrimeField>(fd));
        if (!rep5.tensor_dim.has_value() || !rep5.routes_agree) return false;
        // so(3) specifically gives 0 = 0
        return h2_alpha(testutil::so3_id<Rational>(d)).complex_dim == 0;
    });

    criterion(6, "uce_alpha builds with central kernel, alpha-perfect result, Thm 3.10 iso", [&] {
        auto check = [&](auto l) {
            auto cmp = uce_alpha_vs_tensor(l);
            return cmp.uce.u_surjective && cmp.uce.kernel_central &&
                   cmp.uce.result_alpha_perfect && cmp.bijective && cmp.morphism &&
                   cmp.commutes_over_l;
        };
        if (!check(testutil::sec3_sqrt2())) return false;
        if (!check(testutil::so3_id<Rational>(d))) return false;
        auto fd = PrimeField::make_desc(5);
        return check(testutil::so3_id<PrimeField>(fd));
    });

    criterion(7, "exact-sequence verifiers: exit 0 on bundled instances, exit 1 on corrupted", [&] {
        std::vector<std::vector<std::string>> good = {
            {"verify", "prop2_9", corpus("remark37c.hla"), "--ideal", "0 1"},
            {"verify", "prop2_10", corpus("so3_id.hla"), "--ideal", "full"},
            {"verify", "prop2_10", corpus("remark37c.hla"), "--ideal", "0 1"},
            {"verify", "thm1_13", corpus("ex12c.hla"), "--module", corpus("ex12c_mod.hla"),
             "--act", corpus("ex12c_mod.act")},
            {"verify", "thm2_14", corpus("so3_id.hla"), "--ideal", "full"},
            {"verify", "thm2_14", corpus("remark37b.hla"), "--ideal", "full"},
            {"verify", "thm4_8", corpus("ut2.hla")},
            {"verify", "thm4_8", corpus("ex44c.hla")},
            {"verify", "thm4_8", corpus("onedim.hla")},
        };
        for (const auto& args : good) {
            auto res = run_command(args);
            if (res.exit_code != 0) {
                std::cerr << "  unexpected failure: " << res.output;
                return false;
            }
        }
        std::vector<std::vector<std::string>> corrupted = {
            {"verify", "prop2_9", corpus("remark37c.hla"), "--ideal", "1 0"},
            {"verify", "prop2_10", corpus("remark37c.hla"), "--ideal", "1 0"},
            {"verify", "thm1_13", corpus("ex12c.hla"), "--module", corpus("ex12c_mod.hla"),
             "--act", corpus("broken_act.act")},
            {"verify", "thm2_14", corpus("remark37c.hla"), "--ideal", "0 1"},
            {"verify", "thm4_8", corpus("ut2tw.hla")},
        };
        for (const auto& args : corrupted) {
            auto res = run_command(args);
            if (res.exit_code != 1) return false;
            if (res.output.find("witness") == std::string::npos &&
                res.output.find("alpha_identity = false") == std::string::npos)
                return false;
        }
        return true;
    });

    criterion(8, "snake engine: 50 random diagrams, connecting map equals the oracle", [&] {
        std::mt19937 rng(424242);
        for (int trial = 0; trial < 50; ++trial) {
            testutil::RandomDiagram rd = testutil::random_diagram(rng);
            SnakeResult<Rational> s = snake_sequence(rd.diag);
            if (!s.six_term_exact) return false;
            for (std::size_t jcol = 0; jcol < s.ker3.dim(); ++jcol)
                if (!(testutil::oracle_connecting(rd, s, jcol) == s.connecting.col(jcol)))
                    return false;
        }
        return true;
    });

    criterion(9, "determinism: repeated --json runs are byte-identical", [&] {
        std::vector<std::vector<std::string>> cmds = {
            {"--json", "validate", corpus("sec3_sqrt2.hla")},
            {"--json", "invariants", corpus("remark37c.hla")},
            {"--json", "homology", corpus("so3_id.hla"), "--max-n", "3"},
            {"--json", "tensor", corpus("so3_id.hla"), corpus("so3_id.hla")},
            {"--json", "uce", corpus("so3_id.hla")},
            {"--json", "uce", corpus("sec3_sqrt2.hla"), "--alpha"},
            {"--json", "cyclic", corpus("ut2.hla")},
            {"--json", "verify", "thm4_8", corpus("ut2.hla")},
            {"--json", "verify", "thm2_14", corpus("so3_id.hla"), "--ideal", "full"},
        };
        for (const auto& args : cmds) {
            auto a = run_command(args);
            auto b = run_command(args);
            if (a.output != b.output || a.exit_code != b.exit_code) return false;
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
