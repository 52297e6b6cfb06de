// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (exact, zero difference) and prints one pass/fail line per criterion.
// Exit status is the number of failed criteria.

#include "wres/verify.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace wres;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            details.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { details.push_back(s); }
};

ScalarExpr pho(long long n, long long d) { return pi_hp_omega(GaussRat(Rat(n, d))); }

std::mt19937_64 rng(20260809);

// 1. thm3.6 pipeline: Phi_1..Phi_5 and the vanishing total, exact.
Criterion criterion1() {
    Criterion c{"1: four-dimensional boundary cases (thm3.6)"};
    BoundaryContext ctx(4);
    PairingForm pf(4);
    SubbundleInstance inst = SubbundleInstance::random(rng, 4, 1);
    BoundaryResult br = compute_boundary(TheoremId::Phi, ctx, inst, pf);
    const ScalarExpr want[5] = {ScalarExpr(), pho(-3, 2), pho(3, 2), pho(9, 2), pho(-9, 2)};
    for (int k = 0; k < 5; ++k)
        c.check((br.cases[k].computed - want[k]).is_zero(),
                br.cases[k].key + " = " + br.cases[k].computed.str());
    c.check(br.total.computed.is_zero(), "phi/total = " + br.total.computed.str());
    return c;
}

// 2. thm3.7 pipeline: the b) and c) cases and the vanishing total.
Criterion criterion2() {
    Criterion c{"2: four-dimensional squared pipeline (thm3.7)"};
    BoundaryContext ctx(4);
    PairingForm pf(4);
    SubbundleInstance inst = SubbundleInstance::random(rng, 4, 2);
    BoundaryResult br = compute_boundary(TheoremId::PhiBar, ctx, inst, pf);
    c.check((br.cases[3].computed - pho(9, 2)).is_zero(),
            "phibar/b = " + br.cases[3].computed.str());
    c.check((br.cases[4].computed - pho(-9, 2)).is_zero(),
            "phibar/c = " + br.cases[4].computed.str());
    c.check(br.total.computed.is_zero(), "phibar/total = " + br.total.computed.str());
    return c;
}

// 3. thm4.3 and thm4.4 pipelines against the published coefficients, exact.
Criterion criterion3() {
    Criterion c{"3: six-dimensional pipelines (thm4.3, thm4.4)"};
    BoundaryContext ctx(6);
    PairingForm pf(6);
    SubbundleInstance inst = SubbundleInstance::random(rng, 6, 1);
    const ScalarExpr want[5] = {ScalarExpr(), pho(-15, 2), pho(25, 2),
                                pi_hp_omega(GaussRat(Rat(-195, 8), Rat(-41, 8))),
                                pho(55, 2)};
    ScalarExpr want_total = pi_hp_omega(GaussRat(Rat(65, 8), Rat(-41, 8)));
    for (TheoremId t : {TheoremId::Psi, TheoremId::PsiBar}) {
        BoundaryResult br = compute_boundary(t, ctx, inst, pf);
        for (int k = 0; k < 5; ++k)
            c.check((br.cases[k].computed - want[k]).is_zero(),
                    br.cases[k].key + " = " + br.cases[k].computed.str() +
                        "  (published: " + want[k].str() + ")");
        c.check((br.total.computed - want_total).is_zero(),
                br.total.key + " = " + br.total.computed.str() + "  (published: " +
                    want_total.str() + ")");
        for (auto& cs : br.cases)
            for (auto& note : cs.notes)
                if (note.find("not reproduced") != std::string::npos ||
                    note.find("recomposed") != std::string::npos)
                    c.note(cs.key + ": " + note);
    }
    if (!c.pass)
        c.note("analysis: the published case-b value rests on a derivation whose "
               "inverse-symbol jet term carries a spurious factor i (it violates the "
               "composition identity the engine verifies exactly) and whose quoted "
               "residue integral differs from the exact evaluation of its own "
               "displayed integrand; no reading of the published order-2 symbol "
               "reproduces the published coefficient");
    return c;
}

// 4. Interior coefficients from both derivations, matching the headline
//    theorem statements exactly.
Criterion criterion4() {
    Criterion c{"4: interior coefficients, both derivations"};
    for (int n : {4, 6}) {
        PairingForm pf(n);
        SubbundleInstance inst = SubbundleInstance::random(rng, n, 2);
        for (EKind kind : {EKind::Star, EKind::Square}) {
            ScalarExpr wick = interior_raw(n, kind, inst, pf, true);
            ScalarExpr closed = interior_raw(n, kind, inst, pf, false);
            c.check((wick - closed).is_zero(), "route agreement n=" + std::to_string(n));
            TheoremResult tr = assemble_theorem(n, kind, inst, pf);
            c.check(tr.interior_match, "interior matches the theorem, n=" + std::to_string(n));
        }
    }
    return c;
}

// 5. Trace lemma suite on >= 20 random rational S instances per dimension.
Criterion criterion5() {
    Criterion c{"5: trace lemma suite, 20 instances per dimension"};
    std::uniform_int_distribution<int> kpick(1, 2);
    for (int n : {4, 6}) {
        PairingForm pf(n);
        long long trid = 1ll << n;
        CliffordElement cxi = c_xi_prime(n);
        CliffordElement chxi;
        for (int i = 1; i < n; ++i)
            chxi += cliff_gen(gen_chat(i), XiPoly::var(i));
        for (int it = 0; it < 20; ++it) {
            SubbundleInstance inst = SubbundleInstance::random(rng, n, kpick(rng));
            SubbundleJet jet = SubbundleJet::random_compatible(rng, inst);
            ComponentTraces ct = component_traces(inst, jet, pf);
            Rat s2 = inst.snorm2() * Rat(trid);
            c.check(ct.TrA2 == ScalarExpr(s2), "TrA2, n=" + std::to_string(n));
            c.check(ct.TrcA2 == ScalarExpr(s2 * Rat(n - 2)), "TrcA2");
            c.check(ct.TrGradA.is_zero(), "TrGradA under compatibility");
            CliffordElement A = build_A(inst, pf);
            c.check(A.multiply(cliff_gen(gen_c(n)), pf).trace(pf).is_zero(),
                    "tr[A c(dx_n)] = 0");
            c.check(A.multiply(cxi, pf).trace(pf).is_zero(), "tr[A c(xi')] = 0");
        }
        // curvature contraction with a random antisymmetric tensor
        std::uniform_int_distribution<int> rnum(-5, 5);
        std::vector<std::vector<Rat>> R(n * n, std::vector<Rat>(n * n, Rat(0)));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        Rat v(rnum(rng), 1);
                        R[(i - 1) * n + j - 1][(k - 1) * n + l - 1] = v;
                        R[(j - 1) * n + i - 1][(k - 1) * n + l - 1] = -v;
                        R[(i - 1) * n + j - 1][(l - 1) * n + k - 1] = -v;
                        R[(j - 1) * n + i - 1][(l - 1) * n + k - 1] = v;
                    }
        SubbundleInstance inst = SubbundleInstance::random(rng, n, 1);
        SubbundleJet jet = SubbundleJet::random_compatible(rng, inst);
        c.check(component_traces(inst, jet, pf, &R).TrCurv.is_zero(), "curvature trace");
        // fixed trace identities
        c.check(cliff_gen(gen_c(n)).multiply(cliff_gen(gen_c(n)), pf).trace(pf) ==
                    XiPoly(Rat(-trid)),
                "tr[c(dx_n)^2]");
        c.check(cxi.multiply(cxi, pf).trace(pf).sphere_reduce(n - 1) == XiPoly(Rat(-trid)),
                "tr[c(xi')^2] at |xi'| = 1");
        c.check(jet_c_xi_prime(n).multiply(cxi, pf).trace(pf).sphere_reduce(n - 1) ==
                    XiPoly(ScalarExpr::token(Sym::Hp).scaled(GaussRat(Rat(-trid, 2)))),
                "tr[d_xn c(xi') c(xi')] at |xi'| = 1");
        c.check(chxi.multiply(cliff_gen(gen_chat(n)), pf).trace(pf).is_zero(),
                "tr[chat(xi') chat(dx_n)]");
        c.check(cxi.multiply(chxi, pf)
                    .multiply(cliff_gen(gen_c(n)), pf)
                    .multiply(cliff_gen(gen_chat(n)), pf)
                    .trace(pf)
                    .is_zero(),
                "tr[c(xi') chat(xi') c(dx_n) chat(dx_n)]");
        auto [q1, q2] = build_Q0(BoundaryContext(n), pf);
        c.check(q1.multiply(cliff_gen(gen_c(n)), pf).trace(pf).is_zero(),
                "tr[Q_0^1 c(dx_n)]");
    }
    return c;
}

// 6. Wick trace equals the matrix oracle on 1000 random words per dimension.
Criterion criterion6() {
    Criterion c{"6: Wick trace vs exterior-representation oracle"};
    for (int n = 2; n <= 6; ++n) {
        PairingForm pf(n);
        std::uniform_int_distribution<int> len(0, 6), ch(0, 1), idx(1, n);
        for (int it = 0; it < 1000; ++it) {
            Word w;
            int m = len(rng);
            for (int k = 0; k < m; ++k)
                w.push_back(ch(rng) == 0 ? gen_c(idx(rng)) : gen_chat(idx(rng)));
            CliffordElement e{XiPoly(1)};
            for (const Generator& g : w)
                e = e.multiply(cliff_gen(g), pf);
            XiPoly wick = e.trace(pf);
            if (!(wick.is_constant() && wick.constant_part() == ScalarExpr(oracle_trace(w, n)))) {
                c.check(false, "word " + word_str(w) + " at n=" + std::to_string(n));
                return c;
            }
        }
    }
    return c;
}

// 7. Symbol-calculus properties: projections and composition identities.
Criterion criterion7() {
    Criterion c{"7: pi+ properties, composition identities, pinned projections"};
    const GaussRat I = GaussRat::i();
    std::uniform_int_distribution<int> mult(1, 3), num(-6, 6);
    for (int it = 0; it < 200; ++it) {
        int mp = mult(rng), mm = mult(rng);
        std::vector<GaussRat> n(mp + mm);
        for (auto& v : n)
            v = GaussRat(Rat(num(rng)), Rat(num(rng)));
        n.resize(mp + mm - 1);
        RationalFn<GaussRat> f(n, {{I, mp}, {-I, mm}});
        if (f.is_zero())
            continue;
        RationalFn<GaussRat> up = pi_plus(f);
        if (!(pi_plus(up) == up) || !(up + pi_minus(f) == f)) {
            c.check(false, "pi+ property on sample " + std::to_string(it));
            break;
        }
    }
    for (OperatorKind op : {OperatorKind::Dt, OperatorKind::DtStar,
                            OperatorKind::DtStarDtDtStar, OperatorKind::DtCubed}) {
        int n = lead_order(op) == 1 ? 4 : 6;
        PairingForm pf(n);
        BoundaryContext ctx(n);
        SubbundleInstance inst = SubbundleInstance::random(rng, n, 1);
        GradedSymbol p = build_sigma(op, ctx, inst, pf);
        GradedSymbol q = invert_symbol(p, lead_order(op), lead_square(op), pf);
        RestrictedSymbol unit = compose_orders(p, q, 0, pf).restrict_u().sphere_reduced();
        c.check(unit == RestrictedSymbol::scalar(n, RationalFn<XiPoly>(XiPoly(1))),
                "composition at order 0");
        c.check(compose_orders(p, q, -1, pf).restrict_u().sphere_reduced().is_zero(),
                "composition at order -1");
    }
    // pinned projections: c(xi)/|xi|^4 and i d_xn c(xi')/|xi|^2 at n = 4
    {
        int n = 4;
        PairingForm pf(n);
        Element<PreCoeff> e;
        for (int i = 1; i < n; ++i)
            e.add(Word{gen_c(i)}, PreCoeff::monomial(0, 0, XiPoly::var(i), 2));
        e.add(Word{gen_c(n)}, PreCoeff::monomial(1, 0, XiPoly(1), 2));
        RestrictedSymbol proj =
            BoundarySymbol(n, std::move(e)).restrict_u().pi_plus_projected();
        RestrictedSymbol expect(n);
        GaussRat q(Rat(-1, 4));
        for (int i = 1; i < n; ++i) {
            Element<RationalFn<XiPoly>> t;
            t.add(Word{gen_c(i)},
                  RationalFn<XiPoly>({XiPoly::var(i).scaled(GaussRat(2) * q),
                                      XiPoly::var(i).scaled(I * q)},
                                     {{I, 2}}));
            expect = expect + RestrictedSymbol(n, std::move(t));
        }
        Element<RationalFn<XiPoly>> t;
        t.add(Word{gen_c(n)}, RationalFn<XiPoly>({XiPoly(I * q)}, {{I, 2}}));
        expect = expect + RestrictedSymbol(n, std::move(t));
        c.check(proj == expect, "projection of c(xi)/|xi|^4");

        Element<PreCoeff> e2;
        for (int i = 1; i < n; ++i)
            e2.add(Word{gen_jet(i)}, PreCoeff::monomial(0, 0, XiPoly::var(i).scaled(I), 1));
        RestrictedSymbol proj2 =
            BoundarySymbol(n, std::move(e2)).restrict_u().pi_plus_projected();
        RestrictedSymbol expect2(n);
        for (int i = 1; i < n; ++i) {
            Element<RationalFn<XiPoly>> t2;
            t2.add(Word{gen_jet(i)},
                   RationalFn<XiPoly>({XiPoly::var(i).scaled(GaussRat(Rat(1, 2)))}, {{I, 1}}));
            expect2 = expect2 + RestrictedSymbol(n, std::move(t2));
        }
        c.check(proj2 == expect2, "projection of the normal-jet symbol");
    }
    return c;
}

// 8. Flat-torus factorization identities at n = 4, k in {1, 2}.
Criterion criterion8() {
    Criterion c{"8: flat-torus Lichnerowicz check"};
    for (int k : {1, 2}) {
        SubbundleInstance inst = SubbundleInstance::random(rng, 4, k);
        c.check(flat_lichnerowicz_check(4, inst, EKind::Star),
                "adjoint-pair identity, k=" + std::to_string(k));
        c.check(flat_lichnerowicz_check(4, inst, EKind::Square),
                "squared identity, k=" + std::to_string(k));
    }
    return c;
}

// 9. Discrepancy diagnostics present in the reports as notes, not failures.
Criterion criterion9() {
    Criterion c{"9: discrepancy diagnostics in the report"};
    VerifyOptions opt;
    opt.selector = "thm4.3";
    opt.seed = 1;
    opt.format = "json";
    std::ostringstream out, err;
    run_verify(opt, out, err);
    nlohmann::json j = nlohmann::json::parse(out.str());
    bool delta_note = false;
    for (auto& e : j["entries"])
        if (e["key"] == "psi/b")
            for (auto& note : e["notes"])
                if (note.get<std::string>().find("quadratic A term") != std::string::npos)
                    delta_note = true;
    c.check(delta_note, "A-quadratic sigma_2 delta flagged with its computed value");

    VerifyOptions opt2;
    opt2.selector = "thm3.7";
    opt2.seed = 1;
    opt2.format = "json";
    std::ostringstream out2, err2;
    int rc = run_verify(opt2, out2, err2);
    c.check(rc == kExitMatch, "the Omega-label anomaly is a note, not a failure");
    nlohmann::json j2 = nlohmann::json::parse(out2.str());
    bool omega_note = false;
    for (auto& e : j2["entries"])
        for (auto& note : e["notes"])
            if (note.get<std::string>().find("Omega_4") != std::string::npos)
                omega_note = true;
    c.check(omega_note, "Omega token label anomaly flagged");
    return c;
}

} // namespace

int main() {
    std::vector<std::function<Criterion()>> criteria = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9};
    int failed = 0;
    for (auto& fn : criteria) {
        Criterion c = fn();
        std::cout << (c.pass ? "PASS" : "FAIL") << "  criterion " << c.label << "\n";
        for (auto& d : c.details)
            std::cout << "      " << d << "\n";
        if (!c.pass)
            ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed"
                              : std::to_string(failed) + " criterion(s) failed")
              << "\n";
    return failed;
}
