#pragma once

#include "wres/geometry.hpp"
#include "wres/integrate.hpp"
#include "wres/lichnerowicz.hpp"
#include "wres/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wres {

/// The four boundary computations: Phi and PhiBar at n = 4 (selectors
/// thm3.6, thm3.7), Psi and PsiBar at n = 6 (thm4.3, thm4.4).
enum class TheoremId { Phi, PhiBar, Psi, PsiBar };
enum class CaseId { aI, aII, aIII, b, c };

/// Which order-2 symbol feeds the third-order inversion.
enum class Sigma2Variant {
    PaperEvaluated,  // the evaluated bracket the published computation uses
    LemmaVerbatim,   // the lemma's A-structure with the quadratic A term
    ComposedTrue,    // recomposed from the first-order factors
};

inline int theorem_dim(TheoremId t) {
    return (t == TheoremId::Phi || t == TheoremId::PhiBar) ? 4 : 6;
}
inline OperatorKind second_operator(TheoremId t) {
    switch (t) {
    case TheoremId::Phi:
        return OperatorKind::DtStar;
    case TheoremId::PhiBar:
        return OperatorKind::Dt;
    case TheoremId::Psi:
        return OperatorKind::DtStarDtDtStar;
    default:
        return OperatorKind::DtCubed;
    }
}

inline std::string theorem_name(TheoremId t) {
    switch (t) {
    case TheoremId::Phi:
        return "phi";
    case TheoremId::PhiBar:
        return "phibar";
    case TheoremId::Psi:
        return "psi";
    default:
        return "psibar";
    }
}
inline std::string case_name(CaseId c) {
    switch (c) {
    case CaseId::aI:
        return "aI";
    case CaseId::aII:
        return "aII";
    case CaseId::aIII:
        return "aIII";
    case CaseId::b:
        return "b";
    default:
        return "c";
    }
}

/// One summand of the boundary-term sum: derivative orders (j, k, |alpha|)
/// and the symbol orders (r, l) of the two factors.
struct CaseSpec {
    TheoremId thm;
    CaseId cs;
    int r, l, j, k, alpha;

    /// Degree bookkeeping of the defining sum.
    bool satisfies_constraint() const {
        int n = theorem_dim(thm);
        if (n == 4)
            return r + l - k - j - alpha == -3;
        return r + l - k - j - alpha - 1 == -6;
    }
};

inline std::vector<CaseSpec> case_specs(TheoremId t) {
    int l1 = theorem_dim(t) == 4 ? -1 : -3;  // leading order of the second factor
    return {
        {t, CaseId::aI, -1, l1, 0, 0, 1},
        {t, CaseId::aII, -1, l1, 1, 0, 0},
        {t, CaseId::aIII, -1, l1, 0, 1, 0},
        {t, CaseId::b, theorem_dim(t) == 4 ? -2 : -1, theorem_dim(t) == 4 ? -1 : l1 - 1, 0, 0, 0},
        {t, CaseId::c, theorem_dim(t) == 4 ? -1 : -2, theorem_dim(t) == 4 ? -2 : l1, 0, 0, 0},
    };
}

/// (-i)^(|alpha|+j+k+1) / (alpha! (j+k+1)!).
inline GaussRat case_prefactor(const CaseSpec& s) {
    GaussRat p = (-GaussRat::i()).pow(s.alpha + s.j + s.k + 1);
    Rat fact(1);
    for (int v = 2; v <= s.j + s.k + 1; ++v)
        fact *= Rat(v);
    for (int v = 2; v <= s.alpha; ++v)
        fact *= Rat(v);
    return p * GaussRat(Rat(1) / fact);
}

inline ScalarExpr pi_hp_omega(const GaussRat& c) {
    return ScalarExpr(c) * ScalarExpr::token(Sym::Pi) * ScalarExpr::token(Sym::Hp) *
           ScalarExpr::token(Sym::Omega);
}

/// The published reference coefficients (multiples of pi h'(0) Omega).
inline ScalarExpr paper_case_value(TheoremId t, CaseId c) {
    bool six = theorem_dim(t) == 6;
    switch (c) {
    case CaseId::aI:
        return ScalarExpr();
    case CaseId::aII:
        return pi_hp_omega(GaussRat(Rat(six ? -15 : -3, 2)));
    case CaseId::aIII:
        return pi_hp_omega(GaussRat(Rat(six ? 25 : 3, 2)));
    case CaseId::b:
        return six ? pi_hp_omega(GaussRat(Rat(-195, 8), Rat(-41, 8)))
                   : pi_hp_omega(GaussRat(Rat(9, 2)));
    default:
        return six ? pi_hp_omega(GaussRat(Rat(55, 2)))
                   : pi_hp_omega(GaussRat(Rat(-9, 2)));
    }
}
inline ScalarExpr paper_boundary_total(TheoremId t) {
    if (theorem_dim(t) == 4)
        return ScalarExpr();
    return pi_hp_omega(GaussRat(Rat(65, 8), Rat(-41, 8)));
}

struct CaseResult {
    std::string key;
    ScalarExpr computed;
    ScalarExpr paper;
    bool match = false;
    std::vector<std::string> notes;
};

/// Cached symbol data for one theorem pipeline: the asymptotic inverses of
/// both factors, built once per (theorem, instance, variant).
class CasePipeline {
  public:
    CasePipeline(TheoremId thm, const BoundaryContext& ctx, const SubbundleInstance& inst,
                 const PairingForm& pf, Sigma2Variant variant = Sigma2Variant::PaperEvaluated)
        : thm_(thm), n_(ctx.dim()), pf_(pf) {
        if (inst.n != n_)
            throw std::invalid_argument("pipeline: instance dimension mismatch");
        GradedSymbol op1 = build_sigma(OperatorKind::Dt, ctx, inst, pf);
        q1_ = invert_symbol(op1, 1, lead_square(OperatorKind::Dt), pf);
        OperatorKind k2 = second_operator(thm);
        GradedSymbol op2 = build_sigma(k2, ctx, inst, pf);
        if (lead_order(k2) == 3 && variant != Sigma2Variant::PaperEvaluated)
            op2.set(2, variant_sigma2(op2.at(2), k2, ctx, inst, pf, variant));
        q2_ = invert_symbol(op2, lead_order(k2), lead_square(k2), pf);
    }

    /// Exact coefficient of one case. The n = 6 case b) follows the
    /// integrated-by-parts route; for proper rational symbols the direct
    /// route is an identity (cross-checked separately).
    ScalarExpr evaluate(const CaseSpec& spec, bool integrate_by_parts) const {
        GaussRat pre = case_prefactor(spec);

        // first factor: d^alpha_{xi'} pi+ d^j_{x_n} d^k_{xi_n} sigma_r
        BoundarySymbol f1 = q1_.at(spec.r);
        for (int d = 0; d < spec.j; ++d)
            f1 = f1.d_x_n(pf_);
        RestrictedSymbol r1 = f1.restrict_u().pi_plus_projected();
        for (int d = 0; d < spec.k; ++d)
            r1 = r1.d_xi_n();

        // second factor: d^alpha_{x'} d^{j+1}_{xi_n} d^k_{x_n} sigma_l
        BoundarySymbol f2 = q2_.at(spec.l);
        for (int d = 0; d < spec.k; ++d)
            f2 = f2.d_x_n(pf_);
        RestrictedSymbol r2 = f2.restrict_u();
        int xi_derivs = spec.j + 1;
        bool ibp = integrate_by_parts && spec.cs == CaseId::b && n_ == 6;
        if (ibp) {
            // move the xi_n derivative onto the projected first factor; the
            // boundary term of the integration by parts vanishes for proper
            // rational symbols, at the cost of one overall sign
            r1 = r1.d_xi_n();
            xi_derivs -= 1;
        }
        for (int d = 0; d < xi_derivs; ++d)
            r2 = r2.d_xi_n();

        RationalFn<XiPoly> integrand;
        if (spec.alpha == 0) {
            integrand = r1.multiply(r2, pf_).trace(pf_);
        } else {
            for (int i = 1; i < n_; ++i) {
                // tangential x'-derivatives of the second factor vanish at
                // x_0; the product is assembled anyway rather than pre-dropped
                RestrictedSymbol d1 = r1.d_xi(i);
                RestrictedSymbol d2 = RestrictedSymbol(n_);  // d_{x_i} r2 = 0
                integrand = integrand + d1.multiply(d2, pf_).trace(pf_);
            }
        }
        XiPoly after_xin = xi_n_integral_poly(integrand, Contour::RealLine);
        ScalarExpr total = sphere_integral(after_xin, n_ - 1);
        return total.scaled(ibp ? -pre : pre);
    }

  private:
    static BoundarySymbol variant_sigma2(const BoundarySymbol& evaluated, OperatorKind op,
                                         const BoundaryContext& ctx,
                                         const SubbundleInstance& inst, const PairingForm& pf,
                                         Sigma2Variant variant) {
        int n = ctx.dim();
        if (variant == Sigma2Variant::ComposedTrue)
            return build_sigma2_composed(op, ctx, inst, pf);
        // lemma-verbatim A structure: 2[w tbar A - c(xi) t A c(xi)] plus the
        // quadratic term w (tbar A)^2; the evaluated bracket carried
        // 3 w tbar A - 2 c(xi) t A c(xi)
        ScalarExpr tbar = ScalarExpr::token(op == OperatorKind::DtStarDtDtStar ? Sym::Tbar
                                                                               : Sym::T);
        CliffordElement A = build_A(inst, pf);
        BoundarySymbol As = BoundarySymbol::from_clifford(n, A);
        BoundarySymbol A2 = BoundarySymbol::from_clifford(n, A.multiply(A, pf));
        BoundarySymbol w = sym_w(n);
        return evaluated - w.multiply(As, pf).scaled(tbar) +
               w.multiply(A2, pf).scaled(tbar * tbar);
    }

    TheoremId thm_;
    int n_;
    const PairingForm& pf_;
    GradedSymbol q1_;
    GradedSymbol q2_;
};

/// Evaluates one case of the boundary-term sum exactly, flagging agreement
/// with the published coefficient.
inline CaseResult compute_case(const CaseSpec& spec, const BoundaryContext& ctx,
                               const SubbundleInstance& inst, const PairingForm& pf,
                               Sigma2Variant variant = Sigma2Variant::PaperEvaluated) {
    if (!spec.satisfies_constraint())
        throw std::invalid_argument("compute_case: case indices violate the order constraint");
    CasePipeline pipe(spec.thm, ctx, inst, pf, variant);
    CaseResult res;
    res.key = theorem_name(spec.thm) + "/" + case_name(spec.cs);
    res.computed = pipe.evaluate(spec, /*ibp=*/true);
    res.paper = paper_case_value(spec.thm, spec.cs);
    res.match = (res.computed - res.paper).is_zero();
    return res;
}

struct BoundaryResult {
    std::vector<CaseResult> cases;
    CaseResult total;
};

/// All five cases of a theorem plus their sum, with the diagnostics the
/// report carries: the integration-by-parts cross-check on case b), the
/// Omega-label anomaly of the published n = 4 table, and the analysis of
/// the non-reproducible published value in the n = 6 case b).
inline BoundaryResult compute_boundary(TheoremId thm, const BoundaryContext& ctx,
                                       const SubbundleInstance& inst, const PairingForm& pf) {
    CasePipeline pipe(thm, ctx, inst, pf);
    BoundaryResult out;
    ScalarExpr sum;
    for (const CaseSpec& spec : case_specs(thm)) {
        CaseResult r;
        r.key = theorem_name(thm) + "/" + case_name(spec.cs);
        r.computed = pipe.evaluate(spec, /*ibp=*/true);
        r.paper = paper_case_value(thm, spec.cs);
        r.match = (r.computed - r.paper).is_zero();
        if (spec.cs == CaseId::b && theorem_dim(thm) == 6) {
            ScalarExpr direct = pipe.evaluate(spec, /*ibp=*/false);
            if ((direct - r.computed).is_zero()) {
                r.notes.push_back("integration-by-parts and direct forms agree");
            } else {
                r.notes.push_back("integration-by-parts and direct forms DISAGREE: direct = " +
                                  direct.str());
                r.match = false;
            }
            if (!r.match) {
                r.notes.push_back(
                    "published value not reproduced: the published derivation's "
                    "inverse-symbol jet term carries a spurious factor i (it violates the "
                    "composition identity), and its quoted residue integral differs from "
                    "the exact evaluation of its own displayed integrand");
                CasePipeline true_pipe(thm, ctx, inst, pf, Sigma2Variant::ComposedTrue);
                ScalarExpr true_value = true_pipe.evaluate(spec, /*ibp=*/true);
                r.notes.push_back(
                    "with the order-2 symbol recomposed from the first-order factors "
                    "this case evaluates to " +
                    true_value.str());
            }
        }
        sum += r.computed;
        out.cases.push_back(std::move(r));
    }
    out.total.key = theorem_name(thm) + "/total";
    out.total.computed = sum;
    out.total.paper = paper_boundary_total(thm);
    out.total.match = (sum - out.total.paper).is_zero();
    if (thm == TheoremId::PhiBar) {
        out.cases.back().notes.push_back(
            "the published table labels this case's volume token Omega_4 inside the "
            "n = 4 computation while sibling cases use Omega_3; the engine emits the "
            "per-dimension Omega token");
    }
    return out;
}

/// The sigma_2 A-quadratic diagnostic: case b) recomputed with the
/// lemma-verbatim sigma_2 (quadratic A term included) against the evaluated
/// pipeline; reports the exact difference, a multiple of sum |S|^2 (which
/// word parity forces to vanish under this trace).
struct Sigma2Diagnostics {
    ScalarExpr evaluated;
    ScalarExpr lemma_variant;
    ScalarExpr composed_true;
    ScalarExpr delta;  // lemma_variant - evaluated
};

inline Sigma2Diagnostics diagnostics_sigma2_variants(TheoremId thm, const BoundaryContext& ctx,
                                                     const SubbundleInstance& inst,
                                                     const PairingForm& pf) {
    if (theorem_dim(thm) != 6)
        throw std::invalid_argument("sigma2 diagnostics apply to the n = 6 pipelines only");
    CaseSpec b = case_specs(thm)[3];
    Sigma2Diagnostics d;
    d.evaluated = compute_case(b, ctx, inst, pf, Sigma2Variant::PaperEvaluated).computed;
    d.lemma_variant = compute_case(b, ctx, inst, pf, Sigma2Variant::LemmaVerbatim).computed;
    d.composed_true = compute_case(b, ctx, inst, pf, Sigma2Variant::ComposedTrue).computed;
    d.delta = d.lemma_variant - d.evaluated;
    return d;
}

/// A headline theorem assembled from interior and boundary parts.
struct TheoremResult {
    ScalarExpr interior;
    ScalarExpr interior_paper;
    ScalarExpr boundary;
    ScalarExpr boundary_paper;
    bool interior_match = false;
    bool boundary_match = false;
    std::vector<std::string> boundary_notes;
};

/// The headline theorems (selectors thm1.1 at n = 4, thm1.2 at n = 6):
/// the star kind pairs D_t^{-1} with the adjoint-type inverse, the square
/// kind with the plain power.
inline TheoremResult assemble_theorem(int n, EKind kind, const SubbundleInstance& inst,
                                      const PairingForm& pf) {
    BoundaryContext ctx(n);
    TheoremResult r;
    r.interior = interior_theorem(n, kind, inst, pf, /*via_wick=*/true);

    Rat snorm = inst.snorm2();
    ScalarExpr K = ScalarExpr::token(Sym::K);
    ScalarExpr t = ScalarExpr::token(Sym::T), tb = ScalarExpr::token(Sym::Tbar);
    ScalarExpr tsq = (tb - t) * (tb - t);
    if (n == 4) {
        ScalarExpr inner = K.scaled(GaussRat(Rat(-4, 3)));
        if (kind == EKind::Star)
            inner -= tsq.scaled(GaussRat(Rat(1, 2) * snorm));
        r.interior_paper = ScalarExpr(GaussRat(Rat(32))) * ScalarExpr::token(Sym::Pi, 2) * inner;
    } else {
        ScalarExpr inner = K.scaled(GaussRat(Rat(-16, 3)));
        if (kind == EKind::Star)
            inner -= tsq.scaled(GaussRat(snorm));
        r.interior_paper = ScalarExpr(GaussRat(Rat(128))) * ScalarExpr::token(Sym::Pi, 3) * inner;
    }
    r.interior_match = (r.interior - r.interior_paper).is_zero();

    TheoremId bthm = n == 4 ? (kind == EKind::Star ? TheoremId::Phi : TheoremId::PhiBar)
                            : (kind == EKind::Star ? TheoremId::Psi : TheoremId::PsiBar);
    BoundaryResult br = compute_boundary(bthm, ctx, inst, pf);
    r.boundary = br.total.computed;
    r.boundary_paper = paper_boundary_total(bthm);
    r.boundary_match = br.total.match;
    for (auto& c : br.cases)
        for (auto& note : c.notes)
            r.boundary_notes.push_back(c.key + ": " + note);
    return r;
}

} // namespace wres
