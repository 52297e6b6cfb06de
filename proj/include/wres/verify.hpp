#pragma once

#include "wres/parser.hpp"
#include "wres/pipelines.hpp"
#include "wres/report.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace wres {

/// Instance file schema: {"n": 4, "k": 1, "S": [[["p/q", ...] x k] x n]}.
inline SubbundleInstance instance_from_json(const nlohmann::json& j) {
    SubbundleInstance inst;
    try {
        inst.n = j.at("n").get<int>();
        inst.k = j.at("k").get<int>();
        const auto& S = j.at("S");
        for (const auto& row : S) {
            std::vector<std::vector<Rat>> r;
            for (const auto& vec : row) {
                std::vector<Rat> v;
                for (const auto& comp : vec)
                    v.push_back(Rat::parse(comp.get<std::string>()));
                r.push_back(std::move(v));
            }
            inst.S.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("instance file: ") + e.what());
    }
    inst.validate();
    return inst;
}

inline nlohmann::json instance_to_json(const SubbundleInstance& inst) {
    nlohmann::json S = nlohmann::json::array();
    for (auto& row : inst.S) {
        nlohmann::json r = nlohmann::json::array();
        for (auto& vec : row) {
            nlohmann::json v = nlohmann::json::array();
            for (auto& c : vec)
                v.push_back(c.str());
            r.push_back(std::move(v));
        }
        S.push_back(std::move(r));
    }
    return nlohmann::json{{"n", inst.n}, {"k", inst.k}, {"S", std::move(S)}};
}

struct VerifyOptions {
    std::string selector = "all";
    int n = 4;  // used by the selectors that do not imply a dimension
    std::optional<uint64_t> seed;
    std::string instance_path;
    std::string format = "text";  // text | json
    std::string out_path;
    int k = 1;  // rank of F_perp for seeded instances
};

// exit-code contract: 0 match, 1 mismatch, 2 usage, 3 data
inline constexpr int kExitMatch = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

namespace verify_detail {

/// Deterministic per-dimension instance for seeded runs.
inline SubbundleInstance instance_for(const VerifyOptions& opt, int n) {
    std::mt19937_64 rng(opt.seed.value_or(0) ^ (uint64_t(n) << 32));
    return SubbundleInstance::random(rng, n, opt.k);
}

inline TheoremId boundary_theorem(const std::string& sel) {
    if (sel == "thm3.6")
        return TheoremId::Phi;
    if (sel == "thm3.7")
        return TheoremId::PhiBar;
    if (sel == "thm4.3")
        return TheoremId::Psi;
    return TheoremId::PsiBar;
}

inline void add_boundary_entries(VerificationReport& rep, TheoremId thm,
                                 const SubbundleInstance& inst) {
    int n = theorem_dim(thm);
    BoundaryContext ctx(n);
    PairingForm pf(n);
    BoundaryResult br = compute_boundary(thm, ctx, inst, pf);
    if (n == 6) {
        // the A-quadratic sigma_2 delta, flagged on case b)
        Sigma2Diagnostics d = diagnostics_sigma2_variants(thm, ctx, inst, pf);
        br.cases[3].notes.push_back(
            "lemma-verbatim sigma_2 (quadratic A term included) shifts this case by " +
            d.delta.str() + "; the quadratic term is parity-invisible under this trace");
        br.cases[3].notes.push_back(
            "recomposed order-2 symbol gives " + d.composed_true.str() +
            " for this case and a vanishing boundary total");
    }
    for (auto& c : br.cases)
        rep.add({c.key, c.computed, c.paper, c.match, c.notes});
    rep.add({br.total.key, br.total.computed, br.total.paper, br.total.match,
             br.total.notes});
}

inline void add_thm22_entries(VerificationReport& rep, int n, const SubbundleInstance& inst) {
    PairingForm pf(n);
    BoundaryContext ctx(n);
    // the trace identity in t, tbar behind the interior coefficients
    ETraceResult star = trace_E(EKind::Star, ctx, inst, pf);
    rep.add("eq-a27/n" + std::to_string(n), star.coeff_snorm, closed_snorm_coeff(n, EKind::Star),
            {"S-coefficient of tr(E), Wick engine vs closed form"});
    ETraceResult sq = trace_E(EKind::Square, ctx, inst, pf);
    rep.add("eq-a27/n" + std::to_string(n) + "/square-cancellation", sq.coeff_snorm,
            ScalarExpr(),
            {"the A-dependent terms of the squared operator cancel exactly"});
    for (EKind kind : {EKind::Star, EKind::Square}) {
        std::string kn = kind == EKind::Star ? "star" : "square";
        ScalarExpr wick = interior_raw(n, kind, inst, pf, true);
        ScalarExpr closed = interior_raw(n, kind, inst, pf, false);
        rep.add("thm2.2/n" + std::to_string(n) + "/" + kn + "/route-agreement", wick, closed,
                {"heat-trace route vs closed-form trace theorem, full fiber trace",
                 "the headline theorems carry the 2^n fiber factor on the curvature "
                 "term only; the verification engine reports both normalizations"});
    }
}

inline void add_flat_entries(VerificationReport& rep, const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed.value_or(0) ^ 0x9e3779b97f4a7c15ull);
    for (int k : {1, 2}) {
        SubbundleInstance inst = SubbundleInstance::random(rng, 4, k);
        bool ok_star = flat_lichnerowicz_check(4, inst, EKind::Star);
        bool ok_sq = flat_lichnerowicz_check(4, inst, EKind::Square);
        rep.add({"thm2.1-flat/a11/k" + std::to_string(k),
                 ok_star ? ScalarExpr() : ScalarExpr(1), ScalarExpr(), ok_star,
                 {"coefficient-wise matrix comparison of the factored operator "
                  "against the Laplacian-plus-endomorphism form; 0 difference"}});
        rep.add({"thm2.1-flat/a101/k" + std::to_string(k),
                 ok_sq ? ScalarExpr() : ScalarExpr(1), ScalarExpr(), ok_sq, {}});
    }
}

inline void add_headline_entries(VerificationReport& rep, int n,
                                 const SubbundleInstance& inst) {
    PairingForm pf(n);
    std::string tn = n == 4 ? "thm1.1" : "thm1.2";
    for (EKind kind : {EKind::Star, EKind::Square}) {
        std::string kn = kind == EKind::Star ? "star" : "square";
        TheoremResult tr = assemble_theorem(n, kind, inst, pf);
        std::vector<std::string> inotes = {
            "sum |S(e_i) f_alpha|^2 = " + inst.snorm2().str() + " for this instance"};
        rep.add({tn + "/" + kn + "/interior", tr.interior, tr.interior_paper,
                 tr.interior_match, inotes});
        rep.add({tn + "/" + kn + "/boundary", tr.boundary, tr.boundary_paper,
                 tr.boundary_match, tr.boundary_notes});
    }
}

} // namespace verify_detail

/// Runs the selected verification and writes the report; returns the exit
/// status per the contract (0 match, 1 mismatch, 2 usage, 3 data).
inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> selectors = {
        "thm1.1", "thm1.2", "thm2.1-flat", "thm2.2", "thm3.6",
        "thm3.7", "thm4.3", "thm4.4",      "all"};
    if (std::find(selectors.begin(), selectors.end(), opt.selector) == selectors.end()) {
        err << "unknown selector '" << opt.selector << "'\n";
        return kExitUsage;
    }
    if (opt.format != "text" && opt.format != "json") {
        err << "unknown format '" << opt.format << "'\n";
        return kExitUsage;
    }
    if (opt.n != 4 && opt.n != 6) {
        err << "--n must be 4 or 6\n";
        return kExitUsage;
    }

    VerificationReport rep;
    try {
        const std::string& sel = opt.selector;
        auto wants = [&](const std::string& s) { return sel == s || sel == "all"; };
        int primary_dim = 0;

        // With an instance file the run is pinned to its dimension; seeded
        // runs generate one instance per needed dimension.
        std::optional<SubbundleInstance> pinned;
        if (!opt.instance_path.empty()) {
            std::ifstream in(opt.instance_path);
            if (!in)
                throw std::invalid_argument("cannot open instance file " + opt.instance_path);
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw std::invalid_argument(std::string("instance file: ") + e.what());
            }
            pinned = instance_from_json(j);
        }
        auto instance_of_dim = [&](int n) -> SubbundleInstance {
            if (pinned)
                return *pinned;
            return verify_detail::instance_for(opt, n);
        };
        auto run_dim_guarded = [&](int n, auto&& fn) {
            if (pinned && pinned->n != n)
                return;  // instance pins the other dimension; skip quietly
            fn(instance_of_dim(n));
        };

        if (wants("thm3.6"))
            run_dim_guarded(4, [&](const SubbundleInstance& i) {
                verify_detail::add_boundary_entries(rep, TheoremId::Phi, i);
                primary_dim = primary_dim ? primary_dim : 4;
                rep.instance_digest = i.digest();
            });
        if (wants("thm3.7"))
            run_dim_guarded(4, [&](const SubbundleInstance& i) {
                verify_detail::add_boundary_entries(rep, TheoremId::PhiBar, i);
                primary_dim = primary_dim ? primary_dim : 4;
                rep.instance_digest = i.digest();
            });
        if (wants("thm4.3"))
            run_dim_guarded(6, [&](const SubbundleInstance& i) {
                verify_detail::add_boundary_entries(rep, TheoremId::Psi, i);
                primary_dim = primary_dim ? primary_dim : 6;
                rep.instance_digest = i.digest();
            });
        if (wants("thm4.4"))
            run_dim_guarded(6, [&](const SubbundleInstance& i) {
                verify_detail::add_boundary_entries(rep, TheoremId::PsiBar, i);
                primary_dim = primary_dim ? primary_dim : 6;
                rep.instance_digest = i.digest();
            });
        if (wants("thm2.2")) {
            int n = sel == "all" ? 0 : opt.n;
            if (sel == "all") {
                run_dim_guarded(4, [&](const SubbundleInstance& i) {
                    verify_detail::add_thm22_entries(rep, 4, i);
                });
                run_dim_guarded(6, [&](const SubbundleInstance& i) {
                    verify_detail::add_thm22_entries(rep, 6, i);
                });
            } else {
                if (n != 4 && n != 6)
                    throw std::invalid_argument("thm2.2 needs --n 4 or --n 6");
                run_dim_guarded(n, [&](const SubbundleInstance& i) {
                    verify_detail::add_thm22_entries(rep, n, i);
                });
                primary_dim = n;
            }
        }
        if (wants("thm2.1-flat")) {
            if (!pinned || pinned->n == 4)
                verify_detail::add_flat_entries(rep, opt);
            primary_dim = primary_dim ? primary_dim : 4;
        }
        if (wants("thm1.1"))
            run_dim_guarded(4, [&](const SubbundleInstance& i) {
                verify_detail::add_headline_entries(rep, 4, i);
                primary_dim = primary_dim ? primary_dim : 4;
                rep.instance_digest = i.digest();
            });
        if (wants("thm1.2"))
            run_dim_guarded(6, [&](const SubbundleInstance& i) {
                verify_detail::add_headline_entries(rep, 6, i);
                primary_dim = primary_dim ? primary_dim : 6;
                rep.instance_digest = i.digest();
            });

        if (rep.entries.empty())
            throw std::invalid_argument(
                "nothing to verify: the instance dimension matches none of the "
                "selected computations");
        rep.dimension = primary_dim ? primary_dim : opt.n;
        rep.seed = pinned ? std::optional<uint64_t>() : std::optional(opt.seed.value_or(0));
        rep.omega_label = rep.dimension == 6 ? "Omega_4" : "Omega_3";
        if (pinned)
            rep.instance_digest = pinned->digest();
    } catch (const std::invalid_argument& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    }

    std::string text = opt.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) {
            err << "cannot write " << opt.out_path << "\n";
            return kExitData;
        }
        f << text;
    } else {
        out << text;
    }
    return rep.all_match() ? kExitMatch : kExitMismatch;
}

} // namespace wres
