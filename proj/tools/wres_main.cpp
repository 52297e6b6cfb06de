// wres - exact verification of the noncommutative-residue coefficient
// tables for sub-signature operators on 4- and 6-dimensional manifolds
// with boundary.

#include "wres/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace wres;

namespace {

int cmd_trace(const std::string& text, int n) {
    try {
        PairingForm pf(n);
        CliffordElement e = parse_expr(text, n, pf);
        std::cout << e.str() << "\n";
        return 0;
    } catch (const ParseError& pe) {
        std::cerr << "parse error: " << pe.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitData;
    }
}

int cmd_cases() {
    for (TheoremId t : {TheoremId::Phi, TheoremId::PhiBar, TheoremId::Psi, TheoremId::PsiBar}) {
        std::cout << theorem_name(t) << " (n = " << theorem_dim(t) << ")\n";
        for (const CaseSpec& s : case_specs(t)) {
            GaussRat pre = case_prefactor(s);
            std::cout << "  " << case_name(s.cs) << ": r = " << s.r << ", l = " << s.l
                      << ", j = " << s.j << ", k = " << s.k << ", |alpha| = " << s.alpha
                      << ", prefactor = " << pre.str()
                      << ", reference = " << paper_case_value(t, s.cs).str() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic verification of trace identities, boundary "
                 "symbol integrals and residue coefficients for sub-signature "
                 "operators"};
    app.require_subcommand(1);

    VerifyOptions opt;
    uint64_t seed = 0;
    bool seed_set = false;

    CLI::App* verify = app.add_subcommand("verify", "recompute and compare coefficients");
    verify->add_option("--theorem", opt.selector,
                       "selector: thm1.1 thm1.2 thm2.1-flat thm2.2 thm3.6 thm3.7 "
                       "thm4.3 thm4.4 all");
    verify->add_option("--n", opt.n, "dimension for the selectors that need one (4 or 6)");
    verify->add_option("--seed", seed, "seed for the random S instance")
        ->each([&](const std::string&) { seed_set = true; });
    verify->add_option("--instance", opt.instance_path, "instance file {n, k, S}");
    verify->add_option("--k", opt.k, "rank of F_perp for seeded instances");
    verify->add_option("--format", opt.format, "text or json");
    verify->add_option("--out", opt.out_path, "write the report to a file");

    std::string trace_text;
    int trace_n = 4;
    CLI::App* trace = app.add_subcommand("trace", "evaluate a Clifford trace expression");
    trace->add_option("expr", trace_text, "expression, e.g. trace(c(4)*c(4))")->required();
    trace->add_option("--n", trace_n, "session dimension");

    CLI::App* cases = app.add_subcommand("cases", "list the boundary-term case table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (verify->parsed()) {
        if (seed_set)
            opt.seed = seed;
        return run_verify(opt, std::cout, std::cerr);
    }
    if (trace->parsed())
        return cmd_trace(trace_text, trace_n);
    if (cases->parsed())
        return cmd_cases();
    return kExitUsage;
}
