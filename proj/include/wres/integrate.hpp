#pragma once

#include "wres/rational_fn.hpp"
#include "wres/scalar_expr.hpp"
#include "wres/xipoly.hpp"

#include <stdexcept>

namespace wres {

enum class Contour { RealLine, GammaPlus };

/// Exact integral of a rational function of xi_n: 2*pi*i times the sum of
/// residues at upper-half-plane poles. For the real-line contour the
/// integrand must decay at least quadratically; Gamma+ is a closed curve
/// around the upper-half-plane poles and carries no decay requirement.
/// Returns a coefficient of the pi token.
template <class C> C xi_n_integral_coeff(const RationalFn<C>& f, Contour contour) {
    if (f.is_zero())
        return C{};
    if (!f.is_proper())
        throw std::domain_error("xi_n_integral: improper integrand");
    if (f.has_real_pole())
        throw std::domain_error("xi_n_integral: pole on the real axis");
    if (contour == Contour::RealLine && f.den_degree() - f.num_degree() < 2)
        throw std::domain_error("xi_n_integral: integrand does not decay on the real line");
    C res = f.residues_upper_half_plane();
    return scale_coeff(res, GaussRat(Rat(0), Rat(2)));  // 2*i
}

/// Same integral as a ScalarExpr-coefficient object: result = coeff * pi.
inline XiPoly xi_n_integral_poly(const RationalFn<XiPoly>& f, Contour contour) {
    XiPoly c = xi_n_integral_coeff(f, contour);
    return c.scaled(ScalarExpr::token(Sym::Pi));
}

inline ScalarExpr xi_n_integral(const RationalFn<GaussRat>& f, Contour contour) {
    GaussRat c = xi_n_integral_coeff(f, contour);
    return ScalarExpr(c) * ScalarExpr::token(Sym::Pi);
}

namespace detail {

inline Rat double_factorial_odd(int k) {
    // (2k-1)!! with the empty product equal to 1
    Rat r(1);
    for (int j = 2 * k - 1; j >= 1; j -= 2)
        r *= Rat(j);
    return r;
}

} // namespace detail

/// Moment of one monomial over the unit sphere in R^m, as a multiple of the
/// total volume: any odd exponent integrates to zero; for even exponents
/// a_i = 2 b_i the value is prod_i (2 b_i - 1)!! / prod_{l=0}^{|b|-1} (m + 2l).
inline Rat sphere_moment(const XiPoly::Mono& mono, int m) {
    int total_b = 0;
    Rat num(1);
    for (int i = 0; i < m; ++i) {
        if (mono[i] % 2 != 0)
            return Rat(0);
        int b = mono[i] / 2;
        total_b += b;
        num *= detail::double_factorial_odd(b);
    }
    Rat den(1);
    for (int l = 0; l < total_b; ++l)
        den *= Rat(m + 2 * l);
    return num / den;
}

/// Integral of a polynomial in xi_1..xi_m over the unit sphere, as an exact
/// rational multiple of the opaque total-volume token Omega.
inline ScalarExpr sphere_integral(const XiPoly& p, int m) {
    ScalarExpr out;
    for (auto& [mono, coeff] : p.terms()) {
        for (int i = m; i < kMaxXiVars; ++i)
            if (mono[i] != 0)
                throw std::domain_error(
                    "sphere_integral: polynomial involves a variable beyond xi_" +
                    std::to_string(m));
        Rat mom = sphere_moment(mono, m);
        if (mom.is_zero())
            continue;
        out += coeff.scaled(GaussRat(mom)) * ScalarExpr::token(Sym::Omega);
    }
    return out;
}

} // namespace wres
