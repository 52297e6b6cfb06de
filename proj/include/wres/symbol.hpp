#pragma once

#include "wres/clifford.hpp"
#include "wres/integrate.hpp"
#include "wres/rational_fn.hpp"

#include <map>
#include <stdexcept>

namespace wres {

/// Numerator monomial in xi_n and the atom u = |xi'|^2_{g(x_n)}.
struct UXMono {
    uint16_t xin = 0;
    uint16_t u = 0;
    bool operator==(const UXMono& o) const { return xin == o.xin && u == o.u; }
    bool operator<(const UXMono& o) const {
        if (xin != o.xin)
            return xin < o.xin;
        return u < o.u;
    }
};

/// Coefficient of one Clifford word in a pre-restriction boundary symbol:
/// a polynomial in (xi_n, u) over XiPoly, divided by w^wpow with
/// w = |xi|^2 = u + xi_n^2. The atom u carries the x_n-dependence of
/// |xi'|^2 so that the normal-jet rule d/dx_n u = h'(0) u stays expressible;
/// u is only set to 1 at restriction time.
class PreCoeff {
  public:
    PreCoeff() = default;
    PreCoeff(long long c) { add(UXMono{}, XiPoly(c)); }

    static PreCoeff monomial(int xin_pow, int u_pow, XiPoly c, int wpow = 0) {
        PreCoeff p;
        p.wpow_ = wpow;
        p.add(UXMono{static_cast<uint16_t>(xin_pow), static_cast<uint16_t>(u_pow)},
              std::move(c));
        if (p.num_.empty())
            p.wpow_ = 0;
        return p;
    }

    bool is_zero() const { return num_.empty(); }
    int wpow() const { return wpow_; }
    const std::map<UXMono, XiPoly>& num() const { return num_; }

    void add(const UXMono& m, const XiPoly& c) {
        if (c.is_zero())
            return;
        auto it = num_.find(m);
        if (it == num_.end()) {
            num_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                num_.erase(it);
        }
    }

    PreCoeff operator+(const PreCoeff& o) const {
        int m = std::max(wpow_, o.wpow_);
        PreCoeff r = this->w_raised(m - wpow_);
        PreCoeff s = o.w_raised(m - o.wpow_);
        r.wpow_ = m;
        for (auto& [k, c] : s.num_)
            r.add(k, c);
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }
    PreCoeff operator-(const PreCoeff& o) const { return *this + o.scaled(GaussRat(-1)); }
    PreCoeff operator*(const PreCoeff& o) const {
        PreCoeff r;
        r.wpow_ = wpow_ + o.wpow_;
        for (auto& [m1, c1] : num_)
            for (auto& [m2, c2] : o.num_)
                r.add(UXMono{static_cast<uint16_t>(m1.xin + m2.xin),
                             static_cast<uint16_t>(m1.u + m2.u)},
                      c1 * c2);
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }

    PreCoeff scaled(const GaussRat& s) const {
        PreCoeff r;
        if (s.is_zero())
            return r;
        r.wpow_ = wpow_;
        for (auto& [m, c] : num_)
            r.num_.emplace(m, c.scaled(s));
        return r;
    }
    PreCoeff scaled(const ScalarExpr& s) const {
        PreCoeff r;
        r.wpow_ = wpow_;
        for (auto& [m, c] : num_)
            r.add(m, c.scaled(s));
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }
    PreCoeff scaled_xi(const XiPoly& s) const {
        PreCoeff r;
        r.wpow_ = wpow_;
        for (auto& [m, c] : num_)
            r.add(m, c * s);
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }

    bool operator==(const PreCoeff& o) const { return (*this - o).is_zero(); }

    /// Multiplies the numerator by w^k (used for denominator alignment).
    PreCoeff w_raised(int k) const {
        PreCoeff r = *this;
        for (int j = 0; j < k; ++j) {
            PreCoeff next;
            next.wpow_ = r.wpow_;
            for (auto& [m, c] : r.num_) {
                next.add(UXMono{m.xin, static_cast<uint16_t>(m.u + 1)}, c);
                next.add(UXMono{static_cast<uint16_t>(m.xin + 2), m.u}, c);
            }
            r = next;
        }
        return r;
    }

    /// d/d(xi_n) with the chain rule through w.
    PreCoeff d_xi_n() const {
        PreCoeff r;
        r.wpow_ = wpow_ + (wpow_ > 0 ? 1 : 0);
        for (auto& [m, c] : num_) {
            if (m.xin > 0) {
                // derivative of the numerator monomial, re-aligned over w^(wpow+1)
                PreCoeff t = PreCoeff::monomial(m.xin - 1, m.u, c.scaled(GaussRat(m.xin)));
                t = t.w_raised(wpow_ > 0 ? 1 : 0);
                for (auto& [k, v] : t.num_)
                    r.add(k, v);
            }
            if (wpow_ > 0)
                r.add(UXMono{static_cast<uint16_t>(m.xin + 1), m.u},
                      c.scaled(GaussRat(-2 * wpow_)));
        }
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }

    /// The scalar part of d/dx_n at x_0: u -> h'(0) u (numerator and, via the
    /// chain rule, the w-denominator). The word part of the derivative is
    /// handled by the symbol layer.
    PreCoeff d_x_n_scalar() const {
        ScalarExpr hp = ScalarExpr::token(Sym::Hp);
        PreCoeff r;
        r.wpow_ = wpow_ + (wpow_ > 0 ? 1 : 0);
        for (auto& [m, c] : num_) {
            if (m.u > 0) {
                PreCoeff t = PreCoeff::monomial(m.xin, m.u, c.scaled(hp.scaled(GaussRat(m.u))));
                t = t.w_raised(wpow_ > 0 ? 1 : 0);
                for (auto& [k, v] : t.num_)
                    r.add(k, v);
            }
            if (wpow_ > 0)
                r.add(UXMono{m.xin, static_cast<uint16_t>(m.u + 1)},
                      c.scaled(hp.scaled(GaussRat(-wpow_))));
        }
        if (r.num_.empty())
            r.wpow_ = 0;
        return r;
    }

    /// Restriction u -> 1: a rational function of xi_n over XiPoly with the
    /// denominator w^wpow factored as (xi_n - i)^wpow (xi_n + i)^wpow.
    RationalFn<XiPoly> restrict_u() const {
        std::vector<XiPoly> dense;
        for (auto& [m, c] : num_) {
            if (dense.size() <= m.xin)
                dense.resize(m.xin + 1);
            dense[m.xin] += c;
        }
        std::vector<std::pair<GaussRat, int>> den;
        if (wpow_ > 0) {
            den.push_back({GaussRat::i(), wpow_});
            den.push_back({-GaussRat::i(), wpow_});
        }
        return RationalFn<XiPoly>(std::move(dense), std::move(den));
    }

    /// Numerator with the atom u replaced by its x_0 value sum_{i<n} xi_i^2
    /// and xi_n powers folded into variable n. Used for x_0-equality tests.
    XiPoly numerator_at_x0(int n) const {
        XiPoly u_val;
        for (int i = 1; i < n; ++i)
            u_val += XiPoly::var(i, 2);
        XiPoly out;
        for (auto& [m, c] : num_) {
            XiPoly piece = c;
            for (int k = 0; k < m.u; ++k)
                piece *= u_val;
            for (int k = 0; k < m.xin; ++k)
                piece *= XiPoly::var(n);
            out += piece;
        }
        return out;
    }

    std::string str() const {
        if (num_.empty())
            return "0";
        std::string s = "[";
        bool first = true;
        for (auto& [m, c] : num_) {
            if (!first)
                s += " + ";
            s += "(" + c.str() + ")";
            if (m.xin)
                s += "*xin^" + std::to_string(m.xin);
            if (m.u)
                s += "*u^" + std::to_string(m.u);
            first = false;
        }
        s += "]";
        if (wpow_)
            s += "/w^" + std::to_string(wpow_);
        return s;
    }

  private:
    std::map<UXMono, XiPoly> num_;
    int wpow_ = 0;
};

inline PreCoeff scale_expr(const PreCoeff& c, const ScalarExpr& s) { return c.scaled(s); }

class RestrictedSymbol;

/// Boundary symbol at x_0 before restriction to |xi'| = 1: a Clifford
/// element whose coefficients are PreCoeff rational data. Carries the order
/// of x_n-jets already applied; only first jets exist in this model.
class BoundarySymbol {
  public:
    explicit BoundarySymbol(int n) : n_(n) {}
    BoundarySymbol(int n, Element<PreCoeff> e, int jet = 0)
        : n_(n), elem_(std::move(e)), jet_(jet) {}

    int dim() const { return n_; }
    int jet_order() const { return jet_; }
    bool is_zero() const { return elem_.is_zero(); }
    const Element<PreCoeff>& element() const { return elem_; }

    static BoundarySymbol scalar(int n, PreCoeff c) {
        return BoundarySymbol(n, Element<PreCoeff>(std::move(c)));
    }
    static BoundarySymbol from_clifford(int n, const CliffordElement& e, int xin_pow = 0,
                                        int u_pow = 0, int wpow = 0) {
        Element<PreCoeff> out;
        for (auto& [w, c] : e.terms())
            out.add(w, PreCoeff::monomial(xin_pow, u_pow, c, wpow));
        return BoundarySymbol(n, std::move(out));
    }

    BoundarySymbol operator+(const BoundarySymbol& o) const {
        return BoundarySymbol(n_, elem_ + o.elem_, std::max(jet_, o.jet_));
    }
    BoundarySymbol operator-(const BoundarySymbol& o) const {
        return BoundarySymbol(n_, elem_ - o.elem_, std::max(jet_, o.jet_));
    }
    BoundarySymbol multiply(const BoundarySymbol& o, const PairingForm& pf) const {
        return BoundarySymbol(n_, elem_.multiply(o.elem_, pf), jet_ + o.jet_);
    }
    BoundarySymbol scaled(const GaussRat& s) const {
        return BoundarySymbol(n_, elem_.scaled(s), jet_);
    }
    BoundarySymbol scaled(const ScalarExpr& s) const {
        return BoundarySymbol(n_, elem_.scaled(s), jet_);
    }

    /// Divides every coefficient by c * w^wpow (central monomial division).
    BoundarySymbol divided_central(const GaussRat& c, int wpow) const {
        Element<PreCoeff> out;
        for (auto& [w, pc] : elem_.terms())
            out.add(w, PreCoeff::monomial(0, 0, XiPoly(GaussRat(1) / c), wpow) * pc);
        return BoundarySymbol(n_, std::move(out), jet_);
    }

    BoundarySymbol d_xi_n() const {
        Element<PreCoeff> out;
        for (auto& [w, pc] : elem_.terms())
            out.add(w, pc.d_xi_n());
        return BoundarySymbol(n_, std::move(out), jet_);
    }

    /// d/dx_n at x_0 per the normal-jet rules: u -> h'(0) u, c(e_i) -> JET(i)
    /// for i < n, c(dx_n) -> 0, chat unsupported, second jets rejected.
    BoundarySymbol d_x_n(const PairingForm& pf) const {
        if (jet_ >= 1)
            throw std::domain_error("jet order exceeded");
        Element<PreCoeff> out;
        for (auto& [w, pc] : elem_.terms()) {
            // scalar part of the derivative
            PreCoeff dpc = pc.d_x_n_scalar();
            if (!dpc.is_zero())
                out.add(w, dpc);
            // word part: Leibniz over the generators
            for (size_t k = 0; k < w.size(); ++k) {
                const Generator& g = w[k];
                if (g.ch == Channel::C) {
                    if (g.idx == n_)
                        continue;  // d/dx_n c(dx_n) = 0
                    Word jw = w;
                    jw[k] = gen_jet(g.idx);
                    // re-normal-order the altered word
                    Element<PreCoeff> piece;
                    piece.add(Word{}, pc);
                    Element<PreCoeff> word_elem;
                    word_elem.add(jw, PreCoeff(1));
                    out += piece.multiply(word_elem, pf);
                } else if (g.ch == Channel::CHAT) {
                    throw std::domain_error(
                        "d_x_n: no jet rule for chat generators at x_0");
                } else {
                    throw std::domain_error("jet order exceeded");
                }
            }
        }
        return BoundarySymbol(n_, std::move(out), jet_ + 1);
    }

    /// d/dx_i for tangential i < n vanishes identically at x_0.
    BoundarySymbol d_x_tangential() const { return BoundarySymbol(n_); }

    RestrictedSymbol restrict_u() const;

    /// True when every word's numerator vanishes after substituting the
    /// atom u by its x_0 value; the symbol is then zero as a function of xi.
    bool is_zero_at_x0() const {
        for (auto& [w, pc] : elem_.terms())
            if (!pc.numerator_at_x0(n_).is_zero())
                return false;
        return true;
    }

    bool equals_at_x0(const BoundarySymbol& o) const { return (*this - o).is_zero_at_x0(); }

    /// Validates xi-homogeneity of every stored monomial against `order`
    /// (u counts 2, each w in the denominator counts -2).
    bool is_homogeneous(int order) const {
        for (auto& [w, pc] : elem_.terms())
            for (auto& [m, c] : pc.num())
                for (auto& [xm, sc] : c.terms()) {
                    int d = m.xin + 2 * m.u - 2 * pc.wpow();
                    for (int k = 0; k < kMaxXiVars; ++k)
                        d += xm[k];
                    if (d != order)
                        return false;
                }
        return true;
    }

    std::string str() const { return elem_.str(); }

  private:
    int n_;
    Element<PreCoeff> elem_;
    int jet_ = 0;
};

/// Boundary symbol after restriction to |xi'| = 1: Clifford words with
/// rational-function coefficients in xi_n over XiPoly. Closed under products,
/// xi-derivatives and the half-plane projection.
class RestrictedSymbol {
  public:
    explicit RestrictedSymbol(int n) : n_(n) {}
    RestrictedSymbol(int n, Element<RationalFn<XiPoly>> e) : n_(n), elem_(std::move(e)) {}

    int dim() const { return n_; }
    bool is_zero() const { return elem_.is_zero(); }
    const Element<RationalFn<XiPoly>>& element() const { return elem_; }

    static RestrictedSymbol scalar(int n, RationalFn<XiPoly> f) {
        return RestrictedSymbol(n, Element<RationalFn<XiPoly>>(std::move(f)));
    }

    RestrictedSymbol operator+(const RestrictedSymbol& o) const {
        return RestrictedSymbol(n_, elem_ + o.elem_);
    }
    RestrictedSymbol operator-(const RestrictedSymbol& o) const {
        return RestrictedSymbol(n_, elem_ - o.elem_);
    }
    RestrictedSymbol multiply(const RestrictedSymbol& o, const PairingForm& pf) const {
        return RestrictedSymbol(n_, elem_.multiply(o.elem_, pf));
    }
    RestrictedSymbol scaled(const GaussRat& s) const {
        return RestrictedSymbol(n_, elem_.scaled(s));
    }
    RestrictedSymbol scaled(const ScalarExpr& s) const {
        return RestrictedSymbol(n_, elem_.scaled(s));
    }

    RestrictedSymbol d_xi_n() const {
        Element<RationalFn<XiPoly>> out;
        for (auto& [w, f] : elem_.terms())
            out.add(w, f.derivative());
        return RestrictedSymbol(n_, std::move(out));
    }

    /// Tangential xi-derivative, acting on the polynomial coefficients.
    RestrictedSymbol d_xi(int var) const {
        Element<RationalFn<XiPoly>> out;
        for (auto& [w, f] : elem_.terms()) {
            std::vector<XiPoly> num;
            for (auto& c : f.num())
                num.push_back(c.derivative(var));
            out.add(w, RationalFn<XiPoly>(std::move(num),
                                          std::vector<std::pair<GaussRat, int>>(f.den())));
        }
        return RestrictedSymbol(n_, std::move(out));
    }

    /// pi^+ projection: keeps the partial-fraction components with poles in
    /// the upper half-plane, word by word.
    RestrictedSymbol pi_plus_projected() const {
        Element<RationalFn<XiPoly>> out;
        for (auto& [w, f] : elem_.terms())
            out.add(w, pi_plus(f));
        return RestrictedSymbol(n_, std::move(out));
    }
    RestrictedSymbol pi_minus_projected() const {
        Element<RationalFn<XiPoly>> out;
        for (auto& [w, f] : elem_.terms())
            out.add(w, pi_minus(f));
        return RestrictedSymbol(n_, std::move(out));
    }

    /// Exact trace over the Clifford module, one rational function of xi_n.
    RationalFn<XiPoly> trace(const PairingForm& pf) const { return elem_.trace(pf); }

    /// Canonical form modulo the sphere relation |xi'|^2 = 1.
    RestrictedSymbol sphere_reduced() const {
        int m = n_ - 1;
        Element<RationalFn<XiPoly>> out;
        for (auto& [w, f] : elem_.terms()) {
            std::vector<XiPoly> num;
            for (auto& c : f.num())
                num.push_back(c.sphere_reduce(m));
            out.add(w, RationalFn<XiPoly>(std::move(num),
                                          std::vector<std::pair<GaussRat, int>>(f.den())));
        }
        return RestrictedSymbol(n_, std::move(out));
    }

    bool operator==(const RestrictedSymbol& o) const { return (elem_ - o.elem_).is_zero(); }

    std::string str() const { return elem_.str(); }

  private:
    int n_;
    Element<RationalFn<XiPoly>> elem_;
};

inline RestrictedSymbol BoundarySymbol::restrict_u() const {
    Element<RationalFn<XiPoly>> out;
    for (auto& [w, pc] : elem_.terms())
        out.add(w, pc.restrict_u());
    return RestrictedSymbol(n_, std::move(out));
}

/// Symbol of an operator as a map from homogeneity order to its component.
class GradedSymbol {
  public:
    GradedSymbol() = default;

    void set(int order, BoundarySymbol s) { orders_.insert_or_assign(order, std::move(s)); }
    bool has(int order) const { return orders_.count(order) > 0; }
    const BoundarySymbol& at(int order) const {
        auto it = orders_.find(order);
        if (it == orders_.end())
            throw std::out_of_range("GradedSymbol: missing order " + std::to_string(order));
        return it->second;
    }
    const std::map<int, BoundarySymbol>& orders() const { return orders_; }

  private:
    std::map<int, BoundarySymbol> orders_;
};

/// c(xi) = c(xi') + xi_n c(dx_n) as a pre-restriction symbol.
inline BoundarySymbol sym_c_xi(int n) {
    Element<PreCoeff> e;
    for (int i = 1; i < n; ++i)
        e.add(Word{gen_c(i)}, PreCoeff::monomial(0, 0, XiPoly::var(i)));
    e.add(Word{gen_c(n)}, PreCoeff::monomial(1, 0, XiPoly(1)));
    return BoundarySymbol(n, std::move(e));
}

/// The declared central square c * w^wpow used by the asymptotic inversion.
struct CentralSquare {
    GaussRat c;
    int wpow = 0;
};

/// Asymptotic inverse of a graded symbol with leading order m: returns
/// q_{-m} = p_m^{-1} and, at depth 2, also
/// q_{-m-1} = -p_m^{-1} [ p_{m-1} p_m^{-1} + d_{xi_n} p_m D_{x_n} p_m^{-1} ]
/// (tangential D_{x_j} terms vanish at x_0).
inline GradedSymbol invert_symbol(const GradedSymbol& p, int lead_order,
                                  const CentralSquare& square, const PairingForm& pf,
                                  int depth = 2) {
    const BoundarySymbol& pm = p.at(lead_order);
    // precondition: p_m * p_m equals the declared central scalar at x_0
    BoundarySymbol sq = pm.multiply(pm, pf);
    BoundarySymbol declared = BoundarySymbol::scalar(
        pm.dim(), PreCoeff::monomial(0, 0, XiPoly(square.c)).w_raised(square.wpow));
    if (!sq.equals_at_x0(declared))
        throw std::domain_error("non-invertible by central-square rule");
    BoundarySymbol qm = pm.divided_central(square.c, square.wpow);

    GradedSymbol q;
    q.set(-lead_order, qm);
    if (depth >= 2) {
        const BoundarySymbol& pm1 = p.at(lead_order - 1);
        // D_{x_n} = -i d/dx_n
        BoundarySymbol dxq = qm.d_x_n(pf).scaled(-GaussRat::i());
        BoundarySymbol inner = pm1.multiply(qm, pf) + pm.d_xi_n().multiply(dxq, pf);
        q.set(-lead_order - 1, qm.multiply(inner, pf).scaled(GaussRat(-1)));
    }
    return q;
}

/// Order-`target` component of the symbol composition p o q at x_0, within
/// the first-jet model (multi-indices |alpha| <= 1; tangential x-derivatives
/// vanish at x_0).
inline BoundarySymbol compose_orders(const GradedSymbol& p, const GradedSymbol& q, int target,
                                     const PairingForm& pf) {
    int n = p.orders().begin()->second.dim();
    BoundarySymbol acc(n);
    for (auto& [a, pa] : p.orders())
        for (auto& [b, qb] : q.orders()) {
            if (a + b == target)
                acc = acc + pa.multiply(qb, pf);
            if (a + b - 1 == target) {
                BoundarySymbol dxq = qb.d_x_n(pf).scaled(-GaussRat::i());
                acc = acc + pa.d_xi_n().multiply(dxq, pf);
            }
        }
    return acc;
}

} // namespace wres
