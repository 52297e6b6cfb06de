#pragma once

#include "wres/xipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wres {

inline GaussRat scale_coeff(const GaussRat& c, const GaussRat& s) { return c * s; }
inline XiPoly scale_coeff(const XiPoly& c, const GaussRat& s) { return c.scaled(s); }

namespace detail {

template <class C> bool coeff_zero(const C& c) { return c.is_zero(); }

template <class C> std::vector<C> poly_trim(std::vector<C> p) {
    while (!p.empty() && coeff_zero(p.back()))
        p.pop_back();
    return p;
}

template <class C> std::vector<C> poly_add(const std::vector<C>& a, const std::vector<C>& b) {
    std::vector<C> r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < r.size(); ++k) {
        if (k < a.size())
            r[k] = r[k] + a[k];
        if (k < b.size())
            r[k] = r[k] + b[k];
    }
    return poly_trim(std::move(r));
}

template <class C> std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<C> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return poly_trim(std::move(r));
}

template <class C>
std::vector<C> poly_mul_g(const std::vector<C>& a, const std::vector<GaussRat>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<C> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + scale_coeff(a[i], b[j]);
    return poly_trim(std::move(r));
}

inline std::vector<GaussRat> poly_mul_gg(const std::vector<GaussRat>& a,
                                         const std::vector<GaussRat>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<GaussRat> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

template <class C> C poly_eval(const std::vector<C>& p, const GaussRat& x) {
    C acc{};
    for (size_t k = p.size(); k-- > 0;)
        acc = scale_coeff(acc, x) + p[k];
    return acc;
}

/// Synthetic division of p by (xi - r); requires p(r) == 0.
template <class C> std::vector<C> poly_divide_root(const std::vector<C>& p, const GaussRat& r) {
    if (p.empty())
        return {};
    std::vector<C> q(p.size() - 1);
    C carry = p.back();
    for (size_t k = p.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = p[k] + scale_coeff(carry, r);
    }
    if (!coeff_zero(carry))
        throw std::logic_error("poly_divide_root: nonzero remainder");
    return poly_trim(std::move(q));
}

} // namespace detail

template <class C> struct PartialFractionTerm {
    GaussRat root;
    int order;  // pole order, >= 1
    C coeff;    // numerator of coeff / (xi_n - root)^order
};

template <class C> struct PartialFractions {
    std::vector<PartialFractionTerm<C>> terms;
    std::vector<C> poly;  // polynomial part, dense in xi_n
};

/// Rational function of xi_n: dense numerator over C, denominator kept in
/// factored form as (root, multiplicity) pairs with exact Gaussian-rational
/// roots. No root finding is ever performed; callers construct denominators
/// factored.
template <class C> class RationalFn {
  public:
    RationalFn() = default;
    RationalFn(C constant) {
        if (!detail::coeff_zero(constant))
            num_.push_back(std::move(constant));
    }
    RationalFn(std::vector<C> num, std::vector<std::pair<GaussRat, int>> den)
        : num_(detail::poly_trim(std::move(num))), den_(std::move(den)) {
        std::sort(den_.begin(), den_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i + 1 < den_.size(); ++i)
            if (den_[i].first == den_[i + 1].first)
                throw std::invalid_argument("RationalFn: repeated root listed twice in denominator");
        for (auto& [r, m] : den_)
            if (m <= 0)
                throw std::invalid_argument("RationalFn: non-positive multiplicity");
        canonicalize();
    }

    static RationalFn monomial(C c, int xin_pow) {
        std::vector<C> n(xin_pow + 1);
        n[xin_pow] = std::move(c);
        return RationalFn(std::move(n), {});
    }

    const std::vector<C>& num() const { return num_; }
    const std::vector<std::pair<GaussRat, int>>& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    int num_degree() const { return static_cast<int>(num_.size()) - 1; }  // -1 for zero
    int den_degree() const {
        int d = 0;
        for (auto& [r, m] : den_)
            d += m;
        return d;
    }
    bool is_proper() const { return is_zero() || num_degree() < den_degree(); }

    RationalFn operator-() const {
        RationalFn r = *this;
        for (auto& c : r.num_)
            c = scale_coeff(c, GaussRat(-1));
        return r;
    }

    RationalFn operator+(const RationalFn& o) const {
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        // union denominator with per-root max multiplicity
        std::vector<std::pair<GaussRat, int>> uden = merged_roots(den_, o.den_, /*sum=*/false);
        std::vector<C> a = num_, b = o.num_;
        a = detail::poly_mul_g(a, cofactor(uden, den_));
        b = detail::poly_mul_g(b, cofactor(uden, o.den_));
        RationalFn r;
        r.num_ = detail::poly_add(a, b);
        r.den_ = uden;
        r.canonicalize();
        return r;
    }
    RationalFn operator-(const RationalFn& o) const { return *this + (-o); }

    RationalFn operator*(const RationalFn& o) const {
        RationalFn r;
        r.num_ = detail::poly_mul(num_, o.num_);
        r.den_ = merged_roots(den_, o.den_, /*sum=*/true);
        r.canonicalize();
        return r;
    }

    RationalFn scaled(const GaussRat& s) const {
        if (s.is_zero())
            return RationalFn();
        RationalFn r = *this;
        for (auto& c : r.num_)
            c = scale_coeff(c, s);
        return r;
    }
    template <class S> RationalFn scaled_by(const S& s) const {
        RationalFn r = *this;
        for (auto& c : r.num_)
            c = c * s;
        r.canonicalize();
        return r;
    }

    bool operator==(const RationalFn& o) const { return (*this - o).is_zero(); }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    /// d/d(xi_n), computed in factored form: multiplicities grow by one.
    RationalFn derivative() const {
        if (is_zero())
            return RationalFn();
        std::vector<C> nprime;
        for (size_t k = 1; k < num_.size(); ++k)
            nprime.push_back(scale_coeff(num_[k], GaussRat((long long)k)));
        // distinct-root product P and its per-root cofactors
        std::vector<GaussRat> P{GaussRat(1)};
        for (auto& [r, m] : den_)
            P = detail::poly_mul_gg(P, {-r, GaussRat(1)});
        std::vector<C> total = detail::poly_mul_g(nprime, P);
        for (size_t i = 0; i < den_.size(); ++i) {
            std::vector<GaussRat> cof{GaussRat(1)};
            for (size_t j = 0; j < den_.size(); ++j)
                if (j != i)
                    cof = detail::poly_mul_gg(cof, {-den_[j].first, GaussRat(1)});
            std::vector<C> piece = detail::poly_mul_g(num_, cof);
            for (auto& c : piece)
                c = scale_coeff(c, GaussRat(-(long long)den_[i].second));
            total = detail::poly_add(total, piece);
        }
        RationalFn r;
        r.num_ = std::move(total);
        r.den_ = den_;
        for (auto& [root, m] : r.den_)
            m += 1;
        r.canonicalize();
        return r;
    }

    /// Partial fraction decomposition; exact, with reconstruction identity.
    PartialFractions<C> partial_fractions() const {
        PartialFractions<C> out;
        if (is_zero())
            return out;
        std::vector<C> n = num_;
        // polynomial part via long division by the (monic) expanded denominator
        std::vector<GaussRat> D{GaussRat(1)};
        for (auto& [r, m] : den_)
            for (int k = 0; k < m; ++k)
                D = detail::poly_mul_gg(D, {-r, GaussRat(1)});
        int dd = static_cast<int>(D.size()) - 1;
        if (static_cast<int>(n.size()) - 1 >= dd && dd > 0) {
            std::vector<C> q(n.size() - dd);
            for (int k = static_cast<int>(n.size()) - 1; k >= dd; --k) {
                C lead = n[k];
                q[k - dd] = lead;
                for (int j = 0; j <= dd; ++j)
                    n[k - dd + j] = n[k - dd + j] - scale_coeff(lead, D[j]);
            }
            out.poly = detail::poly_trim(std::move(q));
            n = detail::poly_trim(std::move(n));
        } else if (dd == 0) {
            out.poly = n;
            return out;
        }
        // pole coefficients by Taylor expansion of g_i = n / prod_{j!=i}(...)
        for (size_t i = 0; i < den_.size(); ++i) {
            const GaussRat& root = den_[i].first;
            int m = den_[i].second;
            std::vector<std::pair<GaussRat, int>> others;
            for (size_t j = 0; j < den_.size(); ++j)
                if (j != i)
                    others.push_back(den_[j]);
            RationalFn g;
            g.num_ = n;
            g.den_ = others;
            Rat fact(1);
            for (int d = 0; d < m; ++d) {
                if (d > 0) {
                    g = g.derivative();
                    fact *= Rat(d);
                }
                C val = g.eval(root);
                val = scale_coeff(val, GaussRat(1) / GaussRat(fact));
                if (!detail::coeff_zero(val))
                    out.terms.push_back({root, m - d, val});
            }
        }
        return out;
    }

    static RationalFn from_partial_fractions(const PartialFractions<C>& pf) {
        RationalFn r;
        r.num_ = pf.poly;
        for (auto& t : pf.terms) {
            RationalFn piece;
            piece.num_ = {t.coeff};
            piece.den_ = {{t.root, t.order}};
            r = r + piece;
        }
        return r;
    }

    /// Evaluation at a point off the poles.
    C eval(const GaussRat& x) const {
        C n = detail::poly_eval(num_, x);
        GaussRat d(1);
        for (auto& [r, m] : den_) {
            GaussRat f = x - r;
            if (f.is_zero())
                throw std::domain_error("RationalFn: evaluation at a pole");
            d *= f.pow(m);
        }
        return scale_coeff(n, GaussRat(1) / d);
    }

    bool has_real_pole() const {
        for (auto& [r, m] : den_)
            if (r.im().is_zero())
                return true;
        return false;
    }

    /// Residue at one of the stored roots.
    C residue_at(const GaussRat& root) const {
        for (size_t i = 0; i < den_.size(); ++i) {
            if (!(den_[i].first == root))
                continue;
            int m = den_[i].second;
            RationalFn g;
            g.num_ = num_;
            for (size_t j = 0; j < den_.size(); ++j)
                if (j != i)
                    g.den_.push_back(den_[j]);
            Rat fact(1);
            for (int d = 1; d < m; ++d) {
                g = g.derivative();
                fact *= Rat(d);
            }
            return scale_coeff(g.eval(root), GaussRat(1) / GaussRat(fact));
        }
        return C{};
    }

    /// Sum of residues over poles in the upper half-plane.
    C residues_upper_half_plane() const {
        C sum{};
        for (auto& [r, m] : den_)
            if (r.im().sign() > 0)
                sum = sum + residue_at(r);
        return sum;
    }

    void canonicalize() {
        num_ = detail::poly_trim(std::move(num_));
        if (num_.empty()) {
            den_.clear();
            return;
        }
        // cancel (xi - r) factors shared with the numerator
        for (auto& [r, m] : den_) {
            while (m > 0 && detail::coeff_zero(detail::poly_eval(num_, r))) {
                num_ = detail::poly_divide_root(num_, r);
                --m;
            }
        }
        den_.erase(std::remove_if(den_.begin(), den_.end(),
                                  [](const auto& p) { return p.second == 0; }),
                   den_.end());
        std::sort(den_.begin(), den_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    std::string str() const {
        if (is_zero())
            return "0";
        std::string n = "[";
        for (size_t k = 0; k < num_.size(); ++k) {
            if (k)
                n += ", ";
            if constexpr (std::is_same_v<C, GaussRat>)
                n += num_[k].str();
            else
                n += num_[k].str();
        }
        n += "]";
        if (den_.empty())
            return n;
        n += " / ";
        for (auto& [r, m] : den_) {
            n += "(xin - (" + r.str() + "))";
            if (m > 1)
                n += "^" + std::to_string(m);
        }
        return n;
    }

  private:
    static std::vector<std::pair<GaussRat, int>>
    merged_roots(const std::vector<std::pair<GaussRat, int>>& a,
                 const std::vector<std::pair<GaussRat, int>>& b, bool sum) {
        std::vector<std::pair<GaussRat, int>> r = a;
        for (auto& [root, m] : b) {
            bool found = false;
            for (auto& [rr, mm] : r)
                if (rr == root) {
                    mm = sum ? mm + m : std::max(mm, m);
                    found = true;
                    break;
                }
            if (!found)
                r.emplace_back(root, m);
        }
        std::sort(r.begin(), r.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return r;
    }

    /// Expanded product of (xi - r)^(target_mult - have_mult) over all roots.
    static std::vector<GaussRat> cofactor(const std::vector<std::pair<GaussRat, int>>& target,
                                          const std::vector<std::pair<GaussRat, int>>& have) {
        std::vector<GaussRat> p{GaussRat(1)};
        for (auto& [root, m] : target) {
            int hm = 0;
            for (auto& [hr, h] : have)
                if (hr == root)
                    hm = h;
            for (int k = 0; k < m - hm; ++k)
                p = detail::poly_mul_gg(p, {-root, GaussRat(1)});
        }
        return p;
    }

    std::vector<C> num_;
    std::vector<std::pair<GaussRat, int>> den_;
};

/// Upper-half-plane part of a proper rational function: the partial-fraction
/// components whose poles have positive imaginary part. pi_plus + pi_minus
/// is the identity and pi_plus is idempotent.
template <class C> RationalFn<C> pi_plus(const RationalFn<C>& f) {
    if (f.is_zero())
        return f;
    if (f.has_real_pole())
        throw std::domain_error("pi_plus: pole on the real axis");
    if (!f.is_proper())
        throw std::domain_error("pi_plus: polynomial part present");
    auto pf = f.partial_fractions();
    if (!pf.poly.empty())
        throw std::domain_error("pi_plus: polynomial part present");
    RationalFn<C> out;
    for (auto& t : pf.terms)
        if (t.root.im().sign() > 0)
            out = out + RationalFn<C>({t.coeff}, {{t.root, t.order}});
    return out;
}

template <class C> RationalFn<C> pi_minus(const RationalFn<C>& f) {
    return f - pi_plus(f);
}

inline RationalFn<XiPoly> scale_expr(const RationalFn<XiPoly>& c, const ScalarExpr& s) {
    return c.scaled_by(XiPoly(s));
}

} // namespace wres
