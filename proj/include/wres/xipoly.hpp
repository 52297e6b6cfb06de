#pragma once

#include "wres/scalar_expr.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace wres {

inline constexpr int kMaxXiVars = 8;

/// Sparse polynomial in the covariables xi_1..xi_n over ScalarExpr.
/// Variable indices are 1-based; xi_n is variable n of the session dimension.
class XiPoly {
  public:
    using Mono = std::array<uint8_t, kMaxXiVars>;

    XiPoly() = default;
    XiPoly(long long c) { add_term(Mono{}, ScalarExpr(c)); }
    XiPoly(const Rat& c) { add_term(Mono{}, ScalarExpr(c)); }
    XiPoly(const GaussRat& c) { add_term(Mono{}, ScalarExpr(c)); }
    XiPoly(const ScalarExpr& c) { add_term(Mono{}, c); }

    static XiPoly var(int i, int power = 1) {
        if (i < 1 || i > kMaxXiVars)
            throw std::out_of_range("XiPoly: variable index out of range");
        Mono m{};
        m[i - 1] = static_cast<uint8_t>(power);
        XiPoly p;
        p.add_term(m, ScalarExpr(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
    }
    ScalarExpr constant_part() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? ScalarExpr() : it->second;
    }
    const std::map<Mono, ScalarExpr>& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) {
            int s = 0;
            for (int k = 0; k < kMaxXiVars; ++k)
                s += m[k];
            d = std::max(d, s);
        }
        return d;
    }
    int max_var() const {
        int v = 0;
        for (auto& [m, c] : terms_)
            for (int k = kMaxXiVars - 1; k >= 0; --k)
                if (m[k] > 0) {
                    v = std::max(v, k + 1);
                    break;
                }
        return v;
    }

    XiPoly operator-() const {
        XiPoly r;
        for (auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    XiPoly operator+(const XiPoly& o) const {
        XiPoly r = *this;
        for (auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }
    XiPoly operator-(const XiPoly& o) const {
        XiPoly r = *this;
        for (auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }
    XiPoly operator*(const XiPoly& o) const {
        XiPoly r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) {
                Mono m;
                for (int k = 0; k < kMaxXiVars; ++k)
                    m[k] = static_cast<uint8_t>(m1[k] + m2[k]);
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    XiPoly& operator+=(const XiPoly& o) {
        for (auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    XiPoly& operator-=(const XiPoly& o) {
        for (auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    XiPoly& operator*=(const XiPoly& o) { return *this = *this * o; }

    XiPoly scaled(const ScalarExpr& s) const {
        XiPoly r;
        for (auto& [m, c] : terms_)
            r.add_term(m, c * s);
        return r;
    }
    XiPoly scaled(const GaussRat& s) const { return scaled(ScalarExpr(s)); }

    bool operator==(const XiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const XiPoly& o) const { return !(*this == o); }
    bool operator<(const XiPoly& o) const { return terms_ < o.terms_; }

    XiPoly derivative(int var) const {
        XiPoly r;
        for (auto& [m, c] : terms_) {
            int e = m[var - 1];
            if (e == 0)
                continue;
            Mono s = m;
            s[var - 1] = static_cast<uint8_t>(e - 1);
            r.add_term(s, c.scaled(GaussRat(e)));
        }
        return r;
    }

    /// Canonical form modulo the sphere relation xi_1^2+..+xi_m^2 = 1:
    /// eliminates xi_m-powers >= 2 by substituting xi_m^2 -> 1 - sum_{i<m} xi_i^2.
    XiPoly sphere_reduce(int m) const {
        XiPoly rel(1);
        for (int i = 1; i < m; ++i)
            rel -= var(i, 2);
        XiPoly out;
        for (auto& [mono, c] : terms_) {
            int e = mono[m - 1];
            Mono base = mono;
            base[m - 1] = static_cast<uint8_t>(e % 2);
            XiPoly piece;
            piece.add_term(base, c);
            for (int q = 0; q < e / 2; ++q)
                piece *= rel;
            out += piece;
        }
        return out;
    }

    void add_term(const Mono& m, const ScalarExpr& c) {
        if (c.is_zero())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string mono;
            for (int k = 0; k < kMaxXiVars; ++k) {
                if (m[k] == 0)
                    continue;
                mono += " * xi(" + std::to_string(k + 1) + ")";
                if (m[k] > 1)
                    mono += "^" + std::to_string(int(m[k]));
            }
            std::string cs = c.num_terms() > 1 ? "(" + c.str() + ")" : c.str();
            if (!first) {
                if (cs.size() > 1 && cs[0] == '-') {
                    out += " - ";
                    cs = cs.substr(1);
                } else {
                    out += " + ";
                }
            }
            if (cs == "1" && !mono.empty())
                out += mono.substr(3);
            else
                out += cs + mono;
            first = false;
        }
        return out;
    }

  private:
    std::map<Mono, ScalarExpr> terms_;
};

inline XiPoly operator*(const ScalarExpr& s, const XiPoly& p) { return p.scaled(s); }
inline XiPoly operator*(const XiPoly& p, const ScalarExpr& s) { return p.scaled(s); }

inline XiPoly scale_expr(const XiPoly& c, const ScalarExpr& s) { return c.scaled(s); }

} // namespace wres
