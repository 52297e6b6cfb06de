#pragma once

#include "wres/rational.hpp"

#include <array>
#include <map>
#include <string>

namespace wres {

/// Commuting symbols of the output ring: t, tbar, h'(0), pi, Omega and the
/// scalar-curvature marker K. t and tbar are independent indeterminates;
/// conjugation is performed by substitution, never assumed.
enum class Sym : int { T = 0, Tbar = 1, Hp = 2, Pi = 3, Omega = 4, K = 5 };

inline constexpr int kNumSyms = 6;

/// Element of the polynomial ring Q(i)[t, tbar, h'(0), pi, Omega, K].
/// Sparse map from multi-degree to Gaussian-rational coefficient; zero
/// coefficients are never stored.
class ScalarExpr {
  public:
    using Mono = std::array<uint8_t, kNumSyms>;

    ScalarExpr() = default;
    ScalarExpr(long long c) { add_term(Mono{}, GaussRat(c)); }
    ScalarExpr(const Rat& c) { add_term(Mono{}, GaussRat(c)); }
    ScalarExpr(const GaussRat& c) { add_term(Mono{}, c); }

    static ScalarExpr token(Sym s, int power = 1) {
        Mono m{};
        m[static_cast<int>(s)] = static_cast<uint8_t>(power);
        ScalarExpr e;
        e.add_term(m, GaussRat(1));
        return e;
    }
    static ScalarExpr i() { return ScalarExpr(GaussRat::i()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
    }
    GaussRat constant_part() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? GaussRat() : it->second;
    }
    size_t num_terms() const { return terms_.size(); }
    const std::map<Mono, GaussRat>& terms() const { return terms_; }

    GaussRat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussRat() : it->second;
    }

    ScalarExpr operator-() const {
        ScalarExpr r;
        for (auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }
    ScalarExpr operator+(const ScalarExpr& o) const {
        ScalarExpr r = *this;
        for (auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }
    ScalarExpr operator-(const ScalarExpr& o) const {
        ScalarExpr r = *this;
        for (auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }
    ScalarExpr operator*(const ScalarExpr& o) const {
        ScalarExpr r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) {
                Mono m;
                for (int k = 0; k < kNumSyms; ++k)
                    m[k] = static_cast<uint8_t>(m1[k] + m2[k]);
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    ScalarExpr& operator+=(const ScalarExpr& o) {
        for (auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    ScalarExpr& operator-=(const ScalarExpr& o) {
        for (auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    ScalarExpr& operator*=(const ScalarExpr& o) { return *this = *this * o; }

    ScalarExpr scaled(const GaussRat& c) const {
        ScalarExpr r;
        if (c.is_zero())
            return r;
        for (auto& [m, v] : terms_)
            r.terms_.emplace(m, v * c);
        return r;
    }
    /// Exact division by a nonzero Gaussian rational.
    ScalarExpr divided(const GaussRat& c) const { return scaled(GaussRat(1) / c); }

    ScalarExpr pow(int e) const {
        ScalarExpr r(1), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const ScalarExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const ScalarExpr& o) const { return !(*this == o); }
    bool operator<(const ScalarExpr& o) const { return terms_ < o.terms_; }

    /// Substitutes t <-> tbar (used for the sigma_0(D_t^*) identity).
    ScalarExpr swap_t_tbar() const {
        ScalarExpr r;
        for (auto& [m, c] : terms_) {
            Mono s = m;
            std::swap(s[static_cast<int>(Sym::T)], s[static_cast<int>(Sym::Tbar)]);
            r.add_term(s, c);
        }
        return r;
    }

    /// Collects the sub-polynomial multiplying K^kpow, with K removed.
    ScalarExpr coeff_of_K(int kpow) const {
        ScalarExpr r;
        for (auto& [m, c] : terms_)
            if (m[static_cast<int>(Sym::K)] == kpow) {
                Mono s = m;
                s[static_cast<int>(Sym::K)] = 0;
                r.add_term(s, c);
            }
        return r;
    }

    void add_term(const Mono& m, const GaussRat& c) {
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

    /// Canonical text form, e.g. "-3/2 * pi * h'(0) * Omega". Parseable by
    /// the CLI expression grammar; render->parse->render is a fixed point.
    std::string str() const {
        static const char* names[kNumSyms] = {"t", "tbar", "h'(0)", "pi", "Omega", "K"};
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string coef;
            bool negated = false;
            if (c.is_real() || c.re().is_zero()) {
                GaussRat cc = c;
                if ((c.is_real() && c.re().sign() < 0) ||
                    (!c.is_real() && c.im().sign() < 0)) {
                    negated = true;
                    cc = -c;
                }
                coef = cc.is_real() ? cc.re().str()
                                    : (cc.im().is_one() ? "i" : cc.im().str() + " * i");
            } else {
                std::string im = c.im().sign() > 0
                                     ? (c.im().is_one() ? "+ i" : "+ " + c.im().str() + " * i")
                                     : ((-c.im()).is_one() ? "- i"
                                                           : "- " + (-c.im()).str() + " * i");
                coef = "(" + c.re().str() + " " + im + ")";
            }
            std::string mono;
            for (int k = 0; k < kNumSyms; ++k) {
                if (m[k] == 0)
                    continue;
                mono += std::string(" * ") + names[k];
                if (m[k] > 1)
                    mono += "^" + std::to_string(int(m[k]));
            }
            std::string body;
            if (coef == "1" && !mono.empty())
                body = mono.substr(3);  // drop the unit coefficient
            else
                body = coef + mono;
            if (first) {
                out += (negated ? "-" : "") + body;
                first = false;
            } else {
                out += (negated ? " - " : " + ") + body;
            }
        }
        return out;
    }

  private:
    std::map<Mono, GaussRat> terms_;
};

inline ScalarExpr operator*(const GaussRat& c, const ScalarExpr& e) { return e.scaled(c); }

} // namespace wres
