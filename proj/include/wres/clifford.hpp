#pragma once

#include "wres/scalar_expr.hpp"
#include "wres/xipoly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wres {

/// Generator channels: C(i) is the Clifford action c(e_i), CHAT(i) is the
/// second action chat(e_i), JET(i) is the i-th component of the normal jet
/// d/dx_n[c(xi')](x_0) (defined for i < n only).
enum class Channel : uint8_t { C = 0, CHAT = 1, JET = 2 };

struct Generator {
    Channel ch;
    uint8_t idx;  // 1-based frame index

    bool operator==(const Generator& o) const { return ch == o.ch && idx == o.idx; }
    bool operator!=(const Generator& o) const { return !(*this == o); }
    bool operator<(const Generator& o) const {
        if (ch != o.ch)
            return ch < o.ch;
        return idx < o.idx;
    }
    std::string str() const {
        switch (ch) {
        case Channel::C:
            return "c(" + std::to_string(idx) + ")";
        case Channel::CHAT:
            return "ch(" + std::to_string(idx) + ")";
        default:
            return "jc(" + std::to_string(idx) + ")";
        }
    }
};

inline Generator gen_c(int i) { return {Channel::C, static_cast<uint8_t>(i)}; }
inline Generator gen_chat(int i) { return {Channel::CHAT, static_cast<uint8_t>(i)}; }
inline Generator gen_jet(int i) { return {Channel::JET, static_cast<uint8_t>(i)}; }

using Word = std::vector<Generator>;

inline std::string word_str(const Word& w) {
    if (w.empty())
        return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) {
        if (k)
            s += "*";
        s += w[k].str();
    }
    return s;
}

struct UndefinedPairing : std::domain_error {
    UndefinedPairing(const Generator& a, const Generator& b)
        : std::domain_error("undefined pairing {" + a.str() + ", " + b.str() + "}") {}
};

/// The symmetric bilinear form B with g_a g_b + g_b g_a = 2 B(a,b):
///   B(C(i),C(j)) = -delta_ij,  B(CHAT(i),CHAT(j)) = +delta_ij,
///   B(C,CHAT) = 0,             B(JET(i),C(j)) = -1/2 h'(0) delta_ij (i,j<n),
///   B(JET,CHAT) = 0,           B(JET,JET) undefined.
class PairingForm {
  public:
    explicit PairingForm(int n) : n_(n) {
        if (n < 1 || n > 8)
            throw std::out_of_range("PairingForm: dimension must be in 1..8");
    }

    int dim() const { return n_; }
    BigInt trace_id() const { return BigInt(1) << n_; }

    std::optional<ScalarExpr> pairing(const Generator& a, const Generator& b) const {
        if (a.ch == Channel::JET && b.ch == Channel::JET)
            return std::nullopt;
        const Generator& p = a.ch <= b.ch ? a : b;
        const Generator& q = a.ch <= b.ch ? b : a;
        if (p.ch == Channel::C && q.ch == Channel::C)
            return p.idx == q.idx ? ScalarExpr(-1) : ScalarExpr();
        if (p.ch == Channel::CHAT && q.ch == Channel::CHAT)
            return p.idx == q.idx ? ScalarExpr(1) : ScalarExpr();
        if (p.ch == Channel::C && q.ch == Channel::JET) {
            if (p.idx < n_ && q.idx < n_ && p.idx == q.idx)
                return ScalarExpr::token(Sym::Hp).scaled(GaussRat(Rat(-1, 2)));
            return ScalarExpr();
        }
        return ScalarExpr();  // C-CHAT and CHAT-JET pair to zero
    }

    ScalarExpr pairing_or_throw(const Generator& a, const Generator& b) const {
        auto p = pairing(a, b);
        if (!p)
            throw UndefinedPairing(a, b);
        return *p;
    }

  private:
    int n_;
};

/// Finite linear combination of strictly increasing generator words over a
/// coefficient ring R. R needs +, -, *, scaling by ScalarExpr, is_zero.
/// Normal form is unique: any construction order compares equal.
template <class R> class Element {
  public:
    Element() = default;
    explicit Element(R scalar) { add(Word{}, std::move(scalar)); }

    static Element generator(Generator g, R coeff) {
        Element e;
        e.add(Word{g}, std::move(coeff));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, R>& terms() const { return terms_; }
    R scalar_part() const {
        auto it = terms_.find(Word{});
        return it == terms_.end() ? R{} : it->second;
    }
    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    void add(const Word& w, const R& coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Element operator-() const {
        Element r;
        for (auto& [w, c] : terms_)
            r.terms_.emplace(w, c.scaled(GaussRat(-1)));
        return r;
    }
    Element operator+(const Element& o) const {
        Element r = *this;
        for (auto& [w, c] : o.terms_)
            r.add(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (auto& [w, c] : o.terms_)
            r.add(w, c.scaled(GaussRat(-1)));
        return r;
    }
    Element& operator+=(const Element& o) {
        for (auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (auto& [w, c] : o.terms_)
            add(w, c.scaled(GaussRat(-1)));
        return *this;
    }

    Element scaled(const GaussRat& s) const {
        Element r;
        if (s.is_zero())
            return r;
        for (auto& [w, c] : terms_)
            r.add(w, c.scaled(s));
        return r;
    }
    Element scaled(const ScalarExpr& s) const {
        Element r;
        for (auto& [w, c] : terms_)
            r.add(w, scale_by_expr(c, s));
        return r;
    }
    template <class S> Element scaled_coeff(const S& s) const {
        Element r;
        for (auto& [w, c] : terms_)
            r.add(w, c * s);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Normal-ordered product under the anticommutation relations of `pf`.
    /// Throws UndefinedPairing when a reduction would need a pairing the
    /// form does not define (two JET generators meeting).
    Element multiply(const Element& o, const PairingForm& pf) const {
        Element out;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                Word cat = w1;
                cat.insert(cat.end(), w2.begin(), w2.end());
                normal_order(cat, c1 * c2, pf, out);
            }
        return out;
    }

    /// Exact trace on the canonical 2^n-dimensional module: Wick pairing sum
    /// times tr[id] = 2^n. Odd words trace to zero.
    R trace(const PairingForm& pf) const {
        R sum{};
        for (auto& [w, c] : terms_) {
            ScalarExpr tau = wick_tau(w, pf);
            if (tau.is_zero())
                continue;
            sum = sum + scale_by_expr(c, tau.scaled(GaussRat(Rat(pf.trace_id()))));
        }
        return sum;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms_) {
            if (!first)
                s += " + ";
            s += "(" + c.str() + ")";
            if (!w.empty())
                s += " * " + word_str(w);
            first = false;
        }
        return s;
    }

    /// Normalized Wick trace tau(word) = tr(word)/2^n as a ScalarExpr.
    static ScalarExpr wick_tau(const Word& w, const PairingForm& pf) {
        if (w.size() % 2 != 0)
            return ScalarExpr();
        if (w.empty())
            return ScalarExpr(1);
        ScalarExpr sum;
        for (size_t j = 1; j < w.size(); ++j) {
            ScalarExpr b = pf.pairing_or_throw(w[0], w[j]);
            if (b.is_zero())
                continue;
            Word rest;
            rest.reserve(w.size() - 2);
            for (size_t k = 1; k < w.size(); ++k)
                if (k != j)
                    rest.push_back(w[k]);
            ScalarExpr sub = wick_tau(rest, pf);
            if (sub.is_zero())
                continue;
            ScalarExpr term = b * sub;
            if (j % 2 == 0)
                term = -term;  // sign (-1)^(j+1), 0-based position j
            sum += term;
        }
        return sum;
    }

  private:
    // scale_expr(R, ScalarExpr) is an ADL customization point provided by
    // each coefficient ring.
    static R scale_by_expr(const R& c, const ScalarExpr& s) { return scale_expr(c, s); }

    static void normal_order(const Word& w, const R& coeff, const PairingForm& pf,
                             Element& out) {
        if (coeff.is_zero())
            return;
        // find first adjacent violation of strict ascending order
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            const Generator &a = w[k], &b = w[k + 1];
            if (a == b) {
                ScalarExpr sq = pf.pairing_or_throw(a, a);
                Word rest;
                rest.reserve(w.size() - 2);
                rest.insert(rest.end(), w.begin(), w.begin() + k);
                rest.insert(rest.end(), w.begin() + k + 2, w.end());
                normal_order(rest, scale_by_expr(coeff, sq), pf, out);
                return;
            }
            if (b < a) {
                ScalarExpr br = pf.pairing_or_throw(a, b);
                if (!br.is_zero()) {
                    Word contracted;
                    contracted.reserve(w.size() - 2);
                    contracted.insert(contracted.end(), w.begin(), w.begin() + k);
                    contracted.insert(contracted.end(), w.begin() + k + 2, w.end());
                    normal_order(contracted,
                                 scale_by_expr(coeff, br.scaled(GaussRat(2))), pf, out);
                }
                Word swapped = w;
                std::swap(swapped[k], swapped[k + 1]);
                normal_order(swapped, coeff.scaled(GaussRat(-1)), pf, out);
                return;
            }
        }
        out.add(w, coeff);
    }

    std::map<Word, R> terms_;
};

using CliffordElement = Element<XiPoly>;

inline CliffordElement cliff_gen(Generator g, XiPoly coeff = XiPoly(1)) {
    return CliffordElement::generator(g, std::move(coeff));
}

/// c(xi') = sum_{i<n} xi_i c(e_i), with polynomial coefficients.
inline CliffordElement c_xi_prime(int n) {
    CliffordElement e;
    for (int i = 1; i < n; ++i)
        e += cliff_gen(gen_c(i), XiPoly::var(i));
    return e;
}

/// d/dx_n[c(xi')](x_0) = sum_{i<n} xi_i JET(i).
inline CliffordElement jet_c_xi_prime(int n) {
    CliffordElement e;
    for (int i = 1; i < n; ++i)
        e += cliff_gen(gen_jet(i), XiPoly::var(i));
    return e;
}

/// chat(v) / c(v) for a rational vector v in the frame basis.
inline CliffordElement c_vector(const std::vector<Rat>& v) {
    CliffordElement e;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            e += cliff_gen(gen_c(static_cast<int>(i + 1)), XiPoly(v[i]));
    return e;
}
inline CliffordElement chat_vector(const std::vector<Rat>& v) {
    CliffordElement e;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            e += cliff_gen(gen_chat(static_cast<int>(i + 1)), XiPoly(v[i]));
    return e;
}

/// Inverse of an element whose square is the declared central scalar:
/// a * (a / squareValue) = 1. The precondition a^2 == squareValue is
/// checked by multiplication.
inline CliffordElement invert_central_square(const CliffordElement& a,
                                             const ScalarExpr& square_value,
                                             const PairingForm& pf) {
    CliffordElement sq = a.multiply(a, pf);
    CliffordElement expected{XiPoly(square_value)};
    if (!(sq == expected) || square_value.is_zero())
        throw std::domain_error("non-invertible by central-square rule");
    if (!square_value.is_constant())
        throw std::domain_error("central square must be a constant for element inversion");
    GaussRat c = square_value.constant_part();
    return a.scaled(GaussRat(1) / c);
}

} // namespace wres
