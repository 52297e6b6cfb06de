#pragma once

#include "wres/clifford.hpp"
#include "wres/rational.hpp"

#include <stdexcept>
#include <vector>

namespace wres {

/// Dense square matrix over F, indexed by subsets of {1..n} in bitmask order.
/// Naive storage; used as the brute-force oracle for the Wick trace engine
/// and for the flat Lichnerowicz check.
template <class F> class Mat {
  public:
    Mat() : dim_(0) {}
    explicit Mat(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

    static Mat identity(int dim) {
        Mat m(dim);
        for (int i = 0; i < dim; ++i)
            m(i, i) = F(1);
        return m;
    }

    int dim() const { return dim_; }
    F& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const F& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

    Mat operator+(const Mat& o) const {
        Mat r(dim_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(dim_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const F& v = (*this)(i, k);
                if (v.is_zero())
                    continue;
                for (int j = 0; j < dim_; ++j) {
                    const F& w = o(k, j);
                    if (w.is_zero())
                        continue;
                    r(i, j) = r(i, j) + v * w;
                }
            }
        return r;
    }
    Mat scaled(const F& s) const {
        Mat r(dim_);
        for (size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] * s;
        return r;
    }
    Mat operator-() const { return scaled(F(-1)); }

    bool operator==(const Mat& o) const { return dim_ == o.dim_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto& v : a_)
            if (!v.is_zero())
                return false;
        return true;
    }

    F trace() const {
        F t{};
        for (int i = 0; i < dim_; ++i)
            t = t + (*this)(i, i);
        return t;
    }

  private:
    int dim_;
    std::vector<F> a_;
};

using ExtMatrix = Mat<GaussRat>;

namespace ext_detail {

inline void check_dim(int j, int n) {
    if (n < 1 || n > 8)
        throw std::out_of_range("exterior_rep: dimension capped at n <= 8");
    if (j < 1 || j > n)
        throw std::out_of_range("exterior_rep: generator index out of range");
}

/// Sign of inserting/removing e_j into the subset `mask`: (-1)^(number of
/// basis factors before position j).
inline int wedge_sign(unsigned mask, int j) {
    int cnt = 0;
    for (int b = 0; b < j - 1; ++b)
        if (mask & (1u << b))
            ++cnt;
    return cnt % 2 ? -1 : 1;
}

} // namespace ext_detail

/// Exterior multiplication eps(e_j^*) on /\*R^n.
inline ExtMatrix build_eps(int j, int n) {
    ext_detail::check_dim(j, n);
    int dim = 1 << n;
    ExtMatrix m(dim);
    unsigned bit = 1u << (j - 1);
    for (unsigned s = 0; s < static_cast<unsigned>(dim); ++s)
        if (!(s & bit))
            m(static_cast<int>(s | bit), static_cast<int>(s)) =
                GaussRat(ext_detail::wedge_sign(s, j));
    return m;
}

/// Interior multiplication iota(e_j^*) on /\*R^n.
inline ExtMatrix build_iota(int j, int n) {
    ext_detail::check_dim(j, n);
    int dim = 1 << n;
    ExtMatrix m(dim);
    unsigned bit = 1u << (j - 1);
    for (unsigned s = 0; s < static_cast<unsigned>(dim); ++s)
        if (s & bit)
            m(static_cast<int>(s & ~bit), static_cast<int>(s)) =
                GaussRat(ext_detail::wedge_sign(s & ~bit, j));
    return m;
}

/// c(e_j) = eps(e_j^*) - iota(e_j^*).
inline ExtMatrix build_c(int j, int n) { return build_eps(j, n) - build_iota(j, n); }

/// chat(e_j) = eps(e_j^*) + iota(e_j^*).
inline ExtMatrix build_chat(int j, int n) { return build_eps(j, n) + build_iota(j, n); }

/// Exact matrix trace of a generator word. Only C/CHAT channels have a
/// matrix model; a JET generator is rejected. Each generator matrix has one
/// +-1 entry per column, so the product folds as a signed column relabeling.
inline GaussRat oracle_trace(const Word& word, int n) {
    if (n < 1 || n > 8)
        throw std::out_of_range("exterior_rep: dimension capped at n <= 8");
    unsigned dim = 1u << n;
    // column j of the running product: value sign[j] at row src[j]
    std::vector<unsigned> src(dim);
    std::vector<int> sign(dim, 1);
    for (unsigned j = 0; j < dim; ++j)
        src[j] = j;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const Generator& g = *it;
        if (g.ch == Channel::JET)
            throw std::domain_error("oracle_trace: JET generator has no matrix model");
        unsigned bit = 1u << (g.idx - 1);
        int iota_sign = g.ch == Channel::C ? -1 : 1;
        for (unsigned j = 0; j < dim; ++j) {
            unsigned s = src[j];
            int ws = ext_detail::wedge_sign(s & ~bit, g.idx);
            if (s & bit) {
                src[j] = s & ~bit;
                sign[j] *= ws * iota_sign;
            } else {
                src[j] = s | bit;
                sign[j] *= ws;
            }
        }
    }
    long long tr = 0;
    for (unsigned j = 0; j < dim; ++j)
        if (src[j] == j)
            tr += sign[j];
    return GaussRat(Rat(tr));
}

} // namespace wres
