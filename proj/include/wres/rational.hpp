#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wres {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer numerator and positive
/// denominator, always stored reduced.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const { return Rat(raw{}, -num_, den_); }

    Rat operator+(const Rat& o) const {
        return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0)
            throw std::domain_error("Rat: division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }

    Rat pow(int e) const {
        if (e < 0)
            return (Rat(1) / *this).pow(-e);
        Rat r(1), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Renders "p" or "p/q".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Parses "p" or "p/q" (optional leading '-').
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rat(BigInt(s), BigInt(1));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

  private:
    struct raw {};
    Rat(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0)
            throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// Gaussian rational a + b*i, closed under field operations; i^2 = -1 exactly.
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(long long n) : re_(n) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re_ * o.re_ + o.im_ * o.im_;
        if (n.is_zero())
            throw std::domain_error("GaussRat: division by zero");
        GaussRat p = *this * o.conj();
        return GaussRat(p.re_ / n, p.im_ / n);
    }

    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    bool operator<(const GaussRat& o) const {
        if (re_ != o.re_)
            return re_ < o.re_;
        return im_ < o.im_;
    }

    GaussRat pow(int e) const {
        if (e < 0)
            return (GaussRat(1) / *this).pow(-e);
        GaussRat r(1), b = *this;
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// "3/2", "i", "-1/2 i", "(1/2 + 3 i)" style rendering (no outer parens).
    std::string str() const {
        if (im_.is_zero())
            return re_.str();
        std::string im;
        if (im_.is_one())
            im = "i";
        else if ((-im_).is_one())
            im = "-i";
        else
            im = im_.str() + " i";
        if (re_.is_zero())
            return im;
        if (im_.sign() > 0)
            return re_.str() + " + " + im;
        return re_.str() + " - " + (im_.is_one() || (-im_).is_one() ? std::string("i")
                                                                    : (-im_).str() + " i");
    }

  private:
    Rat re_;
    Rat im_;
};

} // namespace wres
