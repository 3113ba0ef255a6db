#pragma once

#include <algorithm>
#include <string>

#include "csrec/real.hpp"

namespace csrec {

// Arbitrary-precision complex number built on two Reals. All multivalued
// functions route through log_principal so branch choices are consistent
// everywhere: arg in (-pi, pi].
class Complex {
  public:
    explicit Complex(mpfr_prec_t prec = kDefaultPrec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    Complex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    Complex& operator+=(const Complex& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        Real r = re_ * o.re_ - im_ * o.im_;
        Real i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re_ * o.re_ + o.im_ * o.im_;
        if (d.is_zero()) throw numeric_error("complex division by zero");
        Real r = (re_ * o.re_ + im_ * o.im_) / d;
        Real i = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }

    friend Complex operator*(const Real& s, Complex a) {
        a.re_ *= s;
        a.im_ *= s;
        return a;
    }

    friend Complex conj(Complex a) {
        a.im_ = -a.im_;
        return a;
    }
    friend Real abs(const Complex& a) { return hypot(a.re_, a.im_); }
    friend Real arg(const Complex& a) { return atan2(a.im_, a.re_); }

    std::string str(int digits = 20) const {
        std::string s = re_.str(digits);
        s += (im_.sign() < 0) ? " - " : " + ";
        s += abs(im_).str(digits) + "i";
        return s;
    }

  private:
    Real re_, im_;
};

inline Complex make_i(mpfr_prec_t prec) { return Complex(Real(0L, prec), Real(1L, prec)); }
inline Complex make_one(mpfr_prec_t prec) { return Complex(Real(1L, prec), Real(0L, prec)); }

// Principal logarithm: log|z| + i arg(z), arg in (-pi, pi]. Errors on zero.
inline Complex log_principal(const Complex& z) {
    if (z.is_zero()) throw numeric_error("log of zero");
    return Complex(log(abs(z)), arg(z));
}

inline Complex exp(const Complex& z) {
    Real m = exp(z.re());
    return Complex(m * cos(z.im()), m * sin(z.im()));
}

// Principal square root (branch cut along the negative real axis).
inline Complex sqrt(const Complex& z) {
    if (z.is_zero()) return Complex(z.prec());
    Real m = sqrt(abs(z));
    Real half = Real(0.5, z.prec());
    Real th = arg(z) * half;
    return Complex(m * cos(th), m * sin(th));
}

inline Complex inverse(const Complex& z) {
    Complex one = make_one(z.prec());
    return one / z;
}

inline Complex pow_int(const Complex& z, long k) {
    if (k == 0) return make_one(z.prec());
    Complex base = k > 0 ? z : inverse(z);
    long n = k > 0 ? k : -k;
    Complex acc = make_one(z.prec());
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

// |a - b| below tol in both components.
inline bool close(const Complex& a, const Complex& b, const Real& tol) {
    return abs(a.re() - b.re()) < tol && abs(a.im() - b.im()) < tol;
}

}  // namespace csrec
