#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace csrec {

// Raised when a computation cannot produce a finite result (non-convergence,
// division by zero, degenerate inputs).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr mpfr_prec_t kDefaultPrec = 64;
inline constexpr mpfr_prec_t kMinPrec = 53;
inline constexpr mpfr_prec_t kMaxPrec = 512;

// Arbitrary-precision real number. Value semantics; every value carries its
// own mantissa precision and binary operations promote to the larger one.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    Real(double x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(long x, mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_string(const std::string& s, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw numeric_error("unparseable decimal number: " + s);
        return r;
    }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", digits, v_);
        std::string s(raw);
        mpfr_free_str(raw);
        return s;
    }

    Real& operator+=(const Real& o) { return inplace(o, mpfr_add); }
    Real& operator-=(const Real& o) { return inplace(o, mpfr_sub); }
    Real& operator*=(const Real& o) { return inplace(o, mpfr_mul); }
    Real& operator/=(const Real& o) { return inplace(o, mpfr_div); }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sqrt(const Real& a) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real log(const Real& a) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& a) {
        Real r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sin(const Real& a) {
        Real r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cos(const Real& a) {
        Real r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real atan2(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& x, const Real& y) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend Real floor(const Real& a) {
        Real r(a.prec());
        mpfr_floor(r.v_, a.v_);
        return r;
    }
    friend Real round_nearest(const Real& a) {
        Real r(a.prec());
        mpfr_rint(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow_si(const Real& a, long k) {
        Real r(a.prec());
        mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }
    friend Real ldexp2(const Real& a, long e) {  // a * 2^e
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    Real rounded_to(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) {
        if (p < kMinPrec) return kMinPrec;
        if (p > 8192) return 8192;
        return p;
    }
    template <class Fn>
    Real& inplace(const Real& o, Fn fn) {
        if (o.prec() > prec()) {
            Real tmp(o.prec());
            fn(tmp.v_, v_, o.v_, MPFR_RNDN);
            *this = std::move(tmp);
        } else {
            fn(v_, v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    mpfr_t v_;
};

// 2^-k as a Real, handy for tolerance ladders that scale with precision.
inline Real pow2(long e, mpfr_prec_t prec) {
    Real r(1.0, prec);
    return ldexp2(r, e);
}

}  // namespace csrec
