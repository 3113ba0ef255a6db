#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "csrec/complex.hpp"

namespace csrec {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Real to_real(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline Complex to_complex(const Rational& q, mpfr_prec_t prec) {
    return Complex(to_real(q, prec), Real(prec));
}

// Exact residue in Q/Z, stored reduced into [0, 1).
class QmodZ {
  public:
    QmodZ() : v_(0) {}
    explicit QmodZ(const Rational& q) : v_(reduce(q)) {}

    const Rational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    QmodZ operator+(const QmodZ& o) const { return QmodZ(v_ + o.v_); }
    QmodZ operator-(const QmodZ& o) const { return QmodZ(v_ - o.v_); }
    QmodZ scaled(long n) const { return QmodZ(v_ * rat(n)); }
    bool operator==(const QmodZ& o) const { return v_ == o.v_; }

    std::string str() const { return v_.get_str(); }

  private:
    static Rational reduce(Rational q) {
        q.canonicalize();
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        Rational r = q - Rational(fl);
        r.canonicalize();
        return r;
    }
    Rational v_;
};

// Bezout pair for p s - q r = 1 with the canonical representative 0 <= r < |p|.
// Requires gcd(p, q) = 1.
inline std::pair<mpz_class, mpz_class> ext_gcd_pair(const mpz_class& p, const mpz_class& q) {
    mpz_class g, s0, t0;
    mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), t0.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1 && g != -1) throw std::invalid_argument("ext_gcd_pair: inputs not coprime");
    if (g == -1) {
        s0 = -s0;
        t0 = -t0;
    }
    // p*s0 + q*t0 = 1  ->  s = s0, r = -t0 satisfies p s - q r = 1.
    mpz_class s = s0, r = -t0;
    mpz_class pa = abs(p);
    if (pa != 0) {
        mpz_class rmod;
        mpz_fdiv_r(rmod.get_mpz_t(), r.get_mpz_t(), pa.get_mpz_t());
        mpz_class k = (r - rmod) / pa;
        r = rmod;
        // adjust s to keep p s - q r = 1:  r -> r - k*|p|  =>  s -> s - k*q*sign(p)
        s = s - k * q * (p < 0 ? -1 : 1);
    }
    return {s, r};
}

inline std::pair<long, long> ext_gcd_pair(long p, long q) {
    auto [s, r] = ext_gcd_pair(mpz_class(p), mpz_class(q));
    return {static_cast<long>(s.get_si()), static_cast<long>(r.get_si())};
}

}  // namespace csrec
