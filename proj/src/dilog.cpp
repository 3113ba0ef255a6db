#include "csrec/dilog.hpp"

#include <gmpxx.h>

#include <mutex>
#include <vector>

namespace csrec {
namespace {

// Bernoulli numbers B_0, B_1, ... as exact rationals (B_1 = -1/2), via the
// recurrence B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k. Cached across calls.
class BernoulliCache {
  public:
    mpq_class get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (b_.size() <= n) grow();
        return b_[n];
    }

  private:
    void grow() {
        std::size_t m = b_.size();
        if (m == 0) {
            b_.emplace_back(1);
            return;
        }
        mpq_class acc = 0;
        mpz_class binom = 1;  // C(m+1, 0)
        for (std::size_t k = 0; k < m; ++k) {
            acc += mpq_class(binom) * b_[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        mpq_class val = -acc / mpq_class(static_cast<unsigned long>(m + 1));
        val.canonicalize();
        b_.push_back(val);
    }
    std::mutex mu_;
    std::vector<mpq_class> b_;
};

BernoulliCache g_bernoulli;

Real real_from_mpq(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real pi_sq_over_6(mpfr_prec_t prec) {
    Real pi = Real::pi(prec);
    return pi * pi / Real(6L, prec);
}

// Direct power series, valid for |z| < 1 (used for |z| <= 1/4).
Complex li2_series(const Complex& z, mpfr_prec_t prec) {
    Complex term = z;
    Complex sum = z;
    Real eps = pow2(-(long)prec - 8, prec);
    for (long k = 2; k < 100000; ++k) {
        term *= z;
        Complex add = term / Complex(Real(double(k) * double(k), prec), Real(prec));
        sum += add;
        if (abs(add) < eps) return sum;
    }
    throw numeric_error("li2 series did not converge");
}

// Bernoulli (Debye-type) series: Li_2(z) = sum_k B_k w^{k+1} / (k+1)!,
// w = -log(1-z). Converges for |w| < 2 pi; used after range reduction.
Complex li2_bernoulli(const Complex& z, mpfr_prec_t prec) {
    Complex w = -log_principal(make_one(prec) - z);
    Complex wprod = w;        // w^{k+1}
    Real factorial(1L, prec);  // (k+1)!
    Complex sum(prec);
    Real eps = pow2(-(long)prec - 8, prec);
    Real wabs = abs(w);
    for (long k = 0; k < 100000; ++k) {
        factorial *= Real(double(k + 1), prec);
        Real bk = real_from_mpq(g_bernoulli.get((std::size_t)k), prec);
        if (!bk.is_zero()) {
            Complex add = (bk / factorial) * wprod;
            sum += add;
            if (k > 2 && abs(add) < eps && wabs < Real(6L, prec)) return sum;
        }
        wprod *= w;
    }
    throw numeric_error("li2 Bernoulli series did not converge");
}

Complex li2_reduced(const Complex& z, mpfr_prec_t prec);

// |z| > 1: inversion  Li2(z) = -Li2(1/z) - pi^2/6 - (1/2) log^2(-z).
Complex li2_invert(const Complex& z, mpfr_prec_t prec) {
    Complex lg = log_principal(-z);
    Real half(0.5, prec);
    return -li2_reduced(inverse(z), prec) - Complex(pi_sq_over_6(prec), Real(prec)) -
           half * (lg * lg);
}

// Re z > 1/2 within the unit disc: reflection
//   Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
Complex li2_reflect(const Complex& z, mpfr_prec_t prec) {
    Complex one = make_one(prec);
    Complex lg = log_principal(z) * log_principal(one - z);
    return Complex(pi_sq_over_6(prec), Real(prec)) - lg - li2_reduced(one - z, prec);
}

Complex li2_reduced(const Complex& z, mpfr_prec_t prec) {
    if (z.is_zero()) return Complex(prec);
    Real az = abs(z);
    Real one(1L, prec);
    if (az > one) return li2_invert(z, prec);
    if (z.im().is_zero() && z.re() == one) {  // Li2(1) = pi^2/6
        return Complex(pi_sq_over_6(prec), Real(prec));
    }
    if (z.re() > Real(0.5, prec)) return li2_reflect(z, prec);
    if (az <= Real(0.25, prec)) return li2_series(z, prec);
    return li2_bernoulli(z, prec);
}

}  // namespace

Complex li2(const Complex& z) {
    mpfr_prec_t prec = z.prec();
    mpfr_prec_t work = prec + 64;
    Complex zh(z.re().rounded_to(work), z.im().rounded_to(work));
    Complex r = li2_reduced(zh, work);
    return Complex(r.re().rounded_to(prec), r.im().rounded_to(prec));
}

Complex rogers(const Complex& z) {
    if (z.is_zero()) throw numeric_error("rogers: z = 0 is degenerate");
    mpfr_prec_t prec = z.prec();
    Complex one = make_one(prec);
    if (close(z, one, pow2(-(long)prec + 4, prec)))
        throw numeric_error("rogers: z = 1 is degenerate");
    Real half(0.5, prec);
    return li2(z) + half * (log_principal(z) * log_principal(one - z)) -
           Complex(pi_sq_over_6(prec), Real(prec));
}

Complex l_hat(const FlattenedSimplex& s) {
    mpfr_prec_t prec = s.z.prec();
    Complex one = make_one(prec);
    Real pi = Real::pi(prec);
    Real half(0.5, prec);
    Complex ihalfpi(Real(prec), pi * half);
    Complex corr = ihalfpi * (Real(double(s.q), prec) * log_principal(s.z) +
                              Real(double(s.p), prec) * log_principal(one - s.z));
    Real bilinear = pi * pi * half * Real(double(s.p) * double(s.q), prec);
    return rogers(s.z) + corr + Complex(bilinear, Real(prec));
}

}  // namespace csrec
