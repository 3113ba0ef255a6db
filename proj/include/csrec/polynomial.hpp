#pragma once

#include <map>
#include <utility>
#include <vector>

#include "csrec/rational.hpp"

namespace csrec {

// Dense univariate polynomial with exact rational coefficients, ascending order.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    static UniPoly monomial(const Rational& a, std::size_t k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = a;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const { return *this * Rational(-1); }

    UniPoly derivative() const;
    UniPoly pow(unsigned long k) const;

    Rational eval(const Rational& x) const;
    Complex eval(const Complex& x) const;

    // Divide by content and make the leading coefficient positive.
    UniPoly normalized_primitive() const;

    // Euclidean gcd over Q, normalized primitive output.
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string str(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Chebyshev-like polynomials: S_0 = 0, S_1 = 1, S_{k+1} = z S_k - S_{k-1};
// S_{-k} = -S_k.
UniPoly chebyshev_s(long k);

// Bivariate Laurent polynomial in (m, z): finite map (e_m, e_z) -> coefficient.
class LaurentPoly {
  public:
    using Key = std::pair<long, long>;  // (exponent of m, exponent of z)

    LaurentPoly() = default;
    static LaurentPoly term(const Rational& a, long em, long ez);

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }

    void add_term(long em, long ez, const Rational& a);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    // Partial derivatives (Laurent exponents allowed).
    LaurentPoly d_dm() const;
    LaurentPoly d_dz() const;

    Complex eval(const Complex& m, const Complex& z) const;

    long min_m() const;
    long min_z() const;
    long max_m() const;

    // Multiply by m^a z^b.
    LaurentPoly shifted(long a, long b) const;

    // Halve every m-exponent (substitute u = m^2); all must be even.
    LaurentPoly halved_m() const;

    // View as a polynomial in m with UniPoly-in-z coefficients. Requires
    // nonnegative exponents in both variables; callers shift first.
    std::vector<UniPoly> as_poly_vec() const;

    std::string str() const;

  private:
    std::map<Key, Rational> t_;
};

// Lift a z-polynomial into the Laurent ring, multiplied by m^em.
LaurentPoly lift_z(const UniPoly& f, long em = 0);

// Sylvester resultant in u of two polynomials with UniPoly-in-z coefficients,
// computed exactly by evaluation at integer points + Lagrange interpolation.
// Evaluation points where either leading coefficient vanishes are skipped.
UniPoly resultant_u(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g);

}  // namespace csrec
