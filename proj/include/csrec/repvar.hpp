#pragma once

#include <optional>
#include <vector>

#include "csrec/homology.hpp"
#include "csrec/polynomial.hpp"

namespace csrec {

// p/q surgery on the twist knot with parameter n (n=1 trefoil, n=-1 figure
// eight, ...). The theorem-backed pipeline wants p even; odd p is accepted
// behind a flag.
struct TwistSurgerySpec {
    long n = -1;
    long p = 6;
    long q = 1;
    mpfr_prec_t prec = kDefaultPrec;
    bool allow_odd_p = false;
    int threads = 0;
};

// F(m, z) = S_n (S_n - S_{n-1}) (m^2 + m^-2) - z S_n (S_n - S_{n-1}) + 1.
LaurentPoly twist_F(long n);

// E(m, z) = -(z-2) S_n^2 m^4 - (z-2)(S_n - S_{n-1}) m^2 + (S_n - S_{n-1})^2.
LaurentPoly twist_E(long n);

// A solved character-variety point, orbit representative under (m,z)~(1/m,z).
struct RepPoint {
    Complex m, z;
    Real res_f;              // |F(m,z)|
    Real res_g;              // |m^p E^q - 1|
    bool irreducible = false;
    int conj_partner = -1;   // index of the complex-conjugate orbit in the output
    bool self_conjugate = false;
};

// All orbits of {F = 0, m^p E^q = 1} via resultant elimination in u = m^2,
// root solving, back-substitution and Newton polish. Deterministic ordering.
std::vector<RepPoint> enumerate_variety(const TwistSurgerySpec& spec);

// Matrices rho(a) = (m 1 / 0 1/m), rho(b) = (m 0 / c 1/m) where c solves
// c^2 + (m - 1/m)^2 c + (2 - z) = 0, the root being selected by the twist
// relation's residual (the relation determines which lift is the
// representation; see the decisions record for why this replaces the paper's
// printed lower-left entry).
std::pair<SL2, SL2> rep_from_point(const Complex& m, const Complex& z, long n);

// Numeric common-eigenvector test.
bool is_irreducible(const SL2& A, const SL2& B, double tol = 1e-8);

// 2-bridge knot b(p, q): p odd, 0 < q < p, gcd(p, q) = 1.
struct TwoBridgeSpec {
    long p, q;
};

// Riley polynomial of b(p, q) in the parabolic parameter: the gcd of the
// entries of rho(W)rho(x) - rho(y)rho(W) with W = x^{e_1} y^{e_2} ... and
// e_i = (-1)^{floor(i q / p)}; content-1, positive leading coefficient.
UniPoly riley_polynomial(const TwoBridgeSpec& spec);

// Word machinery for twist-knot presentations (generators a=1, b=2):
// w = b a^-1 b^-1 a; relator of the knot group is w^n a w^-n b^-1.
Word twist_w_word();
Word twist_relator(long n);
// Canonical longitude of the figure-eight knot (n = -1): w * wbar, where
// wbar is w reversed. Verified peripheral and saddle-consistent.
Word fig8_longitude();

}  // namespace csrec
