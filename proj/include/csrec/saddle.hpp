#pragma once

#include <vector>

#include "csrec/dilog.hpp"
#include "csrec/polynomial.hpp"

namespace csrec {

// One critical point of the figure-eight surgery potential, with its
// log-branch (flattening) data and CS contribution T = V + 2 pi i (c log z + d log w).
struct SaddlePoint {
    Complex z;
    Complex w;
    long c = 0;
    long d = 0;
    Complex T;
};

struct SaddleOptions {
    mpfr_prec_t prec = kDefaultPrec;
    int threads = 0;
};

// V(z, w) = -Li2(zw) + Li2(z/w) + (p/4) Log^2 z - Log z Log w, as a
// representative of C/pi^2 Z.
Complex potential(const Complex& z, const Complex& w, long p);

// (dV/dz, dV/dw) in closed form (logs only).
std::pair<Complex, Complex> grad_potential(const Complex& z, const Complex& w, long p);

// All solutions of the critical-point system
//   w (z^{p/2+1} + 1) = z + z^{p/2},
//   z^2 - (w + 1 + 1/w) z + 1 = 0,
// including the degenerate z where both sides of the first equation vanish
// (w then solves the second equation's quadratic). p even, |p| >= 6.
std::vector<std::pair<Complex, Complex>> solve_system(long p, const SaddleOptions& opt = {});

// Round -z dV/dz / (2 pi i) and -w dV/dw / (2 pi i) to integers; errors if the
// pre-rounding values are further than 1e-6 from integers.
std::pair<long, long> flattening_integers(const Complex& z, const Complex& w, long p);

// Full table of saddle points with T values, ordered by (Re z, Im z).
std::vector<SaddlePoint> cs_terms(long p, const SaddleOptions& opt = {});

struct ReciprocitySum {
    Complex scaled_sum;        // (6/pi^2) sum T
    Real distance_to_integer;  // |Re - nearest integer|
    Real imag_abs;
    std::vector<SaddlePoint> table;
};

ReciprocitySum reciprocity_sum_fig8(long p, const SaddleOptions& opt = {});

}  // namespace csrec
