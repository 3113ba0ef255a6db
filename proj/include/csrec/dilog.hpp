#pragma once

#include "csrec/complex.hpp"

namespace csrec {

// Classical dilogarithm Li_2 on the cut plane, principal branch consistent
// with log_principal (for real x > 1, Im Li_2(x) = -pi log x).
Complex li2(const Complex& z);

// Rogers dilogarithm R(z) = Li_2(z) + (1/2) log z log(1-z) - pi^2/6.
Complex rogers(const Complex& z);

// A flattened ideal simplex [z; p, q]: cross-ratio plus log-branch data.
struct FlattenedSimplex {
    Complex z;
    long p = 0;
    long q = 0;
    long coeff = 1;
};

// Extended Rogers dilogarithm on flattened simplices:
//   L^(z; p, q) = R(z) + (pi i/2)(q log z + p log(1-z)) + (pi^2/2) p q.
// Reduces to rogers(z) at (p, q) = (0, 0).
Complex l_hat(const FlattenedSimplex& s);

}  // namespace csrec
