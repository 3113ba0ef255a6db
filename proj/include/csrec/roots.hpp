#pragma once

#include <vector>

#include "csrec/polynomial.hpp"

namespace csrec {

struct RootOptions {
    mpfr_prec_t prec = kDefaultPrec;
    int max_sweeps = 400;
    int restarts = 4;
    unsigned long seed = 0xC5CEC5CEul;  // fixed by default for reproducibility
    double cluster_tol = 1e-8;          // multiplicity clustering scale at 64-bit
    int threads = 0;                    // 0 = global default
};

struct RootCluster {
    Complex value;
    int multiplicity = 1;
};

// All complex roots of f by Aberth simultaneous iteration (Jacobi sweeps,
// deterministic), with companion-matrix eigenvalues (double precision) as a
// restart fallback. Residual guarantee: |f(root)| below the backward-error
// bound at the working precision. Throws numeric_error on non-convergence.
std::vector<RootCluster> roots(const UniPoly& f, const RootOptions& opt = {});

}  // namespace csrec
