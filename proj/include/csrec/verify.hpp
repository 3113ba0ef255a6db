#pragma once

#include <string>
#include <vector>

#include "csrec/manifold.hpp"
#include "csrec/repvar.hpp"
#include "csrec/saddle.hpp"
#include "csrec/seifert.hpp"

namespace csrec {

// One reciprocity verdict: the method-scaled sum brought into the common
// "24 sum CS mod 1" frame, with its distance to zero in C/Z.
struct VerificationReport {
    std::string manifold;
    std::string method;  // "saddle" | "seifert" | "homology"
    struct Row {
        std::string id;
        std::string cs_repr;  // per-representation CS data, printable
        std::string diagnostics;
    };
    std::vector<Row> rows;
    std::string scaled_sum;       // 24 sum CS representative (decimal)
    std::string exact_sum;        // for the exact method: rational string
    double distance = 0.0;        // |Re - nearest integer|
    double imag_abs = 0.0;
    bool exact = false;
    bool pass = false;
    double tolerance = 0.0;
    long precision_bits = 0;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
};

VerificationReport check_fig8(long p, mpfr_prec_t prec = kDefaultPrec, double tol = 1e-6,
                              int threads = 0);

VerificationReport check_seifert(const SeifertSpec& spec, int threads = 0);

VerificationReport check_homology(const ManifoldInput& manifold, mpfr_prec_t prec = kDefaultPrec,
                                  double tol = 1e-6, int threads = 0);

// Consistency of the two CS computations on M_{p/1}(figure-eight): matched
// pairs must satisfy T/(2 pi^2) == 2CS mod Z.
struct CrossCheckReport {
    struct Pair {
        std::string rep_id;
        std::string saddle_z;
        double discrepancy = 0.0;  // distance mod Z, plus |Im| difference
    };
    std::vector<Pair> pairs;
    std::vector<std::string> unmatched_saddle;
    std::vector<std::string> unmatched_reps;
    double max_discrepancy = 0.0;
    bool pass = false;

    std::string to_json() const;
    std::string to_text() const;
};

CrossCheckReport cross_check(long p, const ManifoldInput& manifold,
                             mpfr_prec_t prec = kDefaultPrec, double tol = 1e-6,
                             int threads = 0);

}  // namespace csrec
