#pragma once

#include <array>
#include <vector>

#include "csrec/rational.hpp"

namespace csrec {

// Seifert manifold M(0; (o,0); (p1,q1), (p2,q2), (p3,q3)) with Bezout data
// p_k s_k - q_k r_k = 1.
struct SeifertSpec {
    struct Fiber {
        long p, q;
        long s, r;
    };
    std::array<Fiber, 3> fibers;

    static SeifertSpec make(long p1, long q1, long p2, long q2, long p3, long q3);
};

// One point of the representation bijection: n_k in (1/2)Z via n_k = (j_k+1)/2
// with j_k in the parity class determined by lambda and q_k.
struct SeifertRepLabel {
    std::array<long, 3> j;    // j_k in [0 .. p_k-2]
    bool lambda_half;         // lambda = 1/2 branch vs lambda = 0 branch
    Rational n(int k) const { return rat(j[static_cast<std::size_t>(k)] + 1, 2); }
};

std::vector<SeifertRepLabel> enumerate_labels(const SeifertSpec& spec);

// 4 CS = 4 sum_k r_k n_k^2 / p_k in Q/Z, exact.
QmodZ four_cs(const SeifertRepLabel& label, const SeifertSpec& spec);

// 24 sum CS = 6 sum_labels (4 CS) in Q/Z, exact.
QmodZ reciprocity_sum_seifert(const SeifertSpec& spec, int threads = 0);

// Closed form (4/3) prod (p_j-1)/2 * sum_k r_k (p_k+1)/2 mod 1; requires all
// p_k odd and q_k even, and must equal the enumerated sum of 4CS mod 1.
QmodZ closed_form_odd_even(const SeifertSpec& spec);

// Sum of the enumerated 4CS values mod 1 (the quantity the closed form equals).
QmodZ sum_four_cs(const SeifertSpec& spec, int threads = 0);

// Torus-bundle reduction: all values must lie in (1/2)Z mod 1.
bool torus_bundle_check(const std::vector<QmodZ>& cs_values);

}  // namespace csrec
