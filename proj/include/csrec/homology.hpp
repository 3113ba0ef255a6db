#pragma once

#include <optional>
#include <random>
#include <vector>

#include "csrec/dilog.hpp"
#include "csrec/words.hpp"

namespace csrec {

struct SL2 {
    Complex a, b, c, d;

    explicit SL2(mpfr_prec_t prec = kDefaultPrec)
        : a(make_one(prec)), b(prec), c(prec), d(make_one(prec)) {}
    SL2(Complex a_, Complex b_, Complex c_, Complex d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    mpfr_prec_t prec() const { return std::max(std::max(a.prec(), b.prec()), std::max(c.prec(), d.prec())); }
    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    SL2 inv() const { return SL2(d, -b, -c, a); }  // adjugate; assumes det 1
    SL2 conjugate_entries() const { return SL2(conj(a), conj(b), conj(c), conj(d)); }
};

SL2 mul(const SL2& x, const SL2& y);
bool sl2_close(const SL2& x, const SL2& y, const Real& tol);

using Rho = std::vector<SL2>;  // image of generator i+1

SL2 rho_eval(const Word& w, const Rho& rho);
Rho conjugated(const Rho& rho, const SL2& g);
Rho conjugate_representation(const Rho& rho);  // entrywise complex conjugate

// Deterministic pseudorandom SL2 matrices (for v0 draws and retry conjugators).
SL2 random_sl2(std::mt19937_64& rng, mpfr_prec_t prec);

// Deficiency-zero presentation plus the 3-cell boundary data (one group-ring
// coefficient per relator).
struct Presentation {
    int generators = 0;
    std::vector<Word> relators;
};

struct CellStructure {
    Presentation pres;
    std::vector<GroupRing> d3;  // indexed like relators; may be empty if unknown
};

// Fox matrix: entry [i][j] = d(r_i)/d(x_{j+1}).
std::vector<std::vector<GroupRing>> boundary2(const Presentation& pres);

// Formal integer combination of (k+1)-tuples of group elements.
struct TupleChain {
    struct Term {
        long coeff;
        std::vector<SL2> g;
    };
    std::vector<Term> terms;
    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
};

// Merge equal tuples and drop Moore-degenerate ones (equal adjacent entries).
TupleChain cancel(TupleChain chain, const Real& tol);

// Simplicial boundary, cancelled.
TupleChain boundary(const TupleChain& chain, const Real& tol);

// c1(A a_i) = (rho(A), rho(A x_i)) extended linearly over a group-ring element.
TupleChain c1_chain(const GroupRing& elem, int gen, const SL2& context, const Rho& rho);

// c2(A b_i): the signed telescoping 3-tuples of a relator word.
TupleChain c2_chain(const Word& relator, const SL2& context, const Rho& rho);

// c2 composed with the d3 data of a cell structure (the candidate 2-cycle).
TupleChain two_cycle(const CellStructure& cell, const Rho& rho);

// Cone construction: v0 prepended to every tuple; satisfies
// boundary(cone) == chain when chain is a cycle.
TupleChain cone(const TupleChain& chain, const SL2& v0);

// Hopf image of g = (a b / c d) is the projective point [a : c].
std::pair<Complex, Complex> hopf(const SL2& g);
bool proj_equal(const std::pair<Complex, Complex>& x, const std::pair<Complex, Complex>& y,
                const Real& tol);

// Flattened cross-ratio of an h-nondegenerate 4-tuple. Throws numeric_error
// on h-degenerate tuples.
FlattenedSimplex lambda_hat(const std::vector<SL2>& tuple);

// Sum of coeff * (-1/2 pi^2) l_hat(lambda_hat(tuple)), real part reduced into
// [0, 1). Throws numeric_error if any tuple is h-degenerate.
Complex pairing_2cs(const TupleChain& chain, mpfr_prec_t prec, int threads = 0);

struct PairingOptions {
    mpfr_prec_t prec = kDefaultPrec;
    unsigned long seed = 0x5EEDULL;
    int max_retries = 10;
    std::optional<SL2> v0;
    int threads = 0;
};

struct CsDoubledResult {
    Complex value;   // representative of 2 CS in C/Z
    int retries = 0; // conjugation retries used
    std::size_t tuples = 0;
};

// Full Appendix pipeline: 2-cycle check, cone, degeneracy retries by
// conjugating rho, pairing. Throws numeric_error with diagnostics on failure.
CsDoubledResult cs_doubled(const Rho& rho, const CellStructure& cell,
                           const PairingOptions& opt = {});

}  // namespace csrec
