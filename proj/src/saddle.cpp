#include "csrec/saddle.hpp"

#include <algorithm>

#include "csrec/parallel.hpp"
#include "csrec/roots.hpp"

namespace csrec {
namespace {

void require_even_p(long p) {
    if (p % 2 != 0) throw std::invalid_argument("p must be even");
    if (p == 0 || (p > -6 && p < 6)) throw std::invalid_argument("|p| must be >= 6");
}

// Numerator/denominator of w(z) after clearing Laurent exponents:
// k >= 0:  N = z + z^k,        D = z^{k+1} + 1
// k <  0:  N = z^{1-k} + 1,    D = z + z^{-k}     (both scaled by z^{-k})
std::pair<UniPoly, UniPoly> w_fraction(long p) {
    long k = p / 2;
    if (k >= 0) {
        UniPoly n = UniPoly::monomial(Rational(1), 1) +
                    UniPoly::monomial(Rational(1), static_cast<std::size_t>(k));
        UniPoly d = UniPoly::monomial(Rational(1), static_cast<std::size_t>(k + 1)) +
                    UniPoly::constant(Rational(1));
        return {n, d};
    }
    UniPoly n = UniPoly::monomial(Rational(1), static_cast<std::size_t>(1 - k)) +
                UniPoly::constant(Rational(1));
    UniPoly d = UniPoly::monomial(Rational(1), 1) +
                UniPoly::monomial(Rational(1), static_cast<std::size_t>(-k));
    return {n, d};
}

Complex second_eq_residual(const Complex& z, const Complex& w) {
    Complex one = make_one(std::max(z.prec(), w.prec()));
    return z * z - (w + one + inverse(w)) * z + one;
}

}  // namespace

Complex potential(const Complex& z, const Complex& w, long p) {
    if (z.is_zero() || w.is_zero()) throw numeric_error("potential: zw must be nonzero");
    mpfr_prec_t prec = std::max(z.prec(), w.prec());
    Complex lz = log_principal(z), lw = log_principal(w);
    Real quarter(0.25, prec);
    return -li2(z * w) + li2(z / w) + (quarter * Real(double(p), prec)) * (lz * lz) - lz * lw;
}

std::pair<Complex, Complex> grad_potential(const Complex& z, const Complex& w, long p) {
    mpfr_prec_t prec = std::max(z.prec(), w.prec());
    Complex one = make_one(prec);
    Complex l1 = log_principal(one - z * w);
    Complex l2 = log_principal(one - z / w);
    Complex lz = log_principal(z), lw = log_principal(w);
    Real half(0.5, prec);
    Complex dz = (l1 - l2 + (half * Real(double(p), prec)) * lz - lw) / z;
    Complex dw = (l1 + l2 - lz) / w;
    return {dz, dw};
}

std::vector<std::pair<Complex, Complex>> solve_system(long p, const SaddleOptions& opt) {
    require_even_p(p);
    mpfr_prec_t prec = opt.prec;
    auto [n, d] = w_fraction(p);

    // elimination polynomial  -z N^2 + (z^2 - z + 1) N D - z D^2
    UniPoly zq = UniPoly::monomial(Rational(1), 1);
    UniPoly quad = UniPoly::monomial(Rational(1), 2) - zq + UniPoly::constant(Rational(1));
    UniPoly elim = -(zq * n * n) + quad * n * d - zq * d * d;

    UniPoly common = UniPoly::gcd(n, d);  // degenerate z: both N and D vanish

    RootOptions ropt;
    ropt.prec = prec;
    ropt.threads = opt.threads;
    Real tol = pow2(-(long)prec / 2, prec);
    Real accept(1e-10, prec);

    std::vector<std::pair<Complex, Complex>> sols;
    for (const auto& cl : roots(elim, ropt)) {
        const Complex& z = cl.value;
        if (abs(z) < accept) continue;
        if (common.degree() >= 1 && abs(common.eval(z)) < tol * Real(64L, prec)) continue;
        Complex dv = d.eval(z);
        if (abs(dv) < accept) continue;  // pole of w(z), not a solution
        Complex w = n.eval(z) / dv;
        if (abs(w) < accept) continue;
        if (abs(second_eq_residual(z, w)) > accept) continue;
        sols.emplace_back(z, w);
    }
    if (common.degree() >= 1) {
        for (const auto& cl : roots(common, ropt)) {
            const Complex& z = cl.value;
            // w from  -z w^2 + (z^2 - z + 1) w - z = 0
            Complex b = z * z - z + make_one(prec);
            Complex disc = sqrt(b * b - Real(4L, prec) * (z * z));
            Complex two_z = Real(2L, prec) * z;
            for (const Complex& w : {(b + disc) / two_z, (b - disc) / two_z}) {
                if (abs(second_eq_residual(z, w)) > accept)
                    throw numeric_error("solve_system: degenerate branch residual too large");
                sols.emplace_back(z, w);
            }
        }
    }

    // dedupe + deterministic order
    std::vector<std::pair<Complex, Complex>> out;
    for (const auto& s : sols) {
        bool dup = false;
        for (const auto& t : out)
            if (close(s.first, t.first, accept) && close(s.second, t.second, accept)) dup = true;
        if (!dup) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.re() != b.first.re()) return a.first.re() < b.first.re();
        if (a.first.im() != b.first.im()) return a.first.im() < b.first.im();
        return a.second.re() < b.second.re();
    });
    return out;
}

std::pair<long, long> flattening_integers(const Complex& z, const Complex& w, long p) {
    mpfr_prec_t prec = std::max(z.prec(), w.prec());
    auto [dz, dw] = grad_potential(z, w, p);
    Real two_pi = Real(2L, prec) * Real::pi(prec);
    Complex i2pi(Real(prec), two_pi);
    Complex craw = -(z * dz) / i2pi;
    Complex draw = -(w * dw) / i2pi;
    Real thresh(1e-6, prec);
    long c = round_nearest(craw.re()).to_long();
    long d = round_nearest(draw.re()).to_long();
    Real devc = abs(craw - Complex(Real(double(c), prec), Real(prec)));
    Real devd = abs(draw - Complex(Real(double(d), prec), Real(prec)));
    if (devc > thresh || devd > thresh)
        throw numeric_error("non-integer flattening (branch inconsistency or bad root)");
    return {c, d};
}

std::vector<SaddlePoint> cs_terms(long p, const SaddleOptions& opt) {
    auto sols = solve_system(p, opt);
    mpfr_prec_t prec = opt.prec;
    std::vector<SaddlePoint> table(sols.size());
    par::for_each_index(
        sols.size(),
        [&](std::size_t i) {
            const auto& [z, w] = sols[i];
            auto [c, d] = flattening_integers(z, w, p);
            Complex i2pi(Real(prec), Real(2L, prec) * Real::pi(prec));
            Complex t = potential(z, w, p) +
                        i2pi * (Real(double(c), prec) * log_principal(z) +
                                Real(double(d), prec) * log_principal(w));
            table[i] = SaddlePoint{z, w, c, d, t};
        },
        opt.threads);
    return table;
}

ReciprocitySum reciprocity_sum_fig8(long p, const SaddleOptions& opt) {
    auto table = cs_terms(p, opt);
    mpfr_prec_t prec = opt.prec;
    Complex sum(prec);
    for (const auto& s : table) sum += s.T;
    Real pi = Real::pi(prec);
    Complex scaled = (Real(6L, prec) / (pi * pi)) * sum;
    Real dist = abs(scaled.re() - round_nearest(scaled.re()));
    return ReciprocitySum{scaled, dist, abs(scaled.im()), std::move(table)};
}

}  // namespace csrec
