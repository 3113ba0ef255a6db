#include "csrec/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

#include "csrec/parallel.hpp"

namespace csrec {
namespace {

struct Horner {
    Complex value;
    Complex deriv;
};

Horner eval_fd(const std::vector<Complex>& c, const Complex& x) {
    mpfr_prec_t prec = x.prec();
    Complex p(prec), d(prec);
    for (std::size_t i = c.size(); i-- > 0;) {
        d = d * x + p;
        p = p * x + c[i];
    }
    return {p, d};
}

// Backward-error scale: sum |a_k| |x|^k.
Real error_scale(const std::vector<Complex>& c, const Complex& x) {
    mpfr_prec_t prec = x.prec();
    Real ax = abs(x);
    Real pw(1L, prec);
    Real s(prec);
    for (const auto& a : c) {
        s += abs(a) * pw;
        pw *= ax;
    }
    return s;
}

std::vector<Complex> initial_guesses(const std::vector<Complex>& c, mpfr_prec_t prec,
                                     std::mt19937_64& rng) {
    const std::size_t n = c.size() - 1;
    // Cauchy-style radius from coefficient ratios.
    double an = abs(c.back()).to_double();
    double rmax = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double ak = abs(c[k]).to_double();
        if (ak == 0.0) continue;
        rmax = std::max(rmax, std::pow(ak / an, 1.0 / double(n - k)));
    }
    if (rmax == 0.0) rmax = 1.0;
    double radius = 1.2 * rmax + 0.5;
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<Complex> z;
    z.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        double th = 2.0 * M_PI * (double(j) / double(n)) + 0.4 / double(n) + jitter(rng);
        double r = radius * (1.0 + jitter(rng));
        z.emplace_back(r * std::cos(th), r * std::sin(th), prec);
    }
    return z;
}

std::vector<Complex> companion_guesses(const std::vector<Complex>& c, mpfr_prec_t prec) {
    const long n = static_cast<long>(c.size()) - 1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    std::complex<double> an(c.back().re().to_double(), c.back().im().to_double());
    for (long j = 0; j < n; ++j) {
        std::complex<double> aj(c[static_cast<std::size_t>(j)].re().to_double(),
                                c[static_cast<std::size_t>(j)].im().to_double());
        m(0, n - 1 - j) = -aj / an;
    }
    for (long i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        z.emplace_back(es.eigenvalues()(i).real(), es.eigenvalues()(i).imag(), prec);
    return z;
}

bool aberth_converge(const std::vector<Complex>& c, std::vector<Complex>& z, int max_sweeps,
                     int threads) {
    const std::size_t n = z.size();
    mpfr_prec_t prec = z.empty() ? kDefaultPrec : z[0].prec();
    Real eps = pow2(-(long)prec + 6, prec);
    std::vector<char> done(n, 0);
    std::vector<Complex> next(n, Complex(prec));
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::vector<char> ok(n, 0);
        par::for_each_index(
            n,
            [&](std::size_t i) {
                Horner h = eval_fd(c, z[i]);
                if (abs(h.value) < eps * error_scale(c, z[i])) {
                    next[i] = z[i];
                    ok[i] = 1;
                    return;
                }
                if (h.deriv.is_zero()) {
                    // nudge off a critical point deterministically
                    next[i] = z[i] + Complex(Real(1e-3, prec) * (abs(z[i]) + Real(1L, prec)),
                                             Real(prec));
                    return;
                }
                Complex newton = h.value / h.deriv;
                Complex s(prec);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Complex d = z[i] - z[j];
                    if (d.is_zero()) continue;
                    s += inverse(d);
                }
                Complex denom = make_one(prec) - newton * s;
                next[i] = denom.is_zero() ? z[i] + newton : z[i] - newton / denom;
            },
            threads);
        z.swap(next);
        done.swap(ok);
        if (std::all_of(done.begin(), done.end(), [](char v) { return v != 0; })) return true;
    }
    return false;
}

}  // namespace

std::vector<RootCluster> roots(const UniPoly& f, const RootOptions& opt) {
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("roots: degree must be >= 1");
    mpfr_prec_t work = opt.prec + 32;

    // Strip zero roots.
    std::size_t zshift = 0;
    while (zshift < f.coeffs().size() && f.coeffs()[zshift] == 0) ++zshift;
    std::vector<Complex> c;
    for (std::size_t i = zshift; i < f.coeffs().size(); ++i)
        c.push_back(to_complex(f.coeffs()[i], work));

    std::vector<Complex> z;
    const std::size_t n = c.size() - 1;
    if (n >= 1) {
        std::mt19937_64 rng(opt.seed);
        bool converged = false;
        for (int attempt = 0; attempt <= opt.restarts && !converged; ++attempt) {
            z = (attempt == opt.restarts) ? companion_guesses(c, work)
                                          : initial_guesses(c, work, rng);
            converged = aberth_converge(c, z, opt.max_sweeps, opt.threads);
        }
        if (!converged) throw numeric_error("roots: Aberth iteration did not converge");
        // Newton polish at full working precision.
        par::for_each_index(
            z.size(),
            [&](std::size_t i) {
                for (int it = 0; it < 8; ++it) {
                    Horner h = eval_fd(c, z[i]);
                    if (h.deriv.is_zero()) break;
                    Complex step = h.value / h.deriv;
                    z[i] -= step;
                    if (abs(step) < pow2(-(long)work + 4, work) * (abs(z[i]) + Real(1L, work)))
                        break;
                }
            },
            opt.threads);
    }

    // Deterministic order before clustering.
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });

    // Multiplicity clustering; tolerance scales with precision relative to the
    // 64-bit default.
    double scale = std::min(1.0, std::pow(2.0, double(64 - (long)opt.prec) / 2.0));
    Real ctol(opt.cluster_tol * scale, work);
    std::vector<RootCluster> out;
    for (std::size_t i = 0; i < zshift; ++i) {
        if (out.empty()) out.push_back({Complex(opt.prec), static_cast<int>(zshift)});
    }
    for (const auto& zi : z) {
        bool merged = false;
        for (auto& cl : out) {
            if (abs(cl.value - zi) < ctol) {
                cl.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if (!merged)
            out.push_back({Complex(zi.re().rounded_to(opt.prec), zi.im().rounded_to(opt.prec)), 1});
    }
    return out;
}

}  // namespace csrec
