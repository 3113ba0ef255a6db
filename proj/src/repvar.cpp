#include "csrec/repvar.hpp"

#include <algorithm>

#include "csrec/parallel.hpp"
#include "csrec/roots.hpp"

namespace csrec {
namespace {

// S_n (S_n - S_{n-1}) as a z-polynomial.
UniPoly s_pair(long n) { return chebyshev_s(n) * (chebyshev_s(n) - chebyshev_s(n - 1)); }

LaurentPoly lift_u(const UniPoly& f, long eu) {
    // z-polynomial times u^eu in the (u, z) Laurent ring
    LaurentPoly r;
    for (long i = 0; i <= f.degree(); ++i) r.add_term(eu, i, f[static_cast<std::size_t>(i)]);
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& base, long k) {
    LaurentPoly acc = LaurentPoly::term(Rational(1), 0, 0);
    LaurentPoly b = base;
    for (long i = 0; i < k; ++i) acc = acc * b;
    return acc;
}

struct SystemEval {
    LaurentPoly f, g;      // in (m, z)
    LaurentPoly fm, fz, gm, gz;
    Complex F(const Complex& m, const Complex& z) const { return f.eval(m, z); }
    Complex G(const Complex& m, const Complex& z) const { return g.eval(m, z); }
};

SystemEval make_system(long n, long p, long q) {
    SystemEval s;
    s.f = twist_F(n);
    LaurentPoly e = twist_E(n);
    // clear m^p E^q = 1 into a Laurent polynomial with nonnegative E-powers
    LaurentPoly lhs = lp_pow(e, std::max(q, 0L)).shifted(std::max(p, 0L), 0);
    LaurentPoly rhs = lp_pow(e, std::max(-q, 0L)).shifted(std::max(-p, 0L), 0);
    s.g = lhs - rhs;
    s.fm = s.f.d_dm();
    s.fz = s.f.d_dz();
    s.gm = s.g.d_dm();
    s.gz = s.g.d_dz();
    return s;
}

// Newton polish of the pair (m, z) on {F = 0, G = 0}; returns false if it
// fails to reach the residual target within 50 steps.
bool polish(const SystemEval& sys, Complex& m, Complex& z, const Real& target) {
    mpfr_prec_t prec = m.prec();
    for (int it = 0; it < 50; ++it) {
        Complex f = sys.F(m, z), g = sys.G(m, z);
        if (abs(f) < target && abs(g) < target) return true;
        Complex j11 = sys.fm.eval(m, z), j12 = sys.fz.eval(m, z);
        Complex j21 = sys.gm.eval(m, z), j22 = sys.gz.eval(m, z);
        Complex det = j11 * j22 - j12 * j21;
        if (abs(det) < pow2(-(long)prec, prec)) return false;
        Complex dm = (f * j22 - g * j12) / det;
        Complex dz = (j11 * g - j21 * f) / det;
        m -= dm;
        z -= dz;
        if (abs(m) < Real(1e-8, prec)) return false;
    }
    Complex f = sys.F(m, z), g = sys.G(m, z);
    return abs(f) < target && abs(g) < target;
}

void orbit_representative(Complex& m, mpfr_prec_t prec) {
    Real one(1L, prec);
    Real tol(1e-12, prec);
    Real am = abs(m);
    if (am < one - tol) {
        m = inverse(m);
    } else if (abs(am - one) <= tol && arg(m) < -tol) {
        m = inverse(m);
    }
}

}  // namespace

LaurentPoly twist_F(long n) {
    if (n == 0) throw std::invalid_argument("twist_F: n must be nonzero");
    UniPoly sp = s_pair(n);
    LaurentPoly r = lift_z(sp, 2) + lift_z(sp, -2);           // S(S-S')(m^2 + m^-2)
    r = r - lift_z(UniPoly::monomial(Rational(1), 1) * sp, 0);  // - z S(S-S')
    r.add_term(0, 0, Rational(1));
    return r;
}

LaurentPoly twist_E(long n) {
    if (n == 0) throw std::invalid_argument("twist_E: n must be nonzero");
    UniPoly s = chebyshev_s(n);
    UniPoly diff = chebyshev_s(n) - chebyshev_s(n - 1);
    UniPoly zm2 = UniPoly::monomial(Rational(1), 1) - UniPoly::constant(Rational(2));
    LaurentPoly r = lift_z(-(zm2 * s * s), 4);
    r = r + lift_z(-(zm2 * diff), 2);
    r = r + lift_z(diff * diff, 0);
    return r;
}

std::pair<SL2, SL2> rep_from_point(const Complex& m, const Complex& z, long n) {
    mpfr_prec_t prec = std::max(m.prec(), z.prec());
    if (m.is_zero()) throw numeric_error("rep_from_point: m = 0");
    Complex one = make_one(prec);
    Word rel = twist_relator(n);
    auto relation_residual = [&](const Complex& c) {
        SL2 A(m, one, Complex(prec), inverse(m));
        SL2 B(m, Complex(prec), c, inverse(m));
        SL2 relm = rho_eval(rel, {A, B});
        return abs(relm.a - one) + abs(relm.b) + abs(relm.c) + abs(relm.d - one);
    };
    Complex s = (m - inverse(m)) * (m - inverse(m));
    Complex disc = sqrt(s * s - Real(4L, prec) * (Complex(Real(2L, prec), Real(prec)) - z));
    Complex two(Real(2L, prec), Real(prec));
    Complex best_c = (disc - s) / two;
    Real best_res = relation_residual(best_c);
    {
        Complex other = (-disc - s) / two;
        Real res = relation_residual(other);
        if (res < best_res) {
            best_c = other;
            best_res = res;
        }
    }
    // The quadratic can be ill-conditioned (near-double root); polish c with
    // secant steps on the relation residual's dominant entry.
    Complex hc(pow2(-(long)prec / 2, prec) * (abs(best_c) + Real(1L, prec)), Real(prec));
    auto entry = [&](const Complex& c) {
        SL2 A(m, one, Complex(prec), inverse(m));
        SL2 B(m, Complex(prec), c, inverse(m));
        SL2 relm = rho_eval(rel, {A, B});
        Complex dev_a = relm.a - one;
        Complex dev_d = relm.d - one;
        Complex val = relm.c;  // lower-left is generically transversal in c
        if (abs(relm.b) > abs(val)) val = relm.b;
        if (abs(dev_a) > abs(val)) val = dev_a;
        if (abs(dev_d) > abs(val)) val = dev_d;
        return val;
    };
    for (int it = 0; it < 24 && best_res > pow2(-(long)prec + 16, prec); ++it) {
        Complex f0 = entry(best_c);
        Complex f1 = entry(best_c + hc);
        Complex df = (f1 - f0) / hc;
        if (df.is_zero()) break;
        Complex cand = best_c - f0 / df;
        Real res = relation_residual(cand);
        if (res < best_res) {
            best_c = cand;
            best_res = res;
        } else {
            break;
        }
    }
    SL2 A(m, one, Complex(prec), inverse(m));
    SL2 B(m, Complex(prec), best_c, inverse(m));
    return {A, B};
}

bool is_irreducible(const SL2& A, const SL2& B, double tol) {
    mpfr_prec_t prec = A.prec();
    Real eps(tol, prec);
    auto scalar = [&](const SL2& X) {
        return abs(X.b) < eps && abs(X.c) < eps && abs(X.a - X.d) < eps;
    };
    if (scalar(A) || scalar(B)) return false;
    // eigenvectors of A
    Complex tr = A.trace();
    Complex disc = sqrt(tr * tr - Real(4L, prec) * make_one(prec));
    std::vector<std::pair<Complex, Complex>> eigvecs;
    for (int sgn : {+1, -1}) {
        Complex lam = (tr + Real(double(sgn), prec) * disc) / Complex(Real(2L, prec), Real(prec));
        // (A - lam) v = 0: v = (b, lam - a) or (lam - d, c)
        Complex v1 = A.b, v2 = lam - A.a;
        if (abs(v1) + abs(v2) < eps) {
            v1 = lam - A.d;
            v2 = A.c;
        }
        if (abs(v1) + abs(v2) < eps) continue;  // defective direction
        eigvecs.emplace_back(v1, v2);
        if (abs(disc) < eps) break;  // parabolic: single eigenvector
    }
    for (const auto& [v1, v2] : eigvecs) {
        Complex bv1 = B.a * v1 + B.b * v2;
        Complex bv2 = B.c * v1 + B.d * v2;
        Real cross = abs(bv1 * v2 - bv2 * v1);
        Real scale = (abs(bv1) + abs(bv2)) * (abs(v1) + abs(v2));
        if (cross <= eps * scale) return false;  // common eigenvector
    }
    return true;
}

std::vector<RepPoint> enumerate_variety(const TwistSurgerySpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("enumerate_variety: n must be nonzero");
    if (spec.p % 2 != 0 && !spec.allow_odd_p)
        throw std::invalid_argument("enumerate_variety: p must be even (theorem hypothesis)");
    if (std::gcd(std::abs(spec.p), std::abs(spec.q)) != 1)
        throw std::invalid_argument("enumerate_variety: p, q must be coprime");
    mpfr_prec_t prec = spec.prec;
    SystemEval sys = make_system(spec.n, spec.p, spec.q);

    // eliminate u = m^2: both F m^2 and the cleared surgery equation are
    // polynomials in u with z-polynomial coefficients
    LaurentPoly f_u = sys.f.shifted(-sys.f.min_m(), 0);
    LaurentPoly g_u = sys.g.shifted(-sys.g.min_m(), 0);
    UniPoly res = resultant_u(f_u.halved_m().as_poly_vec(), g_u.halved_m().as_poly_vec());
    res = res.normalized_primitive();
    if (res.is_zero())
        throw numeric_error("enumerate_variety: resultant vanishes (positive-dimensional locus?)");
    if (res.degree() < 1) return {};

    RootOptions ropt;
    ropt.prec = prec;
    ropt.threads = spec.threads;
    auto zroots = roots(res, ropt);

    Real accept(1e-10, prec);
    UniPoly spair = s_pair(spec.n);

    // back-solve candidates per z-root (parallel slots, deterministic merge)
    std::vector<std::vector<RepPoint>> slots(zroots.size());
    par::for_each_index(
        zroots.size(),
        [&](std::size_t zi) {
            const Complex& z0 = zroots[zi].value;
            // G1(z0, u) = S(S-S') u^2 + (1 - z S(S-S')) u + S(S-S')
            Complex sp = spair.eval(z0);
            Complex one = make_one(prec);
            std::vector<Complex> ucands;
            if (abs(sp) > pow2(-(long)prec / 2, prec)) {
                Complex bq = one - z0 * sp;
                Complex disc = sqrt(bq * bq - Real(4L, prec) * (sp * sp));
                Complex two_sp = Real(2L, prec) * sp;
                ucands.push_back((disc - bq) / two_sp);
                ucands.push_back((-disc - bq) / two_sp);
            } else {
                // leading coefficient vanished: F linear in u
                Complex bq = one - z0 * sp;
                if (abs(bq) > pow2(-(long)prec / 2, prec)) ucands.push_back(-sp / bq);
            }
            for (const Complex& u : ucands) {
                if (abs(u) < Real(1e-12, prec)) continue;
                Complex mroot = sqrt(u);
                for (const Complex& m0 : {mroot, -mroot}) {
                    Complex m = m0, z = z0;
                    Real full = pow2(-(long)prec + 14, prec);
                    if (!polish(sys, m, z, full) &&
                        !(abs(sys.F(m, z)) < accept && abs(sys.G(m, z)) < accept))
                        continue;
                    // Prefer the spec's orbit representative, but keep the
                    // solved point when the flipped one fails the surgery
                    // equation (the printed E is not inversion-consistent for
                    // every n; see the decisions record).
                    Complex mrep = m;
                    orbit_representative(mrep, prec);
                    if (abs(sys.G(mrep, z)) < accept) m = mrep;
                    RepPoint pt;
                    pt.m = m;
                    pt.z = z;
                    pt.res_f = abs(sys.F(m, z));
                    pt.res_g = abs(sys.G(m, z));
                    auto [A, B] = rep_from_point(m, z, spec.n);
                    pt.irreducible = is_irreducible(A, B);
                    slots[zi].push_back(std::move(pt));
                }
            }
        },
        spec.threads);

    std::vector<RepPoint> out;
    Real dtol(1e-9, prec);
    for (auto& bucket : slots) {
        for (auto& pt : bucket) {
            bool dup = false;
            for (const auto& have : out)
                if (close(pt.m, have.m, dtol) && close(pt.z, have.z, dtol)) dup = true;
            if (!dup) out.push_back(std::move(pt));
        }
    }
    std::sort(out.begin(), out.end(), [](const RepPoint& a, const RepPoint& b) {
        if (a.z.re() != b.z.re()) return a.z.re() < b.z.re();
        if (a.z.im() != b.z.im()) return a.z.im() < b.z.im();
        if (a.m.re() != b.m.re()) return a.m.re() < b.m.re();
        return a.m.im() < b.m.im();
    });
    // conjugate pairing metadata
    for (std::size_t i = 0; i < out.size(); ++i) {
        Complex mc = conj(out[i].m), zc = conj(out[i].z);
        orbit_representative(mc, prec);
        for (std::size_t j = 0; j < out.size(); ++j) {
            if (close(mc, out[j].m, dtol) && close(zc, out[j].z, dtol)) {
                out[i].conj_partner = static_cast<int>(j);
                out[i].self_conjugate = (i == j);
                break;
            }
        }
    }
    return out;
}

UniPoly riley_polynomial(const TwoBridgeSpec& spec) {
    if (spec.p < 3 || spec.p % 2 == 0 || spec.q <= 0 || spec.q >= spec.p ||
        std::gcd(spec.p, spec.q) != 1)
        throw std::invalid_argument("riley_polynomial: need b(p,q) with p odd, 0<q<p, coprime");
    using Mat = std::array<UniPoly, 4>;  // row-major 2x2 over Z[zeta]
    UniPoly one = UniPoly::constant(Rational(1));
    UniPoly zero;
    UniPoly zeta = UniPoly::monomial(Rational(1), 1);
    Mat X = {one, one, zero, one};
    Mat Xi = {one, -one, zero, one};
    Mat Y = {one, zero, zeta, one};
    Mat Yi = {one, zero, -zeta, one};
    auto mulm = [](const Mat& u, const Mat& v) {
        return Mat{u[0] * v[0] + u[1] * v[2], u[0] * v[1] + u[1] * v[3],
                   u[2] * v[0] + u[3] * v[2], u[2] * v[1] + u[3] * v[3]};
    };
    Mat W = {one, zero, zero, one};
    for (long i = 1; i <= spec.p - 1; ++i) {
        long eps = ((i * spec.q) / spec.p) % 2 == 0 ? 1 : -1;
        bool use_x = (i % 2 == 1);
        const Mat& letter = use_x ? (eps > 0 ? X : Xi) : (eps > 0 ? Y : Yi);
        W = mulm(W, letter);
    }
    Mat lhs = mulm(W, X), rhs = mulm(Y, W);
    UniPoly phi;
    for (int k = 0; k < 4; ++k) {
        UniPoly d = lhs[static_cast<std::size_t>(k)] - rhs[static_cast<std::size_t>(k)];
        if (d.is_zero()) continue;
        phi = phi.is_zero() ? d : UniPoly::gcd(phi, d);
    }
    if (phi.is_zero()) throw numeric_error("riley_polynomial: matrix equation identically satisfied");
    return phi.normalized_primitive();
}

Word twist_w_word() { return word_from_string("bABa"); }

Word twist_relator(long n) {
    Word w = twist_w_word();
    Word wn;
    if (n >= 0)
        for (long i = 0; i < n; ++i) wn = concat(wn, w);
    else {
        Word wi = inverse_word(w);
        for (long i = 0; i < -n; ++i) wn = concat(wn, wi);
    }
    // w^n a w^-n b^-1
    return concat(concat(concat(wn, word_from_string("a")), inverse_word(wn)),
                  word_from_string("B"));
}

Word fig8_longitude() {
    // w * (w reversed) = bABa aBAb
    return word_from_string("bABaaBAb");
}

}  // namespace csrec
