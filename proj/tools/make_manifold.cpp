// Regenerates the bundled data files under data/: closed-surgery manifold
// descriptions (presentation, 3-cell boundary data, representations) for
// M_{6/1} on the figure-eight knot (n = -1) and the trefoil (n = 1), plus
// knot-exterior presentations for the n = +-2 twist knots and the Seifert
// spec list. Representations are solved at 192 bits and emitted as decimal
// strings.
#include <fstream>
#include <iostream>
#include <random>

#include "csrec/homology.hpp"
#include "csrec/manifold.hpp"
#include "csrec/repvar.hpp"
#include "csrec/roots.hpp"
#include "csrec/verify.hpp"

using namespace csrec;

namespace {

constexpr mpfr_prec_t kGenPrec = 192;

Word w(const char* s) { return word_from_string(s); }

GroupRing ring(std::initializer_list<std::pair<long, const char*>> terms) {
    GroupRing g;
    for (const auto& [coeff, word] : terms) g.push_back({coeff, w(word)});
    return g;
}

Complex ell_fig8(const Complex& m, const Complex& z) {
    auto [A, B] = rep_from_point(m, z, -1);
    return rho_eval(fig8_longitude(), {A, B}).a;
}

// {F(n=-1) = 0, m^6 ell = 1} via damped Newton from deterministic starts.
std::vector<std::pair<Complex, Complex>> solve_fig8_word_system(long p) {
    mpfr_prec_t prec = kGenPrec;
    LaurentPoly F = twist_F(-1);
    Real h = pow2(-(long)prec / 2, prec);
    Complex hc(h, Real(prec));
    auto Gv = [&](const Complex& m, const Complex& z) {
        return pow_int(m, p) * ell_fig8(m, z) - make_one(prec);
    };
    auto Fv = [&](const Complex& m, const Complex& z) { return F.eval(m, z); };
    std::mt19937_64 rng(20240613u);
    std::uniform_real_distribution<double> dm(-2.0, 2.0), dz(-3.0, 4.0);
    std::vector<std::pair<Complex, Complex>> orbits;
    Real target = pow2(-(long)prec + 48, prec);
    for (int trial = 0; trial < 4000 && orbits.size() < 6; ++trial) {
        Complex m(dm(rng), dm(rng), prec), z(dz(rng), dm(rng), prec);
        bool ok = false;
        for (int it = 0; it < 70; ++it) {
            Complex f, g;
            try {
                f = Fv(m, z);
                g = Gv(m, z);
            } catch (const numeric_error&) {
                break;
            }
            if (abs(f) + abs(g) < target) {
                ok = true;
                break;
            }
            try {
                Complex j11 = (Fv(m + hc, z) - f) / hc;
                Complex j12 = (Fv(m, z + hc) - f) / hc;
                Complex j21 = (Gv(m + hc, z) - g) / hc;
                Complex j22 = (Gv(m, z + hc) - g) / hc;
                Complex det = j11 * j22 - j12 * j21;
                if (abs(det) < pow2(-(long)prec, prec)) break;
                m -= (f * j22 - g * j12) / det;
                z -= (j11 * g - j21 * f) / det;
            } catch (const numeric_error&) {
                break;
            }
            double am = abs(m).to_double();
            if (am < 1e-5 || am > 1e5) break;
        }
        if (!ok) continue;
        // orbit representative
        Real one(1L, prec), tol(1e-25, prec);
        if (abs(m) < one - tol || (abs(abs(m) - one) <= tol && arg(m) < -tol)) m = inverse(m);
        bool dup = false;
        for (const auto& [m2, z2] : orbits)
            if (close(m, m2, Real(1e-20, prec)) && close(z, z2, Real(1e-20, prec))) dup = true;
        if (!dup) orbits.emplace_back(m, z);
    }
    return orbits;
}

void check_relators(const CellStructure& cell, const Rho& rho, const std::string& tag) {
    mpfr_prec_t prec = rho[0].prec();
    SL2 eye(prec);
    for (const auto& r : cell.pres.relators) {
        SL2 img = rho_eval(r, rho);
        Real dev = abs(img.a - eye.a) + abs(img.b) + abs(img.c) + abs(img.d - eye.d);
        if (dev > Real(1e-30, prec))
            throw numeric_error(tag + ": relator " + word_to_string(r) +
                                " not killed, dev=" + dev.str(3));
    }
}

ManifoldInput build_fig8() {
    ManifoldInput m;
    m.name = "M_{6/1}(figure-eight)";
    m.surgery_p = 6;
    m.surgery_q = 1;
    m.cell.pres.generators = 2;
    m.cell.pres.relators = {w("abABaBAbaB"), w("baaaaaabABaaBA")};
    m.cell.d3 = {ring({{+1, "aaaaaaabABaaBA"}, {-1, "aaaaaaabABaBAbaB"}}),
                 ring({{+1, "aB"}, {-1, "B"}})};
    auto orbits = solve_fig8_word_system(6);
    if (orbits.size() != 6)
        throw numeric_error("fig8 generation: expected 6 orbits, found " +
                            std::to_string(orbits.size()));
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        if (a.second.re() != b.second.re()) return a.second.re() < b.second.re();
        if (a.second.im() != b.second.im()) return a.second.im() < b.second.im();
        return a.first.re() < b.first.re();
    });
    int id = 0;
    for (const auto& [mm, zz] : orbits) {
        auto [A, B] = rep_from_point(mm, zz, -1);
        ManifoldInput::Rep rep;
        rep.id = "rho" + std::to_string(id++);
        rep.rho = {A, B};
        check_relators(m.cell, rep.rho, "fig8 " + rep.id);
        m.representations.push_back(std::move(rep));
    }
    return m;
}

ManifoldInput build_trefoil() {
    ManifoldInput m;
    m.name = "M_{6/1}(trefoil)";
    m.surgery_p = 6;
    m.surgery_q = 1;
    m.cell.pres.generators = 2;
    m.cell.pres.relators = {w("bABabaBB"), w("aaaaaaaaBAbbAB")};
    m.cell.d3 = {ring({{-1, "aaaaaaaaBB"}, {+1, "aaaaaaaaBA"}}), ring({{+1, ""}, {-1, "A"}})};
    TwistSurgerySpec spec;
    spec.n = 1;
    spec.p = 6;
    spec.q = 1;
    spec.prec = kGenPrec;
    auto pts = enumerate_variety(spec);
    int id = 0;
    for (const auto& pt : pts) {
        auto [A, B] = rep_from_point(pt.m, pt.z, 1);
        ManifoldInput::Rep rep;
        rep.id = "rho" + std::to_string(id++);
        rep.rho = {A, B};
        check_relators(m.cell, rep.rho, "trefoil " + rep.id);
        m.representations.push_back(std::move(rep));
    }
    return m;
}

// Knot-exterior presentation for twist parameter n: two relators (the twist
// relator and its b-conjugate) so the presentation is deficiency zero, plus
// knot-group representations from F(m, z) = 0 at fixed rational z.
ManifoldInput build_exterior(long n) {
    ManifoldInput m;
    m.name = "twist-knot exterior (n=" + std::to_string(n) + ")";
    m.cell.pres.generators = 2;
    Word r1 = twist_relator(n);
    Word r2 = concat(concat(w("b"), r1), w("B"));
    m.cell.pres.relators = {r1, r2};
    mpfr_prec_t prec = kGenPrec;
    int id = 0;
    for (long zn : {5, -3}) {
        Complex z = to_complex(rat(zn, 2), prec);
        // roots of F(., z) * m^2 in m
        LaurentPoly F = twist_F(n);
        LaurentPoly Fs = F.shifted(-F.min_m(), 0);
        auto coeffs = Fs.as_poly_vec();  // in m, coefficients in z
        std::vector<Rational> cm;
        for (const auto& cz : coeffs) cm.push_back(cz.eval(rat(zn, 2)));
        UniPoly fm{std::vector<Rational>(cm)};
        RootOptions ropt;
        ropt.prec = prec;
        for (const auto& cl : roots(fm, ropt)) {
            if (abs(cl.value).to_double() < 1e-8) continue;
            auto [A, B] = rep_from_point(cl.value, z, n);
            Rho rho{A, B};
            SL2 img = rho_eval(r1, rho);
            Real dev = abs(img.a - make_one(prec)) + abs(img.b) + abs(img.c) +
                       abs(img.d - make_one(prec));
            if (dev > Real(1e-30, prec)) continue;
            ManifoldInput::Rep rep;
            rep.id = "rho" + std::to_string(id++);
            rep.rho = std::move(rho);
            m.representations.push_back(std::move(rep));
            break;  // one representation per z value
        }
    }
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    std::string outdir = argc > 1 ? argv[1] : "data";
    try {
        ManifoldInput fig8 = build_fig8();
        save_manifold(fig8, outdir + "/fig8_p6.json", 45);
        std::cout << "wrote " << outdir << "/fig8_p6.json (" << fig8.representations.size()
                  << " reps)\n";

        ManifoldInput tre = build_trefoil();
        save_manifold(tre, outdir + "/trefoil_p6.json", 45);
        std::cout << "wrote " << outdir << "/trefoil_p6.json (" << tre.representations.size()
                  << " reps)\n";

        for (long n : {2L, -2L}) {
            ManifoldInput ext = build_exterior(n);
            std::string path = outdir + "/twist_n" + (n < 0 ? "m" + std::to_string(-n)
                                                            : std::to_string(n)) + ".json";
            save_manifold(ext, path, 45);
            std::cout << "wrote " << path << " (" << ext.representations.size() << " reps)\n";
        }

        std::ofstream specs(outdir + "/seifert_specs.json");
        specs << "{\n \"specs\": [\n";
        std::vector<std::array<long, 6>> list;
        std::vector<long> ps = {3, 5, 7, 9};
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i; j < ps.size(); ++j)
                for (std::size_t k = j; k < ps.size(); ++k)
                    list.push_back({ps[i], 2, ps[j], 2, ps[k], 2});
        list.push_back({2, 1, 3, 1, 5, 1});
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& s = list[i];
            specs << "  [" << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << "," << s[4]
                  << "," << s[5] << "]" << (i + 1 < list.size() ? "," : "") << "\n";
        }
        specs << " ]\n}\n";
        std::cout << "wrote " << outdir << "/seifert_specs.json (" << list.size() << " specs)\n";
    } catch (const std::exception& e) {
        std::cerr << "generation failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
