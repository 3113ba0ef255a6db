#include "csrec/verify.hpp"

#include <json.hpp>

#include <sstream>

namespace csrec {
namespace {

using nlohmann::json;

json report_json(const VerificationReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"id", row.id}, {"cs", row.cs_repr}, {"diagnostics", row.diagnostics}});
    json j{{"manifold", r.manifold},
           {"method", r.method},
           {"rows", rows},
           {"scaled_sum", r.scaled_sum},
           {"distance", r.distance},
           {"imag_abs", r.imag_abs},
           {"exact", r.exact},
           {"pass", r.pass},
           {"tolerance", r.tolerance},
           {"precision_bits", r.precision_bits}};
    if (!r.exact_sum.empty()) j["exact_sum"] = r.exact_sum;
    return j;
}

// mod-1 distance between two real representatives
Real mod1_distance(const Real& a, const Real& b) {
    Real d = a - b;
    return abs(d - round_nearest(d));
}

}  // namespace

std::string VerificationReport::to_json() const { return report_json(*this).dump(1); }

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "id,cs,diagnostics\n";
    for (const auto& row : rows) os << row.id << "," << row.cs_repr << "," << row.diagnostics << "\n";
    os << "sum," << scaled_sum << ",distance=" << distance << " imag=" << imag_abs
       << " pass=" << (pass ? 1 : 0) << "\n";
    return os.str();
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << manifold << " [" << method << "]\n";
    for (const auto& row : rows)
        os << "  " << row.id << "  " << row.cs_repr
           << (row.diagnostics.empty() ? "" : "  (" + row.diagnostics + ")") << "\n";
    os << "  24*sum(CS) = " << scaled_sum;
    if (exact)
        os << "  (exact)";
    else
        os << "  distance=" << distance << "  |Im|=" << imag_abs;
    os << "  => " << (pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

VerificationReport check_fig8(long p, mpfr_prec_t prec, double tol, int threads) {
    SaddleOptions opt;
    opt.prec = prec;
    opt.threads = threads;
    ReciprocitySum rs = reciprocity_sum_fig8(p, opt);
    VerificationReport rep;
    rep.manifold = "M_{" + std::to_string(p) + "/1}(figure-eight)";
    rep.method = "saddle";
    rep.precision_bits = prec;
    rep.tolerance = tol;
    int digits = 20;
    for (std::size_t i = 0; i < rs.table.size(); ++i) {
        const auto& s = rs.table[i];
        std::ostringstream diag;
        diag << "z=" << s.z.str(digits) << " w=" << s.w.str(digits) << " c=" << s.c
             << " d=" << s.d;
        rep.rows.push_back({"sol" + std::to_string(i + 1), "T=" + s.T.str(digits), diag.str()});
    }
    rep.scaled_sum = rs.scaled_sum.str(digits);
    rep.distance = rs.distance_to_integer.to_double();
    rep.imag_abs = rs.imag_abs.to_double();
    rep.pass = rep.distance < tol && rep.imag_abs < tol;
    return rep;
}

VerificationReport check_seifert(const SeifertSpec& spec, int threads) {
    VerificationReport rep;
    std::ostringstream name;
    name << "M(0;(o,0)";
    for (const auto& f : spec.fibers) name << ";(" << f.p << "," << f.q << ")";
    name << ")";
    rep.manifold = name.str();
    rep.method = "seifert";
    rep.exact = true;
    rep.precision_bits = 0;
    auto labels = enumerate_labels(spec);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        std::ostringstream id, cs;
        id << "n=(" << l.n(0).get_str() << "," << l.n(1).get_str() << "," << l.n(2).get_str()
           << "),lambda=" << (l.lambda_half ? "1/2" : "0");
        cs << "4CS=" << four_cs(l, spec).str();
        rep.rows.push_back({id.str(), cs.str(), ""});
    }
    QmodZ total = reciprocity_sum_seifert(spec, threads);
    rep.exact_sum = total.str();
    rep.scaled_sum = total.str();
    rep.pass = total.is_zero();
    rep.distance = rep.pass ? 0.0 : 1.0;
    return rep;
}

VerificationReport check_homology(const ManifoldInput& manifold, mpfr_prec_t prec, double tol,
                                  int threads) {
    VerificationReport rep;
    rep.manifold = manifold.name;
    rep.method = "homology";
    rep.precision_bits = prec;
    rep.tolerance = tol;
    PairingOptions popt;
    popt.prec = prec;
    popt.threads = threads;
    popt.v0 = manifold.v0;
    Complex total(prec);
    int digits = 20;
    for (const auto& r : manifold.representations) {
        try {
            CsDoubledResult res = cs_doubled(r.rho, manifold.cell, popt);
            total += res.value;
            std::ostringstream diag;
            diag << "tuples=" << res.tuples << " retries=" << res.retries;
            rep.rows.push_back({r.id, "2CS=" + res.value.str(digits), diag.str()});
        } catch (const numeric_error& e) {
            rep.rows.push_back({r.id, "error", e.what()});
            rep.pass = false;
            rep.scaled_sum = "error";
            return rep;
        }
    }
    // 24 sum CS = 12 sum (2CS)
    Complex scaled = Real(12L, prec) * total;
    Real frac = scaled.re() - floor(scaled.re());
    Complex scaled_mod(frac, scaled.im());
    rep.scaled_sum = scaled_mod.str(digits);
    Real dist = abs(frac - round_nearest(frac));
    rep.distance = dist.to_double();
    rep.imag_abs = abs(scaled.im()).to_double();
    rep.pass = rep.distance < tol && rep.imag_abs < tol;
    return rep;
}

std::string CrossCheckReport::to_json() const {
    json pairs_j = json::array();
    for (const auto& p : pairs)
        pairs_j.push_back(
            {{"rep", p.rep_id}, {"saddle_z", p.saddle_z}, {"discrepancy", p.discrepancy}});
    json j{{"pairs", pairs_j},
           {"unmatched_saddle", unmatched_saddle},
           {"unmatched_reps", unmatched_reps},
           {"max_discrepancy", max_discrepancy},
           {"pass", pass}};
    return j.dump(1);
}

std::string CrossCheckReport::to_text() const {
    std::ostringstream os;
    for (const auto& p : pairs)
        os << "  " << p.rep_id << " ~ z=" << p.saddle_z << "  |T/(2pi^2) - 2CS| mod Z = "
           << p.discrepancy << "\n";
    for (const auto& u : unmatched_saddle) os << "  unmatched saddle solution: " << u << "\n";
    for (const auto& u : unmatched_reps) os << "  unmatched representation: " << u << "\n";
    os << "  max discrepancy = " << max_discrepancy << "  => " << (pass ? "PASS" : "FAIL")
       << "\n";
    return os.str();
}

CrossCheckReport cross_check(long p, const ManifoldInput& manifold, mpfr_prec_t prec, double tol,
                             int threads) {
    SaddleOptions sopt;
    sopt.prec = prec;
    sopt.threads = threads;
    auto table = cs_terms(p, sopt);

    PairingOptions popt;
    popt.prec = prec;
    popt.threads = threads;
    popt.v0 = manifold.v0;

    CrossCheckReport out;
    Real pi = Real::pi(prec);
    Real match_tol(1e-6, prec);
    std::vector<bool> rep_used(manifold.representations.size(), false);

    for (const auto& s : table) {
        // match by meridian trace: sqrt(zeta) + 1/sqrt(zeta) against +-(m + 1/m)
        Complex sq = sqrt(s.z);
        Complex strace = sq + inverse(sq);
        int found = -1;
        for (std::size_t i = 0; i < manifold.representations.size(); ++i) {
            const Rho& rho = manifold.representations[i].rho;
            Complex mtrace = rho[0].trace();
            if (abs(strace - mtrace) < match_tol || abs(strace + mtrace) < match_tol) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) {
            out.unmatched_saddle.push_back(s.z.str(16));
            continue;
        }
        rep_used[static_cast<std::size_t>(found)] = true;
        const auto& rep = manifold.representations[static_cast<std::size_t>(found)];
        CsDoubledResult cs = cs_doubled(rep.rho, manifold.cell, popt);
        Complex t2 = s.T / Complex(Real(2L, prec) * pi * pi, Real(prec));
        Real dist = mod1_distance(t2.re(), cs.value.re()) + abs(t2.im() - cs.value.im());
        double d = dist.to_double();
        out.pairs.push_back({rep.id, s.z.str(16), d});
        out.max_discrepancy = std::max(out.max_discrepancy, d);
    }
    for (std::size_t i = 0; i < rep_used.size(); ++i)
        if (!rep_used[i]) out.unmatched_reps.push_back(manifold.representations[i].id);
    out.pass = out.unmatched_saddle.empty() && out.max_discrepancy < tol && !out.pairs.empty();
    return out;
}

}  // namespace csrec
