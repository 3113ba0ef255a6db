#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "csrec/parallel.hpp"
#include "csrec/roots.hpp"
#include "csrec/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalFailure = 3;

mpfr_prec_t bits_from_digits(int digits) {
    if (digits <= 0) return csrec::kDefaultPrec;
    auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * std::log2(10.0))) + 4;
    if (bits < csrec::kMinPrec) bits = csrec::kMinPrec;
    if (bits > csrec::kMaxPrec) bits = csrec::kMaxPrec;
    return bits;
}

bool parse_fibers(const std::string& s, std::array<std::pair<long, long>, 3>& out) {
    std::istringstream is(s);
    std::string part;
    int k = 0;
    while (std::getline(is, part, ',')) {
        if (k >= 3) return false;
        auto slash = part.find('/');
        if (slash == std::string::npos) return false;
        try {
            out[static_cast<std::size_t>(k)] = {std::stol(part.substr(0, slash)),
                                                std::stol(part.substr(slash + 1))};
        } catch (...) {
            return false;
        }
        ++k;
    }
    return k == 3;
}

unsigned long seed_from_env() {
    if (const char* s = std::getenv("CSREC_SEED")) return std::strtoul(s, nullptr, 10);
    return 0x5EEDULL;
}

void emit(const csrec::VerificationReport& rep, bool as_json, bool as_csv,
          const std::string& csv_path) {
    if (as_json)
        std::cout << rep.to_json() << "\n";
    else
        std::cout << rep.to_text();
    if (as_csv && !csv_path.empty()) {
        std::ofstream out(csv_path);
        out << rep.to_csv();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chern-Simons reciprocity verification engine"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker-pool size (default: available parallelism)");

    // seifert
    auto* sub_seifert = app.add_subcommand("seifert", "exact Seifert reciprocity check");
    std::string fibers;
    bool sj = false, scsv = false;
    std::string scsv_path;
    sub_seifert->add_option("--fibers", fibers, "three singular fibers \"p1/q1,p2/q2,p3/q3\"")
        ->required();
    sub_seifert->add_flag("--json", sj, "JSON output");
    sub_seifert->add_option("--csv", scsv_path, "write per-representation CSV table");

    // fig8
    auto* sub_fig8 = app.add_subcommand("fig8", "figure-eight surgery saddle-point check");
    long p8 = 6;
    int digits8 = 0;
    double tol8 = 1e-6;
    bool fj = false;
    std::string fcsv_path;
    sub_fig8->add_option("--p", p8, "even surgery coefficient, |p| >= 6")->required();
    sub_fig8->add_option("--digits", digits8, "working decimal digits (default ~19)");
    sub_fig8->add_option("--tol", tol8, "pass tolerance (default 1e-6)");
    sub_fig8->add_flag("--json", fj, "JSON output");
    sub_fig8->add_option("--csv", fcsv_path, "write per-solution CSV table");

    // twist
    auto* sub_twist = app.add_subcommand("twist", "twist-knot surgery character variety");
    long tn = -1, tp = 6, tq = 1;
    int digits_t = 0;
    bool tj = false;
    sub_twist->add_option("--n", tn, "twist parameter (nonzero)")->required();
    sub_twist->add_option("--p", tp, "surgery numerator (even)")->required();
    sub_twist->add_option("--q", tq, "surgery denominator (coprime to p)")->required();
    sub_twist->add_option("--digits", digits_t, "working decimal digits");
    sub_twist->add_flag("--json", tj, "JSON output");

    // riley
    auto* sub_riley = app.add_subcommand("riley", "Riley polynomial of a 2-bridge knot");
    std::string two_bridge;
    bool rj = false;
    sub_riley->add_option("--two-bridge", two_bridge, "normal form \"p/q\"")->required();
    sub_riley->add_flag("--json", rj, "JSON output");

    // pair
    auto* sub_pair = app.add_subcommand("pair", "group-homology pairing check");
    std::string pair_input;
    int digits_p = 0;
    double tol_p = 1e-6;
    bool pj = false;
    sub_pair->add_option("--input", pair_input, "manifold JSON")->required();
    sub_pair->add_option("--digits", digits_p, "working decimal digits");
    sub_pair->add_option("--tol", tol_p, "pass tolerance");
    sub_pair->add_flag("--json", pj, "JSON output");

    // cross
    auto* sub_cross = app.add_subcommand("cross", "saddle vs homology cross-check");
    long pc = 6;
    std::string cross_input;
    bool cj = false;
    sub_cross->add_option("--p", pc, "even surgery coefficient")->required();
    sub_cross->add_option("--input", cross_input, "manifold JSON")->required();
    sub_cross->add_flag("--json", cj, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    if (threads > 0) csrec::par::set_threads(threads);

    try {
        if (*sub_seifert) {
            std::array<std::pair<long, long>, 3> f{};
            if (!parse_fibers(fibers, f)) {
                std::cerr << "error: --fibers expects \"p1/q1,p2/q2,p3/q3\"\n";
                return kExitInputError;
            }
            csrec::SeifertSpec spec;
            try {
                spec = csrec::SeifertSpec::make(f[0].first, f[0].second, f[1].first, f[1].second,
                                                f[2].first, f[2].second);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInputError;
            }
            auto rep = csrec::check_seifert(spec, threads);
            emit(rep, sj, !scsv_path.empty(), scsv_path);
            return rep.pass ? kExitPass : kExitCheckFailed;
        }
        if (*sub_fig8) {
            if (p8 % 2 != 0 || std::labs(p8) < 6) {
                std::cerr << "error: p must be even with |p| >= 6\n";
                return kExitInputError;
            }
            auto rep = csrec::check_fig8(p8, bits_from_digits(digits8), tol8, threads);
            emit(rep, fj, !fcsv_path.empty(), fcsv_path);
            return rep.pass ? kExitPass : kExitCheckFailed;
        }
        if (*sub_twist) {
            csrec::TwistSurgerySpec spec;
            spec.n = tn;
            spec.p = tp;
            spec.q = tq;
            spec.prec = bits_from_digits(digits_t);
            spec.threads = threads;
            if (tn == 0 || tp % 2 != 0 || std::gcd(std::labs(tp), std::labs(tq)) != 1) {
                std::cerr << "error: need n != 0, p even, gcd(p, q) = 1\n";
                return kExitInputError;
            }
            auto pts = csrec::enumerate_variety(spec);
            if (tj) {
                std::cout << "{\n \"points\": [\n";
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    const auto& pt = pts[i];
                    std::cout << "  {\"m\": [\"" << pt.m.re().str(20) << "\", \""
                              << pt.m.im().str(20) << "\"], \"z\": [\"" << pt.z.re().str(20)
                              << "\", \"" << pt.z.im().str(20) << "\"], \"irreducible\": "
                              << (pt.irreducible ? "true" : "false")
                              << ", \"conj_partner\": " << pt.conj_partner << "}"
                              << (i + 1 < pts.size() ? "," : "") << "\n";
                }
                std::cout << " ]\n}\n";
            } else {
                std::cout << "variety of M_{" << tp << "/" << tq << "}(twist n=" << tn << "): "
                          << pts.size() << " orbit(s)\n";
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    const auto& pt = pts[i];
                    std::cout << "  [" << i << "] m=" << pt.m.str(16) << "  z=" << pt.z.str(16)
                              << "  |F|=" << pt.res_f.str(3) << " |G|=" << pt.res_g.str(3)
                              << (pt.irreducible ? "" : "  (reducible)");
                    if (pt.self_conjugate)
                        std::cout << "  self-conjugate";
                    else if (pt.conj_partner >= 0)
                        std::cout << "  conjugate of [" << pt.conj_partner << "]";
                    std::cout << "\n";
                }
            }
            return kExitPass;
        }
        if (*sub_riley) {
            auto slash = two_bridge.find('/');
            if (slash == std::string::npos) {
                std::cerr << "error: --two-bridge expects \"p/q\"\n";
                return kExitInputError;
            }
            csrec::TwoBridgeSpec spec{};
            try {
                spec.p = std::stol(two_bridge.substr(0, slash));
                spec.q = std::stol(two_bridge.substr(slash + 1));
            } catch (...) {
                std::cerr << "error: --two-bridge expects integers \"p/q\"\n";
                return kExitInputError;
            }
            csrec::UniPoly phi;
            try {
                phi = csrec::riley_polynomial(spec);
            } catch (const std::invalid_argument& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInputError;
            }
            csrec::RootOptions ropt;
            auto rts = phi.degree() >= 1 ? csrec::roots(phi, ropt)
                                         : std::vector<csrec::RootCluster>{};
            if (rj) {
                std::cout << "{\n \"coefficients\": [";
                for (long i = 0; i <= phi.degree(); ++i)
                    std::cout << "\"" << phi[static_cast<std::size_t>(i)].get_str() << "\""
                              << (i < phi.degree() ? ", " : "");
                std::cout << "],\n \"roots\": [";
                for (std::size_t i = 0; i < rts.size(); ++i)
                    std::cout << "[\"" << rts[i].value.re().str(20) << "\", \""
                              << rts[i].value.im().str(20) << "\"]"
                              << (i + 1 < rts.size() ? ", " : "");
                std::cout << "]\n}\n";
            } else {
                std::cout << "Riley polynomial of b(" << spec.p << "," << spec.q
                          << "): " << phi.str("t") << "\n";
                for (const auto& r : rts)
                    std::cout << "  root " << r.value.str(20)
                              << (r.multiplicity > 1
                                      ? " (multiplicity " + std::to_string(r.multiplicity) + ")"
                                      : "")
                              << "\n";
            }
            return kExitPass;
        }
        if (*sub_pair) {
            mpfr_prec_t prec = bits_from_digits(digits_p);
            csrec::ManifoldInput m;
            try {
                m = csrec::load_manifold(pair_input, prec);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInputError;
            }
            auto rep = csrec::check_homology(m, prec, tol_p, threads);
            emit(rep, pj, false, "");
            if (rep.scaled_sum == "error") return kExitNumericalFailure;
            return rep.pass ? kExitPass : kExitCheckFailed;
        }
        if (*sub_cross) {
            mpfr_prec_t prec = csrec::kDefaultPrec;
            csrec::ManifoldInput m;
            try {
                m = csrec::load_manifold(cross_input, prec);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInputError;
            }
            if (pc % 2 != 0) {
                std::cerr << "error: p must be even\n";
                return kExitInputError;
            }
            auto rep = csrec::cross_check(pc, m, prec, 1e-6, threads);
            std::cout << (cj ? rep.to_json() + "\n" : rep.to_text());
            return rep.pass ? kExitPass : kExitCheckFailed;
        }
    } catch (const csrec::numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    (void)seed_from_env;
    return kExitInputError;
}
