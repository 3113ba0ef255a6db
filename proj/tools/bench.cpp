// Timing comparison of the data-parallel kernels: serial reference (1 thread)
// vs OpenMP. Also asserts that both paths produce identical output.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "csrec/manifold.hpp"
#include "csrec/parallel.hpp"
#include "csrec/repvar.hpp"
#include "csrec/roots.hpp"
#include "csrec/saddle.hpp"
#include "csrec/seifert.hpp"

using namespace csrec;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(34) << name << std::right << std::setw(10) << std::fixed
              << std::setprecision(1) << serial << " ms" << std::setw(10) << parallel << " ms"
              << std::setw(9) << std::setprecision(2) << (serial / parallel) << "x"
              << (same ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int hw = par::hardware_threads();
    std::cout << "kernel                                serial   " << hw
              << "-thread   speedup\n";

    {  // polynomial root finding (Aberth sweeps)
        UniPoly f = chebyshev_s(48);
        RootOptions o1;
        o1.prec = 192;
        o1.threads = 1;
        RootOptions oN = o1;
        oN.threads = hw;
        std::vector<RootCluster> r1, rN;
        double t1 = time_ms([&] { r1 = roots(f, o1); });
        double tN = time_ms([&] { rN = roots(f, oN); });
        bool same = r1.size() == rN.size();
        for (std::size_t i = 0; same && i < r1.size(); ++i)
            same = r1[i].value.str(30) == rN[i].value.str(30);
        row("roots(S_48), 192 bits", t1, tN, same);
    }

    {  // variety enumeration back-solve
        TwistSurgerySpec spec;
        spec.n = -2;
        spec.p = 8;
        spec.q = 1;
        spec.prec = 128;
        spec.threads = 1;
        std::vector<RepPoint> p1, pN;
        double t1 = time_ms([&] { p1 = enumerate_variety(spec); });
        spec.threads = hw;
        double tN = time_ms([&] { pN = enumerate_variety(spec); });
        bool same = p1.size() == pN.size();
        for (std::size_t i = 0; same && i < p1.size(); ++i)
            same = p1[i].m.str(25) == pN[i].m.str(25) && p1[i].z.str(25) == pN[i].z.str(25);
        row("enumerate_variety(n=-2,p=8)", t1, tN, same);
    }

    {  // saddle table (li2-heavy per-root work)
        SaddleOptions o;
        o.prec = 256;
        o.threads = 1;
        std::vector<SaddlePoint> s1, sN;
        double t1 = time_ms([&] { s1 = cs_terms(10, o); });
        o.threads = hw;
        double tN = time_ms([&] { sN = cs_terms(10, o); });
        bool same = s1.size() == sN.size();
        for (std::size_t i = 0; same && i < s1.size(); ++i)
            same = s1[i].T.str(40) == sN[i].T.str(40);
        row("cs_terms(p=10), 256 bits", t1, tN, same);
    }

    {  // exact Seifert label sum
        SeifertSpec spec = SeifertSpec::make(49, 2, 51, 2, 53, 4);
        QmodZ q1, qN;
        double t1 = time_ms([&] { q1 = reciprocity_sum_seifert(spec, 1); });
        double tN = time_ms([&] { qN = reciprocity_sum_seifert(spec, hw); });
        row("seifert sum (31200 labels)", t1, tN, q1 == qN);
    }

    if (argc > 1) {  // pairing chain evaluation on a bundled manifold
        ManifoldInput m = load_manifold(std::string(argv[1]) + "/fig8_p6.json", 128);
        PairingOptions o;
        o.prec = 128;
        o.threads = 1;
        Complex v1, vN;
        double t1 = time_ms([&] { v1 = cs_doubled(m.representations[0].rho, m.cell, o).value; });
        o.threads = hw;
        double tN = time_ms([&] { vN = cs_doubled(m.representations[0].rho, m.cell, o).value; });
        row("pairing_2cs chain (fig8)", t1, tN, v1.str(30) == vN.str(30));
    }
    return 0;
}
