#include "csrec/seifert.hpp"

#include "csrec/parallel.hpp"

namespace csrec {

SeifertSpec SeifertSpec::make(long p1, long q1, long p2, long q2, long p3, long q3) {
    SeifertSpec s;
    std::array<std::pair<long, long>, 3> pq = {{{p1, q1}, {p2, q2}, {p3, q3}}};
    for (int k = 0; k < 3; ++k) {
        auto [p, q] = pq[static_cast<std::size_t>(k)];
        if (p < 2) throw std::invalid_argument("seifert: p_k must be >= 2");
        auto [sk, rk] = ext_gcd_pair(p, q);
        s.fibers[static_cast<std::size_t>(k)] = {p, q, sk, rk};
    }
    return s;
}

std::vector<SeifertRepLabel> enumerate_labels(const SeifertSpec& spec) {
    std::vector<SeifertRepLabel> out;
    for (int branch = 0; branch < 2; ++branch) {
        bool half = branch == 0;
        // lambda = 1/2: j_k even if q_k odd, else odd. lambda = 0: j_k odd.
        std::array<std::vector<long>, 3> choices;
        for (int k = 0; k < 3; ++k) {
            const auto& f = spec.fibers[static_cast<std::size_t>(k)];
            bool want_even = half && (f.q % 2 != 0);
            for (long j = 0; j <= f.p - 2; ++j)
                if ((j % 2 == 0) == want_even) choices[static_cast<std::size_t>(k)].push_back(j);
        }
        for (long j1 : choices[0])
            for (long j2 : choices[1])
                for (long j3 : choices[2]) out.push_back({{j1, j2, j3}, half});
    }
    return out;
}

QmodZ four_cs(const SeifertRepLabel& label, const SeifertSpec& spec) {
    Rational acc(0);
    for (int k = 0; k < 3; ++k) {
        const auto& f = spec.fibers[static_cast<std::size_t>(k)];
        Rational n = label.n(k);
        acc += rat(4) * rat(f.r) * n * n / rat(f.p);
    }
    return QmodZ(acc);
}

QmodZ sum_four_cs(const SeifertSpec& spec, int threads) {
    auto labels = enumerate_labels(spec);
    std::vector<Rational> slot(labels.size(), Rational(0));
    par::for_each_index(
        labels.size(),
        [&](std::size_t i) { slot[i] = four_cs(labels[i], spec).value(); }, threads);
    Rational acc(0);
    for (const auto& v : slot) acc += v;
    return QmodZ(acc);
}

QmodZ reciprocity_sum_seifert(const SeifertSpec& spec, int threads) {
    return sum_four_cs(spec, threads).scaled(6);
}

QmodZ closed_form_odd_even(const SeifertSpec& spec) {
    Rational prod(1), sum(0);
    for (const auto& f : spec.fibers) {
        if (f.p % 2 == 0 || f.q % 2 != 0)
            throw std::invalid_argument("closed_form_odd_even: requires p_k odd, q_k even");
        prod *= rat(f.p - 1, 2);
        sum += rat(f.r) * rat(f.p + 1, 2);
    }
    return QmodZ(rat(4, 3) * prod * sum);
}

bool torus_bundle_check(const std::vector<QmodZ>& cs_values) {
    for (const auto& v : cs_values) {
        Rational two = v.value() * rat(2);
        two.canonicalize();
        if (two.get_den() != 1) return false;
    }
    return true;
}

}  // namespace csrec
