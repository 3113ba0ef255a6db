#include "csrec/homology.hpp"

#include <algorithm>
#include <array>

#include "csrec/parallel.hpp"

namespace csrec {

SL2 mul(const SL2& x, const SL2& y) {
    return SL2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
               x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

bool sl2_close(const SL2& x, const SL2& y, const Real& tol) {
    return close(x.a, y.a, tol) && close(x.b, y.b, tol) && close(x.c, y.c, tol) &&
           close(x.d, y.d, tol);
}

SL2 rho_eval(const Word& w, const Rho& rho) {
    mpfr_prec_t prec = rho.empty() ? kDefaultPrec : rho[0].prec();
    SL2 acc(prec);
    for (int letter : w) {
        std::size_t idx = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
        if (idx >= rho.size()) throw std::invalid_argument("word letter outside rho");
        acc = mul(acc, letter > 0 ? rho[idx] : rho[idx].inv());
    }
    return acc;
}

Rho conjugated(const Rho& rho, const SL2& g) {
    Rho out;
    out.reserve(rho.size());
    SL2 gi = g.inv();
    for (const auto& m : rho) out.push_back(mul(mul(g, m), gi));
    return out;
}

Rho conjugate_representation(const Rho& rho) {
    Rho out;
    out.reserve(rho.size());
    for (const auto& m : rho) out.push_back(m.conjugate_entries());
    return out;
}

SL2 random_sl2(std::mt19937_64& rng, mpfr_prec_t prec) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (;;) {
        Complex a(dist(rng), dist(rng), prec);
        Complex b(dist(rng), dist(rng), prec);
        Complex c(dist(rng), dist(rng), prec);
        if (abs(a).to_double() < 0.3) continue;
        Complex d = (make_one(prec) + b * c) / a;
        return SL2(a, b, c, d);
    }
}

std::vector<std::vector<GroupRing>> boundary2(const Presentation& pres) {
    std::vector<std::vector<GroupRing>> out;
    out.reserve(pres.relators.size());
    for (const auto& r : pres.relators) {
        std::vector<GroupRing> row;
        for (int j = 1; j <= pres.generators; ++j) row.push_back(fox_derivative(r, j));
        out.push_back(std::move(row));
    }
    return out;
}

TupleChain cancel(TupleChain chain, const Real& tol) {
    TupleChain out;
    for (auto& term : chain.terms) {
        if (term.coeff == 0) continue;
        bool degen = false;
        for (std::size_t i = 0; i + 1 < term.g.size(); ++i)
            if (sl2_close(term.g[i], term.g[i + 1], tol)) degen = true;
        if (degen) continue;
        bool merged = false;
        for (auto& have : out.terms) {
            if (have.g.size() != term.g.size()) continue;
            bool same = true;
            for (std::size_t i = 0; i < term.g.size() && same; ++i)
                same = sl2_close(have.g[i], term.g[i], tol);
            if (same) {
                have.coeff += term.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(std::move(term));
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const TupleChain::Term& t) { return t.coeff == 0; }),
                    out.terms.end());
    return out;
}

TupleChain boundary(const TupleChain& chain, const Real& tol) {
    TupleChain out;
    for (const auto& term : chain.terms) {
        for (std::size_t i = 0; i < term.g.size(); ++i) {
            TupleChain::Term face;
            face.coeff = (i % 2 == 0) ? term.coeff : -term.coeff;
            for (std::size_t j = 0; j < term.g.size(); ++j)
                if (j != i) face.g.push_back(term.g[j]);
            out.terms.push_back(std::move(face));
        }
    }
    return cancel(std::move(out), tol);
}

TupleChain c1_chain(const GroupRing& elem, int gen, const SL2& context, const Rho& rho) {
    TupleChain out;
    const SL2& x = rho[static_cast<std::size_t>(gen - 1)];
    for (const auto& t : elem) {
        SL2 au = mul(context, rho_eval(t.word, rho));
        out.terms.push_back({t.coeff, {au, mul(au, x)}});
    }
    return out;
}

TupleChain c2_chain(const Word& relator, const SL2& context, const Rho& rho) {
    TupleChain out;
    SL2 prefix = context;
    for (int letter : relator) {
        std::size_t idx = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
        SL2 next = mul(prefix, letter > 0 ? rho[idx] : rho[idx].inv());
        if (letter > 0)
            out.terms.push_back({+1, {context, prefix, next}});
        else
            out.terms.push_back({-1, {context, next, prefix}});
        prefix = next;
    }
    return out;
}

TupleChain two_cycle(const CellStructure& cell, const Rho& rho) {
    if (cell.d3.size() != cell.pres.relators.size())
        throw std::invalid_argument("two_cycle: d3 data missing");
    TupleChain out;
    for (std::size_t i = 0; i < cell.pres.relators.size(); ++i) {
        for (const auto& t : cell.d3[i]) {
            SL2 ctx = rho_eval(t.word, rho);
            TupleChain part = c2_chain(cell.pres.relators[i], ctx, rho);
            for (auto& term : part.terms) {
                term.coeff *= t.coeff;
                out.terms.push_back(std::move(term));
            }
        }
    }
    mpfr_prec_t prec = rho.empty() ? kDefaultPrec : rho[0].prec();
    return cancel(std::move(out), pow2(-40, prec));
}

TupleChain cone(const TupleChain& chain, const SL2& v0) {
    TupleChain out;
    out.terms.reserve(chain.terms.size());
    for (const auto& term : chain.terms) {
        TupleChain::Term t;
        t.coeff = term.coeff;
        t.g.push_back(v0);
        t.g.insert(t.g.end(), term.g.begin(), term.g.end());
        out.terms.push_back(std::move(t));
    }
    return out;
}

std::pair<Complex, Complex> hopf(const SL2& g) { return {g.a, g.c}; }

bool proj_equal(const std::pair<Complex, Complex>& x, const std::pair<Complex, Complex>& y,
                const Real& tol) {
    return abs(x.first * y.second - y.first * x.second) < tol;
}

FlattenedSimplex lambda_hat(const std::vector<SL2>& tuple) {
    if (tuple.size() != 4) throw std::invalid_argument("lambda_hat: need a 4-tuple");
    mpfr_prec_t prec = tuple[0].prec();
    std::array<std::pair<Complex, Complex>, 4> v;
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = hopf(tuple[static_cast<std::size_t>(i)]);
    auto det = [&](int i, int j) {
        const auto& [ai, ci] = v[static_cast<std::size_t>(i)];
        const auto& [aj, cj] = v[static_cast<std::size_t>(j)];
        return ai * cj - aj * ci;
    };
    Complex d01 = det(0, 1), d02 = det(0, 2), d03 = det(0, 3);
    Complex d12 = det(1, 2), d13 = det(1, 3), d23 = det(2, 3);
    Real dtol = pow2(-(long)prec / 2, prec);
    for (const Complex* dd : {&d01, &d02, &d03, &d12, &d13, &d23})
        if (abs(*dd) < dtol) throw numeric_error("lambda_hat: h-degenerate tuple");
    Complex z = (d02 * d13) / (d03 * d12);
    Complex w0 = log_principal(d02) + log_principal(d13) - log_principal(d03) - log_principal(d12);
    Complex w1 = log_principal(d03) + log_principal(d12) - log_principal(d01) - log_principal(d23);
    Complex one = make_one(prec);
    Complex ipi(Real(prec), Real::pi(prec));
    Complex pc = (w0 - log_principal(z)) / ipi;
    Complex qc = (w1 + log_principal(one - z)) / ipi;
    long p = round_nearest(pc.re()).to_long();
    long q = round_nearest(qc.re()).to_long();
    Real itol(1e-6, prec);
    if (abs(pc - Complex(Real(double(p), prec), Real(prec))) > itol ||
        abs(qc - Complex(Real(double(q), prec), Real(prec))) > itol)
        throw numeric_error("lambda_hat: non-integral flattening");
    return FlattenedSimplex{z, p, q, 1};
}

Complex pairing_2cs(const TupleChain& chain, mpfr_prec_t prec, int threads) {
    std::vector<Complex> slot(chain.size(), Complex(prec));
    std::vector<std::string> errors(chain.size());
    par::for_each_index(
        chain.size(),
        [&](std::size_t i) {
            try {
                FlattenedSimplex s = lambda_hat(chain.terms[i].g);
                slot[i] = Real(double(chain.terms[i].coeff), prec) * l_hat(s);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        },
        threads);
    for (const auto& e : errors)
        if (!e.empty()) throw numeric_error(e);
    Complex sum(prec);
    for (const auto& v : slot) sum += v;
    Real pi = Real::pi(prec);
    Complex val = (Real(-0.5, prec) / (pi * pi)) * sum;
    Real frac = val.re() - floor(val.re());
    return Complex(frac, val.im());
}

CsDoubledResult cs_doubled(const Rho& rho, const CellStructure& cell, const PairingOptions& opt) {
    mpfr_prec_t prec = opt.prec;
    Real tol = pow2(-40, prec);
    std::mt19937_64 rng(opt.seed);
    std::string last_error = "degenerate";
    for (int attempt = 0; attempt <= opt.max_retries; ++attempt) {
        Rho r = (attempt == 0) ? rho : conjugated(rho, random_sl2(rng, prec));
        TupleChain two = two_cycle(cell, r);
        TupleChain bd = boundary(two, tol);
        if (!bd.empty())
            throw numeric_error("cs_doubled: d3 data fails the 2-cycle check (" +
                                std::to_string(bd.size()) + " residual faces)");
        SL2 v0 = opt.v0 && attempt == 0 ? *opt.v0 : random_sl2(rng, prec);
        TupleChain three = cone(two, v0);
        // cone identity: boundary(three) == two as formal tuple sums
        TupleChain check = boundary(three, tol);
        for (auto& t : two.terms) t.coeff = -t.coeff;
        check.terms.insert(check.terms.end(), two.terms.begin(), two.terms.end());
        if (!cancel(std::move(check), tol).empty())
            throw numeric_error("cs_doubled: cone boundary mismatch");
        try {
            Complex val = pairing_2cs(three, prec, opt.threads);
            return CsDoubledResult{val, attempt, three.size()};
        } catch (const numeric_error& e) {
            last_error = e.what();
            continue;
        }
    }
    throw numeric_error("cs_doubled: degenerate after retries (" + last_error + ")");
}

}  // namespace csrec
