#include "csrec/polynomial.hpp"

#include <sstream>

namespace csrec {

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rational> c = c_;
    for (auto& a : c) a *= s;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned long k) const {
    UniPoly acc = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Complex UniPoly::eval(const Complex& x) const {
    Complex acc(x.prec());
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + to_complex(c_[i], x.prec());
    return acc;
}

UniPoly UniPoly::normalized_primitive() const {
    if (is_zero()) return UniPoly();
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& a : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading() < 0) content = -content;
    std::vector<Rational> c = c_;
    for (auto& a : c) {
        a /= content;
        a.canonicalize();
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b over Q
        UniPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            Rational f = r.leading() / b.leading();
            long shift = r.degree() - b.degree();
            r = r - UniPoly::monomial(f, static_cast<std::size_t>(shift)) * b;
        }
        a = b;
        b = r;
    }
    return a.normalized_primitive();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0)
            os << "-";
        Rational a(abs(c_[i]));
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly chebyshev_s(long k) {
    bool neg = k < 0;
    long n = neg ? -k : k;
    UniPoly prev;                                  // S_0 = 0
    UniPoly cur = UniPoly::constant(Rational(1));  // S_1 = 1
    if (n == 0) return UniPoly();
    UniPoly z = UniPoly::monomial(Rational(1), 1);
    for (long i = 1; i < n; ++i) {
        UniPoly next = z * cur - prev;
        prev = cur;
        cur = next;
    }
    return neg ? -cur : cur;
}

LaurentPoly LaurentPoly::term(const Rational& a, long em, long ez) {
    LaurentPoly p;
    p.add_term(em, ez, a);
    return p;
}

void LaurentPoly::add_term(long em, long ez, const Rational& a) {
    if (a == 0) return;
    auto key = Key{em, ez};
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, a);
    } else {
        it->second += a;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, a] : o.t_) r.add_term(k.first, k.second, a);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, a] : o.t_) r.add_term(k.first, k.second, -a);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [k1, a1] : t_)
        for (const auto& [k2, a2] : o.t_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, a1 * a2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, a] : t_) r.add_term(k.first, k.second, -a);
    return r;
}

LaurentPoly LaurentPoly::d_dm() const {
    LaurentPoly r;
    for (const auto& [k, a] : t_)
        if (k.first != 0) r.add_term(k.first - 1, k.second, a * rat(k.first));
    return r;
}

LaurentPoly LaurentPoly::d_dz() const {
    LaurentPoly r;
    for (const auto& [k, a] : t_)
        if (k.second != 0) r.add_term(k.first, k.second - 1, a * rat(k.second));
    return r;
}

Complex LaurentPoly::eval(const Complex& m, const Complex& z) const {
    mpfr_prec_t prec = std::max(m.prec(), z.prec());
    Complex acc(prec);
    for (const auto& [k, a] : t_)
        acc += to_complex(a, prec) * pow_int(m, k.first) * pow_int(z, k.second);
    return acc;
}

long LaurentPoly::min_m() const {
    long mn = 0;
    bool first = true;
    for (const auto& [k, a] : t_) {
        (void)a;
        if (first || k.first < mn) mn = k.first;
        first = false;
    }
    return mn;
}

long LaurentPoly::min_z() const {
    long mn = 0;
    bool first = true;
    for (const auto& [k, a] : t_) {
        (void)a;
        if (first || k.second < mn) mn = k.second;
        first = false;
    }
    return mn;
}

long LaurentPoly::max_m() const {
    long mx = 0;
    bool first = true;
    for (const auto& [k, a] : t_) {
        (void)a;
        if (first || k.first > mx) mx = k.first;
        first = false;
    }
    return mx;
}

LaurentPoly LaurentPoly::shifted(long a, long b) const {
    LaurentPoly r;
    for (const auto& [k, c] : t_) r.add_term(k.first + a, k.second + b, c);
    return r;
}

LaurentPoly LaurentPoly::halved_m() const {
    LaurentPoly r;
    for (const auto& [k, a] : t_) {
        if (k.first % 2 != 0) throw std::invalid_argument("halved_m: odd m-exponent");
        r.add_term(k.first / 2, k.second, a);
    }
    return r;
}

std::vector<UniPoly> LaurentPoly::as_poly_vec() const {
    long hi = 0;
    for (const auto& [k, a] : t_) {
        (void)a;
        if (k.first < 0) throw std::invalid_argument("as_poly_vec: negative m-exponent");
        if (k.second < 0) throw std::invalid_argument("as_poly_vec: negative z-exponent");
        hi = std::max(hi, k.first);
    }
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(hi) + 1);
    for (const auto& [k, a] : t_) {
        auto& row = rows[static_cast<std::size_t>(k.first)];
        std::size_t idx = static_cast<std::size_t>(k.second);
        if (row.size() <= idx) row.resize(idx + 1, Rational(0));
        row[idx] += a;
    }
    std::vector<UniPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.emplace_back(std::move(row));
    return out;
}

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, a] : t_) {
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0)
            os << "-";
        os << Rational(abs(a)).get_str();
        if (k.first != 0) os << "*m^" << k.first;
        if (k.second != 0) os << "*z^" << k.second;
        first = false;
    }
    return os.str();
}

LaurentPoly lift_z(const UniPoly& f, long em) {
    LaurentPoly r;
    for (long i = 0; i <= f.degree(); ++i)
        r.add_term(em, i, f[static_cast<std::size_t>(i)]);
    return r;
}

namespace {

long u_degree(const std::vector<UniPoly>& f) {
    long d = -1;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!f[i].is_zero()) d = static_cast<long>(i);
    return d;
}

long max_z_degree(const std::vector<UniPoly>& f) {
    long d = 0;
    for (const auto& c : f) d = std::max(d, c.degree());
    return d;
}

// Exact determinant by fraction-elimination Gauss over Q.
Rational det_q(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = Rational(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (std::size_t c2 = col; c2 < n; ++c2) a[r][c2] -= f * a[col][c2];
        }
    }
    det.canonicalize();
    return det;
}

Rational sylvester_det_at(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g,
                          long df, long dg, const Rational& z0) {
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (long r = 0; r < dg; ++r)
        for (long j = 0; j <= df; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] =
                f[static_cast<std::size_t>(df - j)].eval(z0);
    for (long r = 0; r < df; ++r)
        for (long j = 0; j <= dg; ++j)
            m[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + j)] =
                g[static_cast<std::size_t>(dg - j)].eval(z0);
    return det_q(m);
}

// Lagrange interpolation through (x_i, y_i), exact over Q.
UniPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    UniPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UniPoly basis = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * (UniPoly::monomial(Rational(1), 1) - UniPoly::constant(xs[j]));
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

}  // namespace

UniPoly resultant_u(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g) {
    long df = u_degree(f), dg = u_degree(g);
    if (df < 0 || dg < 0) throw std::invalid_argument("resultant_u: zero polynomial");
    if (df == 0) return f[0].pow(static_cast<unsigned long>(dg));
    if (dg == 0) return g[0].pow(static_cast<unsigned long>(df));
    long bound = df * max_z_degree(g) + dg * max_z_degree(f) + 1;
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound));
    const UniPoly& lf = f[static_cast<std::size_t>(df)];
    const UniPoly& lg = g[static_cast<std::size_t>(dg)];
    for (long t = 0; static_cast<long>(xs.size()) < bound; ++t) {
        // sample points 0, 1, -1, 2, -2, ...
        long v = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
        Rational z0 = rat(v);
        if (lf.eval(z0) == 0 || lg.eval(z0) == 0) continue;
        xs.push_back(z0);
        ys.push_back(sylvester_det_at(f, g, df, dg, z0));
        if (t > 16 * bound + 64) throw numeric_error("resultant_u: cannot find enough sample points");
    }
    return lagrange(xs, ys);
}

}  // namespace csrec
