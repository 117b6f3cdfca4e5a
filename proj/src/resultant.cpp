#include "quartic/resultant.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace quartic {

Int det_bareiss(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rat det_rational(const std::vector<std::vector<Rat>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator(a[i][j]).get_mpz_t());
        for (int j = 0; j < n; ++j) {
            Rat v = a[i][j] * Rat(l);
            assert(denominator(v) == 1);
            m[i][j] = numerator(v);
        }
        scale *= l;
    }
    Rat d(det_bareiss(std::move(m)));
    d /= Rat(scale);
    return d;
}

namespace {

int true_degree(const std::vector<Rat>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// lc(b)^(deg a - deg b + 1) * a  mod b, over Z.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    const Int& lb = b[db];
    for (int k = da; k >= db; --k) {
        Int c = a[k];
        for (int i = 0; i <= k; ++i) a[i] *= lb;
        if (c != 0)
            for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Int content(const std::vector<Int>& f) {
    Int g = 0;
    for (auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? Int(1) : g;
}

Int int_pow_i(const Int& x, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Subresultant PRS resultant over Z (Collins); inputs nonzero, trimmed.
Int resultant_int(std::vector<Int> A, std::vector<Int> B) {
    int degA = static_cast<int>(A.size()) - 1;
    int degB = static_cast<int>(B.size()) - 1;
    int s = 1;
    if (degA < degB) {
        std::swap(A, B);
        std::swap(degA, degB);
        if (degA % 2 == 1 && degB % 2 == 1) s = -s;
    }
    Int ca = content(A), cb = content(B);
    for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    Int mult = int_pow_i(ca, degB) * int_pow_i(cb, degA);

    Int g = 1, h = 1;
    while (degB > 0) {
        int delta = degA - degB;
        if (degA % 2 == 1 && degB % 2 == 1) s = -s;
        std::vector<Int> R = pseudo_rem(A, B);
        A = std::move(B);
        degA = degB;
        if (R.empty()) return 0;
        Int div = g * int_pow_i(h, delta);
        for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
        B = std::move(R);
        degB = static_cast<int>(B.size()) - 1;
        g = A.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact
            Int num = int_pow_i(g, delta);
            Int den = int_pow_i(h, delta - 1);
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = num;
        }
    }
    // B is a nonzero constant now
    Int num = int_pow_i(B[0], degA);
    Int den = int_pow_i(h, degA - 1);
    if (degA == 0) { num = 1; den = 1; }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int res = mult * num;
    return s > 0 ? res : Int(-res);
}

} // namespace

Rat resultant_univariate(std::vector<Rat> f, std::vector<Rat> g) {
    int df = true_degree(f), dg = true_degree(g);
    if (df < 0 || dg < 0) return 0;
    f.resize(df + 1);
    g.resize(dg + 1);
    if (df == 0 && dg == 0) return 1;
    Int lf = 1, lg = 1;
    for (auto& c : f) mpz_lcm(lf.get_mpz_t(), lf.get_mpz_t(), denominator(c).get_mpz_t());
    for (auto& c : g) mpz_lcm(lg.get_mpz_t(), lg.get_mpz_t(), denominator(c).get_mpz_t());
    std::vector<Int> F(df + 1), G(dg + 1);
    for (int i = 0; i <= df; ++i) F[i] = numerator(f[i] * Rat(lf));
    for (int i = 0; i <= dg; ++i) G[i] = numerator(g[i] * Rat(lg));
    // res(f,g) = res(F,G) / (lf^dg * lg^df)
    Rat r(resultant_int(std::move(F), std::move(G)));
    r /= Rat(int_pow_i(lf, dg) * int_pow_i(lg, df));
    return r;
}

Rat resultant_binary(const BinaryForm& f, const BinaryForm& g) {
    int m = f.degree(), n = g.degree();
    int N = m + n;
    std::vector<std::vector<Rat>> syl(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[r][r + i] = f[i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[n + r][r + i] = g[i];
    return det_rational(syl);
}

namespace {

struct MacaulayData {
    std::vector<std::vector<Int>> full;  // 36 x 36
    std::vector<int> sub;                // indices with >= 2 cube divisors
};

MacaulayData macaulay_matrix(const TernaryForm& f1, const TernaryForm& f2,
                             const TernaryForm& f3) {
    auto mons = monomials3(7);
    std::map<Mono3, int, GrlexLess> index;
    for (int i = 0; i < static_cast<int>(mons.size()); ++i) index[mons[i]] = i;
    const TernaryForm* fs[3] = {&f1, &f2, &f3};

    MacaulayData md;
    md.full.assign(mons.size(), std::vector<Int>(mons.size(), 0));
    for (int r = 0; r < static_cast<int>(mons.size()); ++r) {
        const Mono3& m = mons[r];
        int which = m[0] >= 3 ? 0 : m[1] >= 3 ? 1 : 2;
        Mono3 q = m;
        q[which] -= 3;
        for (auto& [e, v] : fs[which]->terms()) {
            assert(denominator(v) == 1);
            md.full[r][index[{e[0] + q[0], e[1] + q[1], e[2] + q[2]}]] = numerator(v);
        }
        int cubes = (m[0] >= 3) + (m[1] >= 3) + (m[2] >= 3);
        if (cubes >= 2) md.sub.push_back(r);
    }
    return md;
}

std::vector<std::vector<Int>> shift_diag(const std::vector<std::vector<Int>>& a, long t) {
    auto b = a;
    for (size_t i = 0; i < b.size(); ++i) b[i][i] += t;
    return b;
}

// Exact interpolation: coefficients of the degree <= n-1 polynomial through
// (i, y[i]) for i = 0..n-1, by Newton divided differences.
std::vector<Rat> interpolate_at_integers(const std::vector<Rat>& y) {
    int n = static_cast<int>(y.size());
    std::vector<Rat> dd = y;
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(level);
    // assemble sum dd[k] * prod_{j<k} (x - j)
    std::vector<Rat> coeffs(n, Rat(0)), basis{Rat(1)};
    for (int k = 0; k < n; ++k) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[k] * basis[j];
        if (k + 1 < n) {
            basis.push_back(Rat(0));
            for (int j = static_cast<int>(basis.size()) - 1; j >= 1; --j)
                basis[j] = basis[j - 1] - Rat(k) * basis[j];
            basis[0] = -Rat(k) * basis[0];
        }
    }
    return coeffs;
}

} // namespace

Rat macaulay_resultant_cubics(const TernaryForm& f1, const TernaryForm& f2,
                              const TernaryForm& f3) {
    // clear denominators; Res is of degree 9 in each argument's coefficients
    const TernaryForm* in[3] = {&f1, &f2, &f3};
    TernaryForm scaled[3];
    Rat unscale(1);
    for (int i = 0; i < 3; ++i) {
        Int l = 1;
        for (auto& [m, v] : in[i]->terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator(v).get_mpz_t());
        scaled[i] = in[i]->scaled(Rat(l));
        unscale *= rat_pow(Rat(l), 9);
    }
    MacaulayData md = macaulay_matrix(scaled[0], scaled[1], scaled[2]);
    auto take_sub = [&](const std::vector<std::vector<Int>>& a) {
        std::vector<std::vector<Int>> s(md.sub.size(),
                                        std::vector<Int>(md.sub.size()));
        for (size_t i = 0; i < md.sub.size(); ++i)
            for (size_t j = 0; j < md.sub.size(); ++j)
                s[i][j] = a[md.sub[i]][md.sub[j]];
        return s;
    };

    Int detSub = det_bareiss(take_sub(md.full));
    if (detSub != 0) {
        Rat r(det_bareiss(md.full));
        r /= Rat(detSub);
        return r / unscale;
    }

    // perturbed determinants along the diagonal parameter
    const int N = static_cast<int>(md.full.size());
    const int Ns = static_cast<int>(md.sub.size());
    std::vector<Rat> pv, qv;
    for (int t = 0; t <= N; ++t) pv.emplace_back(det_bareiss(shift_diag(md.full, t)));
    for (int t = 0; t <= Ns; ++t) qv.emplace_back(det_bareiss(shift_diag(take_sub(md.full), t)));
    auto p = interpolate_at_integers(pv);
    auto q = interpolate_at_integers(qv);
    size_t ord = 0;
    while (ord < q.size() && q[ord] == 0) ++ord;
    if (ord == q.size()) throw std::logic_error("macaulay: zero minor polynomial");
    for (size_t k = 0; k < ord; ++k)
        if (p[k] != 0) throw std::logic_error("macaulay: inexact quotient");
    return (p[ord] / q[ord]) / unscale;
}

} // namespace quartic
