#include "quartic/forms.hpp"
#include "quartic/fp.hpp"

namespace quartic {

std::vector<Mono3> monomials3(int d) {
    std::vector<Mono3> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j)
            out.push_back({i, j, d - i - j});
    return out;
}

LinearMap3 LinearMap3::identity() {
    return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

LinearMap3 LinearMap3::scalar(const Rat& s) {
    return {{{s, 0, 0}, {0, s, 0}, {0, 0, s}}};
}

Rat LinearMap3::det() const {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
         - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
         + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

LinearMap3 LinearMap3::transpose() const {
    LinearMap3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t.a[i][j] = a[j][i];
    return t;
}

LinearMap3 LinearMap3::inverse() const {
    Rat d = det();
    if (d == 0) throw std::domain_error("LinearMap3: singular");
    LinearMap3 inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv.a[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
        }
    return inv;
}

LinearMap3 LinearMap3::operator*(const LinearMap3& o) const {
    LinearMap3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * o.a[k][j];
            r.a[i][j] = s;
        }
    return r;
}

bool LinearMap3::operator==(const LinearMap3& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a[i][j] != o.a[i][j]) return false;
    return true;
}

TernaryForm act(const TernaryForm& F, const LinearMap3& T) {
    // images of the variables under x -> T x
    TernaryForm img[3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (T.a[i][j] != 0)
                img[i].add_to({j == 0, j == 1, j == 2}, T.a[i][j]);

    TernaryForm out;
    for (auto& [m, v] : F.terms()) {
        TernaryForm t = TernaryForm::monomial({0, 0, 0}, v);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < m[i]; ++k) t = t * img[i];
        out = out + t;
    }
    return out;
}

BinaryForm act(const BinaryForm& f, const LinearMap2& T) {
    int d = f.degree();
    // powers of the two images
    BinaryForm ix(1), iz(1);
    ix[0] = T.a[0][0]; ix[1] = T.a[0][1];
    iz[0] = T.a[1][0]; iz[1] = T.a[1][1];
    BinaryForm out(d);
    for (int i = 0; i <= d; ++i) {
        if (is_zero(f[i])) continue;
        BinaryForm t(0, {f[i]});
        for (int k = 0; k < d - i; ++k) t = t * ix;
        for (int k = 0; k < i; ++k) t = t * iz;
        out = out + t;
    }
    return out;
}

Fp PrimeFieldElement::inv() const {
    if (p == 0 || v == 0) throw std::domain_error("Fp: inverse of zero");
    // extended euclid on (v, p)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(v);
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt; std::swap(t, newt);
        r -= q * newr; std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("Fp: modulus not prime to value");
    if (t < 0) t += static_cast<long long>(p);
    return {static_cast<std::uint64_t>(t), p};
}

Fp PrimeFieldElement::pow(std::uint64_t e) const {
    if (p == 0) throw std::logic_error("Fp::pow on unset modulus");
    Fp acc{1 % p, p}, base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Fp reduce_mod_p(const Rat& x, std::uint64_t p) {
    Int num = numerator(x), den = denominator(x);
    Int pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw NegativeValuation("reduce_mod_p: denominator divisible by p");
    Int nr = num % pz, dr = den % pz;
    if (nr < 0) nr += pz;
    if (dr < 0) dr += pz;
    Fp n{nr.get_ui(), p}, d{dr.get_ui(), p};
    return n / d;
}

TernaryFormT<Fp> reduce_mod_p(const TernaryForm& F, std::uint64_t p) {
    TernaryFormT<Fp> out;
    for (auto& [m, v] : F.terms()) out.add_to(m, reduce_mod_p(v, p));
    return out;
}

BinaryFormT<Fp> reduce_mod_p(const BinaryForm& f, std::uint64_t p) {
    BinaryFormT<Fp> out(f.degree());
    for (int i = 0; i <= f.degree(); ++i) out[i] = reduce_mod_p(f[i], p);
    return out;
}

TernaryForm lift_mod_p(const TernaryFormT<Fp>& F) {
    TernaryForm out;
    for (auto& [m, v] : F.terms())
        out.add_to(m, Rat(static_cast<unsigned long>(v.v)));
    return out;
}

BinaryForm lift_mod_p(const BinaryFormT<Fp>& f) {
    BinaryForm out(f.degree());
    for (int i = 0; i <= f.degree(); ++i)
        out[i] = Rat(static_cast<unsigned long>(f[i].v));
    return out;
}

} // namespace quartic
