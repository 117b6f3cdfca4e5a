#pragma once

#include "quartic/rational.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <vector>

namespace quartic {

// Exponent triple for x1^e0 x2^e1 x3^e2.
using Mono3 = std::array<int, 3>;

inline int mono_deg(const Mono3& m) { return m[0] + m[1] + m[2]; }

// Graded lexicographic order, ascending; the largest monomial of degree d
// is (d,0,0), so reverse iteration of a map walks the documented
// coefficient order (4,0,0), (3,1,0), (3,0,1), (2,2,0), ...
struct GrlexLess {
    bool operator()(const Mono3& a, const Mono3& b) const {
        int da = mono_deg(a), db = mono_deg(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// All degree-d exponent triples, largest first (the serialization order).
std::vector<Mono3> monomials3(int d);

inline bool is_zero(const Rat& x) { return x == 0; }

template <class C>
class TernaryFormT {
public:
    using coeff_map = std::map<Mono3, C, GrlexLess>;

    TernaryFormT() = default;
    explicit TernaryFormT(coeff_map m) : c_(std::move(m)) { trim(); }

    static TernaryFormT monomial(const Mono3& m, C v) {
        TernaryFormT f;
        f.set(m, std::move(v));
        return f;
    }

    const coeff_map& terms() const { return c_; }
    bool zero() const { return c_.empty(); }

    C coeff(const Mono3& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? C{} : it->second;
    }

    void set(const Mono3& m, C v) {
        if (is_zero(v)) c_.erase(m);
        else c_[m] = std::move(v);
    }

    void add_to(const Mono3& m, const C& v) {
        auto it = c_.find(m);
        if (it == c_.end()) {
            if (!is_zero(v)) c_.emplace(m, v);
        } else {
            it->second = it->second + v;
            if (is_zero(it->second)) c_.erase(it);
        }
    }

    // Largest monomial present (graded lex).
    const Mono3& leading_monomial() const {
        assert(!c_.empty());
        return c_.rbegin()->first;
    }
    const C& leading_coeff() const {
        assert(!c_.empty());
        return c_.rbegin()->second;
    }

    int degree() const {
        int d = -1;
        for (auto& [m, v] : c_) d = std::max(d, mono_deg(m));
        return d;
    }

    bool homogeneous(int d) const {
        for (auto& [m, v] : c_)
            if (mono_deg(m) != d) return false;
        return true;
    }

    TernaryFormT operator+(const TernaryFormT& o) const {
        TernaryFormT r = *this;
        for (auto& [m, v] : o.c_) r.add_to(m, v);
        return r;
    }
    TernaryFormT operator-() const {
        TernaryFormT r;
        for (auto& [m, v] : c_) r.c_[m] = -v;
        return r;
    }
    TernaryFormT operator-(const TernaryFormT& o) const { return *this + (-o); }

    TernaryFormT operator*(const TernaryFormT& o) const {
        TernaryFormT r;
        for (auto& [m1, v1] : c_)
            for (auto& [m2, v2] : o.c_) {
                C pr = v1 * v2;
                if (!is_zero(pr))
                    r.add_to({m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, pr);
            }
        return r;
    }

    template <class S>
    TernaryFormT scaled(const S& s) const {
        TernaryFormT r;
        for (auto& [m, v] : c_) {
            C pr = v * s;
            if (!is_zero(pr)) r.c_[m] = pr;
        }
        return r;
    }

    bool operator==(const TernaryFormT& o) const { return c_ == o.c_; }

    // k-th partial derivative in variable i (0-based).
    TernaryFormT diff(int i, int k = 1) const {
        TernaryFormT r = *this;
        for (int s = 0; s < k; ++s) {
            TernaryFormT next;
            for (auto& [m, v] : r.c_) {
                if (m[i] == 0) continue;
                Mono3 mm = m;
                mm[i] -= 1;
                next.add_to(mm, v * m[i]);
            }
            r = std::move(next);
        }
        return r;
    }

    template <class V>
    V evaluate(const std::array<V, 3>& x) const {
        V total{};
        for (auto& [m, v] : c_) {
            V t = V(v);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < m[i]; ++k) t = t * x[i];
            total = total + t;
        }
        return total;
    }

    // Exact division by x_i^k; throws if any term lacks the factor.
    TernaryFormT divexact_var_power(int i, int k) const {
        TernaryFormT r;
        for (auto& [m, v] : c_) {
            if (m[i] < k) throw std::domain_error("divexact_var_power: not divisible");
            Mono3 mm = m;
            mm[i] -= k;
            r.c_[mm] = v;
        }
        return r;
    }

private:
    void trim() {
        for (auto it = c_.begin(); it != c_.end();)
            it = is_zero(it->second) ? c_.erase(it) : std::next(it);
    }
    coeff_map c_;
};

template <class C>
bool is_zero(const TernaryFormT<C>& f) { return f.zero(); }

template <class C>
TernaryFormT<C> operator*(const TernaryFormT<C>& f, const Rat& s) { return f.scaled(s); }
template <class C>
TernaryFormT<C> operator*(const TernaryFormT<C>& f, long s) { return f.scaled(Rat(s)); }

using TernaryForm = TernaryFormT<Rat>;

// Dense binary form of formal degree d; coefficient i multiplies x^(d-i) z^i.
template <class C>
class BinaryFormT {
public:
    BinaryFormT() : deg_(0), c_(1) {}
    explicit BinaryFormT(int deg) : deg_(deg), c_(deg + 1) {}
    BinaryFormT(int deg, std::vector<C> coeffs) : deg_(deg), c_(std::move(coeffs)) {
        assert(static_cast<int>(c_.size()) == deg + 1);
    }

    int degree() const { return deg_; }
    const C& operator[](int i) const { return c_[i]; }
    C& operator[](int i) { return c_[i]; }
    const std::vector<C>& coeffs() const { return c_; }

    bool zero() const {
        for (auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

    BinaryFormT operator+(const BinaryFormT& o) const {
        assert(deg_ == o.deg_);
        BinaryFormT r(deg_);
        for (int i = 0; i <= deg_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    BinaryFormT operator-() const {
        BinaryFormT r(deg_);
        for (int i = 0; i <= deg_; ++i) r.c_[i] = -c_[i];
        return r;
    }
    BinaryFormT operator-(const BinaryFormT& o) const { return *this + (-o); }

    BinaryFormT operator*(const BinaryFormT& o) const {
        BinaryFormT r(deg_ + o.deg_);
        for (int i = 0; i <= deg_; ++i) {
            if (is_zero(c_[i])) continue;
            for (int j = 0; j <= o.deg_; ++j) {
                if (is_zero(o.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return r;
    }

    template <class S>
    BinaryFormT scaled(const S& s) const {
        BinaryFormT r(deg_);
        for (int i = 0; i <= deg_; ++i)
            if (!is_zero(c_[i])) r.c_[i] = c_[i] * s;
        return r;
    }

    bool operator==(const BinaryFormT& o) const {
        return deg_ == o.deg_ && c_ == o.c_;
    }

    // d/dx: formal degree drops by one, x-exponent of slot i is deg-i.
    BinaryFormT diff_x() const {
        assert(deg_ >= 1);
        BinaryFormT r(deg_ - 1);
        for (int i = 0; i < deg_; ++i) r.c_[i] = c_[i] * (deg_ - i);
        return r;
    }
    BinaryFormT diff_z() const {
        assert(deg_ >= 1);
        BinaryFormT r(deg_ - 1);
        for (int i = 1; i <= deg_; ++i) r.c_[i - 1] = c_[i] * i;
        return r;
    }

private:
    int deg_;
    std::vector<C> c_;
};

template <class C>
bool is_zero(const BinaryFormT<C>& f) { return f.zero(); }

using BinaryForm = BinaryFormT<Rat>;

struct LinearMap2 {
    Rat a[2][2];
    static LinearMap2 identity() { return {{{1, 0}, {0, 1}}}; }
    Rat det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    LinearMap2 transpose() const { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }
};

struct LinearMap3 {
    Rat a[3][3];
    static LinearMap3 identity();
    static LinearMap3 scalar(const Rat& s);
    Rat det() const;
    LinearMap3 transpose() const;
    LinearMap3 inverse() const;   // throws on det = 0
    LinearMap3 operator*(const LinearMap3& o) const;
    bool operator==(const LinearMap3& o) const;
};

// F.T, the substitution x -> T x.
TernaryForm act(const TernaryForm& F, const LinearMap3& T);
BinaryForm act(const BinaryForm& f, const LinearMap2& T);

// Binary transvectant of level k with the factorial normalization
// (m-k)!(n-k)!/(m!n!) * sum_i (-1)^i C(k,i) f_{x^(k-i) z^i} g_{x^i z^(k-i)}.
template <class C>
BinaryFormT<C> transvectant(const BinaryFormT<C>& f, const BinaryFormT<C>& g, int k) {
    int m = f.degree(), n = g.degree();
    assert(k <= m && k <= n);
    // table of all k-th mixed partials: part[i] = d^k / dx^(k-i) dz^i
    auto mixed = [k](const BinaryFormT<C>& h) {
        std::vector<BinaryFormT<C>> out;
        BinaryFormT<C> base = h;
        for (int s = 0; s < k; ++s) base = base.diff_x();
        out.push_back(base);
        // successively trade one x-derivative for one z-derivative
        BinaryFormT<C> cur = h;
        for (int i = 1; i <= k; ++i) {
            cur = cur.diff_z();
            BinaryFormT<C> t = cur;
            for (int s = 0; s < k - i; ++s) t = t.diff_x();
            out.push_back(t);
        }
        return out;
    };
    auto pf = mixed(f);
    auto pg = mixed(g);
    BinaryFormT<C> acc(m + n - 2 * k);
    Rat binom(1);
    for (int i = 0; i <= k; ++i) {
        if (i > 0) binom = binom * (k - i + 1) / i;
        Rat s = (i % 2 ? -binom : binom);
        acc = acc + (pf[i] * pg[k - i]).scaled(s);
    }
    Rat pref(1);
    for (int t = m - k + 1; t <= m; ++t) pref /= t;
    for (int t = n - k + 1; t <= n; ++t) pref /= t;
    return acc.scaled(pref);
}

} // namespace quartic
