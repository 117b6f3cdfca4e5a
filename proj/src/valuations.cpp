#include "quartic/valuations.hpp"

#include <numeric>
#include <stdexcept>

namespace quartic {

long val_p_int(const Rat& x, long p) {
    if (x == 0) throw std::domain_error("val_p_int: valuation of zero");
    Int pz(p), tmp;
    long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), numerator(x).get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), denominator(x).get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

ValOrInf val_p(const Rat& x, long p) {
    if (x == 0) return ValOrInf::infinity();
    return ValOrInf::of(Rat(val_p_int(x, p)));
}

namespace {

// canonicalized fraction (mpq equality needs canonical form)
Rat frac(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

ValOrInf min_slope(const WeightedRatPoint& pt, long p) {
    ValOrInf best = ValOrInf::infinity();
    for (std::size_t i = 0; i < pt.x.size(); ++i) {
        if (pt.x[i] == 0) continue;
        ValOrInf s = ValOrInf::of(frac(val_p_int(pt.x[i], p), pt.w[i]));
        if (s < best) best = s;
    }
    return best;
}

ValOrInf normalized_valuation(const WeightedRatPoint& list, const Rat& y,
                              int y_weight, long p) {
    ValOrInf lam = min_slope(list, p);
    if (y == 0) return ValOrInf::infinity();
    Rat sy = frac(val_p_int(y, p), y_weight);
    if (!lam.inf && lam.v < sy) return ValOrInf::of(sy - lam.v);
    return ValOrInf::of(Rat(0));
}

namespace {

// Residue of the unit part x / p^v(x).
Fp unit_residue(const Rat& x, long p) {
    Int pz(p), num, den;
    mpz_remove(num.get_mpz_t(), numerator(x).get_mpz_t(), pz.get_mpz_t());
    mpz_remove(den.get_mpz_t(), denominator(x).get_mpz_t(), pz.get_mpz_t());
    Rat u(num);
    u /= Rat(den);
    return reduce_mod_p(u, p);
}

} // namespace

FiberPoint weighted_point_mod_p(const WeightedRatPoint& pt, long p) {
    FiberPoint out;
    out.w = std::vector<int>(pt.w.begin(), pt.w.end());
    out.lambda = min_slope(pt, p);
    std::size_t n = pt.x.size();
    Fp zero(0, static_cast<unsigned long>(p));
    if (out.lambda.inf) {
        out.integral = false;
        out.ratios.assign(n, zero);
        return out;
    }
    // integral rescale when lambda * w_i lands in Z for every slot
    out.integral = true;
    for (std::size_t i = 0; i < n; ++i) {
        Rat lw = out.lambda.v * pt.w[i];
        if (denominator(lw) != 1) out.integral = false;
    }
    if (out.integral) {
        for (std::size_t i = 0; i < n; ++i) {
            if (pt.x[i] == 0) {
                out.residues.push_back(zero);
                continue;
            }
            Rat lw = out.lambda.v * pt.w[i];
            long shift = static_cast<long>(lw.get_num().get_si());
            long e = val_p_int(pt.x[i], p) - shift;
            out.residues.push_back(e > 0 ? zero
                                         : unit_residue(pt.x[i], p));
        }
    }
    // degree-0 normal form against the first minimal slot
    long L = 1;
    for (int wi : pt.w) L = std::lcm(L, static_cast<long>(wi));
    for (std::size_t i = 0; i < n; ++i) {
        if (pt.x[i] == 0) continue;
        if (frac(val_p_int(pt.x[i], p), pt.w[i]) == out.lambda.v) {
            out.base = static_cast<int>(i);
            break;
        }
    }
    long vb = val_p_int(pt.x[out.base], p);
    Fp ub = unit_residue(pt.x[out.base], p);
    long cb = L / pt.w[out.base];
    Fp ubinv_c = ub.inv().pow(static_cast<unsigned long>(cb));
    for (std::size_t i = 0; i < n; ++i) {
        if (pt.x[i] == 0) {
            out.ratios.push_back(zero);
            continue;
        }
        long a = L / pt.w[i];
        long e = a * val_p_int(pt.x[i], p) - cb * vb;
        if (e > 0) {
            out.ratios.push_back(zero);
            continue;
        }
        if (e < 0) throw std::logic_error("weighted_point_mod_p: slope below base");
        out.ratios.push_back(unit_residue(pt.x[i], p).pow(static_cast<unsigned long>(a)) * ubinv_c);
    }
    return out;
}

FiberPoint weighted_point_from_fp(const std::vector<Fp>& values,
                                  const std::vector<int>& weights) {
    FiberPoint out;
    out.w = weights;
    std::size_t n = values.size();
    unsigned long p = 0;
    for (auto& v : values)
        if (v.p) p = v.p;
    Fp zero(0, p);
    bool allzero = true;
    for (auto& v : values)
        if (!is_zero(v)) allzero = false;
    if (allzero) {
        out.lambda = ValOrInf::infinity();
        out.integral = false;
        out.ratios.assign(n, zero);
        return out;
    }
    out.lambda = ValOrInf::of(Rat(0));
    out.integral = true;
    out.residues = values;
    long L = 1;
    for (int wi : weights) L = std::lcm(L, static_cast<long>(wi));
    for (std::size_t i = 0; i < n; ++i)
        if (!is_zero(values[i])) {
            out.base = static_cast<int>(i);
            break;
        }
    long cb = L / weights[out.base];
    Fp ubinv_c = values[out.base].inv().pow(static_cast<unsigned long>(cb));
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(values[i])) {
            out.ratios.push_back(zero);
            continue;
        }
        long a = L / weights[i];
        out.ratios.push_back(values[i].pow(static_cast<unsigned long>(a)) * ubinv_c);
    }
    return out;
}

bool same_projective_point(const FiberPoint& a, const FiberPoint& b) {
    if (a.w != b.w || a.base != b.base) return false;
    if (a.ratios.size() != b.ratios.size()) return false;
    for (std::size_t i = 0; i < a.ratios.size(); ++i)
        if (!(a.ratios[i] == b.ratios[i])) return false;
    return true;
}

bool residues_match_up_to_unit(const FiberPoint& a, const FiberPoint& b) {
    if (!a.integral || !b.integral || a.w != b.w) return false;
    std::size_t n = a.residues.size();
    if (b.residues.size() != n) return false;
    unsigned long p = 0;
    for (auto& r : a.residues)
        if (r.p) p = r.p;
    for (auto& r : b.residues)
        if (r.p) p = r.p;
    if (p == 0) return true;  // both identically zero
    for (unsigned long u = 1; u < p; ++u) {
        bool ok = true;
        Fp uf(u, p);
        for (std::size_t i = 0; i < n && ok; ++i) {
            Fp scaled = a.residues[i] * uf.pow(static_cast<unsigned long>(a.w[i]));
            if (!(scaled == b.residues[i])) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

} // namespace quartic
