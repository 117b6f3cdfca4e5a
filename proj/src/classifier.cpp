#include "quartic/classifier.hpp"

namespace quartic {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

WeightedRatPoint do_point(const DixmierOhnoVector& inv) {
    WeightedRatPoint pt;
    for (std::size_t i = 0; i < DO_COUNT; ++i) {
        pt.x.push_back(inv[i]);
        pt.w.push_back(DixmierOhnoVector::weights()[i]);
    }
    return pt;
}

// iota6..iota21 carry Shioda weights 2..7 in the fiber correspondence.
WeightedRatPoint iota_fiber_point(const IotaVector& io) {
    WeightedRatPoint pt;
    for (std::size_t i = 0; i < 6; ++i) {
        pt.x.push_back(io[i]);
        pt.w.push_back(static_cast<int>(i) + 2);
    }
    return pt;
}

WeightedRatPoint iota_norm_point(const IotaVector& io) {
    WeightedRatPoint pt;
    for (std::size_t i = 0; i < 6; ++i) {
        pt.x.push_back(io[i]);
        pt.w.push_back(IotaVector::weights()[i]);
    }
    return pt;
}

bool vz(const ValOrInf& v) { return !v.inf && v.v == 0; }

} // namespace

const char* to_string(ReductionType t) {
    switch (t) {
        case ReductionType::GoodQuartic: return "GoodQuartic";
        case ReductionType::GoodHyperelliptic: return "GoodHyperelliptic";
        case ReductionType::Bad: return "Bad";
        default: return "Unsupported";
    }
}

bool good_quartic_test(const DixmierOhnoVector& inv, long p) {
    HsopCatalog cat = hsop_catalog(p);
    WeightedRatPoint pt = do_point(inv);
    for (auto& e : cat.entries) {
        pt.x.push_back(e.eval(inv));
        pt.w.push_back(e.weight);
    }
    ValOrInf v = normalized_valuation(pt, quartic_discriminant(inv), 27, p);
    return vz(v);
}

bool toggle_locus_test(const DixmierOhnoVector& inv, long p) {
    if (p == 2 || p == 3 || p == 5)
        throw UnsupportedPrime("toggle_locus_test: residue line not p-integral");
    ValOrInf vi3 = normalized_valuation(do_point(inv), inv[0], 3, p);
    if (!vz(vi3))
        throw std::domain_error("toggle_locus_test: I3 is not minimal");
    auto pp = static_cast<std::uint64_t>(p);
    auto& res = conic_square_residues();
    auto& wts = DixmierOhnoVector::weights();
    for (std::size_t i = 0; i < DO_COUNT; ++i) {
        Rat ratio = inv[i] / rat_pow(inv[0], wts[i] / 3);
        if (i == DO_COUNT - 1)
            return !(val_p(ratio, p) < ValOrInf::of(Rat(1)));  // I27 ratio vanishes mod p
        ValOrInf v = val_p(ratio, p);
        if (v < ValOrInf::of(Rat(0))) return false;
        if (!(reduce_mod_p(ratio, pp) == reduce_mod_p(res[i], pp))) return false;
    }
    return true;
}

bool hyperelliptic_test(const DixmierOhnoVector& inv, const IotaVector& io, long p) {
    if (p == 2 || p == 3 || p == 5 || p == 7)
        throw UnsupportedPrime("hyperelliptic_test: p in {2,3,5,7} is out of range");
    WeightedRatPoint pt = do_point(inv);
    if (!vz(normalized_valuation(pt, inv[0], 3, p))) return false;
    ValOrInf v27 = normalized_valuation(pt, inv[12], 27, p);
    if (!v27.inf && !(ValOrInf::of(Rat(0)) < v27)) return false;
    return vz(normalized_valuation(iota_norm_point(io), io[6], 42, p));
}

ReductionReport classify(const TernaryForm& F, long p) {
    if (!is_prime(p)) throw std::domain_error("classify: p must be prime");
    if (is_zero(F) || !F.homogeneous(4))
        throw std::domain_error("classify: homogeneous quartic expected");

    ReductionReport rep;
    rep.p = p;

    long shift = 0;
    bool first = true;
    for (auto& [m, c] : F.terms()) {
        long v = val_p_int(c, p);
        if (first || v < shift) shift = v;
        first = false;
    }
    rep.content_shift = shift;
    TernaryForm Fs = F * rat_pow(Rat(p), -shift);

    rep.invariants = dixmier_ohno(Fs);
    rep.d27 = quartic_discriminant(rep.invariants);
    if (rep.d27 == 0) throw SingularCurve("classify: singular quartic (D27 = 0)");
    rep.iota = iota_invariants(rep.invariants);

    for (std::size_t i = 0; i < DO_COUNT; ++i)
        rep.do_valuations.push_back(val_p(rep.invariants[i], p));
    for (std::size_t i = 0; i < IOTA_COUNT; ++i)
        rep.iota_valuations.push_back(val_p(rep.iota[i], p));

    WeightedRatPoint pt = do_point(rep.invariants);
    rep.v_do_i3 = normalized_valuation(pt, rep.invariants[0], 3, p);
    rep.v_do_i27 = normalized_valuation(pt, rep.invariants[12], 27, p);
    rep.v_do_d27 = normalized_valuation(pt, rep.d27, 27, p);
    rep.v_iota_i42 = normalized_valuation(iota_norm_point(rep.iota), rep.iota[6], 42, p);

    if (p != 2 && p != 3 && p != 5 && vz(rep.v_do_i3))
        rep.toggle_locus = toggle_locus_test(rep.invariants, p);

    if (p == 2 || p == 3) {
        rep.type = ReductionType::Unsupported;
        rep.unsupported_reason = "no_hsop_catalog";
        return rep;
    }

    rep.good_quartic = good_quartic_test(rep.invariants, p);
    if (rep.good_quartic) {
        rep.type = ReductionType::GoodQuartic;
        return rep;
    }
    if (p == 5 || p == 7) {
        rep.type = ReductionType::Unsupported;
        rep.unsupported_reason = "hyperelliptic_branch_unavailable";
        return rep;
    }
    rep.hyperelliptic = hyperelliptic_test(rep.invariants, rep.iota, p);
    if (rep.hyperelliptic) {
        if (!rep.toggle_locus)
            throw std::logic_error("classify: hyperelliptic without the residue line");
        rep.type = ReductionType::GoodHyperelliptic;
        rep.special_fiber = weighted_point_mod_p(iota_fiber_point(rep.iota), p);
        return rep;
    }
    rep.type = ReductionType::Bad;
    return rep;
}

FiberPoint special_fiber_shioda(const TernaryForm& F, long p) {
    ReductionReport rep = classify(F, p);
    if (rep.type != ReductionType::GoodHyperelliptic)
        throw std::domain_error("special_fiber_shioda: not the hyperelliptic case");
    return *rep.special_fiber;
}

PicardReport picard_classify(const Rat& a, const Rat& b, const Rat& c, long p) {
    if (p == 2) throw UnsupportedPrime("picard_classify: p = 2 is out of range");
    if (!is_prime(p)) throw std::domain_error("picard_classify: p must be prime");

    PicardReport rep;
    rep.p = p;
    rep.q2 = a * a + c * 12;
    rep.q3 = a * a * a * -2 + a * c * 72 - b * b * 27;
    rep.d6 = (rat_pow(rep.q2, 3) * 4 - rep.q3 * rep.q3) / 27;
    if (rep.d6 == 0) throw SingularCurve("picard_classify: D6 = 0");

    rep.v_d6 = Rat(val_p_int(rep.d6, p));
    rep.v_a_term = val_p(a * 24, p);
    rep.v_q2 = val_p(rep.q2, p);
    Rat v27d6(val_p_int(rep.d6 * 27, p));

    rep.ineq_a = rep.v_a_term.inf || rep.v_a_term.v * 6 >= rep.v_d6;
    rep.ineq_q2 = rep.v_q2.inf || rep.v_q2.v * 3 >= v27d6;
    if (p == 3) {
        ValOrInf vq3comb = val_p(a * rat_pow(rep.q3, 3), p);
        rep.ineq_p3 = vq3comb.inf || vq3comb.v * 3 >= v27d6 * 5;
    }
    rep.type = rep.ineq_a && rep.ineq_q2 && rep.ineq_p3 ? ReductionType::GoodQuartic
                                                        : ReductionType::Bad;
    if (p >= 5) {
        ValOrInf va = val_p(a, p), vc = val_p(c, p);
        bool ok_a = va.inf || va.v * 6 >= rep.v_d6;
        bool ok_c = vc.inf || vc.v * 3 >= rep.v_d6;
        rep.corollary_good = ok_a && ok_c;
    }
    rep.stable_exponent = rep.v_d6 / 36;
    rep.extension_required = denominator(rep.stable_exponent) != 1;
    return rep;
}

} // namespace quartic
