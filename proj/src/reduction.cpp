#include "xsb/reduction.hpp"

#include "xsb/error.hpp"

#include <algorithm>

namespace xsb {

namespace {

const Exponent zero(0);
const Exponent half(q(1, 2));

} // namespace

AngleParams::AngleParams(Exponent a, Exponent b, Exponent c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    for (const Exponent* x : {&a_, &b_, &c_}) {
        if (*x < zero || *x > half) {
            throw DomainError("angle parameter " + x->str() + " outside [0,1/2]");
        }
    }
}

std::string AngleParams::str() const { return "(" + a_.str() + ", " + b_.str() + ", " + c_.str() + ")"; }

Space energy_step(const Space& source, const Exponent& b, const std::optional<Space>& data) {
    if (!is_x(source.family)) throw Rejected("energy estimate needs an X source, got " + source.str());
    if (b <= half) throw Rejected("energy estimate needs b > 1/2, got " + b.str());
    if (source.b < b - Exponent(1)) {
        throw Rejected("source " + source.str() + " is not in X^{s," + (b - Exponent(1)).str() + "}");
    }
    if (data) {
        if (data->family != Family::ct) throw Rejected("initial data must be given as Ct(s), got " + data->str());
        if (data->s < source.s) throw Rejected("initial data " + data->str() + " too rough for " + source.str());
    }
    return Space{source.family, source.s, b, true};
}

NullFormEstimate dualize(const DiracSourceEstimate& d) {
    NullFormEstimate n{d.phi_factor, {-d.target.s, -d.target.b}, d.psi_factor};
    if (n.factor1.b < zero || n.factor2.b < zero) {
        throw Rejected("dual factor modulation index is negative; the X-to-H step does not apply");
    }
    return n;
}

DiracSourceEstimate undualize(const NullFormEstimate& n) {
    return {{-n.factor1.s, -n.factor1.b}, n.target, n.factor2};
}

TrilinearExponents canonical_form(const TrilinearExponents& t) {
    TrilinearExponents out = t;
    if (out.pairs[2] < out.pairs[1]) std::swap(out.pairs[1], out.pairs[2]);
    return out;
}

std::vector<EmittedEstimate> angle_reduce(const NullFormEstimate& n, const AngleParams& p) {
    if (n.factor1.b < zero || n.factor2.b < zero) {
        throw Rejected("factor modulation indices must be nonnegative to pass from X to H");
    }
    if (p.b() > n.factor1.b) {
        throw Rejected("b = " + p.b().str() + " exceeds the first factor's modulation " + n.factor1.b.str());
    }
    if (p.c() > n.factor2.b) {
        throw Rejected("c = " + p.c().str() + " exceeds the second factor's modulation " + n.factor2.b.str());
    }

    std::vector<EmittedEstimate> out;
    std::vector<TrilinearExponents> seen;
    auto emit = [&](IndexPair target, IndexPair f1, IndexPair f2, AngleTerm term, int gain_to, const Exponent& gain) {
        (gain_to == 1 ? f1 : f2).s += gain;
        TrilinearExponents t{{target, f1, f2}};
        TrilinearExponents key = canonical_form(t);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
        seen.push_back(key);
        out.push_back({t, term, gain_to, gain});
    };

    // a-term: the modulation weight of the output absorbs a.
    IndexPair a_target{n.target.s, n.target.b - p.a()};
    emit(a_target, n.factor1, n.factor2, AngleTerm::a, 1, p.a());
    emit(a_target, n.factor1, n.factor2, AngleTerm::a, 2, p.a());

    // b-term: the first factor's modulation weight is spent; what is left
    // beyond b is dropped (H^{s,beta} sits inside H^{s,0} for beta >= 0).
    IndexPair f1_spent{n.factor1.s, zero};
    emit(n.target, f1_spent, n.factor2, AngleTerm::b, 1, p.b());
    emit(n.target, f1_spent, n.factor2, AngleTerm::b, 2, p.b());

    IndexPair f2_spent{n.factor2.s, zero};
    emit(n.target, n.factor1, f2_spent, AngleTerm::c, 1, p.c());
    emit(n.target, n.factor1, f2_spent, AngleTerm::c, 2, p.c());
    return out;
}

NullFormCertificate verify_nullform_estimate(const NullFormEstimate& n, const AngleParams& p) {
    NullFormCertificate cert{n, p, angle_reduce(n, p), {}, true};
    cert.verdicts.reserve(cert.emitted.size());
    for (const auto& e : cert.emitted) {
        cert.verdicts.push_back(check_product_estimate(e.exponents));
        cert.holds = cert.holds && cert.verdicts.back().holds;
    }
    return cert;
}

} // namespace xsb
