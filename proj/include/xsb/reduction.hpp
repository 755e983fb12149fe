#pragma once

#include "xsb/product_rules.hpp"
#include "xsb/space.hpp"

#include <optional>
#include <vector>

namespace xsb {

/// ||<beta P1 psi, P2 psi'>||_{X^{-s0,-b0}} <~ ||psi||_{X^{factor1}} ||psi'||_{X^{factor2}}
/// with `target` = (s0, b0) in the trilinear normalisation. The three half-wave
/// signs are universally quantified and never branched on.
struct NullFormEstimate {
    IndexPair target;
    IndexPair factor1;
    IndexPair factor2;

    /// Indices of the output norm as written, (-s0, -b0).
    IndexPair target_norm() const { return {-target.s, -target.b}; }

    friend bool operator==(const NullFormEstimate&, const NullFormEstimate&) = default;
};

/// ||P2(phi beta P1 psi)||_{X^{target}} <~ ||phi||_{X^{phi_factor}} ||psi||_{X^{psi_factor}},
/// with every pair given as the indices of the norm.
struct DiracSourceEstimate {
    IndexPair target;
    IndexPair phi_factor;
    IndexPair psi_factor;

    friend bool operator==(const DiracSourceEstimate&, const DiracSourceEstimate&) = default;
};

/// Exponents of the angle estimate; each lies in [0, 1/2].
class AngleParams {
public:
    AngleParams(Exponent a, Exponent b, Exponent c);

    const Exponent& a() const { return a_; }
    const Exponent& b() const { return b_; }
    const Exponent& c() const { return c_; }

    friend bool operator==(const AngleParams&, const AngleParams&) = default;
    std::string str() const;

private:
    Exponent a_, b_, c_;
};

/// Duhamel step: a source in X^{s,b-1}(S_T) (and optional data in H^s, given as
/// Ct(s)) yields the solution in X^{s,b}(S_T). Requires b > 1/2.
Space energy_step(const Space& source, const Exponent& b, const std::optional<Space>& data = std::nullopt);

/// Moves the Dirac-source estimate to null-form shape by trilinear duality:
/// the output norm pairs with the phi factor, the old output becomes a factor.
NullFormEstimate dualize(const DiracSourceEstimate& d);

/// Inverse of dualize.
DiracSourceEstimate undualize(const NullFormEstimate& n);

enum class AngleTerm { a, b, c };

struct EmittedEstimate {
    TrilinearExponents exponents;
    AngleTerm term = AngleTerm::a;
    int gain_to = 1; // which factor receives the min-frequency gain
    Exponent gain;
};

/// Replaces the angle by the three terms of the angle estimate and the X-norms
/// by H-norms. Each term produces two estimates (the min-frequency gain on
/// either factor); duplicates up to swapping the factors are dropped. The
/// b- and c-terms consume the factor modulation down to 0, and throw Rejected
/// when the parameter exceeds the factor's modulation index.
std::vector<EmittedEstimate> angle_reduce(const NullFormEstimate& n, const AngleParams& p);

struct NullFormCertificate {
    NullFormEstimate estimate;
    AngleParams params;
    std::vector<EmittedEstimate> emitted;
    std::vector<ProductVerdict> verdicts;
    bool holds = false;
};

NullFormCertificate verify_nullform_estimate(const NullFormEstimate& n, const AngleParams& p);

/// Key identifying an estimate up to the order of its two factors.
TrilinearExponents canonical_form(const TrilinearExponents& t);

} // namespace xsb
