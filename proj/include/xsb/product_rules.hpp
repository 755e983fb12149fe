#pragma once

#include "xsb/exponent.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace xsb {

/// An (s, b) index pair.
struct IndexPair {
    Exponent s;
    Exponent b;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// The estimate ||uv||_{H^{-s0,-b0}} <~ ||u||_{H^{s1,b1}} ||v||_{H^{s2,b2}},
/// equivalently the trilinear bound on int(u v w) with w in H^{s0,b0}.
struct TrilinearExponents {
    std::array<IndexPair, 3> pairs;

    const Exponent& s(std::size_t i) const { return pairs[i].s; }
    const Exponent& b(std::size_t i) const { return pairs[i].b; }
    Exponent s_sum() const { return pairs[0].s + pairs[1].s + pairs[2].s; }

    friend bool operator==(const TrilinearExponents&, const TrilinearExponents&) = default;
    friend auto operator<=>(const TrilinearExponents&, const TrilinearExponents&) = default;

    std::string str() const;
};

enum class Relation { less, less_equal, greater, greater_equal };

std::string_view relation_symbol(Relation r);

/// One atomic inequality `lhs rel rhs` of the product-estimate hypotheses.
struct ConditionAtom {
    std::string label; // "P1a", "P2", ...
    std::string form;  // symbolic statement, e.g. "b0+b1+b2 > 1/2"
    Exponent lhs;
    Relation rel = Relation::less;
    Exponent rhs;
    bool holds = false;
};

struct ConditionReport {
    std::vector<ConditionAtom> atoms;

    bool holds() const;
    std::vector<std::string> failing() const;
};

/// Evaluates the fifteen atoms of conditions P1..P10 exactly.
ConditionReport check_conditions(const TrilinearExponents& t);

/// Which input pair is placed in role 0 (the output norm).
enum class RoleAssignment { identity, swap01, swap02 };

std::string_view role_name(RoleAssignment r);
TrilinearExponents assign_roles(const TrilinearExponents& t, RoleAssignment r);

struct ProductVerdict {
    bool holds = false;
    std::optional<RoleAssignment> witness;
    std::array<ConditionReport, 3> reports; // indexed by RoleAssignment
};

/// Tries the role assignments identity, 0<->1, 0<->2 in that order; the
/// estimate holds when one of them satisfies every condition. The conditions
/// are symmetric in roles 1 and 2, so this covers all six permutations.
ProductVerdict check_product_estimate(const TrilinearExponents& t);

/// Sufficient condition for the fixed-time product H^{s1} * H^{s2} in
/// H^{-s0} on R^2 via Hoelder and Sobolev embedding: s0+s1+s2 >= 1, every
/// index in [0,1), pairwise sums nonnegative. `false` means "not certified".
bool check_sobolev_time_product(const Exponent& s0, const Exponent& s1, const Exponent& s2);

} // namespace xsb
