#include "xsb/product_rules.hpp"

namespace xsb {

std::string TrilinearExponents::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += "; ";
        out += pairs[i].s.str() + ", " + pairs[i].b.str();
    }
    return out + ")";
}

std::string_view relation_symbol(Relation r) {
    switch (r) {
    case Relation::less: return "<";
    case Relation::less_equal: return "<=";
    case Relation::greater: return ">";
    case Relation::greater_equal: return ">=";
    }
    return "?";
}

namespace {

bool evaluate(const Exponent& lhs, Relation rel, const Exponent& rhs) {
    switch (rel) {
    case Relation::less: return lhs < rhs;
    case Relation::less_equal: return lhs <= rhs;
    case Relation::greater: return lhs > rhs;
    case Relation::greater_equal: return lhs >= rhs;
    }
    return false;
}

} // namespace

bool ConditionReport::holds() const {
    for (const auto& a : atoms) {
        if (!a.holds) return false;
    }
    return true;
}

std::vector<std::string> ConditionReport::failing() const {
    std::vector<std::string> out;
    for (const auto& a : atoms) {
        if (!a.holds) out.push_back(a.label);
    }
    return out;
}

ConditionReport check_conditions(const TrilinearExponents& t) {
    const Exponent &s0 = t.s(0), &s1 = t.s(1), &s2 = t.s(2);
    const Exponent &b0 = t.b(0), &b1 = t.b(1), &b2 = t.b(2);
    const Exponent s = s0 + s1 + s2;
    const Exponent bsum = b0 + b1 + b2;
    const Exponent zero(0), one(1);

    ConditionReport r;
    auto atom = [&](const char* label, const char* form, Exponent lhs, Relation rel, Exponent rhs) {
        bool ok = evaluate(lhs, rel, rhs);
        r.atoms.push_back({label, form, std::move(lhs), rel, std::move(rhs), ok});
    };
    atom("P1a", "b0 <= 0", b0, Relation::less_equal, zero);
    atom("P1b", "b1 > 0", b1, Relation::greater, zero);
    atom("P1c", "b2 > 0", b2, Relation::greater, zero);
    atom("P2", "b0+b1+b2 > 1/2", bsum, Relation::greater, q(1, 2));
    atom("P3a", "b0+b1 > 0", b0 + b1, Relation::greater, zero);
    atom("P3b", "b0+b2 > 0", b0 + b2, Relation::greater, zero);
    atom("P4", "s0+s1+s2 > 3/2-(b0+b1+b2)", s, Relation::greater, Exponent(q(3, 2)) - bsum);
    atom("P5", "s0+s1+s2 > 1-(b0+b1)", s, Relation::greater, one - (b0 + b1));
    atom("P6", "s0+s1+s2 > 1-(b0+b2)", s, Relation::greater, one - (b0 + b2));
    atom("P7", "s0+s1+s2 > 1/2-b0", s, Relation::greater, Exponent(q(1, 2)) - b0);
    atom("P8", "s0+s1+s2 > 3/4", s, Relation::greater, q(3, 4));
    atom("P9", "s0+b0+2(s1+s2) > 1", s0 + b0 + (s1 + s2) * Rational(2), Relation::greater, one);
    atom("P10a", "s1+s2 >= -b0", s1 + s2, Relation::greater_equal, -b0);
    atom("P10b", "s0+s2 >= 0", s0 + s2, Relation::greater_equal, zero);
    atom("P10c", "s0+s1 >= 0", s0 + s1, Relation::greater_equal, zero);
    return r;
}

std::string_view role_name(RoleAssignment r) {
    switch (r) {
    case RoleAssignment::identity: return "identity";
    case RoleAssignment::swap01: return "swap01";
    case RoleAssignment::swap02: return "swap02";
    }
    return "?";
}

TrilinearExponents assign_roles(const TrilinearExponents& t, RoleAssignment r) {
    TrilinearExponents out = t;
    switch (r) {
    case RoleAssignment::identity: break;
    case RoleAssignment::swap01: std::swap(out.pairs[0], out.pairs[1]); break;
    case RoleAssignment::swap02: std::swap(out.pairs[0], out.pairs[2]); break;
    }
    return out;
}

ProductVerdict check_product_estimate(const TrilinearExponents& t) {
    ProductVerdict v;
    constexpr RoleAssignment order[] = {RoleAssignment::identity, RoleAssignment::swap01, RoleAssignment::swap02};
    for (std::size_t i = 0; i < 3; ++i) {
        v.reports[i] = check_conditions(assign_roles(t, order[i]));
        if (!v.holds && v.reports[i].holds()) {
            v.holds = true;
            v.witness = order[i];
        }
    }
    return v;
}

bool check_sobolev_time_product(const Exponent& s0, const Exponent& s1, const Exponent& s2) {
    const Exponent zero(0), one(1);
    for (const Exponent* x : {&s0, &s1, &s2}) {
        if (*x < zero || *x >= one) return false;
    }
    if (s0 + s1 < zero || s0 + s2 < zero || s1 + s2 < zero) return false;
    return s0 + s1 + s2 >= one;
}

} // namespace xsb
