#pragma once

#include "xsb/exponent.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace xsb {

/// Norm families. `x_pm` is the sign-uniform statement "for both half-wave
/// signs", which is what the bootstrap ladder tracks.
enum class Family { x_plus, x_minus, x_pm, h, ct };

bool is_x(Family f);
std::string_view family_name(Family f);

/// A Bourgain-type space X^{s,b}, a wave-Sobolev space H^{s,b}, or the
/// continuity class C([0,T]; H^s). `slab` marks restriction to (0,T) x R^2;
/// Ct is always a slab space and its `b` is unused (kept at 0).
struct Space {
    Family family = Family::x_pm;
    Exponent s;
    Exponent b;
    bool slab = true;

    static Space X(Exponent s, Exponent b, bool slab = true) { return {Family::x_pm, std::move(s), std::move(b), slab}; }
    static Space Xp(Exponent s, Exponent b, bool slab = true) { return {Family::x_plus, std::move(s), std::move(b), slab}; }
    static Space Xm(Exponent s, Exponent b, bool slab = true) { return {Family::x_minus, std::move(s), std::move(b), slab}; }
    static Space H(Exponent s, Exponent b, bool slab = true) { return {Family::h, std::move(s), std::move(b), slab}; }
    static Space Ct(Exponent s) { return {Family::ct, std::move(s), Exponent{}, true}; }

    friend bool operator==(const Space&, const Space&) = default;

    /// Literal form: `X(s,b)`, `X+(s,b)`, `X-(s,b)`, `H(s,b)` or `Ct(s)`.
    std::string str() const;
    static Space parse(std::string_view text);
};

/// Membership in A implies membership in B.
///
/// Rules: monotone in both indices within a family; X -> H when the target
/// modulation is reachable from a nonnegative source index; X/H -> Ct when
/// b > 1/2; Ct -> X^{s,b}(S_T), H^{s,b}(S_T) for b <= 0 on the finite slab.
/// Restriction to the slab is one-way. Throws SignMismatch when a positive
/// modulation index would have to move between X+ and X-.
bool space_embeds(const Space& a, const Space& b);

/// Greatest lower bound of same-family, same-slab spaces: componentwise min.
Space space_meet(std::span<const Space> spaces);

/// Complex interpolation: s = theta*A.s + (1-theta)*B.s, same for b.
/// `theta` may itself carry slack when the endpoint differences do not.
Space interpolate(const Space& a, const Space& b, const Exponent& theta);

/// The exact theta with interpolate(a, b, theta) == target, if any.
std::optional<Exponent> solve_interpolation(const Space& a, const Space& b, const Space& target);

/// One-sided exponent class from goal literals such as `-5/32-` or `1/2+`.
struct ExponentClass {
    enum class Side { exact, below, above };

    Exponent value;
    Side side = Side::exact;

    /// Slack budget K: `a-` holds a - K*e <= x < a, `a+` holds a < x <= a + K*e.
    static constexpr int default_budget = 100;

    bool contains(const Exponent& x, int budget = default_budget) const;
    std::string str() const;
};

struct GoalSpace {
    Family family = Family::x_pm;
    ExponentClass s;
    ExponentClass b;

    std::string str() const;
    static GoalSpace parse(std::string_view text);
};

/// Some space in the goal class contains every element of `m`.
bool goal_reached(const Space& m, const GoalSpace& goal, int budget = ExponentClass::default_budget);

} // namespace xsb
