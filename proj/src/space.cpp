#include "xsb/space.hpp"

#include "xsb/detail/scan.hpp"
#include "xsb/error.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace xsb {

bool is_x(Family f) { return f == Family::x_plus || f == Family::x_minus || f == Family::x_pm; }

std::string_view family_name(Family f) {
    switch (f) {
    case Family::x_plus: return "X+";
    case Family::x_minus: return "X-";
    case Family::x_pm: return "X";
    case Family::h: return "H";
    case Family::ct: return "Ct";
    }
    return "?";
}

std::string Space::str() const {
    std::string out(family_name(family));
    out += "(" + s.str();
    if (family != Family::ct) out += "," + b.str();
    return out + ")";
}

namespace {

const Exponent half{q(1, 2)};

// X_pm states membership for both signs, so it may be specialised to either.
bool same_sign(Family from, Family to) { return from == to || from == Family::x_pm; }

template <typename Scan>
auto parse_whole(std::string_view text, Scan scan) {
    std::size_t pos = 0;
    auto value = scan(text, pos);
    detail::skip_blanks(text, pos);
    if (pos != text.size()) throw ParseError(1, pos + 1, "unexpected trailing input", {"end of literal"});
    return value;
}

} // namespace

bool space_embeds(const Space& a, const Space& b) {
    if (b.family != Family::ct && a.slab && !b.slab) return false;

    if (a.family == Family::ct) {
        if (b.family == Family::ct) return a.s >= b.s;
        // C([0,T];H^s) lies in L^2_t H^s on the finite slab.
        return b.b <= Exponent(0) && a.s >= b.s;
    }
    if (b.family == Family::ct) return a.b > half && a.s >= b.s;

    if (a.family == Family::h) {
        if (b.family == Family::h) return a.s >= b.s && a.b >= b.b;
        // For b <= 0 the half-wave weight is dominated by the wave weight.
        return b.b <= Exponent(0) && b.b <= a.b && a.s >= b.s;
    }

    // a is an X space from here on.
    if (b.family == Family::h) return a.s >= b.s && a.b >= b.b && a.b >= Exponent(0);
    if (same_sign(a.family, b.family)) return a.s >= b.s && a.b >= b.b;
    // X+^{s,0} and X-^{s,0} coincide, so only a transfer through b = 0 is sound.
    if (b.b <= Exponent(0) && a.b >= Exponent(0)) return a.s >= b.s;
    throw SignMismatch("cannot transfer modulation index from " + a.str() + " to " + b.str());
}

Space space_meet(std::span<const Space> spaces) {
    if (spaces.empty()) throw DomainError("meet of an empty list of spaces");
    Space out = spaces.front();
    for (const Space& sp : spaces.subspan(1)) {
        if (sp.family != out.family || sp.slab != out.slab) {
            throw DomainError("meet of spaces from different families: " + out.str() + ", " + sp.str());
        }
        out.s = min(out.s, sp.s);
        out.b = min(out.b, sp.b);
    }
    return out;
}

Space interpolate(const Space& a, const Space& b, const Exponent& theta) {
    if (a.family != b.family || a.slab != b.slab) {
        throw DomainError("interpolation between different families: " + a.str() + ", " + b.str());
    }
    if (theta < Exponent(0) || theta > Exponent(1)) {
        throw DomainError("interpolation weight " + theta.str() + " outside [0,1]");
    }
    Space out = b;
    out.s = b.s + multiply(theta, a.s - b.s);
    if (a.family != Family::ct) out.b = b.b + multiply(theta, a.b - b.b);
    return out;
}

std::optional<Exponent> solve_interpolation(const Space& a, const Space& b, const Space& target) {
    if (a.family != b.family || a.slab != b.slab || target.family != a.family || target.slab != a.slab) {
        return std::nullopt;
    }

    // theta = t0 + t1*e. Per coordinate with d = A - B and r = target - B:
    //   t0*d0 = r0,  t0*d1 + t1*d0 = r1,  t1*d1 = 0 (no e^2 term).
    using Row = std::array<Rational, 3>; // c0*t0 + c1*t1 = rhs
    std::vector<Row> rows;
    auto add_coordinate = [&](const Exponent& ax, const Exponent& bx, const Exponent& tx) {
        Exponent d = ax - bx;
        Exponent r = tx - bx;
        rows.push_back({d.base(), Rational(0), r.base()});
        rows.push_back({d.slack(), d.base(), r.slack()});
        if (d.slack() != 0) rows.push_back({Rational(0), Rational(1), Rational(0)});
    };
    add_coordinate(a.s, b.s, target.s);
    if (a.family != Family::ct) add_coordinate(a.b, b.b, target.b);

    // Gauss-Jordan on the two unknowns.
    std::size_t rank = 0;
    std::array<std::optional<std::size_t>, 2> pivot;
    for (std::size_t col = 0; col < 2; ++col) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [&](const Row& r) { return r[col] != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
        const Row p = rows[rank];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / p[col];
            for (std::size_t k = 0; k < 3; ++k) rows[i][k] -= f * p[k];
        }
        pivot[col] = rank++;
    }
    for (std::size_t i = rank; i < rows.size(); ++i) {
        if (rows[i][2] != 0) return std::nullopt;
    }

    // A free t1 defaults to 0. A free t0 means A and B agree; theta = 1 is
    // then the canonical witness.
    Rational t0 = 1, t1 = 0;
    if (pivot[1]) {
        const Row& r = rows[*pivot[1]];
        t1 = (r[2] - r[0] * t0) / r[1];
    }
    if (pivot[0]) {
        const Row& r = rows[*pivot[0]];
        t0 = (r[2] - r[1] * t1) / r[0];
    }

    Exponent theta(t0, t1);
    if (theta < Exponent(0) || theta > Exponent(1)) return std::nullopt;
    try {
        if (interpolate(a, b, theta) != target) return std::nullopt;
    } catch (const DomainError&) {
        return std::nullopt;
    }
    return theta;
}

bool ExponentClass::contains(const Exponent& x, int budget) const {
    Exponent k = Exponent::eps(budget);
    switch (side) {
    case Side::exact: return x == value;
    case Side::below: return x < value && x >= value - k;
    case Side::above: return x > value && x <= value + k;
    }
    return false;
}

std::string ExponentClass::str() const {
    switch (side) {
    case Side::exact: return value.str();
    case Side::below: return value.str() + "-";
    case Side::above: return value.str() + "+";
    }
    return value.str();
}

std::string GoalSpace::str() const {
    std::string out(family_name(family));
    out += "(" + s.str();
    if (family != Family::ct) out += "," + b.str();
    return out + ")";
}

GoalSpace GoalSpace::parse(std::string_view text) {
    return parse_whole(text, [](std::string_view t, std::size_t& p) { return detail::scan_goal_space(t, p); });
}

Space Space::parse(std::string_view text) {
    return parse_whole(text, [](std::string_view t, std::size_t& p) { return detail::scan_space(t, p); });
}

namespace {

// Smallest member of the class that still lies below x, when one exists.
Exponent weakest_below(const ExponentClass& c, const Exponent& x, int budget) {
    Exponent k = Exponent::eps(budget);
    switch (c.side) {
    case ExponentClass::Side::exact: return c.value;
    case ExponentClass::Side::below: return c.value - k;
    case ExponentClass::Side::above:
        if (x > c.value) return min(x, c.value + k);
        return c.value + Exponent::eps(1);
    }
    return c.value;
}

} // namespace

bool goal_reached(const Space& m, const GoalSpace& goal, int budget) {
    Space rep{goal.family, weakest_below(goal.s, m.s, budget), Exponent{}, true};
    if (goal.family != Family::ct) rep.b = weakest_below(goal.b, m.b, budget);
    if (!goal.s.contains(rep.s, budget)) return false;
    if (goal.family != Family::ct && !goal.b.contains(rep.b, budget)) return false;
    try {
        return space_embeds(m, rep);
    } catch (const SignMismatch&) {
        return false;
    }
}

namespace detail {

namespace {

Family scan_family(std::string_view text, std::size_t& pos, std::size_t line, std::size_t column_base) {
    skip_blanks(text, pos);
    auto rest = text.substr(pos);
    if (rest.starts_with("Ct")) { pos += 2; return Family::ct; }
    if (rest.starts_with("X+")) { pos += 2; return Family::x_plus; }
    if (rest.starts_with("X-")) { pos += 2; return Family::x_minus; }
    if (rest.starts_with("X")) { pos += 1; return Family::x_pm; }
    if (rest.starts_with("H")) { pos += 1; return Family::h; }
    throw ParseError(line, column_base + pos, "expected a space literal", {"X(", "X+(", "X-(", "H(", "Ct("});
}

void expect_char(std::string_view text, std::size_t& pos, char c, std::size_t line, std::size_t column_base) {
    skip_blanks(text, pos);
    if (pos >= text.size() || text[pos] != c) {
        throw ParseError(line, column_base + pos, "unexpected input in space literal", {std::string("'") + c + "'"});
    }
    ++pos;
}

ExponentClass scan_class(std::string_view text, std::size_t& pos, std::size_t line, std::size_t column_base) {
    ExponentClass c;
    c.value = scan_exponent(text, pos, line, column_base);
    skip_blanks(text, pos);
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        c.side = text[pos] == '-' ? ExponentClass::Side::below : ExponentClass::Side::above;
        ++pos;
    }
    return c;
}

} // namespace

Space scan_space(std::string_view text, std::size_t& pos, std::size_t line, std::size_t column_base) {
    Space sp;
    sp.family = scan_family(text, pos, line, column_base);
    expect_char(text, pos, '(', line, column_base);
    sp.s = scan_exponent(text, pos, line, column_base);
    if (sp.family != Family::ct) {
        expect_char(text, pos, ',', line, column_base);
        sp.b = scan_exponent(text, pos, line, column_base);
    }
    expect_char(text, pos, ')', line, column_base);
    return sp;
}

GoalSpace scan_goal_space(std::string_view text, std::size_t& pos, std::size_t line, std::size_t column_base) {
    GoalSpace g;
    g.family = scan_family(text, pos, line, column_base);
    expect_char(text, pos, '(', line, column_base);
    g.s = scan_class(text, pos, line, column_base);
    if (g.family != Family::ct) {
        expect_char(text, pos, ',', line, column_base);
        g.b = scan_class(text, pos, line, column_base);
    }
    expect_char(text, pos, ')', line, column_base);
    return g;
}

} // namespace detail

} // namespace xsb
