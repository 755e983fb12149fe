#pragma once

#include "xsb/error.hpp"
#include "xsb/ladder.hpp"

#include <array>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace support {

using xsb::Exponent;
using xsb::Rational;

inline Exponent E(std::string_view s) { return Exponent::parse(s); }

inline xsb::IndexPair P(std::string_view s, std::string_view b) { return {E(s), E(b)}; }

inline xsb::TrilinearExponents T(const std::array<std::string_view, 6>& v) {
    return {{P(v[0], v[1]), P(v[2], v[3]), P(v[4], v[5])}};
}

// Value at a concrete small epsilon. Independent of the lexicographic
// comparison, so it serves as the order oracle for exponents whose
// coefficients stay small.
inline Rational at_eps(const Exponent& e, const Rational& eps = Rational(1, 1000000000)) {
    return e.base() + e.slack() * eps;
}

inline std::strong_ordering cmp(const Rational& a, const Rational& b) {
    return a < b ? std::strong_ordering::less : b < a ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// Seeded exponents with denominators up to 64 and slack up to 8 in size.
class RandomExponents {
public:
    explicit RandomExponents(std::uint64_t seed) : rng_(seed) {}

    Exponent next(int span = 2) {
        static constexpr int dens[] = {1, 2, 4, 8, 16, 32, 64};
        int q = dens[pick(0, 6)];
        Rational base(pick(-span * q, span * q), q);
        int d = dens[pick(0, 2)];
        Rational slack(pick(-8, 8), d);
        if (pick(0, 3) == 0) slack = 0;
        return {base, slack};
    }

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

// One reference product-estimate system: rows of (s0,b0,s1,b1,s2,b2) in the
// trilinear normalisation, and whether each row needs a non-identity role
// assignment.
struct ReferenceSystem {
    const char* name;
    const char* step; // step of the bundled ladder that emits it
    std::vector<std::array<std::string_view, 6>> rows;
    std::vector<bool> duality;
};

// An output norm H^{-s0,-b0} becomes (s0, b0).
inline const std::vector<ReferenceSystem>& reference_systems() {
    static const std::vector<ReferenceSystem> systems = {
        {"kg-1", "S6",
         {{"3/4+e", "0", "3/8-2e", "1/4+2e", "-1/8-e", "1/4+2e"},
          {"3/4+e", "1/2-e", "1/8+e", "0", "-1/8-e", "1/4+2e"},
          {"3/4+e", "1/2-e", "-1/8-e", "0", "1/8+e", "1/4+2e"}},
         {false, true, true}},
        {"dirac-1", "S9",
         {{"7/16-e/4", "-3/8+e/4", "23/32", "1/2-e", "-1/4+e", "1/2-2e"},
          {"7/16-e/4", "-3/8+e/4", "7/32", "1/2-e", "1/4+e", "1/2-2e"},
          {"7/16-e/4", "1/8+e/4", "23/32-e", "0", "-1/4+e", "1/2-2e"},
          {"7/16-e/4", "1/8+e/4", "7/32", "0", "1/4", "1/2-2e"},
          {"7/16-e/4", "1/8+e/4", "23/32-2e", "1/2-e", "-1/4+e", "0"},
          {"7/16-e/4", "1/8+e/4", "7/32", "1/2-e", "1/4-e", "0"}},
         {false, false, true, true, true, true}},
        {"kg-2", "S11",
         {{"23/32+e", "0", "25/64-e", "1/4+e/2", "-7/64", "1/4+e/2"},
          {"23/32+e", "1/2-e", "9/64+e/2", "0", "-7/64", "1/4+e/2"},
          {"23/32+e", "1/2-e", "-7/64", "0", "9/64+e/2", "1/4+e/2"}},
         {false, true, true}},
        {"dirac-2", "S13",
         {{"25/64-e/2", "-1/4+e/2", "21/32+3e", "1/2-e", "-7/32", "1/2+e"},
          {"25/64-e/2", "-1/4+e/2", "5/32+3e", "1/2-e", "9/32", "1/2+e"},
          {"25/64-e/2", "1/4+e/2", "21/32+2e", "0", "-7/32", "1/2+e"},
          {"25/64-e/2", "1/4+e/2", "5/32+3e", "0", "9/32-e", "1/2+e"},
          {"25/64-e/2", "1/4+e/2", "21/32+3e", "1/2-e", "-7/32", "0"},
          {"25/64-e/2", "1/4+e/2", "5/32+3e", "1/2-e", "9/32", "0"}},
         {false, false, true, true, true, true}},
        {"kg-3", "S14",
         {{"21/32+3e", "0", "11/32-4e", "1/2+e", "-5/32-3e", "1/2+e"},
          {"21/32+3e", "1/2-e", "11/32-3e", "0", "-5/32-3e", "1/2+e"},
          {"21/32+3e", "1/2-e", "-5/32-3e", "0", "11/32-3e", "1/2+e"}},
         {false, true, true}},
    };
    return systems;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string bundled_ladder_source() { return read_file(XSB_BUNDLED_LADDER); }

// Steps whose claims are produced by an estimate (energy or bilinear) rather
// than by bookkeeping; their s and b give the twelve mutation targets.
inline const std::vector<std::string>& estimate_steps() {
    static const std::vector<std::string> ids = {"S3", "S6", "S9", "S11", "S13", "S14"};
    return ids;
}

// Replaces the claim of `step_id` by `claim` in the ladder source.
inline std::string with_claim(const std::string& source, const std::string& step_id, const xsb::Space& claim) {
    std::istringstream in(source);
    std::ostringstream out;
    std::string line;
    const std::string head = "step " + step_id + ":";
    while (std::getline(in, line)) {
        if (line.rfind(head, 0) == 0) {
            auto open = line.find(" in ");
            auto by = line.find(" by ");
            line = line.substr(0, open + 4) + claim.str() + line.substr(by);
        }
        out << line << "\n";
    }
    return out.str();
}

} // namespace support
