#include "support.hpp"

#include "xsb/certificate_json.hpp"

#include <doctest.h>

#include <algorithm>

using namespace xsb;
using support::E;
using support::P;

namespace {

const StepRecord& step(const Certificate& c, const std::string& id) {
    auto it = std::find_if(c.steps.begin(), c.steps.end(), [&](const StepRecord& s) { return s.id == id; });
    REQUIRE(it != c.steps.end());
    return *it;
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

const char* header = "symbol psi kind spinor\nsymbol Psi kind bilinear-spinor\n";

} // namespace

TEST_SUITE("ladder") {

TEST_CASE("bundled ladder parses") {
    Ladder l = parse_ladder(support::bundled_ladder_source());
    CHECK(l.symbols.size() == 7);
    CHECK(l.hypotheses.size() == 4);
    CHECK(l.steps.size() == 14);
    CHECK(l.goals.size() == 2);
    CHECK(l.steps[4].tactic.kind == Tactic::interpolate);
    CHECK(l.steps[2].tactic.via_sobolev_product);
    CHECK(l.steps[12].notes.size() == 1);
    REQUIRE(l.steps[5].tactic.angle.has_value());
    CHECK((*l.steps[5].tactic.angle)[1] == E("1/4+2e"));
}

TEST_CASE("bundled ladder verifies") {
    Certificate c = verify_ladder(parse_ladder(support::bundled_ladder_source()));
    CHECK(c.verdict);
    CHECK_FALSE(c.halted_at.has_value());
    CHECK(c.steps.size() == 14);
    for (const auto& s : c.steps) CHECK_MESSAGE(s.verdict, s.id << ": " << s.failure);
    CHECK(c.memberships_of("Psi").back() == Space::X(E("-5/32-3e"), E("1/2+e")));
    CHECK(c.memberships_of("Phi").back() == Space::X(E("11/32-3e"), E("1/2+e")));
    REQUIRE(c.goals.size() == 2);
    CHECK(c.goals[0].reached);
    CHECK(c.goals[1].reached);
    CHECK(c.goals[0].witness == "S13");
    CHECK(c.goals[1].witness == "S14");
}

TEST_CASE("interpolation parameters of the bundled ladder") {
    Certificate c = verify_ladder(parse_ladder(support::bundled_ladder_source()));
    CHECK(step(c, "S5").theta == E("1/4+2e"));
    CHECK(step(c, "S7").theta == E("1/4"));
    CHECK(step(c, "S8").theta == E("1/2-2e"));
    CHECK(step(c, "S10").theta == E("1/2"));
    CHECK(step(c, "S12").theta == E("1/2"));
}

TEST_CASE("factor memberships are meets over the field's parts") {
    Certificate c = verify_ladder(parse_ladder(support::bundled_ladder_source()));
    const auto& s9 = step(c, "S9");
    REQUIRE(s9.dirac_source.has_value());
    CHECK(s9.dirac_source->phi_factor == P("7/16-e/4", "1/8+e/4"));
    CHECK(s9.dirac_source->psi_factor == P("-1/4+e", "1/2-2e"));
    CHECK(s9.bindings == std::vector<std::string>{"H4", "S7", "H3", "S1", "S8"});
}

TEST_CASE("axiom hygiene") {
    Certificate c = verify_ladder(parse_ladder(support::bundled_ladder_source()));
    std::set<std::string> want = {std::string(axioms::ct_slab),        std::string(axioms::energy),
                                  std::string(axioms::product),        std::string(axioms::angle),
                                  std::string(axioms::x_to_h),         std::string(axioms::holder_sobolev),
                                  std::string(axioms::duality)};
    CHECK(c.axioms == want);
    CHECK(step(c, "S3").axioms ==
          std::set<std::string>{std::string(axioms::holder_sobolev), std::string(axioms::ct_slab), std::string(axioms::energy)});
    CHECK(step(c, "S5").axioms.empty());
}

TEST_CASE("replay is idempotent and output is byte-stable") {
    Ladder l = parse_ladder(support::bundled_ladder_source());
    Certificate c = verify_ladder(l);
    CHECK(replay_certificate(l, c));
    CHECK(to_json(c).dump(2) == to_json(verify_ladder(l)).dump(2));
    Certificate tampered = c;
    tampered.steps[6].theta = E("1/3");
    CHECK_FALSE(replay_certificate(l, tampered));
    Ladder other = parse_ladder(support::bundled_ladder_source() + "\n# trailing comment\n");
    CHECK_FALSE(replay_certificate(other, c));
}

TEST_CASE("certificate schema") {
    Json j = to_json(verify_ladder(parse_ladder(support::bundled_ladder_source())));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"format", "ladder_hash", "verdict", "hypotheses", "steps", "goals",
                                           "memberships", "axioms", "halted_at"});
    const Json& s6 = j["steps"][5];
    CHECK(s6["id"] == "S6");
    CHECK(s6["nullform"]["emitted"][0]["exponents"] ==
          Json::array({"3/4+e", "0", "3/8-2*e", "1/4+2*e", "-1/8-e", "1/4+2*e"}));
    CHECK(s6["nullform"]["emitted"][1]["verdict"]["witness"] == "swap01");
    CHECK(j["steps"][12]["notes"].size() == 1);
}

TEST_CASE("weakened continuity class fails at the fixed-time product step") {
    std::string src = replace_once(support::bundled_ladder_source(), "phi   in Ct(1/2)", "phi   in Ct(1/4)");
    Certificate c = verify_ladder(parse_ladder(src));
    CHECK_FALSE(c.verdict);
    CHECK(c.halted_at == "S3");
    const auto& s3 = step(c, "S3");
    CHECK_FALSE(s3.verdict);
    REQUIRE(s3.sobolev.has_value());
    CHECK((*s3.sobolev)[1] == E("1/4"));
}

TEST_CASE("hardening any claimed exponent by 1/8 fails at or after that step") {
    const std::string src = support::bundled_ladder_source();
    Ladder l = parse_ladder(src);
    for (std::size_t i = 0; i < l.steps.size(); ++i) {
        for (int coord = 0; coord < 2; ++coord) {
            Space hard = l.steps[i].claim;
            (coord == 0 ? hard.s : hard.b) += Exponent(q(1, 8));
            Certificate c = verify_ladder(parse_ladder(support::with_claim(src, l.steps[i].id, hard)));
            CAPTURE(l.steps[i].id);
            CAPTURE(coord);
            CHECK_FALSE(c.verdict);
            REQUIRE(c.halted_at.has_value());
            auto at = std::find_if(l.steps.begin(), l.steps.end(), [&](const Step& s) { return s.id == *c.halted_at; });
            CHECK(at - l.steps.begin() >= static_cast<std::ptrdiff_t>(i));
        }
    }
}

TEST_CASE("removing an unused membership leaves later verdicts alone") {
    std::string src = replace_once(support::bundled_ladder_source(), "# First iteration.",
                                   "step U1: psi_l in X(0, 1/2) by embed(S1)\nstep U2: Psi in X(-1, 0) by embed\n# First iteration.");
    Certificate with = verify_ladder(parse_ladder(src));
    CHECK(with.verdict);
    std::set<std::string> used;
    for (const auto& s : with.steps) used.insert(s.bindings.begin(), s.bindings.end());
    for (const std::string id : {"U1", "U2"}) {
        if (used.count(id)) continue;
        std::string line = id == "U1" ? "step U1: psi_l in X(0, 1/2) by embed(S1)\n" : "step U2: Psi in X(-1, 0) by embed\n";
        Certificate without = verify_ladder(parse_ladder(replace_once(src, line, "")));
        for (const auto& s : without.steps) CHECK(s.verdict == step(with, s.id).verdict);
        CHECK(without.verdict == with.verdict);
    }
}

TEST_CASE("small ladders") {
    Certificate empty = verify_ladder(parse_ladder(""));
    CHECK(empty.verdict);
    CHECK(empty.steps.empty());
    CHECK(empty.goals.empty());

    std::string one = std::string(header) + "hyp H1: Psi in X(0, 1/2+e) axiom energy-estimate\ngoal G1: Psi in X(0, 1/2+)\n";
    Certificate c = verify_ladder(parse_ladder(one));
    CHECK(c.verdict);
    CHECK(c.axioms == std::set<std::string>{std::string(axioms::energy)});

    std::string missed = std::string(header) + "hyp H1: Psi in X(0, 1/2) axiom energy-estimate\ngoal G1: Psi in X(0, 1/2+)\n";
    CHECK_FALSE(verify_ladder(parse_ladder(missed)).verdict);
}

TEST_CASE("parse errors carry positions") {
    auto fails_at = [](const std::string& text, std::size_t line) {
        try {
            parse_ladder(text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() >= 1);
            return;
        }
        FAIL("no parse error for: " << text);
    };
    fails_at(std::string(header) + "step S1: Psi in X(0,) by embed\n", 3);
    fails_at(std::string(header) + "step S1: Psi in X(0,0) by teleport\n", 3);
    fails_at(std::string(header) + "step S1: Psi in X(0,0) by embed(S7)\n", 3);
    fails_at(std::string(header) + "step S1: Xi in X(0,0) by embed\n", 3);
    fails_at(std::string(header) + "hyp H1: Psi in Ct(0) axiom a\nhyp H1: Psi in Ct(0) axiom a\n", 4);
    fails_at(std::string(header) + "symbol Psi kind scalar\n", 3);
    fails_at("symbol psi kind quark\n", 1);
    fails_at("lemma L1\n", 1);
    fails_at(std::string(header) + "step S1: Psi in X(0,0) by embed extra\n", 3);
    fails_at(std::string(header) + "goal G1: Psi in X(0-, 1/2+\n", 3);
}

TEST_CASE("angle search") {
    NullFormEstimate third{P("21/32+3e", "1/2-e"), P("-5/32-3e", "1/2+e"), P("-5/32-3e", "1/2+e")};
    auto found = search_angle_params(third, 4);
    REQUIRE(found.params.has_value());
    CHECK(found.certificate->holds);
    CHECK(verify_nullform_estimate(third, *found.params).holds);

    NullFormEstimate zero{P("0", "0"), P("0", "0"), P("0", "0")};
    auto none = search_angle_params(zero, 4);
    CHECK_FALSE(none.params.has_value());
    CHECK(none.scanned == none.values.size() * none.values.size() * none.values.size());

    NullFormEstimate first{P("3/4+e", "1/2-e"), P("-1/8-e", "1/4+2e"), P("-1/8-e", "1/4+2e")};
    auto coarse = search_angle_params(first, 1);
    CHECK_FALSE(coarse.params.has_value());
    CHECK(coarse.scanned == 8);
    CHECK(search_angle_params(first, 4).params.has_value());
}

TEST_CASE("ladder hash") {
    CHECK(ladder_hash("") == "fnv1a64:cbf29ce484222325");
    CHECK(ladder_hash("a") == "fnv1a64:af63dc4c8601ec8c");
}

}
