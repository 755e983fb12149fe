#include "xsb/certificate_json.hpp"

namespace xsb {

namespace {

Json pair_json(const IndexPair& p) { return Json::array({p.s.str(), p.b.str()}); }

std::string_view term_name(AngleTerm t) {
    switch (t) {
    case AngleTerm::a: return "a";
    case AngleTerm::b: return "b";
    case AngleTerm::c: return "c";
    }
    return "?";
}

} // namespace

Json to_json(const Space& s) { return s.str(); }

Json to_json(const TrilinearExponents& t) {
    Json out = Json::array();
    for (const auto& p : t.pairs) {
        out.push_back(p.s.str());
        out.push_back(p.b.str());
    }
    return out;
}

Json to_json(const ConditionReport& r) {
    Json atoms = Json::array();
    for (const auto& a : r.atoms) {
        Json j;
        j["atom"] = a.label;
        j["form"] = a.form;
        j["lhs"] = a.lhs.str();
        j["rel"] = relation_symbol(a.rel);
        j["rhs"] = a.rhs.str();
        j["holds"] = a.holds;
        atoms.push_back(std::move(j));
    }
    Json out;
    out["holds"] = r.holds();
    out["failing"] = r.failing();
    out["atoms"] = std::move(atoms);
    return out;
}

Json to_json(const ProductVerdict& v) {
    constexpr RoleAssignment order[] = {RoleAssignment::identity, RoleAssignment::swap01, RoleAssignment::swap02};
    Json out;
    out["holds"] = v.holds;
    out["witness"] = v.witness ? Json(role_name(*v.witness)) : Json(nullptr);
    Json roles = Json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        Json r;
        r["roles"] = role_name(order[i]);
        r["holds"] = v.reports[i].holds();
        r["failing"] = v.reports[i].failing();
        roles.push_back(std::move(r));
    }
    out["role_checks"] = std::move(roles);
    if (v.witness) out["conditions"] = to_json(v.reports[static_cast<std::size_t>(*v.witness)]);
    return out;
}

Json to_json(const NullFormEstimate& n) {
    Json out;
    out["target"] = pair_json(n.target);
    out["target_norm"] = pair_json(n.target_norm());
    out["factor1"] = pair_json(n.factor1);
    out["factor2"] = pair_json(n.factor2);
    return out;
}

Json to_json(const NullFormCertificate& c) {
    Json out;
    out["estimate"] = to_json(c.estimate);
    out["angle"] = Json::array({c.params.a().str(), c.params.b().str(), c.params.c().str()});
    Json emitted = Json::array();
    for (std::size_t i = 0; i < c.emitted.size(); ++i) {
        Json e;
        e["term"] = term_name(c.emitted[i].term);
        e["gain_to"] = c.emitted[i].gain_to;
        e["gain"] = c.emitted[i].gain.str();
        e["exponents"] = to_json(c.emitted[i].exponents);
        e["verdict"] = to_json(c.verdicts[i]);
        emitted.push_back(std::move(e));
    }
    out["emitted"] = std::move(emitted);
    out["holds"] = c.holds;
    return out;
}

Json to_json(const AngleSearchResult& r) {
    Json out;
    out["found"] = r.params.has_value();
    out["params"] = r.params ? Json::array({r.params->a().str(), r.params->b().str(), r.params->c().str()})
                             : Json(nullptr);
    out["scanned"] = r.scanned;
    Json values = Json::array();
    for (const auto& v : r.values) values.push_back(v.str());
    out["values"] = std::move(values);
    out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    return out;
}

Json to_json(const Certificate& c) {
    Json out;
    out["format"] = "xsb-ladder-certificate/1";
    out["ladder_hash"] = c.ladder_hash;
    out["verdict"] = c.verdict;

    Json hyps = Json::array();
    for (const auto& h : c.hypotheses) {
        Json j;
        j["id"] = h.id;
        j["symbol"] = h.symbol;
        j["space"] = h.space.str();
        j["axiom"] = h.axiom;
        hyps.push_back(std::move(j));
    }
    out["hypotheses"] = std::move(hyps);

    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json j;
        j["id"] = s.id;
        j["symbol"] = s.symbol;
        j["claim"] = s.claim.str();
        j["tactic"] = tactic_name(s.tactic);
        j["verdict"] = s.verdict;
        j["bindings"] = s.bindings;
        j["candidates_tried"] = s.candidates_tried;
        if (s.derived) j["derived"] = s.derived->str();
        if (s.theta) j["theta"] = s.theta->str();
        if (s.sobolev) j["sobolev_indices"] = Json::array({(*s.sobolev)[0].str(), (*s.sobolev)[1].str(), (*s.sobolev)[2].str()});
        if (s.dirac_source) {
            Json d;
            d["target"] = pair_json(s.dirac_source->target);
            d["phi_factor"] = pair_json(s.dirac_source->phi_factor);
            d["psi_factor"] = pair_json(s.dirac_source->psi_factor);
            j["dirac_source"] = std::move(d);
        }
        if (s.nullform) j["nullform"] = to_json(*s.nullform);
        j["axioms"] = s.axioms;
        j["notes"] = s.notes;
        if (!s.verdict) j["failure"] = s.failure;
        steps.push_back(std::move(j));
    }
    out["steps"] = std::move(steps);

    Json goals = Json::array();
    for (const auto& g : c.goals) {
        Json j;
        j["id"] = g.id;
        j["symbol"] = g.symbol;
        j["goal"] = g.goal.str();
        j["reached"] = g.reached;
        j["witness"] = g.witness ? Json(*g.witness) : Json(nullptr);
        goals.push_back(std::move(j));
    }
    out["goals"] = std::move(goals);

    Json members = Json::array();
    for (const auto& m : c.memberships) {
        members.push_back(Json::array({m.id, m.symbol, m.space.str()}));
    }
    out["memberships"] = std::move(members);
    out["axioms"] = c.axioms;
    out["halted_at"] = c.halted_at ? Json(*c.halted_at) : Json(nullptr);
    return out;
}

} // namespace xsb
