#include "xsb/ladder.hpp"

#include "xsb/certificate_json.hpp"
#include "xsb/error.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace xsb {

std::vector<Space> Certificate::memberships_of(std::string_view symbol) const {
    std::vector<Space> out;
    for (const auto& m : memberships) {
        if (m.symbol == symbol) out.push_back(m.space);
    }
    return out;
}

std::string ladder_hash(std::string_view source) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : source) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

namespace {

const std::set<std::string_view> known_axioms = {
    axioms::ct_slab, axioms::energy, axioms::product, axioms::angle,
    axioms::x_to_h, axioms::holder_sobolev, axioms::duality,
};

std::optional<SymbolKind> field_kind(SymbolKind k) {
    switch (k) {
    case SymbolKind::homogeneous_spinor:
    case SymbolKind::linear_spinor:
    case SymbolKind::bilinear_spinor: return SymbolKind::spinor;
    case SymbolKind::homogeneous_scalar:
    case SymbolKind::bilinear_scalar: return SymbolKind::scalar;
    default: return std::nullopt;
    }
}

struct FactorCandidate {
    IndexPair pair;
    std::vector<std::string> ids;
    bool used_ct = false;
};

class Verifier {
public:
    explicit Verifier(const Ladder& l) : ladder_(l) {}

    Certificate run() {
        cert_.ladder_hash = ladder_hash(ladder_.source);
        cert_.hypotheses = ladder_.hypotheses;
        for (const auto& h : ladder_.hypotheses) {
            cert_.memberships.push_back({h.id, h.symbol, h.space});
            if (known_axioms.count(h.axiom)) cert_.axioms.insert(h.axiom);
        }

        bool steps_ok = true;
        for (const auto& step : ladder_.steps) {
            StepRecord rec = verify_step(step);
            bool ok = rec.verdict;
            cert_.axioms.insert(rec.axioms.begin(), rec.axioms.end());
            if (ok) cert_.memberships.push_back({step.id, step.symbol, step.claim});
            cert_.steps.push_back(std::move(rec));
            if (!ok) {
                steps_ok = false;
                cert_.halted_at = step.id;
                break;
            }
        }

        bool goals_ok = true;
        for (const auto& g : ladder_.goals) {
            GoalRecord rec{g.id, g.symbol, g.space, false, std::nullopt};
            for (const auto& m : cert_.memberships) {
                if (m.symbol == g.symbol && goal_reached(m.space, g.space)) {
                    rec.reached = true;
                    rec.witness = m.id;
                    break;
                }
            }
            goals_ok = goals_ok && rec.reached;
            cert_.goals.push_back(std::move(rec));
        }
        cert_.verdict = steps_ok && goals_ok;
        return std::move(cert_);
    }

private:
    // Memberships named by a reference, latest first for symbol references.
    std::vector<const MembershipRecord*> resolve(const Ref& r) const {
        std::vector<const MembershipRecord*> out;
        for (auto it = cert_.memberships.rbegin(); it != cert_.memberships.rend(); ++it) {
            if (it->id == r) return {&*it};
            if (it->symbol == r) out.push_back(&*it);
        }
        return out;
    }

    std::vector<const MembershipRecord*> memberships_of(const std::string& symbol) const {
        std::vector<const MembershipRecord*> out;
        for (auto it = cert_.memberships.rbegin(); it != cert_.memberships.rend(); ++it) {
            if (it->symbol == symbol) out.push_back(&*it);
        }
        return out;
    }

    const Symbol* symbol_of_kind(SymbolKind k) const {
        for (const auto& s : ladder_.symbols) {
            if (s.kind == k) return &s;
        }
        return nullptr;
    }

    std::vector<const Symbol*> parts_of(SymbolKind field) const {
        std::vector<const Symbol*> out;
        for (const auto& s : ladder_.symbols) {
            if (field_kind(s.kind) == field) out.push_back(&s);
        }
        return out;
    }

    // View of a membership as an X space of the claimed family; Ct passes
    // through the slab embedding at modulation 0.
    static std::optional<Space> as_x(const Space& m, Family fam, bool& used_ct) {
        if (m.family == Family::ct) {
            used_ct = true;
            return Space{fam, m.s, Exponent(0), true};
        }
        if (!is_x(m.family)) return std::nullopt;
        return m;
    }

    static bool embeds_quietly(const Space& a, const Space& b) {
        try {
            return space_embeds(a, b);
        } catch (const SignMismatch&) {
            return false;
        }
    }

    StepRecord verify_step(const Step& step) {
        StepRecord rec;
        rec.id = step.id;
        rec.symbol = step.symbol;
        rec.claim = step.claim;
        rec.tactic = step.tactic.kind;
        rec.notes = step.notes;
        try {
            switch (step.tactic.kind) {
            case Tactic::embed: embed(step, rec); break;
            case Tactic::energy: energy(step, rec); break;
            case Tactic::meet: meet(step, rec); break;
            case Tactic::interpolate: interpolate_step(step, rec); break;
            case Tactic::bilinear_kg:
            case Tactic::bilinear_dirac: bilinear(step, rec); break;
            case Tactic::axiom:
                rec.verdict = true;
                rec.axioms.insert(step.tactic.axiom);
                break;
            }
        } catch (const Rejected& e) {
            rec.verdict = false;
            rec.failure = e.what();
        } catch (const DomainError& e) {
            rec.verdict = false;
            rec.failure = e.what();
        }
        if (!rec.verdict && rec.failure.empty()) rec.failure = "no admissible membership verifies the claim";
        return rec;
    }

    void embed(const Step& step, StepRecord& rec) {
        std::vector<const MembershipRecord*> cands;
        if (step.tactic.refs.empty()) {
            cands = memberships_of(step.symbol);
        } else {
            for (const auto& r : step.tactic.refs) {
                auto v = resolve(r);
                cands.insert(cands.end(), v.begin(), v.end());
            }
        }
        for (const auto* m : cands) {
            if (m->symbol != step.symbol) continue;
            ++rec.candidates_tried;
            if (!embeds_quietly(m->space, step.claim)) continue;
            rec.verdict = true;
            rec.bindings = {m->id};
            if (m->space.family == Family::ct && step.claim.family != Family::ct) rec.axioms.insert(std::string(axioms::ct_slab));
            if (is_x(m->space.family) && step.claim.family == Family::h) rec.axioms.insert(std::string(axioms::x_to_h));
            return;
        }
        rec.failure = "no membership of " + step.symbol + " embeds in " + step.claim.str();
    }

    void energy(const Step& step, StepRecord& rec) {
        const Space& claim = step.claim;
        if (!is_x(claim.family)) throw Rejected("energy estimate concludes an X space, got " + claim.str());
        Space source{claim.family, claim.s, claim.b - Exponent(1), true};
        rec.derived = source;
        energy_step(source, claim.b); // throws unless b > 1/2

        if (step.tactic.via_sobolev_product) {
            // L^inf_t H^{-s0} on the slab sits in L^2_t H^{-s0} = X^{-s0,0}.
            if (source.b > Exponent(0)) throw Rejected("a fixed-time product only yields modulation 0, need " + source.b.str());
            Exponent s0 = -claim.s;
            auto ct_index = [&](const MembershipRecord* m) -> std::optional<Exponent> {
                if (m->space.family == Family::ct) return m->space.s;
                if (embeds_quietly(m->space, Space::Ct(m->space.s))) return m->space.s;
                return std::nullopt;
            };
            for (const auto* m1 : resolve(step.tactic.refs[0])) {
                for (const auto* m2 : resolve(step.tactic.refs[1])) {
                    auto s1 = ct_index(m1);
                    auto s2 = ct_index(m2);
                    if (!s1 || !s2) continue;
                    ++rec.candidates_tried;
                    bool ok = check_sobolev_time_product(s0, *s1, *s2);
                    if (!rec.sobolev || ok) rec.sobolev = std::array<Exponent, 3>{s0, *s1, *s2};
                    if (ok) {
                        rec.verdict = true;
                        rec.bindings = {m1->id, m2->id};
                        rec.axioms = {std::string(axioms::holder_sobolev), std::string(axioms::ct_slab),
                                      std::string(axioms::energy)};
                        return;
                    }
                }
            }
            rec.failure = rec.sobolev
                ? "Hoelder-Sobolev product condition fails for (s0,s1,s2) = (" + (*rec.sobolev)[0].str() + ", " +
                      (*rec.sobolev)[1].str() + ", " + (*rec.sobolev)[2].str() + ")"
                : "no continuity-class memberships for the product factors";
            return;
        }

        for (const auto* m : resolve(step.tactic.refs[0])) {
            ++rec.candidates_tried;
            if (!embeds_quietly(m->space, source)) continue;
            rec.verdict = true;
            rec.bindings = {m->id};
            rec.axioms.insert(std::string(axioms::energy));
            if (m->space.family == Family::ct) rec.axioms.insert(std::string(axioms::ct_slab));
            return;
        }
        rec.failure = "no membership of the source lies in " + source.str();
    }

    void meet(const Step& step, StepRecord& rec) {
        const Symbol* sym = ladder_.find_symbol(step.symbol);
        std::set<std::string> expected;
        if (auto fk = field_kind(sym->kind)) {
            const Symbol* field = symbol_of_kind(*fk);
            if (!field) throw Rejected("no symbol of kind " + std::string(kind_name(*fk)) + " is declared");
            expected.insert(field->name);
            for (const auto* p : parts_of(*fk)) expected.insert(p->name);
            expected.erase(sym->name);
        } else {
            for (const auto* p : parts_of(sym->kind)) expected.insert(p->name);
        }
        std::set<std::string> cited;
        for (const auto& r : step.tactic.refs) {
            auto v = resolve(r);
            cited.insert(v.empty() ? r : v.front()->symbol);
        }
        if (cited != expected) {
            std::string want;
            for (const auto& e : expected) want += (want.empty() ? "" : ", ") + e;
            throw Rejected("meet must cite exactly {" + want + "} to express " + step.symbol);
        }

        std::vector<Space> chosen;
        bool used_ct = false;
        for (const auto& r : step.tactic.refs) {
            bool found = false;
            for (const auto* m : resolve(r)) {
                ++rec.candidates_tried;
                bool ct = false;
                auto x = as_x(m->space, step.claim.family, ct);
                if (!x || x->family != step.claim.family || x->slab != step.claim.slab) continue;
                if (!embeds_quietly(*x, step.claim)) continue;
                chosen.push_back(*x);
                rec.bindings.push_back(m->id);
                used_ct = used_ct || ct;
                found = true;
                break;
            }
            if (!found) {
                rec.failure = "no membership of '" + r + "' lies in " + step.claim.str();
                return;
            }
        }
        rec.derived = space_meet(chosen);
        rec.verdict = space_embeds(*rec.derived, step.claim);
        if (used_ct) rec.axioms.insert(std::string(axioms::ct_slab));
    }

    void interpolate_step(const Step& step, StepRecord& rec) {
        for (const auto* a : resolve(step.tactic.refs[0])) {
            for (const auto* b : resolve(step.tactic.refs[1])) {
                if (a->symbol != step.symbol || b->symbol != step.symbol) continue;
                if (a->space.family != step.claim.family || b->space.family != step.claim.family) continue;
                ++rec.candidates_tried;
                std::optional<Exponent> theta;
                if (step.tactic.theta) {
                    try {
                        if (embeds_quietly(interpolate(a->space, b->space, *step.tactic.theta), step.claim)) {
                            theta = step.tactic.theta;
                        }
                    } catch (const DomainError&) {
                    }
                } else {
                    theta = solve_interpolation(a->space, b->space, step.claim);
                }
                if (!theta) continue;
                rec.verdict = true;
                rec.theta = theta;
                rec.derived = interpolate(a->space, b->space, *theta);
                rec.bindings = {a->id, b->id};
                return;
            }
        }
        rec.failure = "no interpolation between the cited memberships yields " + step.claim.str();
    }

    std::vector<FactorCandidate> factor_candidates(const Symbol& field, const std::vector<Ref>& using_refs,
                                                   Family fam) const {
        std::map<std::string, std::vector<const MembershipRecord*>> pinned;
        for (const auto& r : using_refs) {
            for (const auto* m : resolve(r)) pinned[m->symbol].push_back(m);
        }
        auto list_for = [&](const std::string& sym) {
            auto it = pinned.find(sym);
            return it != pinned.end() ? it->second : memberships_of(sym);
        };
        auto parts = parts_of(field.kind);
        bool pins_field = pinned.count(field.name) > 0;
        bool pins_part = std::any_of(parts.begin(), parts.end(), [&](const Symbol* p) { return pinned.count(p->name) > 0; });
        bool use_parts = !parts.empty() && (pinned.empty() || pins_part || !pins_field);
        bool use_direct = pinned.empty() || pins_field;

        std::vector<FactorCandidate> out;
        auto push = [&](FactorCandidate c) {
            for (const auto& o : out) {
                if (o.pair == c.pair) return;
            }
            out.push_back(std::move(c));
        };

        if (use_parts) {
            std::vector<std::vector<FactorCandidate>> options;
            for (const auto* p : parts) {
                std::vector<FactorCandidate> opts;
                for (const auto* m : list_for(p->name)) {
                    bool ct = false;
                    auto x = as_x(m->space, fam, ct);
                    if (!x) continue;
                    opts.push_back({{x->s, x->b}, {m->id}, ct});
                }
                options.push_back(std::move(opts));
            }
            bool empty = std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); });
            if (!empty) {
                std::vector<std::size_t> idx(options.size(), 0);
                for (;;) {
                    FactorCandidate c = options[0][idx[0]];
                    for (std::size_t i = 1; i < options.size(); ++i) {
                        const auto& o = options[i][idx[i]];
                        c.pair.s = min(c.pair.s, o.pair.s);
                        c.pair.b = min(c.pair.b, o.pair.b);
                        c.ids.insert(c.ids.end(), o.ids.begin(), o.ids.end());
                        c.used_ct = c.used_ct || o.used_ct;
                    }
                    push(std::move(c));
                    std::size_t k = options.size();
                    while (k > 0 && ++idx[k - 1] == options[k - 1].size()) idx[--k] = 0;
                    if (k == 0) break;
                }
            }
        }
        if (use_direct) {
            for (const auto* m : list_for(field.name)) {
                bool ct = false;
                auto x = as_x(m->space, fam, ct);
                if (!x) continue;
                push({{x->s, x->b}, {m->id}, ct});
            }
        }
        return out;
    }

    void bilinear(const Step& step, StepRecord& rec) {
        const bool kg = step.tactic.kind == Tactic::bilinear_kg;
        const Symbol* sym = ladder_.find_symbol(step.symbol);
        const SymbolKind want = kg ? SymbolKind::bilinear_scalar : SymbolKind::bilinear_spinor;
        if (sym->kind != want) {
            throw Rejected(std::string(tactic_name(step.tactic.kind)) + " concludes a " + std::string(kind_name(want)) +
                           " symbol, not " + std::string(kind_name(sym->kind)));
        }
        const Space& claim = step.claim;
        if (!is_x(claim.family)) throw Rejected("bilinear tactics conclude an X space");
        const auto& ang = *step.tactic.angle;
        AngleParams params(ang[0], ang[1], ang[2]);
        Space source{claim.family, claim.s, claim.b - Exponent(1), true};
        rec.derived = source;
        energy_step(source, claim.b);

        const Symbol* psi = symbol_of_kind(SymbolKind::spinor);
        if (!psi) throw Rejected("no spinor field declared");
        auto psi_cands = factor_candidates(*psi, step.tactic.using_refs, claim.family);

        std::vector<std::pair<std::optional<FactorCandidate>, FactorCandidate>> combos;
        if (kg) {
            for (const auto& c : psi_cands) combos.emplace_back(std::nullopt, c);
        } else {
            const Symbol* phi = symbol_of_kind(SymbolKind::scalar);
            if (!phi) throw Rejected("no scalar field declared");
            for (const auto& f : factor_candidates(*phi, step.tactic.using_refs, claim.family)) {
                for (const auto& c : psi_cands) combos.emplace_back(f, c);
            }
        }

        std::string first_reason;
        for (const auto& [phi_c, psi_c] : combos) {
            ++rec.candidates_tried;
            NullFormEstimate n;
            std::optional<DiracSourceEstimate> d;
            try {
                if (kg) {
                    // (2<D>_m)^{-1} gains one derivative on the Klein-Gordon source.
                    n = {{Exponent(1) - claim.s, Exponent(1) - claim.b}, psi_c.pair, psi_c.pair};
                } else {
                    d = DiracSourceEstimate{{claim.s, claim.b - Exponent(1)}, phi_c->pair, psi_c.pair};
                    n = dualize(*d);
                }
                NullFormCertificate nc = verify_nullform_estimate(n, params);
                bool ok = nc.holds;
                if (ok || !rec.nullform) {
                    rec.nullform = std::move(nc);
                    rec.dirac_source = d;
                    rec.bindings.clear();
                    if (phi_c) rec.bindings.insert(rec.bindings.end(), phi_c->ids.begin(), phi_c->ids.end());
                    rec.bindings.insert(rec.bindings.end(), psi_c.ids.begin(), psi_c.ids.end());
                }
                if (ok) {
                    rec.verdict = true;
                    rec.axioms = {std::string(axioms::energy), std::string(axioms::angle),
                                  std::string(axioms::x_to_h), std::string(axioms::product)};
                    bool dual = !kg;
                    for (const auto& v : rec.nullform->verdicts) {
                        dual = dual || v.witness != RoleAssignment::identity;
                    }
                    if (dual) rec.axioms.insert(std::string(axioms::duality));
                    if (psi_c.used_ct || (phi_c && phi_c->used_ct)) rec.axioms.insert(std::string(axioms::ct_slab));
                    return;
                }
            } catch (const Rejected& e) {
                if (first_reason.empty()) first_reason = e.what();
            }
        }
        if (rec.nullform) {
            rec.failure = "reduced product estimates fail";
        } else {
            rec.failure = first_reason.empty() ? "no factor memberships available" : first_reason;
        }
    }

    const Ladder& ladder_;
    Certificate cert_;
};

} // namespace

Certificate verify_ladder(const Ladder& ladder) { return Verifier(ladder).run(); }

bool replay_certificate(const Ladder& ladder, const Certificate& cert) {
    if (ladder_hash(ladder.source) != cert.ladder_hash) return false;
    return to_json(verify_ladder(ladder)).dump() == to_json(cert).dump();
}

} // namespace xsb
