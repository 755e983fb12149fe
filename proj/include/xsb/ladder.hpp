#pragma once

#include "xsb/reduction.hpp"
#include "xsb/space.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace xsb {

/// Role of a named function in the splitting of the spinor and scalar fields.
enum class SymbolKind {
    spinor,             // the full spinor field
    scalar,             // the full scalar field
    homogeneous_spinor, // free evolution of the spinor data
    linear_spinor,      // Duhamel part of the mass term
    bilinear_spinor,    // Duhamel part of the Dirac source
    homogeneous_scalar,
    bilinear_scalar,    // Duhamel part of the Klein-Gordon source
};

std::string_view kind_name(SymbolKind k);
bool is_spinor_kind(SymbolKind k);

struct Symbol {
    std::string name;
    SymbolKind kind;
    std::size_t line = 0;
};

struct Hypothesis {
    std::string id;
    std::string symbol;
    Space space;
    std::string axiom;
    std::size_t line = 0;
};

enum class Tactic { embed, energy, meet, interpolate, bilinear_kg, bilinear_dirac, axiom };

std::string_view tactic_name(Tactic t);

/// A reference to a previous hypothesis/step id, or to a symbol (meaning any
/// of its memberships).
using Ref = std::string;

struct TacticCall {
    Tactic kind = Tactic::axiom;
    std::vector<Ref> refs;
    bool via_sobolev_product = false;      // energy from sobolev_time_product(a, b)
    std::vector<Ref> using_refs;           // bilinear factor restriction
    std::optional<Exponent> theta;         // interpolate
    std::optional<std::array<Exponent, 3>> angle; // bilinear tactics
    std::string axiom;                     // axiom tactic
    bool slab = false;                     // embed slab
};

struct Step {
    std::string id;
    std::string symbol;
    Space claim;
    TacticCall tactic;
    std::vector<std::string> notes;
    std::size_t line = 0;
};

struct Goal {
    std::string id;
    std::string symbol;
    GoalSpace space;
    std::size_t line = 0;
};

struct Ladder {
    std::vector<Symbol> symbols;
    std::vector<Hypothesis> hypotheses;
    std::vector<Step> steps;
    std::vector<Goal> goals;
    std::string source;

    const Symbol* find_symbol(std::string_view name) const;
};

/// Parses the line-oriented ladder language. Throws ParseError with line and
/// column on syntax errors, duplicate identifiers, unknown tactics, unknown
/// references and malformed literals.
Ladder parse_ladder(std::string_view text);

Ladder load_ladder(const std::string& path);

/// Canonical names of the analytic facts a certificate may rely on.
namespace axioms {
inline constexpr std::string_view ct_slab = "ct-slab-embedding";
inline constexpr std::string_view energy = "energy-estimate";
inline constexpr std::string_view product = "wave-sobolev-product-estimate";
inline constexpr std::string_view angle = "angle-estimate";
inline constexpr std::string_view x_to_h = "x-h-embedding";
inline constexpr std::string_view holder_sobolev = "holder-sobolev-product";
inline constexpr std::string_view duality = "trilinear-duality";
} // namespace axioms

struct StepRecord {
    std::string id;
    std::string symbol;
    Space claim;
    Tactic tactic = Tactic::axiom;
    bool verdict = false;
    std::vector<std::string> bindings;  // membership ids the tactic consumed
    std::vector<std::string> notes;
    std::set<std::string> axioms;
    std::optional<Space> derived;       // meet, interpolant or source space
    std::optional<Exponent> theta;
    std::optional<std::array<Exponent, 3>> sobolev; // (s0, s1, s2)
    std::optional<DiracSourceEstimate> dirac_source;
    std::optional<NullFormCertificate> nullform;
    std::size_t candidates_tried = 0;
    std::string failure;
};

struct GoalRecord {
    std::string id;
    std::string symbol;
    GoalSpace goal;
    bool reached = false;
    std::optional<std::string> witness;
};

struct MembershipRecord {
    std::string id;
    std::string symbol;
    Space space;
};

struct Certificate {
    std::string ladder_hash;
    std::vector<Hypothesis> hypotheses;
    std::vector<StepRecord> steps;
    std::vector<GoalRecord> goals;
    std::vector<MembershipRecord> memberships;
    std::set<std::string> axioms;
    std::optional<std::string> halted_at;
    bool verdict = false;

    /// Every space established for `symbol`, in order.
    std::vector<Space> memberships_of(std::string_view symbol) const;
};

/// Runs every step in order, accumulating memberships, then checks the goals.
/// Halts at the first failing step.
Certificate verify_ladder(const Ladder& ladder);

/// Re-runs verification and confirms it reproduces `cert` exactly.
bool replay_certificate(const Ladder& ladder, const Certificate& cert);

/// Stable 64-bit FNV-1a digest of the ladder source, as hex.
std::string ladder_hash(std::string_view source);

struct AngleSearchResult {
    std::optional<AngleParams> params;
    std::size_t scanned = 0;
    std::vector<Exponent> values; // the scanned value set, ascending
    std::optional<NullFormCertificate> certificate;
};

/// Scans a, b, c over {0, 1/g, ..., floor(g/2)/g}, the factor modulation
/// indices, and the shifts v-e, v-2e of each grid value v (all within [0,1/2]),
/// in lexicographic order; returns the first triple that verifies.
AngleSearchResult search_angle_params(const NullFormEstimate& n, int grid_denominator);

} // namespace xsb
