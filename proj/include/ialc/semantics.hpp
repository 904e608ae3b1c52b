#ifndef IALC_SEMANTICS_HPP
#define IALC_SEMANTICS_HPP

// Finite constructive interpretations and evaluation.
//
// An interpretation is a finite set of entities, a refinement preorder
// (stored as generator edges plus the computed reflexive-transitive
// closure), role relations, a hereditary atomic valuation and a nominal
// anchoring.  Entity sets are bitmasks, which caps models at 64 entities —
// far beyond what bounded enumeration ever touches.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ialc/errors.hpp"
#include "ialc/syntax.hpp"

namespace ialc {

using EntitySet = std::uint64_t;

inline constexpr int kMaxModelEntities = 64;

class Interpretation {
public:
    Interpretation() = default;

    // Builders.  add_prec_edge records a generator; call close_precedes()
    // once all edges are in.
    int add_entity(const std::string& name);
    void add_prec_edge(int from, int to);
    void close_precedes();
    /// Install an arbitrary relation as the stored closure (for lint tests).
    void set_precedes_raw(std::vector<EntitySet> up_rows);
    void add_role_pair(const std::string& role, int from, int to);
    void set_role(const std::string& role, std::vector<EntitySet> successor_rows);
    void add_atom_member(const std::string& atom, int entity);
    void set_atom(const std::string& atom, EntitySet extension);
    void set_nominal(const std::string& name, int entity);

    int entity_count() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& entity_names() const noexcept { return names_; }
    int entity_index(const std::string& name) const;  // -1 when absent
    EntitySet all_entities() const noexcept;

    /// Up-set of e under the stored closure (always includes e once closed).
    EntitySet up_set(int e) const { return up_[static_cast<std::size_t>(e)]; }
    const std::vector<EntitySet>& up_rows() const noexcept { return up_; }
    const std::vector<std::pair<int, int>>& prec_edges() const noexcept { return prec_edges_; }
    bool precedes(int a, int b) const { return (up_[static_cast<std::size_t>(a)] >> b) & 1u; }

    const std::map<std::string, std::vector<EntitySet>>& roles() const noexcept { return roles_; }
    const std::map<std::string, EntitySet>& atoms() const noexcept { return atoms_; }
    const std::map<std::string, int>& nominals() const noexcept { return nominals_; }

    /// Successor mask of entity e under the named role (empty for unknown roles).
    EntitySet role_successors(const std::string& role, int e) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<std::pair<int, int>> prec_edges_;
    std::vector<EntitySet> up_;
    std::map<std::string, std::vector<EntitySet>> roles_;
    std::map<std::string, EntitySet> atoms_;
    std::map<std::string, int> nominals_;
};

// ── Linting ─────────────────────────────────────────────────────────────────

enum class LintTag { Refl, Trans, Heredity, F1, F2 };

const char* lint_tag_name(LintTag tag);

struct LintViolation {
    LintTag tag;
    std::vector<int> witness;  // entity indices, per-tag shape (see check_frame_conditions)
    std::string symbol;        // atom or role name when applicable
};

struct LintWarning {
    std::string role;
    std::vector<int> witness;  // (w, v, w', v'): pair in R whose refinement pair is not
};

struct LintReport {
    bool passed = true;
    std::vector<LintViolation> violations;
    std::vector<LintWarning> warnings;
};

std::string format_violation(const Interpretation& i, const LintViolation& v);

/// Least extension of every atom closed under refinement; idempotent.
Interpretation hereditary_closure(const Interpretation& i);

/// Reports every violation of REFL / TRANS (of the stored closure),
/// HEREDITY, F1, F2.  Witness shapes:
///   REFL (e) | TRANS (a,b,c) | HEREDITY (e,e') atom | F1 (w,w',v) role |
///   F2 (w,v,v') role.
/// Role relations that are not closed under refinement on both sides are
/// reported as warnings, not violations.
LintReport check_frame_conditions(const Interpretation& i);

// ── Evaluation ──────────────────────────────────────────────────────────────

/// Extension C^I.  Unknown atoms and roles evaluate to the empty
/// extension / empty relation.
EntitySet eval_concept(const Interpretation& i, const Concept& c);

/// Truth of a statement.  Nominal assertions and role assertions are
/// world-independent; a bare concept formula holds iff its extension is all
/// of the domain.  Throws EvalError on unmapped nominals.
bool satisfies_statement(const Interpretation& i, const Statement& s);

/// Truth of an item at a given entity: bare concepts hold at w iff w is in
/// their extension, statements per satisfies_statement.
bool holds_at(const Interpretation& i, const Statement& item, int w);

/// Sequent validity on one model: if every tbox formula has full extension,
/// then at every entity where all antecedent items hold the succedent holds.
bool sequent_valid(const Interpretation& i, const Sequent& q);

}  // namespace ialc

#endif  // IALC_SEMANTICS_HPP
