#include "ialc/semantics.hpp"

#include <cassert>

namespace ialc {

// ── Interpretation builders ─────────────────────────────────────────────────

int Interpretation::add_entity(const std::string& name) {
    if (name.empty()) throw ModelError("entity id must be nonempty");
    if (index_.count(name)) throw ModelError("duplicate entity id '" + name + "'");
    if (entity_count() >= kMaxModelEntities) {
        throw ModelError("model exceeds the entity limit of " +
                         std::to_string(kMaxModelEntities));
    }
    int id = entity_count();
    names_.push_back(name);
    index_[name] = id;
    up_.push_back(EntitySet{1} << id);
    return id;
}

void Interpretation::add_prec_edge(int from, int to) {
    prec_edges_.emplace_back(from, to);
}

void Interpretation::close_precedes() {
    const int n = entity_count();
    up_.assign(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < n; ++e) up_[static_cast<std::size_t>(e)] = EntitySet{1} << e;
    for (auto [a, b] : prec_edges_) up_[static_cast<std::size_t>(a)] |= EntitySet{1} << b;
    // Floyd-Warshall style bit propagation.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            EntitySet row = up_[static_cast<std::size_t>(a)];
            EntitySet grown = row;
            EntitySet rest = row;
            while (rest) {
                int b = __builtin_ctzll(rest);
                rest &= rest - 1;
                grown |= up_[static_cast<std::size_t>(b)];
            }
            if (grown != row) {
                up_[static_cast<std::size_t>(a)] = grown;
                changed = true;
            }
        }
    }
}

void Interpretation::set_precedes_raw(std::vector<EntitySet> up_rows) {
    assert(static_cast<int>(up_rows.size()) == entity_count());
    up_ = std::move(up_rows);
}

void Interpretation::add_role_pair(const std::string& role, int from, int to) {
    auto& rows = roles_[role];
    rows.resize(static_cast<std::size_t>(entity_count()), 0);
    rows[static_cast<std::size_t>(from)] |= EntitySet{1} << to;
}

void Interpretation::set_role(const std::string& role, std::vector<EntitySet> successor_rows) {
    assert(static_cast<int>(successor_rows.size()) == entity_count());
    roles_[role] = std::move(successor_rows);
}

void Interpretation::add_atom_member(const std::string& atom, int entity) {
    atoms_[atom] |= EntitySet{1} << entity;
}

void Interpretation::set_atom(const std::string& atom, EntitySet extension) {
    atoms_[atom] = extension;
}

void Interpretation::set_nominal(const std::string& name, int entity) {
    nominals_[name] = entity;
}

int Interpretation::entity_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

EntitySet Interpretation::all_entities() const noexcept {
    const int n = entity_count();
    return n == 64 ? ~EntitySet{0} : (EntitySet{1} << n) - 1;
}

EntitySet Interpretation::role_successors(const std::string& role, int e) const {
    auto it = roles_.find(role);
    if (it == roles_.end()) return 0;
    const auto& rows = it->second;
    if (e >= static_cast<int>(rows.size())) return 0;
    return rows[static_cast<std::size_t>(e)];
}

// ── Linting ─────────────────────────────────────────────────────────────────

const char* lint_tag_name(LintTag tag) {
    switch (tag) {
        case LintTag::Refl: return "REFL";
        case LintTag::Trans: return "TRANS";
        case LintTag::Heredity: return "HEREDITY";
        case LintTag::F1: return "F1";
        case LintTag::F2: return "F2";
    }
    return "?";
}

std::string format_violation(const Interpretation& i, const LintViolation& v) {
    std::string out = lint_tag_name(v.tag);
    out += " (";
    for (std::size_t k = 0; k < v.witness.size(); ++k) {
        if (k) out += ", ";
        out += i.entity_names()[static_cast<std::size_t>(v.witness[k])];
    }
    out += ')';
    if (!v.symbol.empty()) {
        out += " for ";
        out += v.symbol;
    }
    return out;
}

Interpretation hereditary_closure(const Interpretation& i) {
    Interpretation out = i;
    for (const auto& [atom, ext] : i.atoms()) {
        EntitySet closed = 0;
        EntitySet rest = ext;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            closed |= i.up_set(e);
        }
        out.set_atom(atom, closed);
    }
    return out;
}

LintReport check_frame_conditions(const Interpretation& i) {
    LintReport report;
    const int n = i.entity_count();
    auto violate = [&](LintTag tag, std::vector<int> witness, std::string symbol = {}) {
        report.violations.push_back({tag, std::move(witness), std::move(symbol)});
    };

    for (int e = 0; e < n; ++e) {
        if (!((i.up_set(e) >> e) & 1u)) violate(LintTag::Refl, {e});
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!i.precedes(a, b)) continue;
            EntitySet missing = i.up_set(b) & ~i.up_set(a);
            EntitySet rest = missing;
            while (rest) {
                int c = __builtin_ctzll(rest);
                rest &= rest - 1;
                violate(LintTag::Trans, {a, b, c});
            }
        }
    }
    for (const auto& [atom, ext] : i.atoms()) {
        EntitySet rest = ext;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            EntitySet above = i.up_set(e) & ~ext;
            while (above) {
                int e2 = __builtin_ctzll(above);
                above &= above - 1;
                violate(LintTag::Heredity, {e, e2}, atom);
            }
        }
    }
    for (const auto& [role, rows] : i.roles()) {
        bool warned = false;
        for (int w = 0; w < n; ++w) {
            EntitySet succ = rows[static_cast<std::size_t>(w)];
            if (!succ) continue;
            EntitySet ups = i.up_set(w);
            EntitySet vs = succ;
            while (vs) {
                int v = __builtin_ctzll(vs);
                vs &= vs - 1;
                // F1: every w' above w needs a successor above v.
                EntitySet rest = ups;
                while (rest) {
                    int w2 = __builtin_ctzll(rest);
                    rest &= rest - 1;
                    if ((rows[static_cast<std::size_t>(w2)] & i.up_set(v)) == 0) {
                        violate(LintTag::F1, {w, w2, v}, role);
                    }
                }
                // F2: every v' above v needs a predecessor above w.
                EntitySet v2s = i.up_set(v);
                while (v2s) {
                    int v2 = __builtin_ctzll(v2s);
                    v2s &= v2s - 1;
                    bool found = false;
                    EntitySet w2rest = ups;
                    while (w2rest) {
                        int w2 = __builtin_ctzll(w2rest);
                        w2rest &= w2rest - 1;
                        if ((rows[static_cast<std::size_t>(w2)] >> v2) & 1u) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) violate(LintTag::F2, {w, v, v2}, role);
                }
                // Warning: refinement pairs of a related pair should stay related.
                if (!warned) {
                    EntitySet w2s2 = ups;
                    while (w2s2 && !warned) {
                        int w2 = __builtin_ctzll(w2s2);
                        w2s2 &= w2s2 - 1;
                        EntitySet v2s2 = i.up_set(v) & ~rows[static_cast<std::size_t>(w2)];
                        if (v2s2) {
                            int v2 = __builtin_ctzll(v2s2);
                            report.warnings.push_back({role, {w, v, w2, v2}});
                            warned = true;
                        }
                    }
                }
            }
        }
    }
    report.passed = report.violations.empty();
    return report;
}

// ── Evaluation ──────────────────────────────────────────────────────────────

EntitySet eval_concept(const Interpretation& i, const Concept& c) {
    const int n = i.entity_count();
    const EntitySet all = i.all_entities();
    switch (c.kind()) {
        case ConceptKind::Atom: {
            auto it = i.atoms().find(c.name());
            return it == i.atoms().end() ? 0 : it->second;
        }
        case ConceptKind::Bottom:
            return 0;
        case ConceptKind::Top:
            return all;
        case ConceptKind::Not: {
            EntitySet body = eval_concept(i, c.body());
            EntitySet out = 0;
            for (int e = 0; e < n; ++e) {
                if ((i.up_set(e) & body) == 0) out |= EntitySet{1} << e;
            }
            return out;
        }
        case ConceptKind::And:
            return eval_concept(i, c.left()) & eval_concept(i, c.right());
        case ConceptKind::Or:
            return eval_concept(i, c.left()) | eval_concept(i, c.right());
        case ConceptKind::Subs: {
            EntitySet lhs = eval_concept(i, c.left());
            EntitySet rhs = eval_concept(i, c.right());
            EntitySet bad = lhs & ~rhs;  // entities where the implication fails locally
            EntitySet out = 0;
            for (int e = 0; e < n; ++e) {
                if ((i.up_set(e) & bad) == 0) out |= EntitySet{1} << e;
            }
            return out;
        }
        case ConceptKind::Exists: {
            EntitySet body = eval_concept(i, c.body());
            EntitySet out = 0;
            for (int e = 0; e < n; ++e) {
                if (i.role_successors(c.role(), e) & body) out |= EntitySet{1} << e;
            }
            return out;
        }
        case ConceptKind::Forall: {
            EntitySet body = eval_concept(i, c.body());
            EntitySet pointwise = 0;  // entities all of whose successors satisfy the body
            for (int e = 0; e < n; ++e) {
                if ((i.role_successors(c.role(), e) & ~body) == 0) pointwise |= EntitySet{1} << e;
            }
            EntitySet out = 0;
            for (int e = 0; e < n; ++e) {
                if ((i.up_set(e) & ~pointwise) == 0) out |= EntitySet{1} << e;
            }
            return out;
        }
    }
    return 0;
}

namespace {

int anchored(const Interpretation& i, const std::string& nominal) {
    auto it = i.nominals().find(nominal);
    if (it == i.nominals().end()) {
        throw EvalError("nominal '" + nominal + "' is not mapped to an entity");
    }
    return it->second;
}

}  // namespace

bool satisfies_statement(const Interpretation& i, const Statement& s) {
    switch (s.kind()) {
        case StatementKind::Formula:
            return eval_concept(i, s.formula_body()) == i.all_entities();
        case StatementKind::Nominal: {
            Statement body = s.nominal_body();
            if (body.kind() == StatementKind::Formula) {
                int x = anchored(i, s.nominal_name());
                EntitySet ext = eval_concept(i, body.formula_body());
                return (i.up_set(x) & ~ext) == 0;
            }
            // Inner statements are world-independent; the outer label only
            // shifts the anchor, which cannot change their truth.
            anchored(i, s.nominal_name());
            return satisfies_statement(i, body);
        }
        case StatementKind::Role: {
            int x = anchored(i, s.subject());
            int y = anchored(i, s.object());
            EntitySet xs = i.up_set(x);
            EntitySet ys = i.up_set(y);
            while (xs) {
                int zx = __builtin_ctzll(xs);
                xs &= xs - 1;
                if ((i.role_successors(s.role_name(), zx) & ys) != ys) return false;
            }
            return true;
        }
    }
    return false;
}

bool holds_at(const Interpretation& i, const Statement& item, int w) {
    if (item.kind() == StatementKind::Formula) {
        return (eval_concept(i, item.formula_body()) >> w) & 1u;
    }
    return satisfies_statement(i, item);
}

bool sequent_valid(const Interpretation& i, const Sequent& q) {
    const EntitySet all = i.all_entities();
    for (const auto& f : q.tbox) {
        if (f.kind() != StatementKind::Formula) {
            throw EvalError("tbox entries must be concept formulas");
        }
        if (eval_concept(i, f.formula_body()) != all) return true;  // global premise fails
    }

    // World-independent antecedent statements and the succedent, when a
    // statement, are evaluated once.
    bool statements_hold = true;
    std::vector<EntitySet> concept_exts;
    for (const auto& g : q.antecedent) {
        if (g.kind() == StatementKind::Formula) {
            concept_exts.push_back(eval_concept(i, g.formula_body()));
        } else if (!satisfies_statement(i, g)) {
            statements_hold = false;
            break;
        }
    }
    if (!statements_hold) return true;  // antecedent never satisfied

    if (q.succedent.kind() != StatementKind::Formula) {
        bool succ = satisfies_statement(i, q.succedent);
        if (succ) return true;
        // Succedent fails everywhere; valid only if some concept antecedent
        // excludes every entity.
        EntitySet where = all;
        for (EntitySet ext : concept_exts) where &= ext;
        return where == 0;
    }

    EntitySet where = all;
    for (EntitySet ext : concept_exts) where &= ext;
    EntitySet succ = eval_concept(i, q.succedent.formula_body());
    return (where & ~succ) == 0;
}

}  // namespace ialc
