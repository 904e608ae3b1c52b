#include "ialc/calculus.hpp"

#include <algorithm>

namespace ialc {

namespace {

using Items = std::vector<Statement>;

Items plus(Items v, const Statement& s) {
    v.push_back(s);
    return v;
}

Items plus(Items v, const Statement& s, const Statement& t) {
    v.push_back(s);
    v.push_back(t);
    return v;
}

/// Removes one occurrence; nullopt when absent.
std::optional<Items> minus_one(const Items& v, const Statement& s) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == s) {
            Items out;
            out.reserve(v.size() - 1);
            for (std::size_t j = 0; j < v.size(); ++j) {
                if (j != i) out.push_back(v[j]);
            }
            return out;
        }
    }
    return std::nullopt;
}

/// Shared context (both premises carry gamma) or split context (premise
/// contexts sum to gamma).
bool context_fits(const Items& gamma, const Items& g1, const Items& g2) {
    if (multiset_equal(g1, gamma) && multiset_equal(g2, gamma)) return true;
    Items sum = g1;
    sum.insert(sum.end(), g2.begin(), g2.end());
    return multiset_equal(sum, gamma);
}

struct SubsParts {
    Concept lhs;
    Concept rhs;
};

std::optional<SubsParts> as_formula_with(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = s.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return SubsParts{c.left(), c.right()};
}

struct NomBinary {
    std::string x;
    Concept lhs;
    Concept rhs;
};

std::optional<NomBinary> as_nominal_with(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Nominal) return std::nullopt;
    Statement body = s.nominal_body();
    if (body.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = body.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return NomBinary{s.nominal_name(), c.left(), c.right()};
}

struct NomQuant {
    std::string x;
    std::string role;
    Concept body;
};

std::optional<NomQuant> as_nominal_quant(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Nominal) return std::nullopt;
    Statement body = s.nominal_body();
    if (body.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = body.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return NomQuant{s.nominal_name(), c.role(), c.body()};
}

std::optional<std::pair<std::string, Concept>> as_nominal_concept(const Statement& s) {
    if (s.kind() != StatementKind::Nominal) return std::nullopt;
    Statement body = s.nominal_body();
    if (body.kind() != StatementKind::Formula) return std::nullopt;
    return std::make_pair(s.nominal_name(), body.formula_body());
}

bool is_bottom_item(const Statement& s) {
    if (s.kind() == StatementKind::Formula) {
        return s.formula_body().kind() == ConceptKind::Bottom;
    }
    if (s.kind() == StatementKind::Nominal) return is_bottom_item(s.nominal_body());
    return false;
}

std::set<std::string> conclusion_nominals(const Sequent& q) { return nominals_of(q); }

RuleCheck ok() { return {true, {}}; }
RuleCheck no(std::string reason) { return {false, std::move(reason)}; }

// ── Single-rule matchers ────────────────────────────────────────────────────

RuleCheck match_ax(const Sequent& c) {
    for (const auto& item : c.antecedent) {
        if (item == c.succedent) return ok();
    }
    return no("AX: succedent does not occur in the antecedent");
}

RuleCheck match_bot_l(const Sequent& c) {
    for (const auto& item : c.antecedent) {
        if (is_bottom_item(item)) return ok();
    }
    return no("BOT-L: no Bot item in the antecedent");
}

RuleCheck match_subs_r(const Sequent& c, const Sequent& p, bool nominal) {
    if (nominal) {
        auto head = as_nominal_with(c.succedent, ConceptKind::Subs);
        if (!head) return no("N-SUBS-R: succedent is not x : (a -> b)");
        if (p.succedent != Statement::nominal(head->x, head->rhs))
            return no("N-SUBS-R: premise succedent mismatch");
        if (!multiset_equal(p.antecedent,
                            plus(c.antecedent, Statement::nominal(head->x, head->lhs))))
            return no("N-SUBS-R: premise antecedent mismatch");
        return ok();
    }
    auto head = as_formula_with(c.succedent, ConceptKind::Subs);
    if (!head) return no("SUBS-R: succedent is not a -> b");
    if (p.succedent != Statement::formula(head->rhs))
        return no("SUBS-R: premise succedent mismatch");
    if (!multiset_equal(p.antecedent, plus(c.antecedent, Statement::formula(head->lhs))))
        return no("SUBS-R: premise antecedent mismatch");
    return ok();
}

RuleCheck match_subs_l(const Sequent& c, const Sequent& p1, const Sequent& p2, bool nominal) {
    const char* tag = nominal ? "N-SUBS-L" : "SUBS-L";
    for (const auto& principal : c.antecedent) {
        Statement want_a = principal, want_b = principal;  // placeholders
        if (nominal) {
            auto parts = as_nominal_with(principal, ConceptKind::Subs);
            if (!parts) continue;
            want_a = Statement::nominal(parts->x, parts->lhs);
            want_b = Statement::nominal(parts->x, parts->rhs);
        } else {
            auto parts = as_formula_with(principal, ConceptKind::Subs);
            if (!parts) continue;
            want_a = Statement::formula(parts->lhs);
            want_b = Statement::formula(parts->rhs);
        }
        auto gamma = minus_one(c.antecedent, principal);
        if (p1.succedent != want_a) continue;
        if (p2.succedent != c.succedent) continue;
        auto g2 = minus_one(p2.antecedent, want_b);
        if (!g2) continue;
        if (context_fits(*gamma, p1.antecedent, *g2)) return ok();
    }
    return no(std::string(tag) + ": no matching principal subsumption");
}

RuleCheck match_and_r(const Sequent& c, const Sequent& p1, const Sequent& p2, bool nominal) {
    Statement want_a = c.succedent, want_b = c.succedent;
    if (nominal) {
        auto head = as_nominal_with(c.succedent, ConceptKind::And);
        if (!head) return no("N-AND-R: succedent is not x : (a and b)");
        want_a = Statement::nominal(head->x, head->lhs);
        want_b = Statement::nominal(head->x, head->rhs);
    } else {
        auto head = as_formula_with(c.succedent, ConceptKind::And);
        if (!head) return no("AND-R: succedent is not a and b");
        want_a = Statement::formula(head->lhs);
        want_b = Statement::formula(head->rhs);
    }
    if (p1.succedent != want_a || p2.succedent != want_b)
        return no("AND-R: premise succedents mismatch");
    if (!context_fits(c.antecedent, p1.antecedent, p2.antecedent))
        return no("AND-R: premise contexts mismatch");
    return ok();
}

RuleCheck match_and_l(const Sequent& c, const Sequent& p, bool nominal) {
    const char* tag = nominal ? "N-AND-L" : "AND-L";
    if (p.succedent != c.succedent) return no(std::string(tag) + ": succedent changed");
    for (const auto& principal : c.antecedent) {
        Statement add_a = principal, add_b = principal;
        if (nominal) {
            auto parts = as_nominal_with(principal, ConceptKind::And);
            if (!parts) continue;
            add_a = Statement::nominal(parts->x, parts->lhs);
            add_b = Statement::nominal(parts->x, parts->rhs);
        } else {
            auto parts = as_formula_with(principal, ConceptKind::And);
            if (!parts) continue;
            add_a = Statement::formula(parts->lhs);
            add_b = Statement::formula(parts->rhs);
        }
        auto gamma = minus_one(c.antecedent, principal);
        if (multiset_equal(p.antecedent, plus(*gamma, add_a, add_b))) return ok();
    }
    return no(std::string(tag) + ": no matching principal conjunction");
}

RuleCheck match_or_r(const Sequent& c, const Sequent& p, bool nominal, bool first) {
    const char* tag = first ? (nominal ? "N-OR1-R" : "OR1-R") : (nominal ? "N-OR2-R" : "OR2-R");
    Statement want = c.succedent;
    if (nominal) {
        auto head = as_nominal_with(c.succedent, ConceptKind::Or);
        if (!head) return no(std::string(tag) + ": succedent is not x : (a or b)");
        want = Statement::nominal(head->x, first ? head->lhs : head->rhs);
    } else {
        auto head = as_formula_with(c.succedent, ConceptKind::Or);
        if (!head) return no(std::string(tag) + ": succedent is not a or b");
        want = Statement::formula(first ? head->lhs : head->rhs);
    }
    if (p.succedent != want) return no(std::string(tag) + ": premise succedent mismatch");
    if (!multiset_equal(p.antecedent, c.antecedent))
        return no(std::string(tag) + ": context changed");
    return ok();
}

RuleCheck match_or_l(const Sequent& c, const Sequent& p1, const Sequent& p2, bool nominal) {
    const char* tag = nominal ? "N-OR-L" : "OR-L";
    if (p1.succedent != c.succedent || p2.succedent != c.succedent)
        return no(std::string(tag) + ": premise succedent changed");
    for (const auto& principal : c.antecedent) {
        Statement case_a = principal, case_b = principal;
        if (nominal) {
            auto parts = as_nominal_with(principal, ConceptKind::Or);
            if (!parts) continue;
            case_a = Statement::nominal(parts->x, parts->lhs);
            case_b = Statement::nominal(parts->x, parts->rhs);
        } else {
            auto parts = as_formula_with(principal, ConceptKind::Or);
            if (!parts) continue;
            case_a = Statement::formula(parts->lhs);
            case_b = Statement::formula(parts->rhs);
        }
        auto gamma = minus_one(c.antecedent, principal);
        auto g1 = minus_one(p1.antecedent, case_a);
        auto g2 = minus_one(p2.antecedent, case_b);
        if (!g1 || !g2) continue;
        if (context_fits(*gamma, *g1, *g2)) return ok();
    }
    return no(std::string(tag) + ": no matching principal disjunction");
}

RuleCheck match_forall_r(const Sequent& c, const Sequent& p) {
    auto head = as_nominal_quant(c.succedent, ConceptKind::Forall);
    if (!head) return no("FORALL-R: succedent is not x : all R.a");
    auto prem_head = as_nominal_concept(p.succedent);
    if (!prem_head || prem_head->second != head->body)
        return no("FORALL-R: premise succedent is not y : a");
    const std::string& y = prem_head->first;
    Statement edge = Statement::role(head->x, head->role, y);
    if (!multiset_equal(p.antecedent, plus(c.antecedent, edge)))
        return no("FORALL-R: premise must add exactly the role assertion " + head->x + " " +
                  head->role + " " + y);
    if (conclusion_nominals(c).count(y)) {
        return no("FRESHNESS: nominal '" + y + "' already occurs in the conclusion");
    }
    return ok();
}

RuleCheck match_forall_l(const Sequent& c, const Sequent& p) {
    if (p.succedent != c.succedent) return no("FORALL-L: succedent changed");
    for (const auto& principal : c.antecedent) {
        auto quant = as_nominal_quant(principal, ConceptKind::Forall);
        if (!quant) continue;
        for (const auto& edge : c.antecedent) {
            if (edge.kind() != StatementKind::Role) continue;
            if (edge.subject() != quant->x || edge.role_name() != quant->role) continue;
            Statement add = Statement::nominal(edge.object(), quant->body);
            if (multiset_equal(p.antecedent, plus(c.antecedent, add))) return ok();
        }
    }
    return no("FORALL-L: no principal x : all R.a with a matching x R y");
}

RuleCheck match_exists_r(const Sequent& c, const Sequent& p1, const Sequent& p2) {
    auto head = as_nominal_quant(c.succedent, ConceptKind::Exists);
    if (!head) return no("EXISTS-R: succedent is not x : some R.a");
    if (p1.succedent.kind() != StatementKind::Role ||
        p1.succedent.subject() != head->x || p1.succedent.role_name() != head->role)
        return no("EXISTS-R: first premise succedent is not " + head->x + " " + head->role +
                  " y");
    const std::string& y = p1.succedent.object();
    if (p2.succedent != Statement::nominal(y, head->body))
        return no("EXISTS-R: second premise succedent is not y : a");
    if (!context_fits(c.antecedent, p1.antecedent, p2.antecedent))
        return no("EXISTS-R: premise contexts mismatch");
    return ok();
}

RuleCheck match_exists_l(const Sequent& c, const Sequent& p, const Instantiation& inst) {
    if (p.succedent != c.succedent) return no("EXISTS-L: succedent changed");
    auto conc_noms = conclusion_nominals(c);
    bool shape_matched = false;
    std::string unfresh;
    for (const auto& principal : c.antecedent) {
        auto quant = as_nominal_quant(principal, ConceptKind::Exists);
        if (!quant) continue;
        auto gamma = minus_one(c.antecedent, principal);
        // Candidate fresh nominals: the declared one, or any y with x R y in
        // the premise.
        std::vector<std::string> candidates;
        if (inst.fresh) {
            candidates.push_back(*inst.fresh);
        } else {
            for (const auto& item : p.antecedent) {
                if (item.kind() == StatementKind::Role && item.subject() == quant->x &&
                    item.role_name() == quant->role) {
                    candidates.push_back(item.object());
                }
            }
        }
        for (const auto& y : candidates) {
            Statement edge = Statement::role(quant->x, quant->role, y);
            Statement member = Statement::nominal(y, quant->body);
            if (!multiset_equal(p.antecedent, plus(*gamma, edge, member))) continue;
            shape_matched = true;
            if (conc_noms.count(y)) {
                unfresh = y;
                continue;
            }
            return ok();
        }
    }
    if (shape_matched) {
        return no("FRESHNESS: nominal '" + unfresh + "' occurs in the conclusion");
    }
    return no("EXISTS-L: premise does not open a principal x : some R.a");
}

RuleCheck match_p_exists(const Sequent& c, const Sequent& p) {
    if (c.succedent.kind() != StatementKind::Formula ||
        c.succedent.formula_body().kind() != ConceptKind::Exists)
        return no("P-EXISTS: succedent is not some R.b");
    const std::string role = c.succedent.formula_body().role();
    const Concept succ_body = c.succedent.formula_body().body();
    if (p.succedent != Statement::formula(succ_body))
        return no("P-EXISTS: premise succedent mismatch");
    for (std::size_t pi = 0; pi < c.antecedent.size(); ++pi) {
        const Statement& principal = c.antecedent[pi];
        if (principal.kind() != StatementKind::Formula) continue;
        const Concept& pc = principal.formula_body();
        if (pc.kind() != ConceptKind::Exists || pc.role() != role) continue;
        // Every other concept item must be all R.g; assertions pass through.
        Items expected;
        bool shape_ok = true;
        for (std::size_t k = 0; k < c.antecedent.size(); ++k) {
            if (k == pi) continue;
            const Statement& item = c.antecedent[k];
            if (item.kind() != StatementKind::Formula) {
                expected.push_back(item);
                continue;
            }
            const Concept& cc = item.formula_body();
            if (cc.kind() != ConceptKind::Forall || cc.role() != role) {
                shape_ok = false;
                break;
            }
            expected.push_back(Statement::formula(cc.body()));
        }
        if (!shape_ok) continue;
        expected.push_back(Statement::formula(pc.body()));
        if (multiset_equal(p.antecedent, expected)) return ok();
    }
    return no("P-EXISTS: conclusion is not all R.Gamma, some R.a |- some R.b");
}

RuleCheck match_p_forall(const Sequent& c, const Sequent& p) {
    if (c.succedent.kind() != StatementKind::Formula ||
        c.succedent.formula_body().kind() != ConceptKind::Forall)
        return no("P-FORALL: succedent is not all R.b");
    const std::string role = c.succedent.formula_body().role();
    if (p.succedent != Statement::formula(c.succedent.formula_body().body()))
        return no("P-FORALL: premise succedent mismatch");
    Items expected;
    for (const auto& item : c.antecedent) {
        if (item.kind() != StatementKind::Formula) {
            expected.push_back(item);
            continue;
        }
        const Concept& cc = item.formula_body();
        if (cc.kind() != ConceptKind::Forall || cc.role() != role) {
            return no("P-FORALL: antecedent concept not prefixed by all " + role);
        }
        expected.push_back(Statement::formula(cc.body()));
    }
    if (!multiset_equal(p.antecedent, expected))
        return no("P-FORALL: premise antecedent mismatch");
    return ok();
}

RuleCheck match_p_n(const Sequent& c, const Sequent& p) {
    // Forward transform of the premise under candidate nominals: concepts
    // gain the label, assertions pass through.
    std::vector<std::string> candidates;
    if (c.succedent.kind() == StatementKind::Nominal)
        candidates.push_back(c.succedent.outer_nominal());
    for (const auto& item : c.antecedent) {
        if (item.kind() == StatementKind::Nominal) candidates.push_back(item.outer_nominal());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) candidates.push_back("x");  // degenerate: no concepts anywhere

    for (const auto& x : candidates) {
        auto transform = [&x](const Statement& s) {
            if (s.kind() == StatementKind::Formula) return Statement::nominal(x, s);
            return s;
        };
        Items mapped;
        mapped.reserve(p.antecedent.size());
        for (const auto& item : p.antecedent) mapped.push_back(transform(item));
        if (transform(p.succedent) != c.succedent) continue;
        if (multiset_equal(mapped, c.antecedent)) return ok();
    }
    return no("P-N: conclusion is not the premise with one nominal added to its concepts");
}

RuleCheck match_weak(const Sequent& c, const Sequent& p) {
    if (p.succedent != c.succedent) return no("WEAK: succedent changed");
    for (const auto& item : c.antecedent) {
        auto gamma = minus_one(c.antecedent, item);
        if (multiset_equal(p.antecedent, *gamma)) return ok();
    }
    return no("WEAK: premise is not the conclusion minus one item");
}

RuleCheck match_contr(const Sequent& c, const Sequent& p) {
    if (p.succedent != c.succedent) return no("CONTR: succedent changed");
    for (const auto& item : c.antecedent) {
        if (multiset_equal(p.antecedent, plus(c.antecedent, item))) return ok();
    }
    return no("CONTR: premise is not the conclusion with one item duplicated");
}

RuleCheck match_cut(const Sequent& c, const Sequent& p1, const Sequent& p2,
                    const Instantiation& inst) {
    const Statement& cut = p1.succedent;
    if (inst.cut && *inst.cut != cut) return no("CUT: declared cut item mismatch");
    if (p2.succedent != c.succedent) return no("CUT: succedent changed");
    auto g2 = minus_one(p2.antecedent, cut);
    if (!g2) return no("CUT: cut item missing from the second premise");
    if (!context_fits(c.antecedent, p1.antecedent, *g2))
        return no("CUT: premise contexts mismatch");
    return ok();
}

}  // namespace

const char* rule_name(RuleName r) {
    switch (r) {
        case RuleName::Ax: return "AX";
        case RuleName::BotL: return "BOT-L";
        case RuleName::ForallR: return "FORALL-R";
        case RuleName::ForallL: return "FORALL-L";
        case RuleName::ExistsR: return "EXISTS-R";
        case RuleName::ExistsL: return "EXISTS-L";
        case RuleName::SubsR: return "SUBS-R";
        case RuleName::SubsL: return "SUBS-L";
        case RuleName::AndR: return "AND-R";
        case RuleName::AndL: return "AND-L";
        case RuleName::Or1R: return "OR1-R";
        case RuleName::Or2R: return "OR2-R";
        case RuleName::OrL: return "OR-L";
        case RuleName::PExists: return "P-EXISTS";
        case RuleName::PForall: return "P-FORALL";
        case RuleName::PN: return "P-N";
        case RuleName::Weak: return "WEAK";
        case RuleName::Contr: return "CONTR";
        case RuleName::Cut: return "CUT";
        case RuleName::NSubsR: return "N-SUBS-R";
        case RuleName::NSubsL: return "N-SUBS-L";
        case RuleName::NAndR: return "N-AND-R";
        case RuleName::NAndL: return "N-AND-L";
        case RuleName::NOr1R: return "N-OR1-R";
        case RuleName::NOr2R: return "N-OR2-R";
        case RuleName::NOrL: return "N-OR-L";
    }
    return "?";
}

const std::vector<RuleName>& all_rules() {
    static const std::vector<RuleName> rules = {
        RuleName::Ax,      RuleName::BotL,   RuleName::ForallR, RuleName::ForallL,
        RuleName::ExistsR, RuleName::ExistsL, RuleName::SubsR,  RuleName::SubsL,
        RuleName::AndR,    RuleName::AndL,   RuleName::Or1R,    RuleName::Or2R,
        RuleName::OrL,     RuleName::PExists, RuleName::PForall, RuleName::PN,
        RuleName::Weak,    RuleName::Contr,  RuleName::Cut,     RuleName::NSubsR,
        RuleName::NSubsL,  RuleName::NAndR,  RuleName::NAndL,   RuleName::NOr1R,
        RuleName::NOr2R,   RuleName::NOrL,
    };
    return rules;
}

std::optional<RuleName> rule_from_name(const std::string& name) {
    for (RuleName r : all_rules()) {
        if (name == rule_name(r)) return r;
    }
    return std::nullopt;
}

int rule_arity(RuleName r) {
    switch (r) {
        case RuleName::Ax:
        case RuleName::BotL:
            return 0;
        case RuleName::SubsL:
        case RuleName::NSubsL:
        case RuleName::AndR:
        case RuleName::NAndR:
        case RuleName::OrL:
        case RuleName::NOrL:
        case RuleName::ExistsR:
        case RuleName::Cut:
            return 2;
        default:
            return 1;
    }
}

RuleCheck check_node(RuleName rule, const Sequent& c, const std::vector<Sequent>& premises,
                     const Instantiation& inst) {
    if (static_cast<int>(premises.size()) != rule_arity(rule)) {
        return no(std::string("ARITY: ") + rule_name(rule) + " takes " +
                  std::to_string(rule_arity(rule)) + " premises, got " +
                  std::to_string(premises.size()));
    }
    for (const auto& p : premises) {
        if (!multiset_equal(p.tbox, c.tbox)) {
            return no("TBOX: premises must carry the conclusion's tbox unchanged");
        }
    }
    switch (rule) {
        case RuleName::Ax: return match_ax(c);
        case RuleName::BotL: return match_bot_l(c);
        case RuleName::ForallR: return match_forall_r(c, premises[0]);
        case RuleName::ForallL: return match_forall_l(c, premises[0]);
        case RuleName::ExistsR: return match_exists_r(c, premises[0], premises[1]);
        case RuleName::ExistsL: return match_exists_l(c, premises[0], inst);
        case RuleName::SubsR: return match_subs_r(c, premises[0], false);
        case RuleName::SubsL: return match_subs_l(c, premises[0], premises[1], false);
        case RuleName::AndR: return match_and_r(c, premises[0], premises[1], false);
        case RuleName::AndL: return match_and_l(c, premises[0], false);
        case RuleName::Or1R: return match_or_r(c, premises[0], false, true);
        case RuleName::Or2R: return match_or_r(c, premises[0], false, false);
        case RuleName::OrL: return match_or_l(c, premises[0], premises[1], false);
        case RuleName::PExists: return match_p_exists(c, premises[0]);
        case RuleName::PForall: return match_p_forall(c, premises[0]);
        case RuleName::PN: return match_p_n(c, premises[0]);
        case RuleName::Weak: return match_weak(c, premises[0]);
        case RuleName::Contr: return match_contr(c, premises[0]);
        case RuleName::Cut: return match_cut(c, premises[0], premises[1], inst);
        case RuleName::NSubsR: return match_subs_r(c, premises[0], true);
        case RuleName::NSubsL: return match_subs_l(c, premises[0], premises[1], true);
        case RuleName::NAndR: return match_and_r(c, premises[0], premises[1], true);
        case RuleName::NAndL: return match_and_l(c, premises[0], true);
        case RuleName::NOr1R: return match_or_r(c, premises[0], true, true);
        case RuleName::NOr2R: return match_or_r(c, premises[0], true, false);
        case RuleName::NOrL: return match_or_l(c, premises[0], premises[1], true);
    }
    return no("unknown rule");
}

std::string format_path(const std::vector<int>& path) {
    std::string out = "root";
    for (int i : path) out += "/" + std::to_string(i);
    return out;
}

namespace {

void check_tree(const ProofTree& t, std::vector<int>& path, CheckVerdict& verdict) {
    auto fail = [&](std::string reason) {
        verdict.accepted = false;
        verdict.failures.push_back({path, std::move(reason)});
    };
    if (t.rule == RuleName::ExistsL) {
        if (!t.inst.fresh) fail("INSTANTIATION: EXISTS-L node lacks its fresh nominal");
    } else if (t.inst.fresh) {
        fail("INSTANTIATION: fresh nominal on a non-EXISTS-L node");
    }
    if (t.rule == RuleName::Cut) {
        if (!t.inst.cut) fail("INSTANTIATION: CUT node lacks its cut item");
    } else if (t.inst.cut) {
        fail("INSTANTIATION: cut item on a non-CUT node");
    }
    std::vector<Sequent> premise_seqs;
    premise_seqs.reserve(t.premises.size());
    for (const auto& p : t.premises) premise_seqs.push_back(p.conclusion);
    RuleCheck rc = check_node(t.rule, t.conclusion, premise_seqs, t.inst);
    if (!rc.ok) fail(rc.reason);
    for (std::size_t k = 0; k < t.premises.size(); ++k) {
        path.push_back(static_cast<int>(k));
        check_tree(t.premises[k], path, verdict);
        path.pop_back();
    }
}

}  // namespace

CheckVerdict check_proof(const ProofTree& t) {
    CheckVerdict verdict;
    std::vector<int> path;
    check_tree(t, path, verdict);
    return verdict;
}

}  // namespace ialc
