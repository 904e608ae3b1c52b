#include "ialc/prover.hpp"

#include <algorithm>

#include "ialc/errors.hpp"

namespace ialc {

namespace {

struct Search {
    std::set<std::string> reserved;  // names occurring anywhere in the goal
    int fresh_counter = 0;
    std::vector<Sequent> branch;  // ancestors of the current goal

    std::string fresh_nominal() {
        while (true) {
            std::string name = "y" + std::to_string(fresh_counter++);
            if (!reserved.count(name)) return name;
        }
    }

    bool repeats(const Sequent& q) const {
        for (const auto& seen : branch) {
            if (compare(seen, q) == 0) return true;
        }
        return false;
    }
};

struct Candidate {
    RuleName rule;
    Instantiation inst;
    std::vector<Sequent> premises;
};

std::optional<std::pair<Concept, Concept>> formula_with(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = s.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return std::make_pair(c.left(), c.right());
}

struct NomBinary {
    std::string x;
    Concept lhs, rhs;
};

std::optional<NomBinary> nominal_with(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Nominal) return std::nullopt;
    Statement body = s.nominal_body();
    if (body.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = body.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return NomBinary{s.nominal_name(), c.left(), c.right()};
}

struct NomQuant {
    std::string x, role;
    Concept body;
};

std::optional<NomQuant> nominal_quant(const Statement& s, ConceptKind kind) {
    if (s.kind() != StatementKind::Nominal) return std::nullopt;
    Statement body = s.nominal_body();
    if (body.kind() != StatementKind::Formula) return std::nullopt;
    const Concept& c = body.formula_body();
    if (c.kind() != kind) return std::nullopt;
    return NomQuant{s.nominal_name(), c.role(), c.body()};
}

bool is_bottom_item(const Statement& s) {
    if (s.kind() == StatementKind::Formula)
        return s.formula_body().kind() == ConceptKind::Bottom;
    if (s.kind() == StatementKind::Nominal) return is_bottom_item(s.nominal_body());
    return false;
}

std::vector<Statement> without(const std::vector<Statement>& items, std::size_t index) {
    std::vector<Statement> out;
    out.reserve(items.size() - 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != index) out.push_back(items[i]);
    }
    return out;
}

bool contains(const std::vector<Statement>& items, const Statement& s) {
    return std::any_of(items.begin(), items.end(),
                       [&](const Statement& t) { return t == s; });
}

Sequent make(const Sequent& base, std::vector<Statement> antecedent, Statement succedent) {
    return Sequent{base.tbox, std::move(antecedent), std::move(succedent)};
}

/// Backward applications of one rule to the goal, leftmost principal first.
void candidates_for(RuleName rule, const Sequent& goal, Search& search,
                    std::vector<Candidate>& out) {
    const auto& ant = goal.antecedent;
    const Statement& succ = goal.succedent;
    switch (rule) {
        case RuleName::Ax:
            if (contains(ant, succ)) out.push_back({rule, {}, {}});
            break;
        case RuleName::BotL:
            if (std::any_of(ant.begin(), ant.end(), is_bottom_item))
                out.push_back({rule, {}, {}});
            break;
        case RuleName::ForallR:
            if (auto q = nominal_quant(succ, ConceptKind::Forall)) {
                std::string y = search.fresh_nominal();
                auto prem_ant = ant;
                prem_ant.push_back(Statement::role(q->x, q->role, y));
                out.push_back({rule, {},
                               {make(goal, std::move(prem_ant),
                                     Statement::nominal(y, q->body))}});
            }
            break;
        case RuleName::ForallL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto q = nominal_quant(ant[i], ConceptKind::Forall);
                if (!q) continue;
                for (const auto& edge : ant) {
                    if (edge.kind() != StatementKind::Role || edge.subject() != q->x ||
                        edge.role_name() != q->role)
                        continue;
                    Statement add = Statement::nominal(edge.object(), q->body);
                    if (contains(ant, add)) continue;  // nothing new
                    auto prem_ant = ant;
                    prem_ant.push_back(add);
                    out.push_back({rule, {}, {make(goal, std::move(prem_ant), succ)}});
                }
            }
            break;
        case RuleName::ExistsR:
            if (auto q = nominal_quant(succ, ConceptKind::Exists)) {
                for (const auto& edge : ant) {
                    if (edge.kind() != StatementKind::Role || edge.subject() != q->x ||
                        edge.role_name() != q->role)
                        continue;
                    out.push_back(
                        {rule, {},
                         {make(goal, ant, Statement::role(q->x, q->role, edge.object())),
                          make(goal, ant, Statement::nominal(edge.object(), q->body))}});
                }
            }
            break;
        case RuleName::ExistsL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto q = nominal_quant(ant[i], ConceptKind::Exists);
                if (!q) continue;
                std::string y = search.fresh_nominal();
                auto prem_ant = without(ant, i);
                prem_ant.push_back(Statement::role(q->x, q->role, y));
                prem_ant.push_back(Statement::nominal(y, q->body));
                Instantiation inst;
                inst.fresh = y;
                out.push_back({rule, inst, {make(goal, std::move(prem_ant), succ)}});
            }
            break;
        case RuleName::SubsR:
            if (auto f = formula_with(succ, ConceptKind::Subs)) {
                auto prem_ant = ant;
                prem_ant.push_back(Statement::formula(f->first));
                out.push_back({rule, {},
                               {make(goal, std::move(prem_ant),
                                     Statement::formula(f->second))}});
            }
            break;
        case RuleName::SubsL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto f = formula_with(ant[i], ConceptKind::Subs);
                if (!f) continue;
                auto gamma = without(ant, i);
                auto second = gamma;
                second.push_back(Statement::formula(f->second));
                out.push_back({rule, {},
                               {make(goal, gamma, Statement::formula(f->first)),
                                make(goal, std::move(second), succ)}});
            }
            break;
        case RuleName::AndR:
            if (auto f = formula_with(succ, ConceptKind::And)) {
                out.push_back({rule, {},
                               {make(goal, ant, Statement::formula(f->first)),
                                make(goal, ant, Statement::formula(f->second))}});
            }
            break;
        case RuleName::AndL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto f = formula_with(ant[i], ConceptKind::And);
                if (!f) continue;
                auto prem_ant = without(ant, i);
                prem_ant.push_back(Statement::formula(f->first));
                prem_ant.push_back(Statement::formula(f->second));
                out.push_back({rule, {}, {make(goal, std::move(prem_ant), succ)}});
            }
            break;
        case RuleName::Or1R:
            if (auto f = formula_with(succ, ConceptKind::Or)) {
                out.push_back({rule, {}, {make(goal, ant, Statement::formula(f->first))}});
            }
            break;
        case RuleName::Or2R:
            if (auto f = formula_with(succ, ConceptKind::Or)) {
                out.push_back({rule, {}, {make(goal, ant, Statement::formula(f->second))}});
            }
            break;
        case RuleName::OrL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto f = formula_with(ant[i], ConceptKind::Or);
                if (!f) continue;
                auto gamma = without(ant, i);
                auto first = gamma;
                first.push_back(Statement::formula(f->first));
                auto second = gamma;
                second.push_back(Statement::formula(f->second));
                out.push_back({rule, {},
                               {make(goal, std::move(first), succ),
                                make(goal, std::move(second), succ)}});
            }
            break;
        case RuleName::PExists: {
            if (succ.kind() != StatementKind::Formula ||
                succ.formula_body().kind() != ConceptKind::Exists)
                break;
            const std::string role = succ.formula_body().role();
            for (std::size_t i = 0; i < ant.size(); ++i) {
                if (ant[i].kind() != StatementKind::Formula) continue;
                const Concept& pc = ant[i].formula_body();
                if (pc.kind() != ConceptKind::Exists || pc.role() != role) continue;
                std::vector<Statement> prem_ant;
                bool shape_ok = true;
                for (std::size_t k = 0; k < ant.size() && shape_ok; ++k) {
                    if (k == i) continue;
                    if (ant[k].kind() != StatementKind::Formula) {
                        prem_ant.push_back(ant[k]);
                        continue;
                    }
                    const Concept& cc = ant[k].formula_body();
                    if (cc.kind() != ConceptKind::Forall || cc.role() != role) {
                        shape_ok = false;
                        break;
                    }
                    prem_ant.push_back(Statement::formula(cc.body()));
                }
                if (!shape_ok) continue;
                prem_ant.push_back(Statement::formula(pc.body()));
                out.push_back({rule, {},
                               {make(goal, std::move(prem_ant),
                                     Statement::formula(succ.formula_body().body()))}});
            }
            break;
        }
        case RuleName::PForall: {
            if (succ.kind() != StatementKind::Formula ||
                succ.formula_body().kind() != ConceptKind::Forall)
                break;
            const std::string role = succ.formula_body().role();
            std::vector<Statement> prem_ant;
            bool shape_ok = true;
            for (const auto& item : ant) {
                if (item.kind() != StatementKind::Formula) {
                    prem_ant.push_back(item);
                    continue;
                }
                const Concept& cc = item.formula_body();
                if (cc.kind() != ConceptKind::Forall || cc.role() != role) {
                    shape_ok = false;
                    break;
                }
                prem_ant.push_back(Statement::formula(cc.body()));
            }
            if (shape_ok) {
                out.push_back({rule, {},
                               {make(goal, std::move(prem_ant),
                                     Statement::formula(succ.formula_body().body()))}});
            }
            break;
        }
        case RuleName::PN: {
            // Canonical backward use: strip the succedent's label x from the
            // succedent and from every x-labelled concept in the antecedent.
            if (succ.kind() != StatementKind::Nominal) break;
            Statement body = succ.nominal_body();
            if (body.kind() != StatementKind::Formula) break;
            const std::string& x = succ.outer_nominal();
            std::vector<Statement> prem_ant;
            for (const auto& item : ant) {
                if (item.kind() == StatementKind::Nominal && item.nominal_name() == x &&
                    item.nominal_body().kind() == StatementKind::Formula) {
                    prem_ant.push_back(item.nominal_body());
                } else {
                    prem_ant.push_back(item);
                }
            }
            out.push_back({rule, {}, {make(goal, std::move(prem_ant), body)}});
            break;
        }
        case RuleName::Weak:
        case RuleName::Contr:
        case RuleName::Cut:
            break;  // never applied backwards
        case RuleName::NSubsR:
            if (auto nb = nominal_with(succ, ConceptKind::Subs)) {
                auto prem_ant = ant;
                prem_ant.push_back(Statement::nominal(nb->x, nb->lhs));
                out.push_back({rule, {},
                               {make(goal, std::move(prem_ant),
                                     Statement::nominal(nb->x, nb->rhs))}});
            }
            break;
        case RuleName::NSubsL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto nb = nominal_with(ant[i], ConceptKind::Subs);
                if (!nb) continue;
                auto gamma = without(ant, i);
                auto second = gamma;
                second.push_back(Statement::nominal(nb->x, nb->rhs));
                out.push_back({rule, {},
                               {make(goal, gamma, Statement::nominal(nb->x, nb->lhs)),
                                make(goal, std::move(second), succ)}});
            }
            break;
        case RuleName::NAndR:
            if (auto nb = nominal_with(succ, ConceptKind::And)) {
                out.push_back({rule, {},
                               {make(goal, ant, Statement::nominal(nb->x, nb->lhs)),
                                make(goal, ant, Statement::nominal(nb->x, nb->rhs))}});
            }
            break;
        case RuleName::NAndL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto nb = nominal_with(ant[i], ConceptKind::And);
                if (!nb) continue;
                auto prem_ant = without(ant, i);
                prem_ant.push_back(Statement::nominal(nb->x, nb->lhs));
                prem_ant.push_back(Statement::nominal(nb->x, nb->rhs));
                out.push_back({rule, {}, {make(goal, std::move(prem_ant), succ)}});
            }
            break;
        case RuleName::NOr1R:
            if (auto nb = nominal_with(succ, ConceptKind::Or)) {
                out.push_back(
                    {rule, {}, {make(goal, ant, Statement::nominal(nb->x, nb->lhs))}});
            }
            break;
        case RuleName::NOr2R:
            if (auto nb = nominal_with(succ, ConceptKind::Or)) {
                out.push_back(
                    {rule, {}, {make(goal, ant, Statement::nominal(nb->x, nb->rhs))}});
            }
            break;
        case RuleName::NOrL:
            for (std::size_t i = 0; i < ant.size(); ++i) {
                auto nb = nominal_with(ant[i], ConceptKind::Or);
                if (!nb) continue;
                auto gamma = without(ant, i);
                auto first = gamma;
                first.push_back(Statement::nominal(nb->x, nb->lhs));
                auto second = gamma;
                second.push_back(Statement::nominal(nb->x, nb->rhs));
                out.push_back({rule, {},
                               {make(goal, std::move(first), succ),
                                make(goal, std::move(second), succ)}});
            }
            break;
    }
}

std::optional<ProofTree> search_proof(const Sequent& goal, int depth, Search& search) {
    if (depth <= 0) return std::nullopt;
    for (RuleName rule : all_rules()) {
        std::vector<Candidate> candidates;
        candidates_for(rule, goal, search, candidates);
        for (auto& cand : candidates) {
            bool looped = false;
            for (const auto& prem : cand.premises) {
                if (compare(prem, goal) == 0 || search.repeats(prem)) {
                    looped = true;
                    break;
                }
            }
            if (looped) continue;
            std::vector<ProofTree> subtrees;
            bool all_proved = true;
            search.branch.push_back(goal);
            for (const auto& prem : cand.premises) {
                auto sub = search_proof(prem, depth - 1, search);
                if (!sub) {
                    all_proved = false;
                    break;
                }
                subtrees.push_back(std::move(*sub));
            }
            search.branch.pop_back();
            if (all_proved) {
                return ProofTree{goal, cand.rule, cand.inst, std::move(subtrees)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ProofTree> prove_bounded(const Sequent& goal, int max_depth, int cap) {
    if (max_depth < 1) throw CapError("proof depth bound must be positive");
    if (max_depth > cap) {
        throw CapError("proof depth " + std::to_string(max_depth) + " exceeds the cap of " +
                       std::to_string(cap));
    }
    Sequent start = goal;
    if (!start.tbox.empty()) {
        for (const auto& f : start.tbox) start.antecedent.push_back(f);
        start.tbox.clear();
    }
    Search search;
    std::set<std::string> atoms, roles, nominals;
    collect_symbols(start, atoms, roles, nominals);
    search.reserved = nominals;
    return search_proof(start, max_depth, search);
}

}  // namespace ialc
