#ifndef IALC_TESTS_RULE_INSTANCES_HPP
#define IALC_TESTS_RULE_INSTANCES_HPP

// Forward construction of random single-rule instances, straight from each
// rule schema.  Used by the rule-local soundness suites: an instance whose
// premises are exhaustively valid must have a valid conclusion.

#include <optional>

#include "ialc/calculus.hpp"

#include "generators.hpp"

namespace ialc::testgen {

struct RuleInstance {
    RuleName rule;
    Sequent conclusion;
    std::vector<Sequent> premises;
    Instantiation inst;
};

namespace detail {

inline std::vector<Statement> random_context(Rng& rng, const Signature& sig, int max_items,
                                             int depth) {
    std::vector<Statement> out;
    int n = rng.below(max_items + 1);
    for (int k = 0; k < n; ++k) out.push_back(random_item(rng, sig, depth));
    return out;
}

inline std::vector<Statement> cat(std::vector<Statement> a, const std::vector<Statement>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<Statement> with(std::vector<Statement> v, const Statement& s) {
    v.push_back(s);
    return v;
}

}  // namespace detail

/// A checkable instance of the rule, or nullopt when the draw is degenerate.
/// Fresh nominals for EXISTS-L / FORALL-R are taken outside the signature,
/// so the side conditions hold by construction.
inline std::optional<RuleInstance> random_rule_instance(Rng& rng, RuleName rule,
                                                        const Signature& sig) {
    using namespace detail;
    const int depth = 2;
    auto ctx = [&](int max_items = 2) { return random_context(rng, sig, max_items, depth); };
    auto concept_ = [&] { return random_concept(rng, sig, depth); };
    auto item = [&] { return random_item(rng, sig, depth); };
    auto nominal = [&]() -> std::string {
        return sig.nominals.empty() ? "x" : rng.pick(sig.nominals);
    };
    auto role = [&]() -> std::string { return sig.roles.empty() ? "R" : rng.pick(sig.roles); };
    const std::string fresh = "zf";  // outside the signature by convention
    auto seq = [](std::vector<Statement> ant, Statement succ) {
        return Sequent{{}, std::move(ant), std::move(succ)};
    };

    switch (rule) {
        case RuleName::Ax: {
            Statement d = item();
            return RuleInstance{rule, seq(with(ctx(), d), d), {}, {}};
        }
        case RuleName::BotL: {
            Statement bot = rng.chance(0.5)
                                ? Statement::formula(Concept::bottom())
                                : Statement::nominal(nominal(), Concept::bottom());
            return RuleInstance{rule, seq(with(ctx(), bot), item()), {}, {}};
        }
        case RuleName::SubsR: {
            auto g = ctx();
            Concept a = concept_(), b = concept_();
            return RuleInstance{rule,
                                seq(g, Statement::formula(Concept::subs(a, b))),
                                {seq(with(g, Statement::formula(a)), Statement::formula(b))},
                                {}};
        }
        case RuleName::NSubsR: {
            auto g = ctx();
            Concept a = concept_(), b = concept_();
            std::string x = nominal();
            return RuleInstance{
                rule,
                seq(g, Statement::nominal(x, Concept::subs(a, b))),
                {seq(with(g, Statement::nominal(x, a)), Statement::nominal(x, b))},
                {}};
        }
        case RuleName::SubsL:
        case RuleName::NSubsL: {
            bool nominal_rule = rule == RuleName::NSubsL;
            auto g1 = ctx(1);
            auto g2 = rng.chance(0.5) ? g1 : ctx(1);  // shared or split
            bool shared = multiset_equal(g1, g2);
            Concept a = concept_(), b = concept_();
            Statement d = item();
            std::string x = nominal();
            Statement head_a = nominal_rule ? Statement::nominal(x, a) : Statement::formula(a);
            Statement head_b = nominal_rule ? Statement::nominal(x, b) : Statement::formula(b);
            Statement principal = nominal_rule
                                      ? Statement::nominal(x, Concept::subs(a, b))
                                      : Statement::formula(Concept::subs(a, b));
            auto gamma = shared ? g1 : cat(g1, g2);
            return RuleInstance{rule,
                                seq(with(gamma, principal), d),
                                {seq(g1, head_a), seq(with(g2, head_b), d)},
                                {}};
        }
        case RuleName::AndR:
        case RuleName::NAndR: {
            bool nominal_rule = rule == RuleName::NAndR;
            auto g1 = ctx(1);
            auto g2 = rng.chance(0.5) ? g1 : ctx(1);
            bool shared = multiset_equal(g1, g2);
            Concept a = concept_(), b = concept_();
            std::string x = nominal();
            Statement head = nominal_rule ? Statement::nominal(x, Concept::conj(a, b))
                                          : Statement::formula(Concept::conj(a, b));
            Statement pa = nominal_rule ? Statement::nominal(x, a) : Statement::formula(a);
            Statement pb = nominal_rule ? Statement::nominal(x, b) : Statement::formula(b);
            auto gamma = shared ? g1 : cat(g1, g2);
            return RuleInstance{rule, seq(gamma, head), {seq(g1, pa), seq(g2, pb)}, {}};
        }
        case RuleName::AndL:
        case RuleName::NAndL: {
            bool nominal_rule = rule == RuleName::NAndL;
            auto g = ctx();
            Concept a = concept_(), b = concept_();
            Statement d = item();
            std::string x = nominal();
            Statement principal = nominal_rule ? Statement::nominal(x, Concept::conj(a, b))
                                               : Statement::formula(Concept::conj(a, b));
            Statement pa = nominal_rule ? Statement::nominal(x, a) : Statement::formula(a);
            Statement pb = nominal_rule ? Statement::nominal(x, b) : Statement::formula(b);
            return RuleInstance{
                rule, seq(with(g, principal), d), {seq(with(with(g, pa), pb), d)}, {}};
        }
        case RuleName::Or1R:
        case RuleName::Or2R:
        case RuleName::NOr1R:
        case RuleName::NOr2R: {
            bool nominal_rule = rule == RuleName::NOr1R || rule == RuleName::NOr2R;
            bool first = rule == RuleName::Or1R || rule == RuleName::NOr1R;
            auto g = ctx();
            Concept a = concept_(), b = concept_();
            std::string x = nominal();
            Statement head = nominal_rule ? Statement::nominal(x, Concept::disj(a, b))
                                          : Statement::formula(Concept::disj(a, b));
            Concept active = first ? a : b;
            Statement prem = nominal_rule ? Statement::nominal(x, active)
                                          : Statement::formula(active);
            return RuleInstance{rule, seq(g, head), {seq(g, prem)}, {}};
        }
        case RuleName::OrL:
        case RuleName::NOrL: {
            bool nominal_rule = rule == RuleName::NOrL;
            auto g1 = ctx(1);
            auto g2 = rng.chance(0.5) ? g1 : ctx(1);
            bool shared = multiset_equal(g1, g2);
            Concept a = concept_(), b = concept_();
            Statement d = item();
            std::string x = nominal();
            Statement principal = nominal_rule ? Statement::nominal(x, Concept::disj(a, b))
                                               : Statement::formula(Concept::disj(a, b));
            Statement pa = nominal_rule ? Statement::nominal(x, a) : Statement::formula(a);
            Statement pb = nominal_rule ? Statement::nominal(x, b) : Statement::formula(b);
            auto gamma = shared ? g1 : cat(g1, g2);
            return RuleInstance{rule,
                                seq(with(gamma, principal), d),
                                {seq(with(g1, pa), d), seq(with(g2, pb), d)},
                                {}};
        }
        case RuleName::ForallR: {
            auto g = ctx();
            Concept a = concept_();
            std::string x = nominal(), r = role();
            Sequent conclusion = seq(g, Statement::nominal(x, Concept::forall(r, a)));
            if (nominals_of(conclusion).count(fresh)) return std::nullopt;
            return RuleInstance{rule,
                                conclusion,
                                {seq(with(g, Statement::role(x, r, fresh)),
                                     Statement::nominal(fresh, a))},
                                {}};
        }
        case RuleName::ForallL: {
            auto g = ctx();
            Concept a = concept_();
            std::string x = nominal(), y = nominal(), r = role();
            auto gamma = with(with(g, Statement::nominal(x, Concept::forall(r, a))),
                              Statement::role(x, r, y));
            Statement d = item();
            return RuleInstance{
                rule, seq(gamma, d), {seq(with(gamma, Statement::nominal(y, a)), d)}, {}};
        }
        case RuleName::ExistsR: {
            auto g1 = ctx(1);
            auto g2 = rng.chance(0.5) ? g1 : ctx(1);
            bool shared = multiset_equal(g1, g2);
            Concept a = concept_();
            std::string x = nominal(), y = nominal(), r = role();
            auto gamma = shared ? g1 : cat(g1, g2);
            return RuleInstance{rule,
                                seq(gamma, Statement::nominal(x, Concept::exists(r, a))),
                                {seq(g1, Statement::role(x, r, y)),
                                 seq(g2, Statement::nominal(y, a))},
                                {}};
        }
        case RuleName::ExistsL: {
            auto g = ctx();
            Concept a = concept_();
            std::string x = nominal(), r = role();
            Statement d = item();
            Sequent conclusion =
                seq(with(g, Statement::nominal(x, Concept::exists(r, a))), d);
            if (nominals_of(conclusion).count(fresh)) return std::nullopt;
            Instantiation inst;
            inst.fresh = fresh;
            return RuleInstance{rule,
                                conclusion,
                                {seq(with(with(g, Statement::role(x, r, fresh)),
                                          Statement::nominal(fresh, a)),
                                     d)},
                                inst};
        }
        case RuleName::PExists: {
            std::string r = role();
            int k = rng.below(3);
            std::vector<Statement> prem_ant, conc_ant;
            for (int j = 0; j < k; ++j) {
                if (rng.chance(0.7)) {
                    Concept g = concept_();
                    prem_ant.push_back(Statement::formula(g));
                    conc_ant.push_back(Statement::formula(Concept::forall(r, g)));
                } else {
                    Statement s = random_item(rng, sig, 1);
                    if (s.kind() == StatementKind::Formula) continue;
                    prem_ant.push_back(s);
                    conc_ant.push_back(s);
                }
            }
            Concept a = concept_(), b = concept_();
            prem_ant.push_back(Statement::formula(a));
            conc_ant.push_back(Statement::formula(Concept::exists(r, a)));
            return RuleInstance{rule,
                                seq(conc_ant, Statement::formula(Concept::exists(r, b))),
                                {seq(prem_ant, Statement::formula(b))},
                                {}};
        }
        case RuleName::PForall: {
            std::string r = role();
            int k = rng.below(3);
            std::vector<Statement> prem_ant, conc_ant;
            for (int j = 0; j < k; ++j) {
                if (rng.chance(0.7)) {
                    Concept g = concept_();
                    prem_ant.push_back(Statement::formula(g));
                    conc_ant.push_back(Statement::formula(Concept::forall(r, g)));
                } else {
                    Statement s = random_item(rng, sig, 1);
                    if (s.kind() == StatementKind::Formula) continue;
                    prem_ant.push_back(s);
                    conc_ant.push_back(s);
                }
            }
            Concept a = concept_();
            return RuleInstance{rule,
                                seq(conc_ant, Statement::formula(Concept::forall(r, a))),
                                {seq(prem_ant, Statement::formula(a))},
                                {}};
        }
        case RuleName::PN: {
            std::string x = nominal();
            int k = rng.below(3);
            std::vector<Statement> prem_ant, conc_ant;
            for (int j = 0; j < k; ++j) {
                Statement s = random_item(rng, sig, 1);
                prem_ant.push_back(s);
                if (s.kind() == StatementKind::Formula) {
                    conc_ant.push_back(Statement::nominal(x, s));
                } else {
                    conc_ant.push_back(s);
                }
            }
            Statement d = item();
            Statement conc_d = d.kind() == StatementKind::Formula ? Statement::nominal(x, d) : d;
            return RuleInstance{rule, seq(conc_ant, conc_d), {seq(prem_ant, d)}, {}};
        }
        case RuleName::Weak: {
            auto g = ctx();
            Statement d = item();
            return RuleInstance{rule, seq(with(g, item()), d), {seq(g, d)}, {}};
        }
        case RuleName::Contr: {
            auto g = ctx();
            Statement dup = item();
            Statement d = item();
            return RuleInstance{
                rule, seq(with(g, dup), d), {seq(with(with(g, dup), dup), d)}, {}};
        }
        case RuleName::Cut: {
            auto g1 = ctx(1);
            auto g2 = rng.chance(0.5) ? g1 : ctx(1);
            bool shared = multiset_equal(g1, g2);
            Statement c = item();
            Statement d = item();
            Instantiation inst;
            inst.cut = c;
            auto gamma = shared ? g1 : cat(g1, g2);
            return RuleInstance{
                rule, seq(gamma, d), {seq(g1, c), seq(with(g2, c), d)}, inst};
        }
    }
    return std::nullopt;
}

}  // namespace ialc::testgen

#endif  // IALC_TESTS_RULE_INSTANCES_HPP
