#include <doctest.h>

#include "generators.hpp"
#include "ialc/calculus.hpp"
#include "ialc/enumerate.hpp"
#include "ialc/parser.hpp"
#include "ialc/printer.hpp"
#include "ialc/proof_io.hpp"
#include "rule_instances.hpp"

using namespace ialc;

namespace {

Sequent seq(const char* text) { return parse_sequent(text); }

}  // namespace

TEST_CASE("check_node accepts exact rule instances") {
    SUBCASE("AX closes when the succedent occurs on the left") {
        CHECK(check_node(RuleName::Ax, seq("A ; x R y ; B |- B"), {}, {}).ok);
        CHECK(check_node(RuleName::Ax, seq("x : A |- x : A"), {}, {}).ok);
        CHECK(!check_node(RuleName::Ax, seq("A |- B"), {}, {}).ok);
    }

    SUBCASE("BOT-L closes on falsum items, labelled or not") {
        CHECK(check_node(RuleName::BotL, seq("x : Bot |- y : A"), {}, {}).ok);
        CHECK(check_node(RuleName::BotL, seq("Bot |- A"), {}, {}).ok);
        CHECK(!check_node(RuleName::BotL, seq("x : some R.Bot |- x : Bot"), {}, {}).ok);
    }

    SUBCASE("the promotion rule for the existential quantifier") {
        // The derivation step used by the first theorem fixture.
        RuleCheck rc = check_node(RuleName::PExists,
                                  seq("all R.(A -> B) ; some R.A |- some R.B"),
                                  {seq("A -> B ; A |- B")}, {});
        CHECK(rc.ok);
        // A context concept without the quantifier prefix breaks the shape.
        CHECK(!check_node(RuleName::PExists, seq("A -> B ; some R.A |- some R.B"),
                          {seq("A -> B ; A |- B")}, {})
                   .ok);
    }

    SUBCASE("EXISTS-L freshness") {
        Instantiation inst;
        inst.fresh = "y";
        // y occurs in the conclusion: rejected with the FRESHNESS reason.
        RuleCheck rc = check_node(RuleName::ExistsL, seq("x : some R.A ; y : B |- x : B"),
                                  {seq("x R y ; y : A ; y : B |- x : B")}, inst);
        CHECK(!rc.ok);
        CHECK(rc.reason.find("FRESHNESS") != std::string::npos);
        // Fresh nominal: accepted.
        CHECK(check_node(RuleName::ExistsL, seq("x : some R.A |- x : B"),
                         {seq("x R y ; y : A |- x : B")}, inst)
                  .ok);
    }

    SUBCASE("FORALL-R requires its premise nominal to be fresh") {
        CHECK(check_node(RuleName::ForallR, seq("|- x : all R.A"),
                         {seq("x R y |- y : A")}, {})
                  .ok);
        RuleCheck rc = check_node(RuleName::ForallR, seq("y : A |- x : all R.A"),
                                  {seq("y : A ; x R y |- y : A")}, {});
        CHECK(!rc.ok);
        CHECK(rc.reason.find("FRESHNESS") != std::string::npos);
    }

    SUBCASE("two-premise rules accept shared and split contexts") {
        // Split: the context distributes.
        CHECK(check_node(RuleName::SubsL, seq("A -> B ; A |- B"),
                         {seq("A |- A"), seq("B |- B")}, {})
                  .ok);
        // Shared: both premises carry the whole context.
        CHECK(check_node(RuleName::NSubsL,
                         seq("x : (some R.A -> all R.B) ; x R y ; y : A |- y : B"),
                         {seq("x R y ; y : A |- x : some R.A"),
                          seq("x R y ; y : A ; x : all R.B |- y : B")},
                         {})
                  .ok);
        CHECK(!check_node(RuleName::SubsL, seq("A -> B |- B"),
                          {seq("A |- A"), seq("B |- B")}, {})
                   .ok);
    }

    SUBCASE("arity and tbox carrying are enforced") {
        RuleCheck rc = check_node(RuleName::SubsR, seq("|- A -> B"), {}, {});
        CHECK(!rc.ok);
        CHECK(rc.reason.find("ARITY") != std::string::npos);
        RuleCheck rc2 = check_node(RuleName::SubsR, seq("|- A -> B"),
                                   {seq("tbox: C -> D | A |- B")}, {});
        CHECK(!rc2.ok);
        CHECK(rc2.reason.find("TBOX") != std::string::npos);
    }

    SUBCASE("structural rules and cut") {
        CHECK(check_node(RuleName::Weak, seq("A ; B |- C"), {seq("A |- C")}, {}).ok);
        CHECK(check_node(RuleName::Contr, seq("A |- A"), {seq("A ; A |- A")}, {}).ok);
        Instantiation cut;
        cut.cut = Statement::formula(Concept::atom("B"));
        CHECK(check_node(RuleName::Cut, seq("A |- C"), {seq("A |- B"), seq("B |- C")},
                         cut)
                  .ok);
        Instantiation wrong;
        wrong.cut = Statement::formula(Concept::atom("A"));
        CHECK(!check_node(RuleName::Cut, seq("A |- C"), {seq("A |- B"), seq("B |- C")},
                          wrong)
                   .ok);
    }

    SUBCASE("the labelling rule adds one nominal to concepts only") {
        CHECK(check_node(RuleName::PN, seq("x : A ; y R z |- x : B"),
                         {seq("A ; y R z |- B")}, {})
                  .ok);
        CHECK(!check_node(RuleName::PN, seq("x : A ; y : B |- x : B"),
                          {seq("A ; B |- B")}, {})
                   .ok);  // y : B would need the same label x
    }
}

TEST_CASE("check_proof verdicts") {
    SUBCASE("a single axiom node is a proof") {
        ProofTree t{seq("A |- A"), RuleName::Ax, {}, {}};
        CHECK(check_proof(t).accepted);
    }

    SUBCASE("instantiation bookkeeping is enforced") {
        ProofTree missing_fresh{seq("x : some R.A |- x : B"),
                                RuleName::ExistsL,
                                {},
                                {ProofTree{seq("x R y ; y : A |- x : B"), RuleName::Ax, {}, {}}}};
        CheckVerdict v = check_proof(missing_fresh);
        CHECK(!v.accepted);
        bool found = false;
        for (const auto& f : v.failures) {
            if (f.reason.find("INSTANTIATION") != std::string::npos) found = true;
        }
        CHECK(found);

        Instantiation stray;
        stray.fresh = "y";
        ProofTree stray_fresh{seq("A |- A"), RuleName::Ax, stray, {}};
        CHECK(!check_proof(stray_fresh).accepted);
    }

    SUBCASE("a mutilated derivation is rejected at the damaged node") {
        ProofTree t = load_proof_file(std::string(IALC_CORPUS_DIR) + "/proofs/axiom1.ipf");
        REQUIRE(check_proof(t).accepted);
        // Drop the promotion node's premise.
        ProofTree damaged = t;
        ProofTree* cursor = &damaged;
        std::vector<int> expected_path;
        while (cursor->rule != RuleName::PExists) {
            REQUIRE(!cursor->premises.empty());
            expected_path.push_back(0);
            cursor = &cursor->premises[0];
        }
        cursor->premises.clear();
        CheckVerdict v = check_proof(damaged);
        CHECK(!v.accepted);
        REQUIRE(!v.failures.empty());
        CHECK(v.failures[0].path == expected_path);
        CHECK(v.failures[0].reason.find("ARITY") != std::string::npos);
    }
}

TEST_CASE("proof files support the derived-rule macros") {
    const std::string text =
        "1. A -> A |- A -> A [AX]\n"
        "2. |- (A -> A) -> A -> A [SUBS-R premises=1]\n"
        "3. A |- A [AX]\n"
        "4. |- A -> A [SUBS-R premises=3]\n"
        "5. |- A -> A [MP premises=4,2]\n";
    ProofTree t = parse_proof(text);
    CHECK(check_proof(t).accepted);
    CHECK(t.conclusion == seq("|- A -> A"));
    CHECK(t.rule == RuleName::Cut);  // MP expands into cuts over SUBS-L

    const std::string nec =
        "1. A |- A [AX]\n"
        "2. |- A -> A [SUBS-R premises=1]\n"
        "3. |- all R.(A -> A) [NEC premises=2]\n";
    ProofTree t2 = parse_proof(nec);
    CHECK(t2.rule == RuleName::PForall);
    CHECK(check_proof(t2).accepted);
}

TEST_CASE("proof files reject malformed references") {
    CHECK_THROWS_AS(parse_proof("1. A |- A [AX premises=1]\n"), ParseError);  // forward/self
    CHECK_THROWS_AS(parse_proof("1. A |- A [AX]\n2. B |- B [AX]\n"), ParseError);  // orphan
    CHECK_THROWS_AS(parse_proof("1. A |- A [NO-SUCH-RULE]\n"), ParseError);
    CHECK_THROWS_AS(parse_proof("2. A |- A [AX]\n1. B |- B [AX]\n"), ParseError);
}

TEST_CASE("rule-local soundness on random instances") {
    testgen::Rng rng(2024);
    Signature sig{{"A", "B"}, {"R"}, {"x", "y"}};
    int collected = 0;
    int iter = 0;
    while (collected < 30 && iter < 2000) {
        ++iter;
        RuleName rule = all_rules()[static_cast<std::size_t>(iter) % all_rules().size()];
        auto inst = testgen::random_rule_instance(rng, rule, sig);
        if (!inst) continue;
        REQUIRE(check_node(inst->rule, inst->conclusion, inst->premises, inst->inst).ok);
        Sequent combined = inst->conclusion;
        for (const auto& p : inst->premises) {
            for (const auto& item : p.antecedent) combined.antecedent.push_back(item);
            combined.antecedent.push_back(p.succedent);
        }
        Signature model_sig = Signature::of(combined);
        bool premises_valid = true;
        bool conclusion_valid = true;
        for_each_model(model_sig, 3, [&](const Interpretation& m) {
            for (const auto& p : inst->premises) {
                if (!sequent_valid(m, p)) {
                    premises_valid = false;
                    return false;
                }
            }
            if (!sequent_valid(m, inst->conclusion)) {
                conclusion_valid = false;
                return false;
            }
            return true;
        });
        if (!premises_valid) continue;
        ++collected;
        CHECK(conclusion_valid);
    }
    CHECK(collected == 30);
}

TEST_CASE("randomly grown proofs stay sound") {
    // Grow accepted proofs forward from axiom leaves, then validate their
    // conclusions semantically.
    testgen::Rng rng(77);
    Signature sig{{"A", "B"}, {"R"}, {"x"}};
    std::vector<ProofTree> pool;
    for (int k = 0; k < 6; ++k) {
        Statement d = testgen::random_item(rng, sig, 2);
        std::vector<Statement> ant = {d};
        if (rng.chance(0.5)) ant.push_back(testgen::random_item(rng, sig, 2));
        pool.push_back(ProofTree{Sequent{{}, ant, d}, RuleName::Ax, {}, {}});
    }
    auto succ_concept = [](const ProofTree& t) {
        return t.conclusion.succedent.kind() == StatementKind::Formula;
    };
    for (int k = 0; k < 40; ++k) {
        const ProofTree& t = pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
        int move = rng.below(4);
        if (move == 0) {  // WEAK
            Sequent c = t.conclusion;
            c.antecedent.push_back(testgen::random_item(rng, sig, 2));
            pool.push_back(ProofTree{c, RuleName::Weak, {}, {t}});
        } else if (move == 1) {  // P-N
            Sequent c{{}, {}, t.conclusion.succedent};
            for (const auto& item : t.conclusion.antecedent) {
                c.antecedent.push_back(item.kind() == StatementKind::Formula
                                           ? Statement::nominal("x", item)
                                           : item);
            }
            if (t.conclusion.succedent.kind() == StatementKind::Formula) {
                c.succedent = Statement::nominal("x", t.conclusion.succedent);
            }
            pool.push_back(ProofTree{c, RuleName::PN, {}, {t}});
        } else if (move == 2 && succ_concept(t)) {  // OR1-R
            Sequent c = t.conclusion;
            c.succedent = Statement::formula(Concept::disj(
                t.conclusion.succedent.formula_body(), testgen::random_concept(rng, sig, 2)));
            pool.push_back(ProofTree{c, RuleName::Or1R, {}, {t}});
        } else if (move == 3 && succ_concept(t)) {  // P-FORALL when all items are concepts
            bool all_concepts = true;
            for (const auto& item : t.conclusion.antecedent) {
                all_concepts = all_concepts && item.kind() == StatementKind::Formula;
            }
            if (!all_concepts) continue;
            Sequent c{{}, {}, Statement::formula(Concept::forall(
                                   "R", t.conclusion.succedent.formula_body()))};
            for (const auto& item : t.conclusion.antecedent) {
                c.antecedent.push_back(
                    Statement::formula(Concept::forall("R", item.formula_body())));
            }
            pool.push_back(ProofTree{c, RuleName::PForall, {}, {t}});
        }
    }
    testgen::Rng model_rng(13);
    for (const auto& t : pool) {
        CHECK(check_proof(t).accepted);
        Signature model_sig = Signature::of(t.conclusion);
        bool valid = true;
        for_each_model(model_sig, 2, [&](const Interpretation& m) {
            valid = sequent_valid(m, t.conclusion);
            return valid;
        });
        CHECK(valid);
        for (int k = 0; k < 10; ++k) {
            Interpretation m = testgen::random_linted_model(model_rng, model_sig, 4);
            CHECK(sequent_valid(m, t.conclusion));
        }
    }
}
