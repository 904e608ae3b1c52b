#include <doctest.h>

#include "generators.hpp"
#include "ialc/enumerate.hpp"
#include "ialc/model_io.hpp"
#include "ialc/parser.hpp"
#include "ialc/semantics.hpp"

using namespace ialc;

namespace {

Interpretation two_chain() {
    // w0 below w1, A true exactly at w1, x anchored at w0.
    Interpretation m = parse_model(
        "world w0\nworld w1\nprec w0 w1\natom A w1\nnominal x w0\n", false);
    return m;
}

Interpretation chisholm() {
    return parse_model(
        "world l0\nworld l1\nworld l2\nworld l3\nworld l4\n"
        "prec l4 l0\nprec l4 l3\nprec l0 l1\nprec l0 l2\n"
        "nominal l0 l0\nnominal l1 l1\nnominal l2 l2\nnominal l3 l3\nnominal l4 l4\n",
        false);
}

}  // namespace

TEST_CASE("hereditary closure") {
    Interpretation m = parse_model("world w0\nworld w1\nprec w0 w1\natom A w0\n", true);
    CHECK(m.atoms().at("A") == 0b11);

    Interpretation closed = hereditary_closure(m);
    CHECK(closed.atoms().at("A") == m.atoms().at("A"));  // idempotent

    // Loading without --close rejects the unclosed valuation.
    CHECK_THROWS_AS(parse_model("world w0\nworld w1\nprec w0 w1\natom A w0\n", false),
                    ModelError);

    // No atoms at all: closure is the identity.
    Interpretation ch = chisholm();
    Interpretation ch2 = hereditary_closure(ch);
    CHECK(ch2.atoms().empty());
}

TEST_CASE("frame condition linting") {
    SUBCASE("chisholm model passes, role conditions vacuous") {
        LintReport r = check_frame_conditions(chisholm());
        CHECK(r.passed);
        CHECK(r.violations.empty());
        CHECK(r.warnings.empty());
    }

    SUBCASE("missing role successor above violates F1") {
        Interpretation m;
        int w = m.add_entity("w");
        int w2 = m.add_entity("w'");
        int v = m.add_entity("v");
        m.add_prec_edge(w, w2);
        m.close_precedes();
        m.add_role_pair("R", w, v);
        LintReport r = check_frame_conditions(m);
        CHECK(!r.passed);
        bool found = false;
        for (const auto& viol : r.violations) {
            if (viol.tag == LintTag::F1 && viol.witness == std::vector<int>{w, w2, v}) {
                found = true;
            }
        }
        CHECK(found);
    }

    SUBCASE("refined successor without predecessor violates F2") {
        Interpretation m;
        int w = m.add_entity("w");
        int v = m.add_entity("v");
        int v2 = m.add_entity("v'");
        m.add_prec_edge(v, v2);
        m.close_precedes();
        m.add_role_pair("R", w, v);
        LintReport r = check_frame_conditions(m);
        bool found = false;
        for (const auto& viol : r.violations) {
            if (viol.tag == LintTag::F2 && viol.witness == std::vector<int>{w, v, v2}) {
                found = true;
            }
        }
        CHECK(found);
    }

    SUBCASE("unclosed valuation violates HEREDITY") {
        Interpretation m;
        int w0 = m.add_entity("w0");
        int w1 = m.add_entity("w1");
        m.add_prec_edge(w0, w1);
        m.close_precedes();
        m.add_atom_member("A", w0);
        LintReport r = check_frame_conditions(m);
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].tag == LintTag::Heredity);
        CHECK(r.violations[0].witness == std::vector<int>{w0, w1});
        CHECK(r.violations[0].symbol == "A");
        CHECK(!check_frame_conditions(hereditary_closure(m)).violations.size());
    }

    SUBCASE("raw relations can violate REFL and TRANS") {
        Interpretation m;
        m.add_entity("a");
        m.add_entity("b");
        m.add_entity("c");
        // a<=b, b<=c but not a<=c, and b not reflexive.
        m.set_precedes_raw({0b011, 0b100, 0b100});
        LintReport r = check_frame_conditions(m);
        bool refl = false, trans = false;
        for (const auto& viol : r.violations) {
            if (viol.tag == LintTag::Refl && viol.witness == std::vector<int>{1}) refl = true;
            if (viol.tag == LintTag::Trans && viol.witness == std::vector<int>{0, 1, 2})
                trans = true;
        }
        CHECK(refl);
        CHECK(trans);
    }

    SUBCASE("role not closed under refinement warns but passes") {
        Interpretation m;
        int w0 = m.add_entity("w0");
        int w1 = m.add_entity("w1");
        m.add_prec_edge(w0, w1);
        m.close_precedes();
        m.add_role_pair("R", w0, w0);
        m.add_role_pair("R", w1, w1);  // F1/F2 hold, but (w0,w1) etc. missing
        LintReport r = check_frame_conditions(m);
        CHECK(r.passed);
        REQUIRE(!r.warnings.empty());
        CHECK(r.warnings[0].role == "R");
    }
}

TEST_CASE("concept evaluation") {
    Interpretation ch = chisholm();
    // p has the empty extension, so not P holds everywhere, l3 included.
    EntitySet not_p = eval_concept(ch, parse_concept("not P"));
    CHECK(not_p == ch.all_entities());
    CHECK((not_p >> ch.entity_index("l3")) & 1u);
    CHECK(eval_concept(ch, parse_concept("Top")) == ch.all_entities());
    CHECK(eval_concept(ch, parse_concept("Unknown")) == 0);  // unknown atom is empty
    CHECK(eval_concept(ch, parse_concept("some Unknown.Top")) == 0);  // unknown role too

    Interpretation chain = two_chain();
    // w0 lacks A; w1 above w0 has A, so w0 is in neither A nor not A.
    CHECK(eval_concept(chain, parse_concept("A or not A")) == 0b10);
}

TEST_CASE("statement satisfaction") {
    Interpretation ch = chisholm();
    CHECK(satisfies_statement(ch, parse_statement("l3 : not P")));
    CHECK(satisfies_statement(ch, parse_statement("l1 : Top")));

    Interpretation chain = two_chain();
    CHECK(satisfies_statement(chain, parse_statement("x : not (not A)")));
    CHECK(!satisfies_statement(chain, parse_statement("x : A")));

    CHECK_THROWS_AS(satisfies_statement(chain, parse_statement("nobody : A")), EvalError);
    try {
        satisfies_statement(chain, parse_statement("nobody : A"));
    } catch (const EvalError& e) {
        CHECK(std::string(e.what()).find("nobody") != std::string::npos);
    }
}

TEST_CASE("nested nominal assertions shift anchors without changing truth") {
    testgen::Rng rng(7);
    Signature sig{{"A", "B"}, {"R"}, {"x", "y"}};
    for (int k = 0; k < 60; ++k) {
        Interpretation m = testgen::random_linted_model(rng, sig, 3);
        Concept c = testgen::random_concept(rng, sig, 3);
        Statement inner = Statement::nominal("y", c);
        Statement outer = Statement::nominal("x", inner);
        CHECK(satisfies_statement(m, outer) == satisfies_statement(m, inner));
    }
}

TEST_CASE("role assertion satisfaction quantifies over refinements") {
    Interpretation m;
    int x = m.add_entity("ex");
    int x2 = m.add_entity("ex2");
    int y = m.add_entity("ey");
    m.add_prec_edge(x, x2);
    m.close_precedes();
    m.add_role_pair("R", x, y);
    m.add_role_pair("R", x2, y);
    m.set_nominal("x", x);
    m.set_nominal("y", y);
    REQUIRE(check_frame_conditions(m).passed);
    CHECK(satisfies_statement(m, parse_statement("x R y")));

    // Remove the refined pair: the assertion no longer holds even though
    // (x, y) itself is related.
    Interpretation m2 = m;
    std::vector<EntitySet> rows(3, 0);
    rows[static_cast<std::size_t>(x)] = EntitySet{1} << y;
    m2.set_role("R", rows);
    CHECK(!satisfies_statement(m2, parse_statement("x R y")));
}

TEST_CASE("sequent validity on a fixed model") {
    Interpretation chain = two_chain();
    CHECK(sequent_valid(chain, parse_sequent("A |- A")));
    CHECK(sequent_valid(chisholm(), parse_sequent("A |- A")));
    CHECK(!sequent_valid(chain, parse_sequent("|- x : (A or not A)")));

    // A failing tbox makes the sequent vacuously valid.
    CHECK(sequent_valid(chain, parse_sequent("tbox: Top -> A | |- x : Bot")));
}

TEST_CASE("tbox-global reading validated by enumeration") {
    CHECK(valid_on_all_models(parse_sequent("tbox: A -> B | x : A |- x : B"), 3));
    CHECK(valid_on_all_models(parse_sequent("x : all R.A ; x R y |- y : A"), 3));
}

TEST_CASE("heredity: extensions are closed under refinement") {
    testgen::Rng rng(11);
    Signature sig{{"A", "B"}, {"R"}, {}};
    for (int k = 0; k < 150; ++k) {
        Interpretation m = testgen::random_linted_model(rng, sig, 4);
        Concept c = testgen::random_concept(rng, sig, 4);
        EntitySet ext = eval_concept(m, c);
        EntitySet rest = ext;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            CHECK((m.up_set(e) & ~ext) == 0);
        }
    }
}

TEST_CASE("constructive identities for the existential quantifier") {
    Concept bot_id = parse_concept("some R.Bot");
    Concept lhs = parse_concept("some R.(A or B)");
    Concept rhs = parse_concept("some R.A or some R.B");
    Signature sig{{"A", "B"}, {"R"}, {}};
    int models = 0;
    for_each_model(sig, 2, [&](const Interpretation& m) {
        ++models;
        CHECK(eval_concept(m, bot_id) == 0);
        CHECK(eval_concept(m, lhs) == eval_concept(m, rhs));
        return true;
    });
    CHECK(models > 100);
}
