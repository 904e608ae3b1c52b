#include <doctest.h>

#include "ialc/calculus.hpp"
#include "ialc/parser.hpp"
#include "ialc/proof_io.hpp"
#include "ialc/prover.hpp"

using namespace ialc;

TEST_CASE("trivial goals") {
    auto ax = prove_bounded(parse_sequent("A |- A"), 1);
    REQUIRE(ax.has_value());
    CHECK(ax->rule == RuleName::Ax);
    CHECK(ax->premises.empty());

    CHECK(!prove_bounded(parse_sequent("A |- B"), 6).has_value());
}

TEST_CASE("the existential-falsum theorem at depth 3") {
    auto proof = prove_bounded(parse_sequent("|- x : (some R.Bot -> Bot)"), 3);
    REQUIRE(proof.has_value());
    CHECK(check_proof(*proof).accepted);
    CHECK(proof->rule == RuleName::NSubsR);
    REQUIRE(proof->premises.size() == 1);
    CHECK(proof->premises[0].rule == RuleName::ExistsL);
    REQUIRE(proof->premises[0].premises.size() == 1);
    CHECK(proof->premises[0].premises[0].rule == RuleName::BotL);
}

TEST_CASE("no proof for paracomplete principles") {
    CHECK(!prove_bounded(parse_sequent("|- x : (A or not A)"), 8).has_value());
    CHECK(!prove_bounded(parse_sequent("|- x : (not (not A) -> A)"), 8).has_value());
}

TEST_CASE("search output always passes the checker") {
    const char* goals[] = {
        "A and B |- A",
        "A |- A or B",
        "A and (A -> B) |- B",
        "x : (A and B) |- x : A",
        "|- x : (A -> A)",
        "x : all R.A ; x R y |- y : A",
        "|- A -> B -> A",
        "A or A |- A",
    };
    for (const char* text : goals) {
        auto proof = prove_bounded(parse_sequent(text), 8);
        REQUIRE_MESSAGE(proof.has_value(), text);
        CHECK(check_proof(*proof).accepted);
        CHECK(compare(proof->conclusion, parse_sequent(text)) == 0);
        // Emitted files reload to the same tree.
        ProofTree reloaded = parse_proof(write_proof(*proof));
        CHECK(check_proof(reloaded).accepted);
        CHECK(compare(reloaded.conclusion, proof->conclusion) == 0);
    }
}

TEST_CASE("depth budget is respected and capped") {
    // The existential-falsum theorem needs depth 3.
    CHECK(!prove_bounded(parse_sequent("|- x : (some R.Bot -> Bot)"), 2).has_value());
    CHECK_THROWS_AS(prove_bounded(parse_sequent("A |- A"), 13), CapError);
    CHECK_THROWS_AS(prove_bounded(parse_sequent("A |- A"), 0), CapError);
    CHECK(prove_bounded(parse_sequent("A |- A"), 13, 16).has_value());
}

TEST_CASE("search is deterministic") {
    auto a = prove_bounded(parse_sequent("x : some R.(A and B) |- x : some R.A"), 8);
    auto b = prove_bounded(parse_sequent("x : some R.(A and B) |- x : some R.A"), 8);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(write_proof(*a) == write_proof(*b));
}

TEST_CASE("tbox formulas are folded into the antecedent") {
    // The folded sequent carries the tbox entry as an ordinary item.
    auto proof = prove_bounded(parse_sequent("tbox: A -> B | A |- B"), 6);
    REQUIRE(proof.has_value());
    CHECK(proof->conclusion.tbox.empty());
    REQUIRE(proof->conclusion.antecedent.size() == 2);
    CHECK(check_proof(*proof).accepted);
}
