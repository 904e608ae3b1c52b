#ifndef IALC_CORPUS_HPP
#define IALC_CORPUS_HPP

// Bundled fixtures: the Chisholm scenario in both encodings, the five
// theorem derivations, the free-choice permission trace, and the manifest
// that ties fixture files to expected verdicts.
//
// manifest.txt: one fixture per line, `#` comments:
//   <id> <kind> <relative path> <expected>
// kinds: IALC_MODEL (lint-pass|lint-fail), IALC_PROOF (accepted|rejected),
// IALC_SEQUENT (valid|countermodel — exhaustive up to 3 entities),
// SDL_TRACE (accepted|rejected), SDL_SET (sat|unsat — up to 3 worlds).

#include <string>
#include <vector>

#include "ialc/calculus.hpp"
#include "ialc/sdl_trace.hpp"
#include "ialc/semantics.hpp"

namespace ialc::corpus {

enum class FixtureKind { IalcModel, IalcProof, IalcSequent, SdlTrace, SdlSet };

const char* fixture_kind_name(FixtureKind k);

struct Fixture {
    std::string id;
    FixtureKind kind;
    std::string path;      // relative to the corpus directory
    std::string expected;  // verdict token, per kind
};

std::vector<Fixture> load_manifest(const std::string& corpus_dir);

/// Runs the checker matching the fixture kind and returns the verdict token
/// it produced.
std::string run_fixture(const std::string& corpus_dir, const Fixture& f);

struct ChisholmIalc {
    Interpretation model;
    std::vector<Statement> statements;
};

/// The five-world refinement model and the four encoded statements.
ChisholmIalc load_chisholm_ialc(const std::string& corpus_dir);

struct ChisholmSdl {
    std::vector<sdl::Formula> assumptions;
    sdl::DerivationTrace trace;
};

ChisholmSdl load_chisholm_sdl(const std::string& corpus_dir);

struct AxiomProof {
    std::string id;
    Sequent theorem;
    ProofTree proof;
};

/// The five derivations, ids axiom1..axiom5, theorem = root conclusion.
std::vector<AxiomProof> load_axiom_proofs(const std::string& corpus_dir);

sdl::DerivationTrace load_free_choice_trace(const std::string& corpus_dir);

/// The five axiom schemes as concepts over atoms A, B and role R, in the
/// axiomatization order (box-K, diamond-K, diamond-or, diamond-bottom,
/// diamond-to-box).
std::vector<std::pair<std::string, Concept>> axiom_concepts();

}  // namespace ialc::corpus

#endif  // IALC_CORPUS_HPP
