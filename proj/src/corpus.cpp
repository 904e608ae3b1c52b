#include "ialc/corpus.hpp"

#include <fstream>
#include <sstream>

#include "ialc/enumerate.hpp"
#include "ialc/model_io.hpp"
#include "ialc/parser.hpp"
#include "ialc/proof_io.hpp"

namespace ialc::corpus {

const char* fixture_kind_name(FixtureKind k) {
    switch (k) {
        case FixtureKind::IalcModel: return "IALC_MODEL";
        case FixtureKind::IalcProof: return "IALC_PROOF";
        case FixtureKind::IalcSequent: return "IALC_SEQUENT";
        case FixtureKind::SdlTrace: return "SDL_TRACE";
        case FixtureKind::SdlSet: return "SDL_SET";
    }
    return "?";
}

namespace {

FixtureKind kind_from(const std::string& name, int lineno) {
    if (name == "IALC_MODEL") return FixtureKind::IalcModel;
    if (name == "IALC_PROOF") return FixtureKind::IalcProof;
    if (name == "IALC_SEQUENT") return FixtureKind::IalcSequent;
    if (name == "SDL_TRACE") return FixtureKind::SdlTrace;
    if (name == "SDL_SET") return FixtureKind::SdlSet;
    throw ModelError("manifest line " + std::to_string(lineno) + ": unknown kind '" + name +
                     "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Sequent load_sequent_file(const std::string& path) {
    std::string text = read_file(path);
    return parse_sequent(text);
}

}  // namespace

std::vector<Fixture> load_manifest(const std::string& corpus_dir) {
    std::ifstream in(corpus_dir + "/manifest.txt");
    if (!in) throw ModelError("cannot open manifest in '" + corpus_dir + "'");
    std::vector<Fixture> fixtures;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string id, kind, path, expected;
        if (!(fields >> id)) continue;
        if (!(fields >> kind >> path >> expected)) {
            throw ModelError("manifest line " + std::to_string(lineno) +
                             ": expected 'id kind path verdict'");
        }
        fixtures.push_back({id, kind_from(kind, lineno), path, expected});
    }
    return fixtures;
}

std::string run_fixture(const std::string& corpus_dir, const Fixture& f) {
    const std::string path = corpus_dir + "/" + f.path;
    switch (f.kind) {
        case FixtureKind::IalcModel: {
            try {
                Interpretation m = load_model_file(path, false);
                return check_frame_conditions(m).passed ? "lint-pass" : "lint-fail";
            } catch (const ModelError&) {
                return "lint-fail";
            }
        }
        case FixtureKind::IalcProof: {
            ProofTree t = load_proof_file(path);
            return check_proof(t).accepted ? "accepted" : "rejected";
        }
        case FixtureKind::IalcSequent: {
            Sequent q = load_sequent_file(path);
            return valid_on_all_models(q, 3) ? "valid" : "countermodel";
        }
        case FixtureKind::SdlTrace: {
            sdl::DerivationTrace t = sdl::load_trace_file(path);
            return sdl::check_derivation(t).accepted ? "accepted" : "rejected";
        }
        case FixtureKind::SdlSet: {
            auto formulas = sdl::load_formula_set_file(path);
            return sdl::find_model(formulas, 3) ? "sat" : "unsat";
        }
    }
    return "?";
}

ChisholmIalc load_chisholm_ialc(const std::string& corpus_dir) {
    ChisholmIalc out{load_model_file(corpus_dir + "/models/chisholm.ikm", false), {}};
    std::ifstream in(corpus_dir + "/models/chisholm_statements.txt");
    if (!in) throw ModelError("cannot open chisholm statements");
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.statements.push_back(parse_statement(line));
    }
    return out;
}

ChisholmSdl load_chisholm_sdl(const std::string& corpus_dir) {
    ChisholmSdl out{sdl::load_formula_set_file(corpus_dir + "/sdl/chisholm_set.sdl"),
                    sdl::load_trace_file(corpus_dir + "/sdl/chisholm.sdt")};
    return out;
}

std::vector<AxiomProof> load_axiom_proofs(const std::string& corpus_dir) {
    std::vector<AxiomProof> out;
    for (int k = 1; k <= 5; ++k) {
        std::string id = "axiom" + std::to_string(k);
        ProofTree proof = load_proof_file(corpus_dir + "/proofs/" + id + ".ipf");
        out.push_back({id, proof.conclusion, std::move(proof)});
    }
    return out;
}

sdl::DerivationTrace load_free_choice_trace(const std::string& corpus_dir) {
    return sdl::load_trace_file(corpus_dir + "/sdl/free_choice.sdt");
}

std::vector<std::pair<std::string, Concept>> axiom_concepts() {
    const Concept a = Concept::atom("A");
    const Concept b = Concept::atom("B");
    const std::string r = "R";
    auto all = [&](Concept c) { return Concept::forall(r, std::move(c)); };
    auto some = [&](Concept c) { return Concept::exists(r, std::move(c)); };
    std::vector<std::pair<std::string, Concept>> out;
    out.emplace_back("box-K",
                     Concept::subs(all(Concept::subs(a, b)),
                                   Concept::subs(all(a), all(b))));
    out.emplace_back("diamond-K",
                     Concept::subs(all(Concept::subs(a, b)),
                                   Concept::subs(some(a), some(b))));
    out.emplace_back("diamond-or",
                     Concept::subs(some(Concept::disj(a, b)),
                                   Concept::disj(some(a), some(b))));
    out.emplace_back("diamond-bottom", Concept::subs(some(Concept::bottom()), Concept::bottom()));
    out.emplace_back("diamond-to-box",
                     Concept::subs(Concept::subs(some(a), all(b)),
                                   all(Concept::subs(a, b))));
    return out;
}

}  // namespace ialc::corpus
