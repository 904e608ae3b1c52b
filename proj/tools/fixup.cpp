// Scratch fixture verifier/canonicaliser (not part of the shipped build).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ialc/calculus.hpp"
#include "ialc/corpus.hpp"
#include "ialc/enumerate.hpp"
#include "ialc/model_io.hpp"
#include "ialc/parser.hpp"
#include "ialc/printer.hpp"
#include "ialc/proof_io.hpp"
#include "ialc/prover.hpp"
#include "ialc/sdl_trace.hpp"

using namespace ialc;

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

static void rewrite(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "corpus";
    const bool canonicalise = argc > 2 && std::string(argv[2]) == "--write";
    int bad = 0;

    for (const auto& fixture : corpus::load_manifest(dir)) {
        const std::string path = dir + "/" + fixture.path;
        std::string verdict = corpus::run_fixture(dir, fixture);
        if (verdict != fixture.expected) {
            std::printf("VERDICT MISMATCH %-16s expected %s got %s\n", fixture.id.c_str(),
                        fixture.expected.c_str(), verdict.c_str());
            if (fixture.kind == corpus::FixtureKind::IalcProof) {
                auto t = load_proof_file(path);
                for (const auto& f : check_proof(t).failures) {
                    std::printf("  %s: %s\n", format_path(f.path).c_str(), f.reason.c_str());
                }
            }
            if (fixture.kind == corpus::FixtureKind::SdlTrace) {
                auto t = sdl::load_trace_file(path);
                for (const auto& f : sdl::check_derivation(t).failures) {
                    std::printf("  step %d: %s\n", f.step, f.reason.c_str());
                }
            }
            ++bad;
        }
        // Byte identity.
        std::string original = slurp(path);
        std::string canonical;
        switch (fixture.kind) {
            case corpus::FixtureKind::IalcModel:
                canonical = write_model(load_model_file(path, false));
                break;
            case corpus::FixtureKind::IalcProof:
                canonical = write_proof(load_proof_file(path));
                break;
            case corpus::FixtureKind::IalcSequent:
                canonical = print_sequent(parse_sequent(slurp(path))) + "\n";
                break;
            case corpus::FixtureKind::SdlTrace:
                canonical = sdl::write_trace(sdl::load_trace_file(path));
                break;
            case corpus::FixtureKind::SdlSet:
                canonical = sdl::write_formula_set(sdl::load_formula_set_file(path));
                break;
        }
        if (canonical != original) {
            std::printf("NOT CANONICAL %s\n", fixture.path.c_str());
            if (canonicalise) {
                rewrite(path, canonical);
                std::printf("  rewritten\n");
            } else {
                std::printf("---- canonical ----\n%s-------------------\n", canonical.c_str());
            }
            ++bad;
        }
    }

    // Re-derivation of the five theorems.
    for (const auto& axiom : corpus::load_axiom_proofs(dir)) {
        auto started = std::chrono::steady_clock::now();
        auto proof = prove_bounded(axiom.theorem, 8);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        bool ok = proof && check_proof(*proof).accepted &&
                  compare(proof->conclusion, axiom.theorem) == 0;
        std::printf("prove %-8s depth<=8: %s (%lld ms)\n", axiom.id.c_str(),
                    ok ? "ok" : "FAILED", static_cast<long long>(ms));
        if (!ok) ++bad;
    }

    // Paracompleteness goals must not be provable.
    for (const char* text : {"|- x : A or not A", "|- x : not not A -> A"}) {
        auto started = std::chrono::steady_clock::now();
        auto proof = prove_bounded(parse_sequent(text), 8);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::printf("prove '%s': %s (%lld ms)\n", text, proof ? "FOUND (bad)" : "none",
                    static_cast<long long>(ms));
        if (proof) ++bad;
    }

    std::printf("%s (%d problems)\n", bad == 0 ? "ALL GOOD" : "PROBLEMS", bad);
    return bad == 0 ? 0 : 1;
}
