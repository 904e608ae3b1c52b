// ialc — batch command line front end.
//
// Exit codes: 0 success, 1 negative verdict (invalid sequent, rejected
// proof, countermodel found, unsatisfiable set), 2 usage or input error,
// 3 internal error.  Every invocation prints exactly one RESULT: line on
// standard output.

#include <cctype>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ialc/calculus.hpp"
#include "ialc/corpus.hpp"
#include "ialc/enumerate.hpp"
#include "ialc/errors.hpp"
#include "ialc/model_io.hpp"
#include "ialc/parser.hpp"
#include "ialc/printer.hpp"
#include "ialc/proof_io.hpp"
#include "ialc/prover.hpp"
#include "ialc/sdl.hpp"
#include "ialc/sdl_trace.hpp"

namespace {

using namespace ialc;

struct Console {
    bool records = false;
    bool result_emitted = false;

    // Human-readable output, plain format only.
    void text(const std::string& line) {
        if (!records) std::cout << line << "\n";
    }
    // Machine-readable key=value line, records format only.
    void kv(const std::string& key, const std::string& value) {
        if (records) std::cout << key << "=" << value << "\n";
    }
    void both(const std::string& key, const std::string& value, const std::string& prose) {
        text(prose);
        kv(key, value);
    }
    void result(const std::string& verdict, const std::string& extras = {}) {
        std::cout << "RESULT: " << verdict << (extras.empty() ? "" : " " + extras) << "\n";
        result_emitted = true;
    }
};

std::string just_display(const sdl::Step& step) {
    std::string out = sdl::just_name(step.just);
    if (step.just == sdl::Just::Mp) {
        out += " " + std::to_string(step.ref1) + "," + std::to_string(step.ref2);
    } else if (step.just == sdl::Just::ObNec || step.just == sdl::Just::Cp) {
        out += " " + std::to_string(step.ref1);
    }
    return out;
}

std::string join_names(const Interpretation& m, EntitySet set) {
    std::string out = "{";
    bool first = true;
    EntitySet rest = set;
    while (rest) {
        int e = __builtin_ctzll(rest);
        rest &= rest - 1;
        if (!first) out += ",";
        first = false;
        out += m.entity_names()[static_cast<std::size_t>(e)];
    }
    return out + "}";
}

Interpretation load_linted(const std::string& path, bool close) {
    Interpretation m = load_model_file(path, close);
    LintReport report = check_frame_conditions(m);
    if (!report.passed) {
        std::string detail;
        for (const auto& v : report.violations) {
            if (!detail.empty()) detail += "; ";
            detail += format_violation(m, v);
        }
        throw ModelError("model fails the frame conditions: " + detail);
    }
    return m;
}

int cmd_parse(Console& out, const std::string& expr) {
    std::string kind, canonical;
    // First word decides the reading: lowercase-initial identifiers other
    // than the concept keywords open a statement.
    std::string first_word;
    for (char c : expr) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!first_word.empty()) break;
            continue;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
        first_word += c;
    }
    const bool statement_like =
        !first_word.empty() && std::islower(static_cast<unsigned char>(first_word[0])) &&
        first_word != "not" && first_word != "some" && first_word != "all" &&
        first_word != "tbox";
    if (expr.find("|-") != std::string::npos || first_word == "tbox") {
        kind = "sequent";
        canonical = print_sequent(parse_sequent(expr));
    } else if (statement_like) {
        Statement s = parse_statement(expr);
        kind = s.kind() == StatementKind::Role ? "role-assertion" : "nominal-assertion";
        canonical = print_statement(s);
    } else {
        kind = "concept";
        canonical = print_concept(parse_concept(expr));
    }
    out.both("kind", kind, "kind: " + kind);
    out.both("canonical", canonical, "canonical: " + canonical);
    out.result("ok", "kind=" + kind);
    return 0;
}

int cmd_lint_model(Console& out, const std::string& path, bool close, bool dot) {
    Interpretation m = load_model_file_raw(path, close);
    LintReport report = check_frame_conditions(m);
    out.both("entities", std::to_string(m.entity_count()),
             "model has " + std::to_string(m.entity_count()) + " worlds");
    for (const auto& v : report.violations) {
        out.both("violation", format_violation(m, v), "violation: " + format_violation(m, v));
    }
    for (const auto& w : report.warnings) {
        std::string msg = "role " + w.role + " is not closed under refinement (pair " +
                          m.entity_names()[static_cast<std::size_t>(w.witness[0])] + "," +
                          m.entity_names()[static_cast<std::size_t>(w.witness[1])] +
                          " vs refinement " +
                          m.entity_names()[static_cast<std::size_t>(w.witness[2])] + "," +
                          m.entity_names()[static_cast<std::size_t>(w.witness[3])] + ")";
        out.both("warning", msg, "warning: " + msg);
    }
    if (dot) std::cout << model_to_dot(m);
    if (report.passed) {
        out.result("lint-pass", "violations=0 warnings=" + std::to_string(report.warnings.size()));
        return 0;
    }
    out.result("lint-fail", "violations=" + std::to_string(report.violations.size()));
    return 1;
}

int cmd_eval(Console& out, const std::string& path, const std::string& text, bool close) {
    Interpretation m = load_linted(path, close);
    Concept c = parse_concept(text);
    EntitySet ext = eval_concept(m, c);
    std::string names = join_names(m, ext);
    out.both("extension", names, "extension of " + print_concept(c) + ": " + names);
    out.result("ok", "extension=" + names);
    return 0;
}

int cmd_sat(Console& out, const std::string& path, const std::string& text, bool close) {
    Interpretation m = load_linted(path, close);
    Statement s = parse_statement(text);
    bool sat = satisfies_statement(m, s);
    out.both("statement", print_statement(s),
             (sat ? "satisfied: " : "not satisfied: ") + print_statement(s));
    out.result(sat ? "sat" : "unsat");
    return sat ? 0 : 1;
}

int cmd_valid(Console& out, const std::string& path, const std::string& text, bool close) {
    Interpretation m = load_linted(path, close);
    Sequent q = parse_sequent(text);
    bool valid = sequent_valid(m, q);
    out.both("sequent", print_sequent(q),
             (valid ? "valid on this model: " : "falsified on this model: ") + print_sequent(q));
    out.result(valid ? "valid" : "invalid");
    return valid ? 0 : 1;
}

int cmd_countermodel(Console& out, const std::string& text, int max_entities, bool dot) {
    Sequent q = parse_sequent(text);
    auto witness = find_countermodel(Signature::of(q), q, max_entities);
    if (!witness) {
        out.text("no countermodel with up to " + std::to_string(max_entities) + " entities");
        out.result("none", "max=" + std::to_string(max_entities));
        return 0;
    }
    std::cout << write_model(*witness);
    if (dot) std::cout << model_to_dot(*witness);
    out.result("countermodel", "entities=" + std::to_string(witness->entity_count()));
    return 1;
}

int cmd_check_proof(Console& out, const std::string& path) {
    ProofTree t = load_proof_file(path);
    CheckVerdict verdict = check_proof(t);
    out.both("conclusion", print_sequent(t.conclusion),
             "root conclusion: " + print_sequent(t.conclusion));
    for (const auto& f : verdict.failures) {
        out.both("failure", format_path(f.path) + ": " + f.reason,
                 "failure at " + format_path(f.path) + ": " + f.reason);
    }
    if (verdict.accepted) {
        out.result("accepted");
        return 0;
    }
    out.result("rejected", "failures=" + std::to_string(verdict.failures.size()));
    return 1;
}

int cmd_prove(Console& out, const std::string& text, int depth) {
    Sequent goal = parse_sequent(text);
    auto proof = prove_bounded(goal, depth);
    if (!proof) {
        out.text("no proof within depth " + std::to_string(depth));
        out.result("none", "depth=" + std::to_string(depth));
        return 1;
    }
    std::cout << write_proof(*proof);
    out.result("proved", "depth=" + std::to_string(depth));
    return 0;
}

int cmd_sdl_check(Console& out, const std::string& path) {
    sdl::DerivationTrace trace = sdl::load_trace_file(path);
    sdl::TraceVerdict verdict = sdl::check_derivation(trace);
    for (const auto& a : trace.assumptions) {
        out.both("assume", sdl::print_formula(a), "assume " + sdl::print_formula(a));
    }
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& f = trace.steps[k].formula;
        std::string line = std::to_string(k + 1) + ". " + sdl::print_formula(f) + " [" +
                           just_display(trace.steps[k]) + "]";
        if (sdl::print_formula(f) != sdl::print_formula_desugared(f)) {
            line += "   (= " + sdl::print_formula_desugared(f) + ")";
        }
        out.text(line);
    }
    if (!trace.steps.empty() && sdl::is_contradiction(trace.steps.back().formula)) {
        out.both("final", "contradiction", "final step is an explicit contradiction");
    }
    for (const auto& f : verdict.failures) {
        out.both("failure", "step " + std::to_string(f.step) + ": " + f.reason,
                 "failure at step " + std::to_string(f.step) + ": " + f.reason);
    }
    if (verdict.accepted) {
        out.result("accepted", "steps=" + std::to_string(trace.steps.size()));
        return 0;
    }
    out.result("rejected", "failures=" + std::to_string(verdict.failures.size()));
    return 1;
}

int cmd_sdl_sat(Console& out, const std::string& text, int max_worlds) {
    std::vector<sdl::Formula> formulas;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = semi == std::string::npos ? text.substr(start)
                                                      : text.substr(start, semi - start);
        if (piece.find_first_not_of(" \t") != std::string::npos) {
            formulas.push_back(sdl::parse_formula(piece));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (formulas.empty()) throw ModelError("no formulas given");
    auto witness = sdl::find_model(formulas, max_worlds);
    if (!witness) {
        out.text("no serial model with up to " + std::to_string(max_worlds) +
                 " worlds satisfies all formulas");
        out.result("unsat", "max=" + std::to_string(max_worlds));
        return 1;
    }
    out.text("witness world v" + std::to_string(witness->world) + " in:");
    if (!out.records) std::cout << sdl::describe_model(witness->model);
    out.kv("worlds", std::to_string(witness->model.worlds));
    out.kv("witness", "v" + std::to_string(witness->world));
    out.result("sat", "worlds=" + std::to_string(witness->model.worlds) +
                          " witness=v" + std::to_string(witness->world));
    return 0;
}

// ── Demos ───────────────────────────────────────────────────────────────────

sdl::DerivationTrace without_step(const sdl::DerivationTrace& t, std::size_t index) {
    sdl::DerivationTrace out;
    out.assumptions = t.assumptions;
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        if (k == index) continue;
        sdl::Step s = t.steps[k];
        const int removed = static_cast<int>(index) + 1;
        if (s.ref1 > removed) --s.ref1;
        if (s.ref2 > removed) --s.ref2;
        out.steps.push_back(std::move(s));
    }
    return out;
}

int demo_chisholm(Console& out, const std::string& corpus_dir) {
    bool ok = true;
    out.text("== Chisholm scenario in the deontic (KD) encoding ==");
    corpus::ChisholmSdl sdl_side = corpus::load_chisholm_sdl(corpus_dir);
    for (const auto& a : sdl_side.assumptions) {
        out.both("sdl-assumption", sdl::print_formula(a), "  assume " + sdl::print_formula(a));
    }
    sdl::TraceVerdict verdict = sdl::check_derivation(sdl_side.trace);
    bool contradiction = !sdl_side.trace.steps.empty() &&
                         sdl::is_contradiction(sdl_side.trace.steps.back().formula);
    ok = ok && verdict.accepted && contradiction;
    out.both("sdl-trace", verdict.accepted ? "accepted" : "rejected",
             "derivation of " + std::to_string(sdl_side.trace.steps.size()) +
                 " steps: " + (verdict.accepted ? "accepted" : "REJECTED"));
    out.text("final step " + sdl::print_formula(sdl_side.trace.steps.back().formula) +
             (contradiction ? "  - an explicit contradiction" : ""));
    auto witness = sdl::find_model(sdl_side.assumptions, 3);
    ok = ok && !witness;
    out.both("sdl-model", witness ? "found" : "none",
             witness ? "UNEXPECTED: a serial model satisfies the assumptions"
                     : "model search: no serial model with up to 3 worlds satisfies all four "
                       "assumptions");

    out.text("");
    out.text("== Same scenario as individually valid statements over refinement ==");
    corpus::ChisholmIalc ialc_side = corpus::load_chisholm_ialc(corpus_dir);
    LintReport lint = check_frame_conditions(ialc_side.model);
    ok = ok && lint.passed;
    out.both("ialc-lint", lint.passed ? "pass" : "fail",
             "model of " + std::to_string(ialc_side.model.entity_count()) +
                 " worlds lints: " + (lint.passed ? "pass" : "FAIL"));
    bool all_sat = true;
    for (const auto& s : ialc_side.statements) {
        bool sat = satisfies_statement(ialc_side.model, s);
        all_sat = all_sat && sat;
        out.both("ialc-statement", print_statement(s) + (sat ? " sat" : " unsat"),
                 "  " + print_statement(s) + (sat ? "  - satisfied" : "  - NOT satisfied"));
    }
    ok = ok && all_sat;
    out.text("");
    out.text("The obligation reading is inconsistent: its derivation ends in a");
    out.text("contradiction and no serial model satisfies the four assumptions");
    out.text("together.  Reading the same laws as individuals ordered by");
    out.text("refinement, the five-world model above satisfies every statement:");
    out.text("the scenario has a model and stops being a paradox.");
    out.result(ok ? "ok" : "mismatch",
               std::string("sdl-trace=") + (verdict.accepted ? "accepted" : "rejected") +
                   " sdl-model=" + (witness ? "found" : "none") +
                   " ialc-statements=" + (all_sat ? "satisfied" : "unsatisfied"));
    return ok ? 0 : 1;
}

int demo_free_choice(Console& out, const std::string& corpus_dir) {
    sdl::DerivationTrace trace = corpus::load_free_choice_trace(corpus_dir);
    sdl::TraceVerdict verdict = sdl::check_derivation(trace);
    out.text("== Free-choice permission in the deontic (KD) encoding ==");
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& f = trace.steps[k].formula;
        std::string line = "  " + std::to_string(k + 1) + ". " + sdl::print_formula(f) + " [" +
                           just_display(trace.steps[k]) + "]";
        if (sdl::print_formula(f) != sdl::print_formula_desugared(f)) {
            line += "   (= " + sdl::print_formula_desugared(f) + ")";
        }
        out.text(line);
    }
    out.both("trace", verdict.accepted ? "accepted" : "rejected",
             std::string("derivation: ") + (verdict.accepted ? "accepted" : "REJECTED"));
    std::size_t fcp_index = trace.steps.size();
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        if (trace.steps[k].just == sdl::Just::Fcp) {
            fcp_index = k;
            break;
        }
    }
    bool mutilated_rejected = false;
    if (fcp_index < trace.steps.size()) {
        mutilated_rejected = !sdl::check_derivation(without_step(trace, fcp_index)).accepted;
        out.both("without-fcp", mutilated_rejected ? "rejected" : "accepted",
                 std::string("without the free-choice axiom step the derivation is ") +
                     (mutilated_rejected ? "rejected" : "STILL ACCEPTED"));
    }
    out.text("");
    out.text("With the free-choice axiom, one permission spreads to arbitrary");
    out.text("conjuncts: P(p) yields P(p) & P(q) for any q whatsoever.  The");
    out.text("derivation leans on the obligation distribution axiom; an encoding");
    out.text("of laws as refinement-ordered individuals never applies it, so the");
    out.text("collapse does not arise there.");
    bool ok = verdict.accepted && mutilated_rejected;
    out.result(ok ? "ok" : "mismatch",
               std::string("trace=") + (verdict.accepted ? "accepted" : "rejected") +
                   " without-fcp=" + (mutilated_rejected ? "rejected" : "accepted"));
    return ok ? 0 : 1;
}

int demo_axioms(Console& out, const std::string& corpus_dir) {
    bool ok = true;
    out.text("== Axiom derivations and exhaustive validity ==");
    for (const auto& axiom : corpus::load_axiom_proofs(corpus_dir)) {
        bool accepted = check_proof(axiom.proof).accepted;
        auto rederived = prove_bounded(axiom.theorem, 8);
        bool proved = rederived && check_proof(*rederived).accepted;
        ok = ok && accepted && proved;
        out.both(axiom.id,
                 std::string(accepted ? "accepted" : "rejected") + "," +
                     (proved ? "rederived" : "not-rederived"),
                 axiom.id + ": " + print_sequent(axiom.theorem) + "\n    checker " +
                     (accepted ? "accepts" : "REJECTS") + ", search " +
                     (proved ? "re-derives it within depth 8" : "FAILS to re-derive it"));
    }
    for (const auto& [name, axiom] : corpus::axiom_concepts()) {
        bool valid = concept_valid_on_all_models(axiom, 3);
        ok = ok && valid;
        out.both(name, valid ? "valid" : "invalid",
                 name + ": " + print_concept(axiom) + "\n    " +
                     (valid ? "full extension on every linted model with up to 3 entities"
                            : "NOT valid on some small model"));
    }
    out.result(ok ? "ok" : "mismatch");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iALC reasoning toolkit: parsing, finite constructive models, "
                 "sequent proofs, countermodels, and a KD contrast engine"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "records"}));
    std::string corpus_dir = "corpus";
    app.add_option("--corpus", corpus_dir, "corpus directory (demo commands)");

    Console out;

    std::function<int()> run;

    // parse
    std::string parse_expr;
    auto* parse_cmd = app.add_subcommand("parse", "parse an expression and print it back");
    parse_cmd->add_option("expr", parse_expr, "concept, statement or sequent")->required();
    parse_cmd->callback([&] { run = [&] { return cmd_parse(out, parse_expr); }; });

    // lint-model
    std::string lint_path;
    bool lint_close = false, lint_dot = false;
    auto* lint_cmd = app.add_subcommand("lint-model", "check a model file");
    lint_cmd->add_option("file", lint_path, ".ikm model file")->required();
    lint_cmd->add_flag("--close", lint_close, "apply the hereditary closure before checking");
    lint_cmd->add_flag("--dot", lint_dot, "emit a DOT diagram");
    lint_cmd->callback(
        [&] { run = [&] { return cmd_lint_model(out, lint_path, lint_close, lint_dot); }; });

    // eval
    std::string eval_path, eval_concept_text;
    bool eval_close = false;
    auto* eval_cmd = app.add_subcommand("eval", "print the extension of a concept");
    eval_cmd->add_option("file", eval_path, ".ikm model file")->required();
    eval_cmd->add_option("concept", eval_concept_text, "concept text")->required();
    eval_cmd->add_flag("--close", eval_close, "apply the hereditary closure on load");
    eval_cmd->callback(
        [&] { run = [&] { return cmd_eval(out, eval_path, eval_concept_text, eval_close); }; });

    // sat
    std::string sat_path, sat_text;
    bool sat_close = false;
    auto* sat_cmd = app.add_subcommand("sat", "check a statement on a model");
    sat_cmd->add_option("file", sat_path, ".ikm model file")->required();
    sat_cmd->add_option("statement", sat_text, "statement text")->required();
    sat_cmd->add_flag("--close", sat_close, "apply the hereditary closure on load");
    sat_cmd->callback(
        [&] { run = [&] { return cmd_sat(out, sat_path, sat_text, sat_close); }; });

    // valid
    std::string valid_path, valid_text;
    bool valid_close = false;
    auto* valid_cmd = app.add_subcommand("valid", "check a sequent on a model");
    valid_cmd->add_option("file", valid_path, ".ikm model file")->required();
    valid_cmd->add_option("sequent", valid_text, "sequent text")->required();
    valid_cmd->add_flag("--close", valid_close, "apply the hereditary closure on load");
    valid_cmd->callback(
        [&] { run = [&] { return cmd_valid(out, valid_path, valid_text, valid_close); }; });

    // countermodel
    std::string counter_text;
    int counter_max = 3;
    bool counter_dot = false;
    auto* counter_cmd =
        app.add_subcommand("countermodel", "search for a falsifying model of a sequent");
    counter_cmd->add_option("sequent", counter_text, "sequent text")->required();
    counter_cmd->add_option("--max", counter_max, "entity bound (cap 4)");
    counter_cmd->add_flag("--dot", counter_dot, "emit a DOT diagram of the witness");
    counter_cmd->callback([&] {
        run = [&] { return cmd_countermodel(out, counter_text, counter_max, counter_dot); };
    });

    // check-proof
    std::string proof_path;
    auto* check_cmd = app.add_subcommand("check-proof", "check a proof file");
    check_cmd->add_option("file", proof_path, ".ipf proof file")->required();
    check_cmd->callback([&] { run = [&] { return cmd_check_proof(out, proof_path); }; });

    // prove
    std::string prove_text;
    int prove_depth = 8;
    auto* prove_cmd = app.add_subcommand("prove", "bounded backward proof search");
    prove_cmd->add_option("sequent", prove_text, "goal sequent")->required();
    prove_cmd->add_option("--depth", prove_depth, "depth bound (cap 12)");
    prove_cmd->callback([&] { run = [&] { return cmd_prove(out, prove_text, prove_depth); }; });

    // sdl
    auto* sdl_cmd = app.add_subcommand("sdl", "deontic (KD) engine");
    sdl_cmd->require_subcommand(1);
    std::string sdl_trace_path;
    auto* sdl_check_cmd = sdl_cmd->add_subcommand("check", "check a derivation trace");
    sdl_check_cmd->add_option("file", sdl_trace_path, ".sdt trace file")->required();
    sdl_check_cmd->callback([&] { run = [&] { return cmd_sdl_check(out, sdl_trace_path); }; });
    std::string sdl_formulas;
    int sdl_max = 3;
    auto* sdl_sat_cmd = sdl_cmd->add_subcommand("sat", "bounded serial-model satisfiability");
    sdl_sat_cmd->add_option("formulas", sdl_formulas, "formulas separated by ';'")->required();
    sdl_sat_cmd->add_option("--max", sdl_max, "world bound (cap 4)");
    sdl_sat_cmd->callback([&] { run = [&] { return cmd_sdl_sat(out, sdl_formulas, sdl_max); }; });

    // demo
    std::string demo_name;
    auto* demo_cmd = app.add_subcommand("demo", "run a bundled scenario end to end");
    demo_cmd->add_option("name", demo_name, "chisholm | free-choice | axioms")
        ->required()
        ->check(CLI::IsMember({"chisholm", "free-choice", "axioms"}));
    demo_cmd->callback([&] {
        run = [&] {
            if (demo_name == "chisholm") return demo_chisholm(out, corpus_dir);
            if (demo_name == "free-choice") return demo_free_choice(out, corpus_dir);
            return demo_axioms(out, corpus_dir);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        out.records = format == "records";
        if (e.get_exit_code() == 0) {  // --help
            int code = app.exit(e);
            out.result("ok", "kind=help");
            return code;
        }
        std::cerr << e.what() << "\n";
        out.result("usage-error");
        return 2;
    }
    out.records = format == "records";

    try {
        return run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        out.result("parse-error");
        return 2;
    } catch (const ModelError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        out.result("input-error");
        return 2;
    } catch (const EvalError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        out.result("input-error");
        return 2;
    } catch (const CapError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        out.result("usage-error");
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        out.result("internal-error");
        return 3;
    }
}
