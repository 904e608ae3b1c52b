// Scratch verification harness (not part of the shipped build): sanity of
// the axiom validity targets and a brute-force hunt for rule-local
// soundness counterexamples under the implemented semantics.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "../tests/rule_instances.hpp"
#include "ialc/calculus.hpp"
#include "ialc/corpus.hpp"
#include "ialc/enumerate.hpp"
#include "ialc/model_io.hpp"
#include "ialc/parser.hpp"
#include "ialc/printer.hpp"

using namespace ialc;

int main(int argc, char** argv) {
    int iterations = argc > 1 ? std::atoi(argv[1]) : 4000;

    for (const auto& [name, axiom] : corpus::axiom_concepts()) {
        bool valid = concept_valid_on_all_models(axiom, 3);
        std::printf("axiom %-16s valid<=3: %s\n", name.c_str(), valid ? "yes" : "NO");
    }
    Concept displayed = parse_concept("some R.(A -> B) -> (some R.A -> some R.B)");
    std::printf("existential-prefix variant valid<=3: %s (expect no)\n",
                concept_valid_on_all_models(displayed, 3) ? "yes" : "no");

    Sequent lem = parse_sequent("|- x : (A or not A)");
    auto witness = find_countermodel(Signature::of(lem), lem, 2);
    std::printf("LEM countermodel at <=2: %s\n", witness ? "found" : "NONE");
    if (witness) std::printf("%s", write_model(*witness).c_str());

    Signature sig{{"A", "B"}, {"R"}, {"x", "y"}};
    testgen::Rng rng(0xA11CE5);
    std::map<std::string, int> counted;
    int unsound = 0;
    for (int iter = 0; iter < iterations && unsound < 8; ++iter) {
        for (RuleName rule : all_rules()) {
            auto inst = testgen::random_rule_instance(rng, rule, sig);
            if (!inst) continue;
            RuleCheck rc = check_node(inst->rule, inst->conclusion, inst->premises, inst->inst);
            if (!rc.ok) {
                std::printf("BUILDER/CHECKER disagree on %s: %s\n  %s\n", rule_name(rule),
                            rc.reason.c_str(), print_sequent(inst->conclusion).c_str());
                ++unsound;
                continue;
            }
            // One pass over all models: premises must be exhaustively valid
            // for the instance to count; then the conclusion must be valid.
            Sequent combined = inst->conclusion;
            for (const auto& p : inst->premises) {
                for (const auto& item : p.antecedent) combined.antecedent.push_back(item);
                combined.antecedent.push_back(p.succedent);
            }
            Signature model_sig = Signature::of(combined);
            bool premises_valid = true;
            bool conclusion_valid = true;
            std::string bad_model;
            for_each_model(model_sig, 3, [&](const Interpretation& m) {
                for (const auto& p : inst->premises) {
                    if (!sequent_valid(m, p)) {
                        premises_valid = false;
                        return false;
                    }
                }
                if (conclusion_valid && !sequent_valid(m, inst->conclusion)) {
                    conclusion_valid = false;
                    bad_model = write_model(m);
                }
                return true;
            });
            if (premises_valid) {
                counted[rule_name(rule)]++;
                if (!conclusion_valid) {
                    ++unsound;
                    std::printf("UNSOUND %s\n  conclusion: %s\n", rule_name(rule),
                                print_sequent(inst->conclusion).c_str());
                    for (const auto& p : inst->premises)
                        std::printf("  premise:    %s\n", print_sequent(p).c_str());
                    std::printf("  countermodel:\n%s", bad_model.c_str());
                }
            }
        }
    }
    std::printf("valid-premise instances per rule:\n");
    for (const auto& [name, count] : counted) std::printf("  %-10s %d\n", name.c_str(), count);
    std::printf("unsound instances found: %d\n", unsound);
    return unsound == 0 ? 0 : 1;
}
