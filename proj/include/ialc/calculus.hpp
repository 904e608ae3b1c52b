#ifndef IALC_CALCULUS_HPP
#define IALC_CALCULUS_HPP

// The labelled sequent calculus: rule names, proof trees, node and proof
// checking.
//
// Rules act on the antecedent multiset and the single succedent; the tbox is
// carried unchanged through every rule.  Two-premise rules accept either a
// shared context (both premises carry the whole context) or a split context
// (the context distributes over the premises); both readings are sound and
// both occur in standard presentations.

#include <optional>
#include <string>
#include <vector>

#include "ialc/syntax.hpp"

namespace ialc {

enum class RuleName : std::uint8_t {
    Ax,
    BotL,
    ForallR,
    ForallL,
    ExistsR,
    ExistsL,
    SubsR,
    SubsL,
    AndR,
    AndL,
    Or1R,
    Or2R,
    OrL,
    PExists,
    PForall,
    PN,
    Weak,
    Contr,
    Cut,
    // Nominal counterparts of the propositional rules: the active concepts
    // gamma are replaced by x:gamma for one shared nominal x.
    NSubsR,
    NSubsL,
    NAndR,
    NAndL,
    NOr1R,
    NOr2R,
    NOrL,
};

const char* rule_name(RuleName r);
std::optional<RuleName> rule_from_name(const std::string& name);

/// Number of premises the rule takes.
int rule_arity(RuleName r);

/// Rules in deterministic search order (the declaration order above).
const std::vector<RuleName>& all_rules();

struct Instantiation {
    std::optional<std::string> fresh;  // EXISTS-L only
    std::optional<Statement> cut;      // CUT only
    std::optional<Statement> principal;  // optional documentation of the active item
};

struct ProofTree {
    Sequent conclusion;
    RuleName rule;
    Instantiation inst;
    std::vector<ProofTree> premises;
};

struct RuleCheck {
    bool ok = false;
    std::string reason;  // FRESHNESS, ARITY, TBOX, INSTANTIATION or NO-MATCH detail
};

/// True iff conclusion/premises form exactly an instance of the named rule.
/// EXISTS-L enforces that the fresh nominal is absent from the conclusion
/// (reason FRESHNESS); FORALL-R enforces the same for its premise nominal.
RuleCheck check_node(RuleName rule, const Sequent& conclusion,
                     const std::vector<Sequent>& premises, const Instantiation& inst);

struct CheckFailure {
    std::vector<int> path;  // child indices from the root
    std::string reason;
};

struct CheckVerdict {
    bool accepted = true;
    std::vector<CheckFailure> failures;
};

std::string format_path(const std::vector<int>& path);

/// Every node must pass check_node; leaves are exactly the zero-premise
/// rules AX and BOT-L.  EXISTS-L nodes must carry their fresh nominal and
/// CUT nodes their cut item; other nodes must not.
CheckVerdict check_proof(const ProofTree& t);

}  // namespace ialc

#endif  // IALC_CALCULUS_HPP
