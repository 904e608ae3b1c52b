#ifndef IALC_PROVER_HPP
#define IALC_PROVER_HPP

// Bounded backward proof search.
//
// Deterministic strategy: rules are tried in the declared RuleName order,
// the leftmost principal item first; two-premise rules use the shared
// context; fresh nominals come from the reserved namespace y0, y1, ...
// skipping names that occur in the goal.  WEAK, CONTR and CUT are never
// applied backwards.  Loop control is a sequent-repetition check on each
// branch, and FORALL-L is only applied when its premise adds a new item.
// Depth counts nodes along a root-to-leaf path, so an AX leaf has depth 1.

#include <optional>

#include "ialc/calculus.hpp"

namespace ialc {

inline constexpr int kDefaultDepthCap = 12;

/// A proof of depth <= max_depth found by the strategy above, or nullopt.
/// Tbox formulas of the goal are folded into the antecedent first (the
/// resulting sequent implies the tbox reading).  Throws CapError when
/// max_depth exceeds the cap.
std::optional<ProofTree> prove_bounded(const Sequent& goal, int max_depth,
                                       int cap = kDefaultDepthCap);

}  // namespace ialc

#endif  // IALC_PROVER_HPP
