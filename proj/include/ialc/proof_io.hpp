#ifndef IALC_PROOF_IO_HPP
#define IALC_PROOF_IO_HPP

// .ipf proof files: numbered lines, `#` comments, the LAST line is the root
// conclusion.
//
//   <n>. <sequent> [<RULE> premises=n1,n2 fresh=y cut="<item>"]
//
// Premises must reference smaller line numbers; unreferenced non-root lines
// are rejected.  A line may be referenced more than once (the tree
// duplicates the subtree).  Two derived-rule macros are accepted on input:
//   MP  premises=i,j  — from |- C and |- C -> D conclude |- D; expands to
//                       AX/SUBS-L/CUT nodes
//   NEC premises=i    — from |- C conclude |- all R.C; stored as P-FORALL
// The writer emits core rules only, numbering nodes in post-order, so
// writer output reloads and re-serialises byte-identically.

#include <iosfwd>
#include <string>

#include "ialc/calculus.hpp"
#include "ialc/errors.hpp"

namespace ialc {

ProofTree load_proof(std::istream& in);
ProofTree load_proof_file(const std::string& path);
ProofTree parse_proof(const std::string& text);

std::string write_proof(const ProofTree& t);

}  // namespace ialc

#endif  // IALC_PROOF_IO_HPP
