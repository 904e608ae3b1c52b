#ifndef IALC_SDL_TRACE_HPP
#define IALC_SDL_TRACE_HPP

// Hilbert-style derivation traces over the KD axiom base and their checker.
//
// .sdt trace files: `#` comments, `assume <formula>` lines, then numbered
// steps `n. <formula> [JUST]` where JUST is one of
//   HYP | TAUT | OB-K | OB-D | FCP | MP i,j | OB-NEC i | CP i
//
// A step is "pure" when no HYP occurs in its justification chain; OB-NEC
// applies to pure steps only.  .sdl set files hold one formula per line.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ialc/sdl.hpp"

namespace ialc::sdl {

enum class Just : std::uint8_t { Hyp, Taut, ObK, ObD, Fcp, Mp, ObNec, Cp };

const char* just_name(Just j);

struct Step {
    Formula formula;
    Just just;
    int ref1 = -1;  // 1-based step references
    int ref2 = -1;
};

struct DerivationTrace {
    std::vector<Formula> assumptions;
    std::vector<Step> steps;
};

struct TraceFailure {
    int step;  // 1-based
    std::string reason;
};

struct TraceVerdict {
    bool accepted = true;
    std::vector<TraceFailure> failures;
};

/// Validates every step:
///   HYP: member of the assumptions;  TAUT: taut_check passes;
///   OB-K: O(a=>b) => (O(a)=>O(b));   OB-D: O(a) => ~O(~a);
///   FCP:  P(a|b) => (P(a) & P(b));   MP i,j: modus ponens (either order);
///   OB-NEC i: O of a pure earlier step;  CP i: from a=>b infer ~b=>~a.
TraceVerdict check_derivation(const DerivationTrace& t);

/// True when the formula has the shape f & ~f (or ~f & f).
bool is_contradiction(const Formula& f);

DerivationTrace load_trace(std::istream& in);
DerivationTrace load_trace_file(const std::string& path);
DerivationTrace parse_trace(const std::string& text);
std::string write_trace(const DerivationTrace& t);

std::vector<Formula> load_formula_set(std::istream& in);
std::vector<Formula> load_formula_set_file(const std::string& path);
std::string write_formula_set(const std::vector<Formula>& formulas);

}  // namespace ialc::sdl

#endif  // IALC_SDL_TRACE_HPP
