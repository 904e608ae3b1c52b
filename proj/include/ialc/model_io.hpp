#ifndef IALC_MODEL_IO_HPP
#define IALC_MODEL_IO_HPP

// .ikm model files: UTF-8, line based, `#` comments.
//
//   world <id>
//   prec <id> <id>        refinement generator; the reflexive-transitive
//                         closure is taken automatically
//   role <Name> <id> <id>
//   atom <Name> <id>
//   nominal <name> <id>
//
// The loader applies the hereditary closure of the valuation only when
// asked (`--close`); otherwise HEREDITY violations are load errors.

#include <iosfwd>
#include <string>

#include "ialc/semantics.hpp"

namespace ialc {

Interpretation load_model(std::istream& in, bool apply_hereditary_closure);
Interpretation load_model_file(const std::string& path, bool apply_hereditary_closure);
Interpretation parse_model(const std::string& text, bool apply_hereditary_closure);

/// Structural load only — no heredity enforcement (for linting).
Interpretation load_model_raw(std::istream& in, bool apply_hereditary_closure);
Interpretation load_model_file_raw(const std::string& path, bool apply_hereditary_closure);

/// Canonical rendering: worlds, prec generators (as stored), roles, atoms,
/// nominals.  Loading canonical text and re-writing it is byte-identical.
std::string write_model(const Interpretation& i);

/// DOT digraph with refinement and role edges (diagram export sugar).
std::string model_to_dot(const Interpretation& i);

}  // namespace ialc

#endif  // IALC_MODEL_IO_HPP
