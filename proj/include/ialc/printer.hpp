#ifndef IALC_PRINTER_HPP
#define IALC_PRINTER_HPP

// Canonical text rendering with minimal parentheses.
// parse(print(v)) is structurally the identity.

#include <string>

#include "ialc/syntax.hpp"

namespace ialc {

std::string print_concept(const Concept& c);
std::string print_statement(const Statement& s);
std::string print_sequent(const Sequent& q);

}  // namespace ialc

#endif  // IALC_PRINTER_HPP
