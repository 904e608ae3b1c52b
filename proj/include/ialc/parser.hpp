#ifndef IALC_PARSER_HPP
#define IALC_PARSER_HPP

// Concrete text syntax for concepts, statements and sequents.
//
//   concept    := or ('->' concept)?                 right-associative
//   or         := and ('or' and)*
//   and        := unary ('and' unary)*
//   unary      := 'not' unary | 'some' ROLE '.' unary | 'all' ROLE '.' unary | primary
//   primary    := 'Top' | 'Bot' | ATOM | '(' concept ')'
//   statement  := NOM ':' stmt-body | NOM ROLE NOM
//   stmt-body  := concept | statement | '(' statement ')'
//   sequent    := ('tbox:' concept (';' concept)* '|')? (item (';' item)*)? '|-' item
//   item       := statement | concept
//
// Atoms and roles are uppercase-initial identifiers, nominals are
// lowercase-initial; `#` starts a line comment.  Errors carry positions.

#include <string_view>

#include "ialc/errors.hpp"
#include "ialc/syntax.hpp"

namespace ialc {

Concept parse_concept(std::string_view text);
Statement parse_statement(std::string_view text);
Sequent parse_sequent(std::string_view text);

/// A single antecedent/succedent item: statement or bare concept.
Statement parse_sequent_item(std::string_view text);

}  // namespace ialc

#endif  // IALC_PARSER_HPP
