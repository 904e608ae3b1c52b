#include "ialc/printer.hpp"

namespace ialc {

namespace {

// Binding strengths: Subs 0 < Or 1 < And 2 < unary 3 < primary 4.
int binding(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Subs: return 0;
        case ConceptKind::Or: return 1;
        case ConceptKind::And: return 2;
        case ConceptKind::Not:
        case ConceptKind::Exists:
        case ConceptKind::Forall: return 3;
        default: return 4;
    }
}

void print_into(const Concept& c, int min_level, std::string& out) {
    const bool parens = binding(c) < min_level;
    if (parens) out += '(';
    switch (c.kind()) {
        case ConceptKind::Atom:
            out += c.name();
            break;
        case ConceptKind::Bottom:
            out += "Bot";
            break;
        case ConceptKind::Top:
            out += "Top";
            break;
        case ConceptKind::Not:
            out += "not ";
            print_into(c.body(), 3, out);
            break;
        case ConceptKind::And:
            print_into(c.left(), 2, out);
            out += " and ";
            print_into(c.right(), 3, out);
            break;
        case ConceptKind::Or:
            print_into(c.left(), 1, out);
            out += " or ";
            print_into(c.right(), 2, out);
            break;
        case ConceptKind::Subs:
            print_into(c.left(), 1, out);
            out += " -> ";
            print_into(c.right(), 0, out);
            break;
        case ConceptKind::Exists:
            out += "some ";
            out += c.role();
            out += '.';
            print_into(c.body(), 3, out);
            break;
        case ConceptKind::Forall:
            out += "all ";
            out += c.role();
            out += '.';
            print_into(c.body(), 3, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string print_concept(const Concept& c) {
    std::string out;
    print_into(c, 0, out);
    return out;
}

std::string print_statement(const Statement& s) {
    switch (s.kind()) {
        case StatementKind::Formula:
            return print_concept(s.formula_body());
        case StatementKind::Role:
            return s.subject() + " " + s.role_name() + " " + s.object();
        case StatementKind::Nominal: {
            Statement body = s.nominal_body();
            if (body.kind() == StatementKind::Formula) {
                return s.nominal_name() + " : " + print_concept(body.formula_body());
            }
            return s.nominal_name() + " : (" + print_statement(body) + ")";
        }
    }
    return {};
}

std::string print_sequent(const Sequent& q) {
    std::string out;
    if (!q.tbox.empty()) {
        out += "tbox: ";
        for (std::size_t i = 0; i < q.tbox.size(); ++i) {
            if (i) out += " ; ";
            out += print_statement(q.tbox[i]);
        }
        out += " | ";
    }
    for (std::size_t i = 0; i < q.antecedent.size(); ++i) {
        if (i) out += " ; ";
        out += print_statement(q.antecedent[i]);
    }
    if (!q.antecedent.empty()) out += ' ';
    out += "|- ";
    out += print_statement(q.succedent);
    return out;
}

}  // namespace ialc
