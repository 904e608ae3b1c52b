#ifndef IALC_SYNTAX_HPP
#define IALC_SYNTAX_HPP

// Abstract syntax for iALC concepts, statements and sequents.
//
// All three types are immutable values with shared subtrees; copying is a
// shared_ptr copy.  Structural equality and a total order are provided so
// antecedents can be treated as multisets.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ialc {

// ── Concept ─────────────────────────────────────────────────────────────────
//
// C, D ::= A | Bot | Top | not C | C and D | C or D | C -> D
//        | some R.C | all R.C
//
// `->` is the subsumption concept constructor; `not` is a primitive
// constructor, not sugar.

enum class ConceptKind : std::uint8_t {
    Atom,
    Bottom,
    Top,
    Not,
    And,
    Or,
    Subs,
    Exists,
    Forall,
};

class Concept {
public:
    static Concept atom(std::string name);
    static Concept bottom();
    static Concept top();
    static Concept neg(Concept body);
    static Concept conj(Concept lhs, Concept rhs);
    static Concept disj(Concept lhs, Concept rhs);
    static Concept subs(Concept lhs, Concept rhs);
    static Concept exists(std::string role, Concept body);
    static Concept forall(std::string role, Concept body);

    ConceptKind kind() const noexcept { return node_->kind; }

    const std::string& name() const;  // Atom
    const std::string& role() const;  // Exists / Forall
    Concept left() const;             // And / Or / Subs
    Concept right() const;            // And / Or / Subs
    Concept body() const;             // Not / Exists / Forall

    bool operator==(const Concept& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Concept& o) const { return !(*this == o); }
    bool operator<(const Concept& o) const { return compare(*this, o) < 0; }

    friend int compare(const Concept& a, const Concept& b);

private:
    struct Node {
        ConceptKind kind;
        std::string text;  // atom name or role name
        std::shared_ptr<const Node> a, b;
    };

    explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// ── Statement ───────────────────────────────────────────────────────────────
//
// A sequent item is uniformly a Statement:
//   Formula(C)            — a bare concept used as a formula
//   Nominal(x, body)      — nominal assertion x : body, body itself a
//                           Statement (so x : (y : C) nests freely)
//   Role(x, R, y)         — role assertion x R y

enum class StatementKind : std::uint8_t {
    Formula,
    Nominal,
    Role,
};

class Statement {
public:
    static Statement formula(Concept c);
    static Statement nominal(std::string name, Statement body);
    static Statement nominal(std::string name, Concept body);
    static Statement role(std::string subject, std::string role, std::string object);

    StatementKind kind() const noexcept { return node_->kind; }

    const Concept& formula_body() const;    // Formula
    const std::string& nominal_name() const;  // Nominal
    Statement nominal_body() const;           // Nominal
    const std::string& subject() const;       // Role
    const std::string& role_name() const;     // Role
    const std::string& object() const;        // Role

    /// Topmost label of a (possibly nested) nominal assertion.
    const std::string& outer_nominal() const;

    bool operator==(const Statement& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Statement& o) const { return !(*this == o); }
    bool operator<(const Statement& o) const { return compare(*this, o) < 0; }

    friend int compare(const Statement& a, const Statement& b);

private:
    struct Node {
        StatementKind kind;
        std::optional<Concept> formula;     // Formula payload
        std::string a, b, c;                // nominal name / role triple
        std::shared_ptr<const Node> inner;  // Nominal body
    };

    explicit Statement(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// ── Sequent ─────────────────────────────────────────────────────────────────
//
// tbox: F1 ; ... ; Fn | G1 ; ... ; Gm |- D
//
// The tbox holds subsumption formulas only.  The antecedent is a multiset;
// the stored vector keeps declaration order for faithful printing, equality
// is order-insensitive.

struct Sequent {
    std::vector<Statement> tbox;
    std::vector<Statement> antecedent;
    Statement succedent;
};

int compare(const Sequent& a, const Sequent& b);
bool operator==(const Sequent& a, const Sequent& b);
inline bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

/// Multiset equality of statement lists.
bool multiset_equal(const std::vector<Statement>& a, const std::vector<Statement>& b);

// ── Symbol collection ───────────────────────────────────────────────────────

void collect_symbols(const Concept& c, std::set<std::string>& atoms,
                     std::set<std::string>& roles);
void collect_symbols(const Statement& s, std::set<std::string>& atoms,
                     std::set<std::string>& roles, std::set<std::string>& nominals);
void collect_symbols(const Sequent& q, std::set<std::string>& atoms,
                     std::set<std::string>& roles, std::set<std::string>& nominals);

/// All nominal names occurring anywhere in the sequent (labels, nested labels,
/// role assertion endpoints).
std::set<std::string> nominals_of(const Sequent& q);

}  // namespace ialc

#endif  // IALC_SYNTAX_HPP
