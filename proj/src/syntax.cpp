#include "ialc/syntax.hpp"

#include <algorithm>
#include <cassert>

namespace ialc {

// ── Concept ─────────────────────────────────────────────────────────────────

Concept Concept::atom(std::string name) {
    assert(!name.empty());
    return Concept(std::make_shared<Node>(Node{ConceptKind::Atom, std::move(name), nullptr, nullptr}));
}

Concept Concept::bottom() {
    static const Concept c(std::make_shared<Node>(Node{ConceptKind::Bottom, "", nullptr, nullptr}));
    return c;
}

Concept Concept::top() {
    static const Concept c(std::make_shared<Node>(Node{ConceptKind::Top, "", nullptr, nullptr}));
    return c;
}

Concept Concept::neg(Concept body) {
    return Concept(std::make_shared<Node>(Node{ConceptKind::Not, "", std::move(body.node_), nullptr}));
}

Concept Concept::conj(Concept lhs, Concept rhs) {
    return Concept(std::make_shared<Node>(
        Node{ConceptKind::And, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Concept Concept::disj(Concept lhs, Concept rhs) {
    return Concept(std::make_shared<Node>(
        Node{ConceptKind::Or, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Concept Concept::subs(Concept lhs, Concept rhs) {
    return Concept(std::make_shared<Node>(
        Node{ConceptKind::Subs, "", std::move(lhs.node_), std::move(rhs.node_)}));
}

Concept Concept::exists(std::string role, Concept body) {
    assert(!role.empty());
    return Concept(std::make_shared<Node>(
        Node{ConceptKind::Exists, std::move(role), std::move(body.node_), nullptr}));
}

Concept Concept::forall(std::string role, Concept body) {
    assert(!role.empty());
    return Concept(std::make_shared<Node>(
        Node{ConceptKind::Forall, std::move(role), std::move(body.node_), nullptr}));
}

const std::string& Concept::name() const {
    assert(kind() == ConceptKind::Atom);
    return node_->text;
}

const std::string& Concept::role() const {
    assert(kind() == ConceptKind::Exists || kind() == ConceptKind::Forall);
    return node_->text;
}

Concept Concept::left() const {
    assert(node_->a);
    return Concept(node_->a);
}

Concept Concept::right() const {
    assert(node_->b);
    return Concept(node_->b);
}

Concept Concept::body() const {
    assert(node_->a && !node_->b);
    return Concept(node_->a);
}

int compare(const Concept& a, const Concept& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (int c = a.node_->text.compare(b.node_->text); c != 0) return c < 0 ? -1 : 1;
    const bool la = static_cast<bool>(a.node_->a), lb = static_cast<bool>(b.node_->a);
    if (la != lb) return la < lb ? -1 : 1;
    if (la) {
        if (int c = compare(Concept(a.node_->a), Concept(b.node_->a)); c != 0) return c;
    }
    const bool ra = static_cast<bool>(a.node_->b), rb = static_cast<bool>(b.node_->b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra) {
        if (int c = compare(Concept(a.node_->b), Concept(b.node_->b)); c != 0) return c;
    }
    return 0;
}

// ── Statement ───────────────────────────────────────────────────────────────

Statement Statement::formula(Concept c) {
    return Statement(std::make_shared<Node>(
        Node{StatementKind::Formula, std::move(c), "", "", "", nullptr}));
}

Statement Statement::nominal(std::string name, Statement body) {
    assert(!name.empty());
    return Statement(std::make_shared<Node>(
        Node{StatementKind::Nominal, std::nullopt, std::move(name), "", "", std::move(body.node_)}));
}

Statement Statement::nominal(std::string name, Concept body) {
    return nominal(std::move(name), formula(std::move(body)));
}

Statement Statement::role(std::string subject, std::string role, std::string object) {
    assert(!subject.empty() && !role.empty() && !object.empty());
    return Statement(std::make_shared<Node>(Node{StatementKind::Role, std::nullopt,
                                                 std::move(subject), std::move(role),
                                                 std::move(object), nullptr}));
}

const Concept& Statement::formula_body() const {
    assert(kind() == StatementKind::Formula);
    return *node_->formula;
}

const std::string& Statement::nominal_name() const {
    assert(kind() == StatementKind::Nominal);
    return node_->a;
}

Statement Statement::nominal_body() const {
    assert(kind() == StatementKind::Nominal);
    return Statement(node_->inner);
}

const std::string& Statement::subject() const {
    assert(kind() == StatementKind::Role);
    return node_->a;
}

const std::string& Statement::role_name() const {
    assert(kind() == StatementKind::Role);
    return node_->b;
}

const std::string& Statement::object() const {
    assert(kind() == StatementKind::Role);
    return node_->c;
}

const std::string& Statement::outer_nominal() const {
    assert(kind() == StatementKind::Nominal);
    return node_->a;
}

int compare(const Statement& a, const Statement& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case StatementKind::Formula:
            return compare(*a.node_->formula, *b.node_->formula);
        case StatementKind::Nominal: {
            if (int c = a.node_->a.compare(b.node_->a); c != 0) return c < 0 ? -1 : 1;
            return compare(Statement(a.node_->inner), Statement(b.node_->inner));
        }
        case StatementKind::Role: {
            if (int c = a.node_->a.compare(b.node_->a); c != 0) return c < 0 ? -1 : 1;
            if (int c = a.node_->b.compare(b.node_->b); c != 0) return c < 0 ? -1 : 1;
            if (int c = a.node_->c.compare(b.node_->c); c != 0) return c < 0 ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

// ── Sequent ─────────────────────────────────────────────────────────────────

namespace {

std::vector<Statement> sorted_copy(const std::vector<Statement>& v) {
    std::vector<Statement> out = v;
    std::sort(out.begin(), out.end(),
              [](const Statement& a, const Statement& b) { return compare(a, b) < 0; });
    return out;
}

int compare_lists(const std::vector<Statement>& a, const std::vector<Statement>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (int c = compare(a[i], b[i]); c != 0) return c;
    }
    return 0;
}

}  // namespace

bool multiset_equal(const std::vector<Statement>& a, const std::vector<Statement>& b) {
    if (a.size() != b.size()) return false;
    return compare_lists(sorted_copy(a), sorted_copy(b)) == 0;
}

int compare(const Sequent& a, const Sequent& b) {
    if (int c = compare_lists(sorted_copy(a.tbox), sorted_copy(b.tbox)); c != 0) return c;
    if (int c = compare_lists(sorted_copy(a.antecedent), sorted_copy(b.antecedent)); c != 0)
        return c;
    return compare(a.succedent, b.succedent);
}

bool operator==(const Sequent& a, const Sequent& b) { return compare(a, b) == 0; }

// ── Symbol collection ───────────────────────────────────────────────────────

void collect_symbols(const Concept& c, std::set<std::string>& atoms,
                     std::set<std::string>& roles) {
    switch (c.kind()) {
        case ConceptKind::Atom:
            atoms.insert(c.name());
            break;
        case ConceptKind::Bottom:
        case ConceptKind::Top:
            break;
        case ConceptKind::Not:
            collect_symbols(c.body(), atoms, roles);
            break;
        case ConceptKind::And:
        case ConceptKind::Or:
        case ConceptKind::Subs:
            collect_symbols(c.left(), atoms, roles);
            collect_symbols(c.right(), atoms, roles);
            break;
        case ConceptKind::Exists:
        case ConceptKind::Forall:
            roles.insert(c.role());
            collect_symbols(c.body(), atoms, roles);
            break;
    }
}

void collect_symbols(const Statement& s, std::set<std::string>& atoms,
                     std::set<std::string>& roles, std::set<std::string>& nominals) {
    switch (s.kind()) {
        case StatementKind::Formula:
            collect_symbols(s.formula_body(), atoms, roles);
            break;
        case StatementKind::Nominal:
            nominals.insert(s.nominal_name());
            collect_symbols(s.nominal_body(), atoms, roles, nominals);
            break;
        case StatementKind::Role:
            nominals.insert(s.subject());
            nominals.insert(s.object());
            roles.insert(s.role_name());
            break;
    }
}

void collect_symbols(const Sequent& q, std::set<std::string>& atoms,
                     std::set<std::string>& roles, std::set<std::string>& nominals) {
    for (const auto& f : q.tbox) collect_symbols(f, atoms, roles, nominals);
    for (const auto& g : q.antecedent) collect_symbols(g, atoms, roles, nominals);
    collect_symbols(q.succedent, atoms, roles, nominals);
}

std::set<std::string> nominals_of(const Sequent& q) {
    std::set<std::string> atoms, roles, nominals;
    collect_symbols(q, atoms, roles, nominals);
    return nominals;
}

}  // namespace ialc
