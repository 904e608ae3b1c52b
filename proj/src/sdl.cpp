#include "ialc/sdl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ialc::sdl {

// ── Formula ─────────────────────────────────────────────────────────────────

Formula Formula::prop(std::string name) {
    return Formula(std::make_shared<Node>(Node{Kind::Prop, std::move(name), nullptr, nullptr}));
}

Formula Formula::neg(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Neg, "", std::move(f.node_), nullptr}));
}

Formula Formula::impl(Formula a, Formula b) {
    return Formula(
        std::make_shared<Node>(Node{Kind::Impl, "", std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(
        std::make_shared<Node>(Node{Kind::Conj, "", std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(
        std::make_shared<Node>(Node{Kind::Disj, "", std::move(a.node_), std::move(b.node_)}));
}

Formula Formula::ob(Formula f) {
    return Formula(std::make_shared<Node>(Node{Kind::Ob, "", std::move(f.node_), nullptr}));
}

Formula Formula::perm(Formula f) { return neg(ob(neg(std::move(f)))); }

const std::string& Formula::prop_name() const { return node_->name; }

Formula Formula::child() const { return Formula(node_->a); }

Formula Formula::left() const { return Formula(node_->a); }

Formula Formula::right() const { return Formula(node_->b); }

bool Formula::is_perm() const {
    return kind() == Kind::Neg && child().kind() == Kind::Ob &&
           child().child().kind() == Kind::Neg;
}

Formula Formula::perm_body() const { return child().child().child(); }

int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (int c = a.node_->name.compare(b.node_->name); c != 0) return c < 0 ? -1 : 1;
    const bool la = static_cast<bool>(a.node_->a), lb = static_cast<bool>(b.node_->a);
    if (la != lb) return la < lb ? -1 : 1;
    if (la) {
        if (int c = compare(Formula(a.node_->a), Formula(b.node_->a)); c != 0) return c;
    }
    const bool ra = static_cast<bool>(a.node_->b), rb = static_cast<bool>(b.node_->b);
    if (ra != rb) return ra < rb ? -1 : 1;
    if (ra) {
        if (int c = compare(Formula(a.node_->b), Formula(b.node_->b)); c != 0) return c;
    }
    return 0;
}

// ── Parsing ─────────────────────────────────────────────────────────────────

namespace {

struct Lexer {
    std::string_view src;
    std::size_t i = 0;
    SourcePos pos{1, 1};

    void skip_space() {
        while (i < src.size()) {
            char c = src[i];
            if (c == '#') {
                while (i < src.size() && src[i] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
        ++i;
    }

    bool eof() {
        skip_space();
        return i >= src.size();
    }

    char peek() {
        skip_space();
        return i < src.size() ? src[i] : '\0';
    }

    bool try_consume(char c) {
        if (peek() == c) {
            bump();
            return true;
        }
        return false;
    }

    bool try_consume2(const char* two) {
        skip_space();
        if (i + 1 < src.size() && src[i] == two[0] && src[i + 1] == two[1]) {
            bump();
            bump();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(pos, message); }
};

class SdlParser {
public:
    explicit SdlParser(std::string_view text) : lex_{text} {}

    Formula formula() {
        Formula lhs = disjunct();
        if (lex_.try_consume2("=>")) {
            return Formula::impl(std::move(lhs), formula());  // right associative
        }
        return lhs;
    }

    void expect_end() {
        if (!lex_.eof()) lex_.fail("trailing input in formula");
    }

private:
    Formula disjunct() {
        Formula f = conjunct();
        while (true) {
            lex_.skip_space();
            // Avoid eating '|' of '|-' (not part of this grammar, but be strict).
            if (lex_.peek() == '|') {
                lex_.bump();
                f = Formula::disj(std::move(f), conjunct());
            } else {
                return f;
            }
        }
    }

    Formula conjunct() {
        Formula f = unary();
        while (lex_.try_consume('&')) f = Formula::conj(std::move(f), unary());
        return f;
    }

    Formula unary() {
        char c = lex_.peek();
        if (c == '~') {
            lex_.bump();
            return Formula::neg(unary());
        }
        if (c == 'O' || c == 'P') {
            // Modal operator when followed by '('; otherwise an atom would
            // need to be lowercase anyway, so reject stray capitals.
            lex_.bump();
            if (!lex_.try_consume('(')) lex_.fail("expected '(' after modal operator");
            Formula body = formula();
            if (!lex_.try_consume(')')) lex_.fail("expected ')'");
            return c == 'O' ? Formula::ob(std::move(body)) : Formula::perm(std::move(body));
        }
        if (c == '(') {
            lex_.bump();
            Formula f = formula();
            if (!lex_.try_consume(')')) lex_.fail("expected ')'");
            return f;
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string name;
            lex_.skip_space();
            while (lex_.i < lex_.src.size()) {
                char d = lex_.src[lex_.i];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
                    name += d;
                    lex_.bump();
                } else {
                    break;
                }
            }
            return Formula::prop(std::move(name));
        }
        lex_.fail(std::string("unexpected character '") + c + "' in formula");
    }

    Lexer lex_;
};

// Binding strengths: Impl 0 < Disj 1 < Conj 2 < unary 3.
int binding(const Formula& f) {
    if (f.is_perm()) return 3;
    switch (f.kind()) {
        case Kind::Impl: return 0;
        case Kind::Disj: return 1;
        case Kind::Conj: return 2;
        default: return 3;
    }
}

void print_into(const Formula& f, int min_level, std::string& out, bool sugar) {
    if (sugar && f.is_perm()) {
        out += "P(";
        print_into(f.perm_body(), 0, out, sugar);
        out += ')';
        return;
    }
    const bool parens = binding(f) < min_level;
    if (parens) out += '(';
    switch (f.kind()) {
        case Kind::Prop:
            out += f.prop_name();
            break;
        case Kind::Neg:
            out += '~';
            print_into(f.child(), 3, out, sugar);
            break;
        case Kind::Ob:
            out += "O(";
            print_into(f.child(), 0, out, sugar);
            out += ')';
            break;
        case Kind::Conj:
            print_into(f.left(), 2, out, sugar);
            out += " & ";
            print_into(f.right(), 3, out, sugar);
            break;
        case Kind::Disj:
            print_into(f.left(), 1, out, sugar);
            out += " | ";
            print_into(f.right(), 2, out, sugar);
            break;
        case Kind::Impl:
            print_into(f.left(), 1, out, sugar);
            out += " => ";
            print_into(f.right(), 0, out, sugar);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) {
    SdlParser p(text);
    Formula f = p.formula();
    p.expect_end();
    return f;
}

std::string print_formula(const Formula& f) {
    std::string out;
    print_into(f, 0, out, true);
    return out;
}

std::string print_formula_desugared(const Formula& f) {
    std::string out;
    print_into(f, 0, out, false);
    return out;
}

// ── Tautology check ─────────────────────────────────────────────────────────

namespace {

struct Abstraction {
    std::vector<Formula> vars;  // atoms and maximal O-subformulas

    int var_of(const Formula& f) {
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (vars[k] == f) return static_cast<int>(k);
        }
        vars.push_back(f);
        return static_cast<int>(vars.size() - 1);
    }

    void collect(const Formula& f) {
        switch (f.kind()) {
            case Kind::Prop:
            case Kind::Ob:
                var_of(f);
                break;
            case Kind::Neg:
                collect(f.child());
                break;
            default:
                collect(f.left());
                collect(f.right());
                break;
        }
    }
};

bool eval_abstract(const Formula& f, const Abstraction& abs, std::uint32_t assignment) {
    switch (f.kind()) {
        case Kind::Prop:
        case Kind::Ob: {
            for (std::size_t k = 0; k < abs.vars.size(); ++k) {
                if (abs.vars[k] == f) return (assignment >> k) & 1u;
            }
            return false;
        }
        case Kind::Neg:
            return !eval_abstract(f.child(), abs, assignment);
        case Kind::Impl:
            return !eval_abstract(f.left(), abs, assignment) ||
                   eval_abstract(f.right(), abs, assignment);
        case Kind::Conj:
            return eval_abstract(f.left(), abs, assignment) &&
                   eval_abstract(f.right(), abs, assignment);
        case Kind::Disj:
            return eval_abstract(f.left(), abs, assignment) ||
                   eval_abstract(f.right(), abs, assignment);
    }
    return false;
}

}  // namespace

bool taut_check(const Formula& f) {
    Abstraction abs;
    abs.collect(f);
    const std::size_t k = abs.vars.size();
    if (k > 20) throw EvalError("tautology check limited to 20 abstracted variables");
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a) {
        if (!eval_abstract(f, abs, a)) return false;
    }
    return true;
}

// ── Bounded serial models ───────────────────────────────────────────────────

bool KdModel::serial() const {
    for (int w = 0; w < worlds; ++w) {
        if (access[static_cast<std::size_t>(w)] == 0) return false;
    }
    return true;
}

bool eval_at(const KdModel& m, const Formula& f, int world) {
    switch (f.kind()) {
        case Kind::Prop: {
            auto it = m.valuation.find(f.prop_name());
            std::uint32_t mask = it == m.valuation.end() ? 0 : it->second;
            return (mask >> world) & 1u;
        }
        case Kind::Neg:
            return !eval_at(m, f.child(), world);
        case Kind::Impl:
            return !eval_at(m, f.left(), world) || eval_at(m, f.right(), world);
        case Kind::Conj:
            return eval_at(m, f.left(), world) && eval_at(m, f.right(), world);
        case Kind::Disj:
            return eval_at(m, f.left(), world) || eval_at(m, f.right(), world);
        case Kind::Ob: {
            std::uint32_t succ = m.access[static_cast<std::size_t>(world)];
            while (succ) {
                int v = __builtin_ctz(succ);
                succ &= succ - 1;
                if (!eval_at(m, f.child(), v)) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& atoms) {
    switch (f.kind()) {
        case Kind::Prop:
            atoms.insert(f.prop_name());
            break;
        case Kind::Neg:
        case Kind::Ob:
            collect_atoms(f.child(), atoms);
            break;
        default:
            collect_atoms(f.left(), atoms);
            collect_atoms(f.right(), atoms);
            break;
    }
}

}  // namespace

std::optional<KdWitness> find_model(const std::vector<Formula>& formulas, int max_worlds,
                                    int cap) {
    if (max_worlds < 1) throw CapError("world bound must be positive");
    if (max_worlds > cap) {
        throw CapError("world bound " + std::to_string(max_worlds) +
                       " exceeds the cap of " + std::to_string(cap));
    }
    std::set<std::string> atoms;
    for (const auto& f : formulas) collect_atoms(f, atoms);
    std::vector<std::string> atom_list(atoms.begin(), atoms.end());
    if (atom_list.size() * static_cast<std::size_t>(max_worlds) > 24) {
        throw CapError("model search limited to 24 atom-world bits");
    }

    for (int n = 1; n <= max_worlds; ++n) {
        const std::uint64_t access_limit = std::uint64_t{1} << (n * n);
        for (std::uint64_t bits = 0; bits < access_limit; ++bits) {
            KdModel m;
            m.worlds = n;
            m.access.assign(static_cast<std::size_t>(n), 0);
            for (int w = 0; w < n; ++w) {
                m.access[static_cast<std::size_t>(w)] =
                    static_cast<std::uint32_t>((bits >> (w * n)) & ((1u << n) - 1));
            }
            if (!m.serial()) continue;

            const std::uint64_t val_limit = std::uint64_t{1}
                                            << (static_cast<int>(atom_list.size()) * n);
            for (std::uint64_t vbits = 0; vbits < val_limit; ++vbits) {
                m.valuation.clear();
                for (std::size_t a = 0; a < atom_list.size(); ++a) {
                    m.valuation[atom_list[a]] =
                        static_cast<std::uint32_t>((vbits >> (a * n)) & ((1u << n) - 1));
                }
                for (int w = 0; w < n; ++w) {
                    bool all = true;
                    for (const auto& f : formulas) {
                        if (!eval_at(m, f, w)) {
                            all = false;
                            break;
                        }
                    }
                    if (all) return KdWitness{m, w};
                }
            }
        }
    }
    return std::nullopt;
}

std::string describe_model(const KdModel& m) {
    std::string out;
    for (int w = 0; w < m.worlds; ++w) {
        out += "world v" + std::to_string(w) + ": successors {";
        bool first = true;
        std::uint32_t succ = m.access[static_cast<std::size_t>(w)];
        while (succ) {
            int v = __builtin_ctz(succ);
            succ &= succ - 1;
            if (!first) out += ", ";
            first = false;
            out += "v" + std::to_string(v);
        }
        out += "}, true atoms {";
        first = true;
        for (const auto& [atom, mask] : m.valuation) {
            if ((mask >> w) & 1u) {
                if (!first) out += ", ";
                first = false;
                out += atom;
            }
        }
        out += "}\n";
    }
    return out;
}

}  // namespace ialc::sdl
