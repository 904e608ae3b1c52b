#include "ialc/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace ialc {

namespace {

enum class Tok {
    Ident,     // classified by first letter at use sites
    KwNot,
    KwAnd,
    KwOr,
    KwSome,
    KwAll,
    KwTop,
    KwBot,
    KwTbox,
    Arrow,     // ->
    LParen,
    RParen,
    Colon,
    Semi,
    Dot,
    Turnstile,  // |-
    Bar,        // |
    End,
};

struct Token {
    Tok tag;
    std::string text;
    SourcePos pos;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos{1, 1};
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else {
                ++pos.column;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {  // line comment
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        SourcePos at = pos;
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && is_ident_char(src[j])) ++j;
            std::string word(src.substr(i, j - i));
            advance(j - i);
            Tok tag = Tok::Ident;
            if (word == "not") tag = Tok::KwNot;
            else if (word == "and") tag = Tok::KwAnd;
            else if (word == "or") tag = Tok::KwOr;
            else if (word == "some") tag = Tok::KwSome;
            else if (word == "all") tag = Tok::KwAll;
            else if (word == "Top") tag = Tok::KwTop;
            else if (word == "Bot") tag = Tok::KwBot;
            else if (word == "tbox") tag = Tok::KwTbox;
            out.push_back({tag, std::move(word), at});
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            advance(2);
            out.push_back({Tok::Arrow, "->", at});
            continue;
        }
        if (c == '|' && i + 1 < src.size() && src[i + 1] == '-') {
            advance(2);
            out.push_back({Tok::Turnstile, "|-", at});
            continue;
        }
        switch (c) {
            case '(': advance(1); out.push_back({Tok::LParen, "(", at}); continue;
            case ')': advance(1); out.push_back({Tok::RParen, ")", at}); continue;
            case ':': advance(1); out.push_back({Tok::Colon, ":", at}); continue;
            case ';': advance(1); out.push_back({Tok::Semi, ";", at}); continue;
            case '.': advance(1); out.push_back({Tok::Dot, ".", at}); continue;
            case '|': advance(1); out.push_back({Tok::Bar, "|", at}); continue;
            default:
                throw ParseError(at, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", pos});
    return out;
}

bool lowercase_initial(const std::string& s) {
    return !s.empty() && std::islower(static_cast<unsigned char>(s[0])) != 0;
}

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::KwNot: return "'not'";
        case Tok::KwAnd: return "'and'";
        case Tok::KwOr: return "'or'";
        case Tok::KwSome: return "'some'";
        case Tok::KwAll: return "'all'";
        case Tok::KwTop: return "'Top'";
        case Tok::KwBot: return "'Bot'";
        case Tok::KwTbox: return "'tbox'";
        case Tok::Arrow: return "'->'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Colon: return "':'";
        case Tok::Semi: return "';'";
        case Tok::Dot: return "'.'";
        case Tok::Turnstile: return "'|-'";
        case Tok::Bar: return "'|'";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool is_keyword(Tok t) {
    switch (t) {
        case Tok::KwNot:
        case Tok::KwAnd:
        case Tok::KwOr:
        case Tok::KwSome:
        case Tok::KwAll:
        case Tok::KwTbox:
            return true;
        default:
            return false;
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    const Token& peek(std::size_t k = 0) const {
        std::size_t i = pos_ + k;
        if (i >= toks_.size()) i = toks_.size() - 1;
        return toks_[i];
    }

    const Token& next() {
        const Token& t = peek();
        if (t.tag != Tok::End) ++pos_;
        return t;
    }

    Token expect(Tok tag, const char* what) {
        const Token& t = peek();
        if (t.tag != tag) {
            throw ParseError(t.pos, std::string("expected ") + what + ", found " + describe(t.tag));
        }
        return toks_[pos_++];
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(peek().pos, message);
    }

    void expect_end() {
        if (peek().tag != Tok::End) {
            fail(std::string("trailing input starting with ") + describe(peek().tag));
        }
    }

    // ── concepts ────────────────────────────────────────────────────────

    Concept concept_expr() {
        Concept lhs = or_expr();
        if (peek().tag == Tok::Arrow) {
            next();
            return Concept::subs(std::move(lhs), concept_expr());
        }
        return lhs;
    }

    Concept or_expr() {
        Concept c = and_expr();
        while (peek().tag == Tok::KwOr) {
            next();
            c = Concept::disj(std::move(c), and_expr());
        }
        return c;
    }

    Concept and_expr() {
        Concept c = unary_expr();
        while (peek().tag == Tok::KwAnd) {
            next();
            c = Concept::conj(std::move(c), unary_expr());
        }
        return c;
    }

    Concept unary_expr() {
        switch (peek().tag) {
            case Tok::KwNot:
                next();
                return Concept::neg(unary_expr());
            case Tok::KwSome:
            case Tok::KwAll: {
                bool existential = next().tag == Tok::KwSome;
                Token role = expect(Tok::Ident, "role name");
                if (lowercase_initial(role.text)) {
                    throw ParseError(role.pos, "role name must be uppercase-initial: '" +
                                                   role.text + "'");
                }
                expect(Tok::Dot, "'.' after role name");
                Concept body = unary_expr();
                return existential ? Concept::exists(role.text, std::move(body))
                                   : Concept::forall(role.text, std::move(body));
            }
            default:
                return primary_expr();
        }
    }

    Concept primary_expr() {
        const Token& t = peek();
        switch (t.tag) {
            case Tok::KwTop:
                next();
                return Concept::top();
            case Tok::KwBot:
                next();
                return Concept::bottom();
            case Tok::Ident: {
                if (lowercase_initial(t.text)) {
                    fail("concept atom must be uppercase-initial (lowercase names are nominals): '" +
                         t.text + "'");
                }
                return Concept::atom(next().text);
            }
            case Tok::LParen: {
                next();
                Concept c = concept_expr();
                expect(Tok::RParen, "')'");
                return c;
            }
            default:
                fail(std::string("expected a concept, found ") + describe(t.tag));
        }
    }

    // ── statements ──────────────────────────────────────────────────────

    bool at_statement() const {
        const Token& t = peek();
        if (t.tag == Tok::Ident && lowercase_initial(t.text)) return true;
        // parenthesised statement: '(' NOM ':' ...  or  '(' NOM ROLE NOM ')'
        if (t.tag == Tok::LParen && peek(1).tag == Tok::Ident && lowercase_initial(peek(1).text)) {
            if (peek(2).tag == Tok::Colon) return true;
            if (peek(2).tag == Tok::Ident && !lowercase_initial(peek(2).text) &&
                peek(3).tag == Tok::Ident && lowercase_initial(peek(3).text))
                return true;
        }
        return false;
    }

    std::string nominal_name() {
        const Token& t = peek();
        if (is_keyword(t.tag)) {
            throw ParseError(t.pos, "reserved word '" + t.text + "' used as nominal");
        }
        Token id = expect(Tok::Ident, "nominal");
        if (!lowercase_initial(id.text)) {
            throw ParseError(id.pos, "nominal must be lowercase-initial: '" + id.text + "'");
        }
        return id.text;
    }

    Statement statement() {
        if (peek().tag == Tok::LParen && at_statement()) {
            next();
            Statement s = statement();
            expect(Tok::RParen, "')'");
            return s;
        }
        std::string x = nominal_name();
        if (peek().tag == Tok::Colon) {
            next();
            return Statement::nominal(std::move(x), statement_body());
        }
        Token role = expect(Tok::Ident, "role name or ':'");
        if (lowercase_initial(role.text)) {
            throw ParseError(role.pos,
                             "role name must be uppercase-initial: '" + role.text + "'");
        }
        std::string y = nominal_name();
        return Statement::role(std::move(x), role.text, std::move(y));
    }

    Statement statement_body() {
        if (at_statement()) return statement();
        return Statement::formula(concept_expr());
    }

    // ── sequents ────────────────────────────────────────────────────────

    Statement sequent_item() {
        if (at_statement()) return statement();
        return Statement::formula(concept_expr());
    }

    Sequent sequent() {
        std::vector<Statement> tbox;
        if (peek().tag == Tok::KwTbox) {
            next();
            expect(Tok::Colon, "':' after 'tbox'");
            while (true) {
                const Token& at = peek();
                Concept f = concept_expr();
                if (f.kind() != ConceptKind::Subs) {
                    throw ParseError(at.pos, "tbox formula must be a subsumption");
                }
                tbox.push_back(Statement::formula(std::move(f)));
                if (peek().tag == Tok::Semi) {
                    next();
                    continue;
                }
                break;
            }
            expect(Tok::Bar, "'|' closing the tbox");
        }
        std::vector<Statement> antecedent;
        if (peek().tag != Tok::Turnstile) {
            while (true) {
                antecedent.push_back(sequent_item());
                if (peek().tag == Tok::Semi) {
                    next();
                    continue;
                }
                break;
            }
        }
        expect(Tok::Turnstile, "'|-'");
        Statement succedent = sequent_item();
        if (peek().tag == Tok::Semi || peek().tag == Tok::Turnstile) {
            fail("multiple succedents are not allowed");
        }
        return Sequent{std::move(tbox), std::move(antecedent), std::move(succedent)};
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Concept parse_concept(std::string_view text) {
    Parser p(text);
    Concept c = p.concept_expr();
    p.expect_end();
    return c;
}

Statement parse_statement(std::string_view text) {
    Parser p(text);
    Statement s = p.statement();
    p.expect_end();
    return s;
}

Statement parse_sequent_item(std::string_view text) {
    Parser p(text);
    Statement s = p.sequent_item();
    p.expect_end();
    return s;
}

Sequent parse_sequent(std::string_view text) {
    Parser p(text);
    Sequent q = p.sequent();
    p.expect_end();
    return q;
}

}  // namespace ialc
