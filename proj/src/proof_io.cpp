#include "ialc/proof_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ialc/parser.hpp"
#include "ialc/printer.hpp"

namespace ialc {

namespace {

struct RawLine {
    int number = 0;
    Sequent sequent{{}, {}, Statement::formula(Concept::top())};
    std::string rule;
    std::vector<int> premises;
    std::optional<std::string> fresh;
    std::optional<Statement> cut;
    int source_line = 0;
};

[[noreturn]] void fail(int lineno, const std::string& message) {
    throw ParseError({lineno, 1}, message);
}

RawLine parse_line(const std::string& line, int lineno) {
    RawLine out;
    out.source_line = lineno;
    std::size_t dot = line.find('.');
    if (dot == std::string::npos) fail(lineno, "proof line must start with '<number>.'");
    try {
        std::size_t used = 0;
        out.number = std::stoi(line.substr(0, dot), &used);
        if (used != dot) throw std::invalid_argument("");
    } catch (const std::exception&) {
        fail(lineno, "proof line must start with '<number>.'");
    }
    std::size_t open = line.rfind('[');
    std::size_t close = line.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        fail(lineno, "missing [RULE ...] annotation");
    std::string sequent_text = line.substr(dot + 1, open - dot - 1);
    out.sequent = parse_sequent(sequent_text);

    std::string attrs = line.substr(open + 1, close - open - 1);
    // A quoted cut item may contain spaces; extract it before tokenising.
    if (auto cpos = attrs.find("cut=\""); cpos != std::string::npos) {
        auto endq = attrs.find('"', cpos + 5);
        if (endq == std::string::npos) fail(lineno, "unterminated cut item");
        out.cut = parse_sequent_item(attrs.substr(cpos + 5, endq - cpos - 5));
        attrs.erase(cpos, endq - cpos + 1);
    }
    std::istringstream in(attrs);
    if (!(in >> out.rule)) fail(lineno, "empty rule annotation");
    std::string attr;
    while (in >> attr) {
        auto eq = attr.find('=');
        if (eq == std::string::npos) fail(lineno, "malformed attribute '" + attr + "'");
        std::string key = attr.substr(0, eq);
        std::string value = attr.substr(eq + 1);
        if (key == "premises") {
            std::istringstream nums(value);
            std::string piece;
            while (std::getline(nums, piece, ',')) {
                try {
                    out.premises.push_back(std::stoi(piece));
                } catch (const std::exception&) {
                    fail(lineno, "bad premise number '" + piece + "'");
                }
            }
        } else if (key == "fresh") {
            out.fresh = value;
        } else if (key == "cut") {
            out.cut = parse_sequent_item(value);
        } else {
            fail(lineno, "unknown attribute '" + key + "'");
        }
    }
    return out;
}

/// Expansion of the MP macro: from |- C and |- C -> D conclude |- D.
ProofTree expand_mp(const RawLine& raw, ProofTree lhs, ProofTree rhs) {
    // Accept the implication in either premise position.
    auto is_impl_of = [](const ProofTree& imp, const ProofTree& arg) {
        const Statement& s = imp.conclusion.succedent;
        return s.kind() == StatementKind::Formula &&
               s.formula_body().kind() == ConceptKind::Subs &&
               Statement::formula(s.formula_body().left()) == arg.conclusion.succedent;
    };
    ProofTree* minor = nullptr;
    ProofTree* major = nullptr;
    if (is_impl_of(rhs, lhs)) {
        minor = &lhs;
        major = &rhs;
    } else if (is_impl_of(lhs, rhs)) {
        minor = &rhs;
        major = &lhs;
    } else {
        fail(raw.source_line, "MP premises are not |- C and |- C -> D");
    }
    if (!minor->conclusion.antecedent.empty() || !major->conclusion.antecedent.empty())
        fail(raw.source_line, "MP premises must have empty antecedents");
    Concept c = major->conclusion.succedent.formula_body().left();
    Concept d = major->conclusion.succedent.formula_body().right();
    const auto& tbox = raw.sequent.tbox;
    Statement sc = Statement::formula(c), sd = Statement::formula(d);
    Statement impl = Statement::formula(Concept::subs(c, d));

    ProofTree ax_c{Sequent{tbox, {sc}, sc}, RuleName::Ax, {}, {}};
    ProofTree ax_d{Sequent{tbox, {sd}, sd}, RuleName::Ax, {}, {}};
    ProofTree subs_l{Sequent{tbox, {sc, impl}, sd}, RuleName::SubsL, {},
                     {std::move(ax_c), std::move(ax_d)}};
    Instantiation cut1;
    cut1.cut = impl;
    ProofTree step1{Sequent{tbox, {sc}, sd}, RuleName::Cut, cut1,
                    {std::move(*major), std::move(subs_l)}};
    Instantiation cut2;
    cut2.cut = sc;
    ProofTree step2{Sequent{tbox, {}, sd}, RuleName::Cut, cut2,
                    {std::move(*minor), std::move(step1)}};
    if (!(step2.conclusion == raw.sequent))
        fail(raw.source_line, "MP line does not match |- D for the given premises");
    return step2;
}

}  // namespace

ProofTree load_proof(std::istream& in) {
    std::map<int, RawLine> lines;
    std::string line;
    int lineno = 0;
    int last_number = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        RawLine raw = parse_line(line, lineno);
        if (lines.count(raw.number)) fail(lineno, "duplicate line number");
        if (raw.number <= last_number) fail(lineno, "line numbers must increase");
        last_number = raw.number;
        lines.emplace(raw.number, std::move(raw));
    }
    if (lines.empty()) throw ParseError({lineno, 1}, "empty proof file");

    std::map<int, ProofTree> built;
    std::map<int, int> referenced;
    for (auto& [num, raw] : lines) {
        std::vector<ProofTree> premises;
        for (int p : raw.premises) {
            if (p >= num) fail(raw.source_line, "forward reference to line " + std::to_string(p));
            auto it = built.find(p);
            if (it == built.end())
                fail(raw.source_line, "reference to missing line " + std::to_string(p));
            premises.push_back(it->second);
            referenced[p]++;
        }
        if (raw.rule == "MP") {
            if (premises.size() != 2) fail(raw.source_line, "MP takes two premises");
            built.emplace(num, expand_mp(raw, std::move(premises[0]), std::move(premises[1])));
            continue;
        }
        RuleName rule = RuleName::Ax;
        if (raw.rule == "NEC") {
            rule = RuleName::PForall;
        } else if (auto r = rule_from_name(raw.rule)) {
            rule = *r;
        } else {
            fail(raw.source_line, "unknown rule name '" + raw.rule + "'");
        }
        Instantiation inst;
        inst.fresh = raw.fresh;
        inst.cut = raw.cut;
        built.emplace(num, ProofTree{raw.sequent, rule, std::move(inst), std::move(premises)});
    }
    int root = lines.rbegin()->first;
    for (const auto& [num, raw] : lines) {
        if (num != root && referenced[num] == 0)
            fail(raw.source_line, "orphan line " + std::to_string(num) +
                                      " is not referenced by any later line");
    }
    return built.at(root);
}

ProofTree load_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open proof file '" + path + "'");
    return load_proof(in);
}

ProofTree parse_proof(const std::string& text) {
    std::istringstream in(text);
    return load_proof(in);
}

namespace {

int write_node(const ProofTree& t, int& counter, std::string& out) {
    std::vector<int> premise_numbers;
    for (const auto& p : t.premises) premise_numbers.push_back(write_node(p, counter, out));
    int my = ++counter;
    out += std::to_string(my) + ". " + print_sequent(t.conclusion) + " [" +
           rule_name(t.rule);
    if (!premise_numbers.empty()) {
        out += " premises=";
        for (std::size_t i = 0; i < premise_numbers.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(premise_numbers[i]);
        }
    }
    if (t.inst.fresh) out += " fresh=" + *t.inst.fresh;
    if (t.inst.cut) out += " cut=\"" + print_statement(*t.inst.cut) + "\"";
    out += "]\n";
    return my;
}

}  // namespace

std::string write_proof(const ProofTree& t) {
    std::string out;
    int counter = 0;
    write_node(t, counter, out);
    return out;
}

}  // namespace ialc
