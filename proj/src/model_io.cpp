#include "ialc/model_io.hpp"

#include <fstream>
#include <sstream>

namespace ialc {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int need_entity(const Interpretation& m, const std::string& id, int lineno) {
    int e = m.entity_index(id);
    if (e < 0) {
        throw ModelError("line " + std::to_string(lineno) + ": unknown world '" + id + "'");
    }
    return e;
}

}  // namespace

Interpretation load_model_raw(std::istream& in, bool apply_hereditary_closure) {
    Interpretation m;
    std::string line;
    int lineno = 0;
    // Deferred so that forward references to worlds are allowed.
    std::vector<std::tuple<int, std::string, std::string, std::string, std::string>> deferred;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        auto arity = [&](std::size_t n) {
            if (toks.size() != n + 1) {
                throw ModelError("line " + std::to_string(lineno) + ": '" + kw + "' expects " +
                                 std::to_string(n) + " arguments");
            }
        };
        if (kw == "world") {
            arity(1);
            m.add_entity(toks[1]);
        } else if (kw == "prec") {
            arity(2);
            deferred.emplace_back(lineno, kw, toks[1], toks[2], "");
        } else if (kw == "role") {
            arity(3);
            deferred.emplace_back(lineno, kw, toks[1], toks[2], toks[3]);
        } else if (kw == "atom") {
            arity(2);
            deferred.emplace_back(lineno, kw, toks[1], toks[2], "");
        } else if (kw == "nominal") {
            arity(2);
            deferred.emplace_back(lineno, kw, toks[1], toks[2], "");
        } else {
            throw ModelError("line " + std::to_string(lineno) + ": unknown directive '" + kw +
                             "'");
        }
    }
    if (m.entity_count() == 0) throw ModelError("model has no worlds");
    for (const auto& [ln, kw, a, b, c] : deferred) {
        if (kw == "prec") {
            m.add_prec_edge(need_entity(m, a, ln), need_entity(m, b, ln));
        } else if (kw == "role") {
            m.add_role_pair(a, need_entity(m, b, ln), need_entity(m, c, ln));
        } else if (kw == "atom") {
            m.add_atom_member(a, need_entity(m, b, ln));
        } else {
            m.set_nominal(a, need_entity(m, b, ln));
        }
    }
    m.close_precedes();
    if (apply_hereditary_closure) m = hereditary_closure(m);
    return m;
}

Interpretation load_model_file_raw(const std::string& path, bool apply_hereditary_closure) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file '" + path + "'");
    return load_model_raw(in, apply_hereditary_closure);
}

Interpretation load_model(std::istream& in, bool apply_hereditary_closure) {
    Interpretation m = load_model_raw(in, apply_hereditary_closure);
    LintReport lint = check_frame_conditions(m);
    for (const auto& v : lint.violations) {
        if (v.tag == LintTag::Heredity) {
            throw ModelError("valuation is not closed under refinement: " +
                             format_violation(m, v) + " (use --close to close it)");
        }
    }
    return m;
}

Interpretation load_model_file(const std::string& path, bool apply_hereditary_closure) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file '" + path + "'");
    return load_model(in, apply_hereditary_closure);
}

Interpretation parse_model(const std::string& text, bool apply_hereditary_closure) {
    std::istringstream in(text);
    return load_model(in, apply_hereditary_closure);
}

std::string write_model(const Interpretation& i) {
    std::string out;
    const auto& names = i.entity_names();
    for (const auto& n : names) {
        out += "world " + n + "\n";
    }
    for (auto [a, b] : i.prec_edges()) {
        out += "prec " + names[static_cast<std::size_t>(a)] + " " +
               names[static_cast<std::size_t>(b)] + "\n";
    }
    for (const auto& [role, rows] : i.roles()) {
        for (int e = 0; e < i.entity_count(); ++e) {
            EntitySet succ = rows[static_cast<std::size_t>(e)];
            while (succ) {
                int t = __builtin_ctzll(succ);
                succ &= succ - 1;
                out += "role " + role + " " + names[static_cast<std::size_t>(e)] + " " +
                       names[static_cast<std::size_t>(t)] + "\n";
            }
        }
    }
    for (const auto& [atom, ext] : i.atoms()) {
        EntitySet rest = ext;
        while (rest) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            out += "atom " + atom + " " + names[static_cast<std::size_t>(e)] + "\n";
        }
    }
    for (const auto& [nom, e] : i.nominals()) {
        out += "nominal " + nom + " " + names[static_cast<std::size_t>(e)] + "\n";
    }
    return out;
}

std::string model_to_dot(const Interpretation& i) {
    const auto& names = i.entity_names();
    std::string out = "digraph model {\n  rankdir=BT;\n";
    for (int e = 0; e < i.entity_count(); ++e) {
        std::string label = names[static_cast<std::size_t>(e)];
        std::string held;
        for (const auto& [atom, ext] : i.atoms()) {
            if ((ext >> e) & 1u) held += held.empty() ? atom : ("," + atom);
        }
        for (const auto& [nom, target] : i.nominals()) {
            if (target == e) label += " (" + nom + ")";
        }
        if (!held.empty()) label += "\\n" + held;
        out += "  \"" + names[static_cast<std::size_t>(e)] + "\" [label=\"" + label + "\"];\n";
    }
    for (auto [a, b] : i.prec_edges()) {
        out += "  \"" + names[static_cast<std::size_t>(a)] + "\" -> \"" +
               names[static_cast<std::size_t>(b)] + "\" [style=dashed];\n";
    }
    for (const auto& [role, rows] : i.roles()) {
        for (int e = 0; e < i.entity_count(); ++e) {
            EntitySet succ = rows[static_cast<std::size_t>(e)];
            while (succ) {
                int t = __builtin_ctzll(succ);
                succ &= succ - 1;
                out += "  \"" + names[static_cast<std::size_t>(e)] + "\" -> \"" +
                       names[static_cast<std::size_t>(t)] + "\" [label=\"" + role + "\"];\n";
            }
        }
    }
    out += "}\n";
    return out;
}

}  // namespace ialc
