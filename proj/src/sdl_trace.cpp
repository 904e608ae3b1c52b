#include "ialc/sdl_trace.hpp"

#include <fstream>
#include <sstream>

namespace ialc::sdl {

const char* just_name(Just j) {
    switch (j) {
        case Just::Hyp: return "HYP";
        case Just::Taut: return "TAUT";
        case Just::ObK: return "OB-K";
        case Just::ObD: return "OB-D";
        case Just::Fcp: return "FCP";
        case Just::Mp: return "MP";
        case Just::ObNec: return "OB-NEC";
        case Just::Cp: return "CP";
    }
    return "?";
}

namespace {

bool is_ob_k(const Formula& f) {
    // O(a => b) => (O(a) => O(b))
    if (f.kind() != Kind::Impl) return false;
    Formula lhs = f.left(), rhs = f.right();
    if (lhs.kind() != Kind::Ob || lhs.child().kind() != Kind::Impl) return false;
    Formula a = lhs.child().left(), b = lhs.child().right();
    if (rhs.kind() != Kind::Impl) return false;
    return rhs.left() == Formula::ob(a) && rhs.right() == Formula::ob(b);
}

bool is_ob_d(const Formula& f) {
    // O(a) => ~O(~a)
    if (f.kind() != Kind::Impl || f.left().kind() != Kind::Ob) return false;
    Formula a = f.left().child();
    return f.right() == Formula::neg(Formula::ob(Formula::neg(a)));
}

bool is_fcp(const Formula& f) {
    // P(a | b) => (P(a) & P(b))
    if (f.kind() != Kind::Impl) return false;
    Formula lhs = f.left(), rhs = f.right();
    if (!lhs.is_perm() || lhs.perm_body().kind() != Kind::Disj) return false;
    Formula a = lhs.perm_body().left(), b = lhs.perm_body().right();
    return rhs == Formula::conj(Formula::perm(a), Formula::perm(b));
}

}  // namespace

TraceVerdict check_derivation(const DerivationTrace& t) {
    TraceVerdict verdict;
    std::vector<bool> pure(t.steps.size(), true);
    auto fail = [&](int step, std::string reason) {
        verdict.accepted = false;
        verdict.failures.push_back({step, std::move(reason)});
    };
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const Step& step = t.steps[k];
        const int num = static_cast<int>(k) + 1;
        auto ref_ok = [&](int r) { return r >= 1 && r <= static_cast<int>(k); };
        switch (step.just) {
            case Just::Hyp: {
                bool found = false;
                for (const auto& a : t.assumptions) {
                    if (a == step.formula) found = true;
                }
                if (!found) fail(num, "HYP: formula is not among the assumptions");
                pure[k] = false;
                break;
            }
            case Just::Taut:
                if (!taut_check(step.formula)) fail(num, "TAUT: not a tautology instance");
                break;
            case Just::ObK:
                if (!is_ob_k(step.formula))
                    fail(num, "OB-K: not of the shape O(a => b) => (O(a) => O(b))");
                break;
            case Just::ObD:
                if (!is_ob_d(step.formula))
                    fail(num, "OB-D: not of the shape O(a) => ~O(~a)");
                break;
            case Just::Fcp:
                if (!is_fcp(step.formula))
                    fail(num, "FCP: not of the shape P(a | b) => (P(a) & P(b))");
                break;
            case Just::Mp: {
                if (!ref_ok(step.ref1) || !ref_ok(step.ref2)) {
                    fail(num, "MP: references must point at earlier steps");
                    break;
                }
                const Formula& f1 = t.steps[static_cast<std::size_t>(step.ref1 - 1)].formula;
                const Formula& f2 = t.steps[static_cast<std::size_t>(step.ref2 - 1)].formula;
                auto applies = [&](const Formula& arg, const Formula& imp) {
                    return imp.kind() == Kind::Impl && imp.left() == arg &&
                           imp.right() == step.formula;
                };
                if (!applies(f1, f2) && !applies(f2, f1)) {
                    fail(num, "MP: referenced steps are not argument and implication");
                    break;
                }
                pure[k] = pure[static_cast<std::size_t>(step.ref1 - 1)] &&
                          pure[static_cast<std::size_t>(step.ref2 - 1)];
                break;
            }
            case Just::ObNec: {
                if (!ref_ok(step.ref1)) {
                    fail(num, "OB-NEC: reference must point at an earlier step");
                    break;
                }
                const std::size_t r = static_cast<std::size_t>(step.ref1 - 1);
                if (step.formula != Formula::ob(t.steps[r].formula)) {
                    fail(num, "OB-NEC: formula is not O of the referenced step");
                    break;
                }
                if (!pure[r]) {
                    fail(num, "OB-NEC: referenced step depends on an assumption");
                }
                break;
            }
            case Just::Cp: {
                if (!ref_ok(step.ref1)) {
                    fail(num, "CP: reference must point at an earlier step");
                    break;
                }
                const Formula& src = t.steps[static_cast<std::size_t>(step.ref1 - 1)].formula;
                if (src.kind() != Kind::Impl ||
                    step.formula !=
                        Formula::impl(Formula::neg(src.right()), Formula::neg(src.left()))) {
                    fail(num, "CP: formula is not the contrapositive of the referenced step");
                    break;
                }
                pure[k] = pure[static_cast<std::size_t>(step.ref1 - 1)];
                break;
            }
        }
    }
    return verdict;
}

bool is_contradiction(const Formula& f) {
    if (f.kind() != Kind::Conj) return false;
    Formula a = f.left(), b = f.right();
    if (b.kind() == Kind::Neg && b.child() == a) return true;
    if (a.kind() == Kind::Neg && a.child() == b) return true;
    return false;
}

// ── Trace files ─────────────────────────────────────────────────────────────

namespace {

[[noreturn]] void fail_line(int lineno, const std::string& message) {
    throw ParseError({lineno, 1}, message);
}

std::string strip(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

DerivationTrace load_trace(std::istream& in) {
    DerivationTrace trace;
    std::string line;
    int lineno = 0;
    int next_step = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string body = strip(line);
        if (body.empty()) continue;
        if (body.rfind("assume ", 0) == 0) {
            if (!trace.steps.empty()) fail_line(lineno, "assumptions must precede the steps");
            trace.assumptions.push_back(parse_formula(body.substr(7)));
            continue;
        }
        auto dot = body.find('.');
        if (dot == std::string::npos) fail_line(lineno, "step must start with '<number>.'");
        int num = 0;
        try {
            num = std::stoi(body.substr(0, dot));
        } catch (const std::exception&) {
            fail_line(lineno, "step must start with '<number>.'");
        }
        if (num != next_step) {
            fail_line(lineno, "steps must be numbered consecutively from 1");
        }
        ++next_step;
        auto open = body.rfind('[');
        auto close = body.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            fail_line(lineno, "missing [JUSTIFICATION]");
        Formula f = parse_formula(body.substr(dot + 1, open - dot - 1));
        std::istringstream just(body.substr(open + 1, close - open - 1));
        std::string name;
        just >> name;
        Step step{f, Just::Hyp, -1, -1};
        if (name == "HYP") step.just = Just::Hyp;
        else if (name == "TAUT") step.just = Just::Taut;
        else if (name == "OB-K") step.just = Just::ObK;
        else if (name == "OB-D") step.just = Just::ObD;
        else if (name == "FCP") step.just = Just::Fcp;
        else if (name == "MP") step.just = Just::Mp;
        else if (name == "OB-NEC") step.just = Just::ObNec;
        else if (name == "CP") step.just = Just::Cp;
        else fail_line(lineno, "unknown justification '" + name + "'");
        if (step.just == Just::Mp) {
            std::string refs;
            just >> refs;
            auto comma = refs.find(',');
            if (comma == std::string::npos) fail_line(lineno, "MP needs two references 'i,j'");
            try {
                step.ref1 = std::stoi(refs.substr(0, comma));
                step.ref2 = std::stoi(refs.substr(comma + 1));
            } catch (const std::exception&) {
                fail_line(lineno, "MP needs two references 'i,j'");
            }
        } else if (step.just == Just::ObNec || step.just == Just::Cp) {
            if (!(just >> step.ref1)) fail_line(lineno, "justification needs one reference");
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

DerivationTrace load_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open trace file '" + path + "'");
    return load_trace(in);
}

DerivationTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    return load_trace(in);
}

std::string write_trace(const DerivationTrace& t) {
    std::string out;
    for (const auto& a : t.assumptions) out += "assume " + print_formula(a) + "\n";
    for (std::size_t k = 0; k < t.steps.size(); ++k) {
        const Step& s = t.steps[k];
        out += std::to_string(k + 1) + ". " + print_formula(s.formula) + " [" +
               just_name(s.just);
        if (s.just == Just::Mp) {
            out += " " + std::to_string(s.ref1) + "," + std::to_string(s.ref2);
        } else if (s.just == Just::ObNec || s.just == Just::Cp) {
            out += " " + std::to_string(s.ref1);
        }
        out += "]\n";
    }
    return out;
}

std::vector<Formula> load_formula_set(std::istream& in) {
    std::vector<Formula> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string body = strip(line);
        if (body.empty()) continue;
        out.push_back(parse_formula(body));
    }
    return out;
}

std::vector<Formula> load_formula_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open formula set '" + path + "'");
    return load_formula_set(in);
}

std::string write_formula_set(const std::vector<Formula>& formulas) {
    std::string out;
    for (const auto& f : formulas) out += print_formula(f) + "\n";
    return out;
}

}  // namespace ialc::sdl
