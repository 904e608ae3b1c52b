#ifndef IALC_SDL_HPP
#define IALC_SDL_HPP

// A minimal KD (standard deontic logic) engine: formulas with the
// obligation modality, tautology checking modulo obligation abstraction,
// and bounded serial-Kripke-model satisfiability.
//
// Text syntax:  atoms are lowercase identifiers; `~` negation, `&`
// conjunction, `|` disjunction, `=>` implication (right associative,
// loosest); `O(...)` obligation, `P(...)` permission.  P(f) desugars to
// ~O(~f) at parse time and the printer restores the sugar for that exact
// shape.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ialc/errors.hpp"

namespace ialc::sdl {

enum class Kind : std::uint8_t { Prop, Neg, Impl, Conj, Disj, Ob };

class Formula {
public:
    static Formula prop(std::string name);
    static Formula neg(Formula f);
    static Formula impl(Formula a, Formula b);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula ob(Formula f);
    /// Permission sugar: P(f) = ~O(~f).
    static Formula perm(Formula f);

    Kind kind() const noexcept { return node_->kind; }
    const std::string& prop_name() const;
    Formula child() const;  // Neg / Ob
    Formula left() const;   // Impl / Conj / Disj
    Formula right() const;

    /// True when the formula is ~O(~f) for some f.
    bool is_perm() const;
    Formula perm_body() const;

    bool operator==(const Formula& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Formula& o) const { return !(*this == o); }
    friend int compare(const Formula& a, const Formula& b);

private:
    struct Node {
        Kind kind;
        std::string name;
        std::shared_ptr<const Node> a, b;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Formula parse_formula(std::string_view text);
std::string print_formula(const Formula& f);
/// Rendering with permission sugar expanded (both forms for reports).
std::string print_formula_desugared(const Formula& f);

/// Propositional tautology test where every maximal O-subformula is
/// abstracted to a fresh atom (the substitution-instance reading).
bool taut_check(const Formula& f);

// ── Bounded serial models ───────────────────────────────────────────────────

inline constexpr int kMaxWorlds = 4;

struct KdModel {
    int worlds = 0;
    std::vector<std::uint32_t> access;               // successor mask per world
    std::map<std::string, std::uint32_t> valuation;  // atom -> world mask

    bool serial() const;
};

bool eval_at(const KdModel& m, const Formula& f, int world);

struct KdWitness {
    KdModel model;
    int world = 0;
};

/// Least serial model (worlds ascending, then access relation, valuations
/// and witness world in canonical order) with a world satisfying all
/// formulas, or nullopt.  Throws CapError when max_worlds exceeds the cap.
std::optional<KdWitness> find_model(const std::vector<Formula>& formulas, int max_worlds,
                                    int cap = kMaxWorlds);

std::string describe_model(const KdModel& m);

}  // namespace ialc::sdl

#endif  // IALC_SDL_HPP
