#ifndef IALC_TESTS_GENERATORS_HPP
#define IALC_TESTS_GENERATORS_HPP

// Deterministic random generators shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "ialc/enumerate.hpp"
#include "ialc/semantics.hpp"
#include "ialc/syntax.hpp"

namespace ialc::testgen {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p;
    }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
    }
};

inline Concept random_concept(Rng& rng, const Signature& sig, int depth) {
    const bool leaf = depth <= 0 || rng.chance(0.3);
    if (leaf || (sig.atoms.empty() && sig.roles.empty())) {
        int c = rng.below(sig.atoms.empty() ? 2 : 4);
        if (c == 0) return Concept::top();
        if (c == 1) return Concept::bottom();
        return Concept::atom(rng.pick(sig.atoms));
    }
    int kind = rng.below(sig.roles.empty() ? 4 : 6);
    switch (kind) {
        case 0: return Concept::neg(random_concept(rng, sig, depth - 1));
        case 1:
            return Concept::conj(random_concept(rng, sig, depth - 1),
                                 random_concept(rng, sig, depth - 1));
        case 2:
            return Concept::disj(random_concept(rng, sig, depth - 1),
                                 random_concept(rng, sig, depth - 1));
        case 3:
            return Concept::subs(random_concept(rng, sig, depth - 1),
                                 random_concept(rng, sig, depth - 1));
        case 4:
            return Concept::exists(rng.pick(sig.roles), random_concept(rng, sig, depth - 1));
        default:
            return Concept::forall(rng.pick(sig.roles), random_concept(rng, sig, depth - 1));
    }
}

inline Statement random_item(Rng& rng, const Signature& sig, int depth) {
    if (sig.nominals.empty()) return Statement::formula(random_concept(rng, sig, depth));
    int kind = rng.below(sig.roles.empty() ? 3 : 4);
    switch (kind) {
        case 0:
            return Statement::formula(random_concept(rng, sig, depth));
        case 1:
            return Statement::nominal(rng.pick(sig.nominals), random_concept(rng, sig, depth));
        case 2:
            return Statement::nominal(
                rng.pick(sig.nominals),
                Statement::nominal(rng.pick(sig.nominals),
                                   random_concept(rng, sig, depth - 1)));
        default:
            return Statement::role(rng.pick(sig.nominals), rng.pick(sig.roles),
                                   rng.pick(sig.nominals));
    }
}

inline Sequent random_sequent(Rng& rng, const Signature& sig, int depth, int max_items) {
    Sequent q{{}, {}, random_item(rng, sig, depth)};
    int items = rng.below(max_items + 1);
    for (int k = 0; k < items; ++k) q.antecedent.push_back(random_item(rng, sig, depth));
    if (rng.chance(0.2) && !sig.atoms.empty()) {
        q.tbox.push_back(Statement::formula(Concept::subs(random_concept(rng, sig, depth - 1),
                                                          random_concept(rng, sig, depth - 1))));
    }
    return q;
}

/// Random model over the signature satisfying all lint conditions: random
/// preorder closed reflexively-transitively, hereditary valuation, role
/// relations repaired until F1/F2 hold, total nominal map.
inline Interpretation random_linted_model(Rng& rng, const Signature& sig, int max_entities) {
    const int n = 1 + rng.below(max_entities);
    Interpretation m;
    for (int e = 0; e < n; ++e) m.add_entity("w" + std::to_string(e));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b && rng.chance(0.3)) m.add_prec_edge(a, b);
        }
    }
    m.close_precedes();
    for (const auto& atom : sig.atoms) {
        EntitySet ext = 0;
        for (int e = 0; e < n; ++e) {
            if (rng.chance(0.4)) ext |= m.up_set(e);  // hereditary by construction
        }
        m.set_atom(atom, ext);
    }
    for (const auto& role : sig.roles) {
        std::vector<EntitySet> rows(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (rng.chance(0.25)) rows[static_cast<std::size_t>(a)] |= EntitySet{1} << b;
            }
        }
        // Repair F1/F2 by adding pairs until both conditions hold.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int w = 0; w < n; ++w) {
                EntitySet succ = rows[static_cast<std::size_t>(w)];
                EntitySet vs = succ;
                while (vs) {
                    int v = __builtin_ctzll(vs);
                    vs &= vs - 1;
                    EntitySet ws = m.up_set(w);
                    while (ws) {
                        int w2 = __builtin_ctzll(ws);
                        ws &= ws - 1;
                        if ((rows[static_cast<std::size_t>(w2)] & m.up_set(v)) == 0) {
                            rows[static_cast<std::size_t>(w2)] |= EntitySet{1} << v;
                            changed = true;
                        }
                    }
                    EntitySet v2s = m.up_set(v);
                    while (v2s) {
                        int v2 = __builtin_ctzll(v2s);
                        v2s &= v2s - 1;
                        bool found = false;
                        EntitySet w2s = m.up_set(w);
                        while (w2s && !found) {
                            int w2 = __builtin_ctzll(w2s);
                            w2s &= w2s - 1;
                            if ((rows[static_cast<std::size_t>(w2)] >> v2) & 1u) found = true;
                        }
                        if (!found) {
                            rows[static_cast<std::size_t>(w)] |= EntitySet{1} << v2;
                            changed = true;
                        }
                    }
                }
            }
        }
        m.set_role(role, rows);
    }
    for (const auto& nom : sig.nominals) m.set_nominal(nom, rng.below(n));
    return m;
}

}  // namespace ialc::testgen

#endif  // IALC_TESTS_GENERATORS_HPP
