#include "ialc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace ialc {

namespace {

// Closure matrices are encoded as n*n bit masks, bit (a*n + b) meaning a <= b.
using Bits = std::uint32_t;

bool bit(Bits m, int a, int b, int n) { return (m >> (a * n + b)) & 1u; }

Bits closure_of(Bits edges, int n) {
    Bits m = edges;
    for (int e = 0; e < n; ++e) m |= Bits{1} << (e * n + e);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (!bit(m, a, b, n)) continue;
                for (int c = 0; c < n; ++c) {
                    if (bit(m, b, c, n) && !bit(m, a, c, n)) {
                        m |= Bits{1} << (a * n + c);
                        changed = true;
                    }
                }
            }
        }
    }
    return m;
}

Bits relabel(Bits m, const std::array<int, 4>& perm, int n) {
    Bits out = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (bit(m, a, b, n)) out |= Bits{1} << (perm[a] * n + perm[b]);
        }
    }
    return out;
}

Bits canonical_form(Bits m, int n) {
    std::array<int, 4> perm{0, 1, 2, 3};
    Bits best = ~Bits{0};
    do {
        best = std::min(best, relabel(m, perm, n));
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

/// Preorder representatives on n entities: closures of edge sets in
/// lexicographic order, one per isomorphism class (first seen kept).
const std::vector<Bits>& preorder_reps(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Bits>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Bits> reps;
    std::vector<Bits> seen_canonical;
    const int pairs = n * (n - 1);
    // Map the k-th non-diagonal pair (lexicographic) to its matrix bit.
    std::vector<int> pair_bit;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a != b) pair_bit.push_back(a * n + b);
        }
    }
    for (Bits subset = 0; subset < (Bits{1} << pairs); ++subset) {
        Bits edges = 0;
        for (int k = 0; k < pairs; ++k) {
            if ((subset >> k) & 1u) edges |= Bits{1} << pair_bit[static_cast<std::size_t>(k)];
        }
        Bits closed = closure_of(edges, n);
        Bits canon = canonical_form(closed, n);
        if (std::find(seen_canonical.begin(), seen_canonical.end(), canon) ==
            seen_canonical.end()) {
            seen_canonical.push_back(canon);
            reps.push_back(closed);
        }
    }
    return cache.emplace(n, std::move(reps)).first->second;
}

std::vector<EntitySet> up_rows_of(Bits preorder, int n) {
    std::vector<EntitySet> rows(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (bit(preorder, a, b, n)) rows[static_cast<std::size_t>(a)] |= EntitySet{1} << b;
        }
    }
    return rows;
}

bool satisfies_f1_f2(Bits rel, const std::vector<EntitySet>& up, int n) {
    for (int w = 0; w < n; ++w) {
        for (int v = 0; v < n; ++v) {
            if (!((rel >> (w * n + v)) & 1u)) continue;
            // F1: each w' above w has a successor above v.
            EntitySet ws = up[static_cast<std::size_t>(w)];
            while (ws) {
                int w2 = __builtin_ctzll(ws);
                ws &= ws - 1;
                EntitySet succ2 = 0;
                for (int t = 0; t < n; ++t) {
                    if ((rel >> (w2 * n + t)) & 1u) succ2 |= EntitySet{1} << t;
                }
                if ((succ2 & up[static_cast<std::size_t>(v)]) == 0) return false;
            }
            // F2: each v' above v has a predecessor above w.
            EntitySet vs = up[static_cast<std::size_t>(v)];
            while (vs) {
                int v2 = __builtin_ctzll(vs);
                vs &= vs - 1;
                bool found = false;
                EntitySet w2s = up[static_cast<std::size_t>(w)];
                while (w2s && !found) {
                    int w2 = __builtin_ctzll(w2s);
                    w2s &= w2s - 1;
                    if ((rel >> (w2 * n + v2)) & 1u) found = true;
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

/// Role relations compatible with the frame conditions, ascending.
const std::vector<Bits>& frame_relations(int n, Bits preorder) {
    static std::mutex mu;
    static std::map<std::pair<int, Bits>, std::vector<Bits>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, preorder);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto up = up_rows_of(preorder, n);
    std::vector<Bits> rels;
    const Bits limit = n * n >= 32 ? 0 : (Bits{1} << (n * n));
    for (Bits rel = 0;; ++rel) {
        if (satisfies_f1_f2(rel, up, n)) rels.push_back(rel);
        if (rel + 1 == limit || rel == ~Bits{0}) break;
    }
    return cache.emplace(key, std::move(rels)).first->second;
}

std::vector<EntitySet> hereditary_sets(const std::vector<EntitySet>& up, int n) {
    std::vector<EntitySet> out;
    for (EntitySet s = 0; s < (EntitySet{1} << n); ++s) {
        bool ok = true;
        EntitySet rest = s;
        while (rest && ok) {
            int e = __builtin_ctzll(rest);
            rest &= rest - 1;
            if ((up[static_cast<std::size_t>(e)] & ~s) != 0) ok = false;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<EntitySet> role_rows(Bits rel, int n) {
    std::vector<EntitySet> rows(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if ((rel >> (a * n + b)) & 1u) rows[static_cast<std::size_t>(a)] |= EntitySet{1} << b;
        }
    }
    return rows;
}

/// Odometer over `dims` positions with the given radix per position;
/// position 0 is most significant.  Calls fn for every tuple.
bool odometer(const std::vector<std::size_t>& radix,
              const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(radix.size(), 0);
    while (true) {
        if (!fn(idx)) return false;
        std::size_t p = radix.size();
        while (p > 0) {
            --p;
            if (++idx[p] < radix[p]) break;
            idx[p] = 0;
            if (p == 0) return true;
        }
        if (radix.empty()) return true;
    }
}

}  // namespace

Signature Signature::of(const Sequent& q) {
    std::set<std::string> atoms, roles, nominals;
    collect_symbols(q, atoms, roles, nominals);
    return Signature{{atoms.begin(), atoms.end()},
                     {roles.begin(), roles.end()},
                     {nominals.begin(), nominals.end()}};
}

Signature Signature::of(const Concept& c) {
    std::set<std::string> atoms, roles;
    collect_symbols(c, atoms, roles);
    return Signature{{atoms.begin(), atoms.end()}, {roles.begin(), roles.end()}, {}};
}

bool for_each_model(const Signature& sig, int max_entities,
                    const std::function<bool(const Interpretation&)>& visit) {
    for (int n = 1; n <= max_entities; ++n) {
        for (Bits preorder : preorder_reps(n)) {
            Interpretation base;
            for (int e = 0; e < n; ++e) base.add_entity("w" + std::to_string(e));
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (a != b && bit(preorder, a, b, n)) base.add_prec_edge(a, b);
                }
            }
            base.close_precedes();
            const auto up = base.up_rows();
            static const std::vector<Bits> no_rels{0};
            const auto& rels = sig.roles.empty() ? no_rels : frame_relations(n, preorder);
            const auto upsets = hereditary_sets(up, n);

            std::vector<std::size_t> radix;
            for (std::size_t r = 0; r < sig.roles.size(); ++r) radix.push_back(rels.size());
            for (std::size_t a = 0; a < sig.atoms.size(); ++a) radix.push_back(upsets.size());
            for (std::size_t m = 0; m < sig.nominals.size(); ++m)
                radix.push_back(static_cast<std::size_t>(n));

            bool keep_going = odometer(radix, [&](const std::vector<std::size_t>& idx) {
                std::size_t p = 0;
                for (const auto& role : sig.roles) {
                    base.set_role(role, role_rows(rels[idx[p++]], n));
                }
                for (const auto& atom : sig.atoms) {
                    base.set_atom(atom, upsets[idx[p++]]);
                }
                for (const auto& nom : sig.nominals) {
                    base.set_nominal(nom, static_cast<int>(idx[p++]));
                }
                return visit(base);
            });
            if (!keep_going) return false;
        }
    }
    return true;
}

std::optional<Interpretation> find_countermodel(const Signature& sig, const Sequent& q,
                                                int max_entities, int cap) {
    if (max_entities < 1) throw CapError("countermodel bound must be positive");
    if (max_entities > cap) {
        throw CapError("countermodel bound " + std::to_string(max_entities) +
                       " exceeds the cap of " + std::to_string(cap));
    }
    std::optional<Interpretation> witness;
    for_each_model(sig, max_entities, [&](const Interpretation& m) {
        if (!sequent_valid(m, q)) {
            witness = m;  // deep copy of the candidate
            return false;
        }
        return true;
    });
    return witness;
}

bool valid_on_all_models(const Sequent& q, int max_entities) {
    bool valid = true;
    for_each_model(Signature::of(q), max_entities, [&](const Interpretation& m) {
        if (!sequent_valid(m, q)) {
            valid = false;
            return false;
        }
        return true;
    });
    return valid;
}

bool concept_valid_on_all_models(const Concept& c, int max_entities) {
    bool valid = true;
    for_each_model(Signature::of(c), max_entities, [&](const Interpretation& m) {
        if (eval_concept(m, c) != m.all_entities()) {
            valid = false;
            return false;
        }
        return true;
    });
    return valid;
}

}  // namespace ialc
