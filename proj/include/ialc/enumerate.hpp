#ifndef IALC_ENUMERATE_HPP
#define IALC_ENUMERATE_HPP

// Exhaustive enumeration of linted interpretations over a finite signature,
// and countermodel search on top of it.
//
// Canonical order: entity count ascending; preorders as reflexive-transitive
// closures of edge sets in lexicographic order with isomorph rejection by
// canonical relabelling; then role relations (filtered by F1/F2), hereditary
// valuations and nominal maps, each as ascending odometers.  The order is
// deterministic, so "the least countermodel" is well defined.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ialc/semantics.hpp"
#include "ialc/syntax.hpp"

namespace ialc {

inline constexpr int kDefaultEntityCap = 4;

struct Signature {
    std::vector<std::string> atoms;     // sorted
    std::vector<std::string> roles;     // sorted
    std::vector<std::string> nominals;  // sorted

    static Signature of(const Sequent& q);
    static Signature of(const Concept& c);
};

/// Visits every linted interpretation over `sig` with 1..max_entities
/// entities, in canonical order.  The visitor returns false to stop early;
/// the function returns false iff it was stopped.
bool for_each_model(const Signature& sig, int max_entities,
                    const std::function<bool(const Interpretation&)>& visit);

/// Canonically least interpretation falsifying the sequent, or nullopt.
/// Throws CapError when max_entities exceeds the cap.
std::optional<Interpretation> find_countermodel(const Signature& sig, const Sequent& q,
                                                int max_entities,
                                                int cap = kDefaultEntityCap);

/// Exhaustive validity over all linted models of the sequent's signature.
bool valid_on_all_models(const Sequent& q, int max_entities);

/// Exhaustive check that the concept has full extension everywhere.
bool concept_valid_on_all_models(const Concept& c, int max_entities);

}  // namespace ialc

#endif  // IALC_ENUMERATE_HPP
