#ifndef ALN_CONTRACTION_HPP
#define ALN_CONTRACTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "aln/concept.hpp"
#include "aln/normal_form.hpp"
#include "aln/tbox.hpp"

namespace aln {

struct ContractionPair {
  Concept give_up;  // G
  Concept keep;     // K
  std::size_t penalty = 0;
};

/// Normal-form halves of a contraction, before embedding.
struct ContractionForms {
  NormalConcept give_up;
  NormalConcept keep;
};

/// findContract on two normal forms (no TBox). <TOP, c> when c and d are
/// already consistent.
ContractionForms find_contract_forms(const NormalConcept& c,
                                     const NormalConcept& d);

/// find_contract_forms, embedded, with penalty_partial_raw attached.
ContractionPair find_contract(const NormalConcept& c, const NormalConcept& d);

/// penaltyPartial: 0 iff c and d are consistent.
std::size_t penalty_partial_raw(const NormalConcept& c, const NormalConcept& d);

/// Throws UnsatisfiableAdvertisement if either side is unsatisfiable in t.
ContractionPair contract(const Concept& c, const Concept& d, const TBox& t);
std::size_t penalty_partial(const Concept& c, const Concept& d, const TBox& t);

/// One atomic occurrence and the roles leading to it.
struct RoleOccurrence {
  Concept atom;
  std::vector<std::string> path;
  friend bool operator==(const RoleOccurrence&, const RoleOccurrence&) = default;
};

/// Role paths of every atomic occurrence in c, in left-to-right order.
std::vector<RoleOccurrence> role_paths(const Concept& c);

}  // namespace aln

#endif  // ALN_CONTRACTION_HPP
