#ifndef ALN_CHECKERS_HPP
#define ALN_CHECKERS_HPP

#include <cstddef>
#include <vector>

#include "aln/concept.hpp"
#include "aln/normal_form.hpp"
#include "aln/tbox.hpp"

namespace aln {

/// Every form obtained from n by deleting one conjunct, at any depth.
/// (<= 0 R) with its (all R BOTTOM) counts as one conjunct.
std::vector<NormalConcept> single_deletions(const NormalConcept& n);

/// c and h consistent in t, and c and h together subsumed by d.
bool is_cap_solution(const Concept& h, const Concept& c, const Concept& d,
                     const TBox& t);

/// A solution none of whose sub-conjunctions is a solution.
bool is_irreducible(const Concept& h, const Concept& c, const Concept& d,
                    const TBox& t);

/// Sub-conjunctions of the conjuncts of CNF(d, t) extended with the
/// concept names of c, d and t. Throws EnumerationBudgetExceeded past
/// `max_atoms` atoms.
std::vector<Concept> candidate_pool(const Concept& c, const Concept& d,
                                    const TBox& t, std::size_t max_atoms = 16);

/// No solution in `pool` is strictly more general than h.
bool is_subsumption_maximal_witness(const Concept& h, const Concept& c,
                                    const Concept& d, const TBox& t,
                                    const std::vector<Concept>& pool);

/// No solution in `pool` is strictly shorter than h.
bool is_length_minimal_witness(const Concept& h, const Concept& c,
                               const Concept& d, const TBox& t,
                               const std::vector<Concept>& pool);

/// g and k together equivalent to c in t, k consistent with d in t.
bool is_contraction(const Concept& g, const Concept& k, const Concept& c,
                    const Concept& d, const TBox& t);

/// A contraction with irreducible g that gives up at-least restrictions
/// only against a conflicting at-most of d on the same role path.
bool is_nmin_contraction(const Concept& g, const Concept& k, const Concept& c,
                         const Concept& d, const TBox& t);

}  // namespace aln

#endif  // ALN_CHECKERS_HPP
