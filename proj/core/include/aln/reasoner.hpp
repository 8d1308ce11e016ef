#ifndef ALN_REASONER_HPP
#define ALN_REASONER_HPP

#include <optional>
#include <string>
#include <string_view>

#include "aln/concept.hpp"
#include "aln/normal_form.hpp"
#include "aln/tbox.hpp"

namespace aln {

enum class MatchType { Exact, Full, PlugIn, Potential, Partial };

const char* to_string(MatchType m);
std::optional<MatchType> match_type_from_string(std::string_view s);
/// Lower is better: Exact < Full < PlugIn < Potential < Partial.
inline int precedence(MatchType m) { return static_cast<int>(m); }

bool is_satisfiable(const Concept& c, const TBox& t);

/// Structural subsumption on normal forms: true iff c is subsumed by d.
bool subsumes(const NormalConcept& d, const NormalConcept& c);
bool subsumes(const Concept& d, const Concept& c, const TBox& t);
bool equivalent(const Concept& a, const Concept& b, const TBox& t);

MatchType classify(const NormalConcept& sup, const NormalConcept& dem);
/// Throws UnsatisfiableAdvertisement if either side is unsatisfiable in t.
MatchType classify_match(const Concept& sup, const Concept& dem, const TBox& t);

}  // namespace aln

#endif  // ALN_REASONER_HPP
