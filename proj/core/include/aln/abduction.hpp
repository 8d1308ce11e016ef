#ifndef ALN_ABDUCTION_HPP
#define ALN_ABDUCTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "aln/concept.hpp"
#include "aln/normal_form.hpp"
#include "aln/tbox.hpp"

namespace aln {

struct TraceEntry {
  std::string step;      // "1", "2", "3", "4.1.1", "4.1.2" or "5"
  std::string path;      // roles from the root, dot separated; empty at top
  std::string conjunct;  // rendered
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct AbductionSolution {
  Concept hypothesis;
  std::size_t penalty = 0;
  std::vector<TraceEntry> generated;
  std::vector<TraceEntry> deleted;
};

/// findIrred on two normal forms, reducibility checked without a TBox.
/// Returns BOTTOM when c and d are inconsistent, TOP when c is subsumed by d.
Concept find_irred(const NormalConcept& c, const NormalConcept& d);

/// Same, with the trace. When `step5` is non-null the reducibility pass
/// re-checks solutions against that TBox.
AbductionSolution find_irred_traced(const NormalConcept& c,
                                    const NormalConcept& d,
                                    const TBox* step5 = nullptr);

/// Normal forms w.r.t. t, reduction without it (penalty convention).
AbductionSolution abduce(const Concept& c, const Concept& d, const TBox& t);

/// Normal forms and reduction both w.r.t. t.
AbductionSolution abduce_with_tbox(const Concept& c, const Concept& d,
                                   const TBox& t);

std::size_t penalty_potential(const Concept& c, const Concept& d,
                              const TBox& t);

}  // namespace aln

#endif  // ALN_ABDUCTION_HPP
