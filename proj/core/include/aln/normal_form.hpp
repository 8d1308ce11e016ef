#ifndef ALN_NORMAL_FORM_HPP
#define ALN_NORMAL_FORM_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aln/concept.hpp"
#include "aln/tbox.hpp"

namespace aln {

inline constexpr std::size_t kDefaultUnfoldBudget = 1000000;

struct Universal;

/// Canonical conjunctive normal form of an ALN concept.
///
/// Either the distinguished unsatisfiable form, or names / number
/// restrictions / universal quantifications with at most one of each kind per
/// role. (<= 0 R) and (all R BOTTOM) always occur together.
struct NormalConcept {
  bool unsat = false;
  std::set<std::string> pos;
  std::set<std::string> neg;
  std::map<std::string, std::uint32_t> at_least;
  std::map<std::string, std::uint32_t> at_most;
  std::vector<Universal> all;  // sorted by role, fillers never TOP

  static NormalConcept bottom();
  static NormalConcept top() { return {}; }

  bool is_top() const;
  const NormalConcept* filler(const std::string& role) const;
  NormalConcept* filler(const std::string& role);
  /// Inserts or replaces the filler for `role`, keeping `all` sorted.
  void set_filler(const std::string& role, NormalConcept f);
  void erase_filler(const std::string& role);
  /// (<= 0 R) together with (all R BOTTOM).
  bool has_zero_unit(const std::string& role) const;
};

struct Universal {
  std::string role;
  NormalConcept filler;
};

bool operator==(const NormalConcept& a, const NormalConcept& b);
bool operator==(const Universal& a, const Universal& b);

/// Replaces defined names by their bodies, conjoins inclusion bodies and
/// disjointness partners. Throws UnfoldingBudgetExceeded past `budget` nodes.
Concept unfold(const Concept& c, const TBox& t,
               std::size_t budget = kDefaultUnfoldBudget);

/// Normal form of an already unfolded concept.
NormalConcept normalize(const Concept& c);

NormalConcept cnf(const Concept& c, const TBox& t,
                  std::size_t budget = kDefaultUnfoldBudget);

/// Back to an AST, conjuncts in canonical order: names, negated names,
/// at-least, at-most, universals. TOP for the empty form, BOTTOM for unsat.
Concept embed(const NormalConcept& n);

/// Normal form of the conjunction (no TBox involved).
NormalConcept conjoin(const NormalConcept& a, const NormalConcept& b);

std::size_t length(const NormalConcept& n);

std::string render(const NormalConcept& n);

}  // namespace aln

#endif  // ALN_NORMAL_FORM_HPP
