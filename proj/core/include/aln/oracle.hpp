#ifndef ALN_ORACLE_HPP
#define ALN_ORACLE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "aln/concept.hpp"

namespace aln {

/// A finite interpretation over elements 0 .. size-1.
struct Interpretation {
  std::size_t size = 0;
  std::map<std::string, std::set<std::size_t>> concepts;
  std::map<std::string, std::set<std::pair<std::size_t, std::size_t>>> roles;

  std::size_t fresh() { return size++; }
  std::size_t successors(const std::string& role, std::size_t x) const;
};

/// x is in the extension of c (set semantics of each constructor).
bool holds(const Interpretation& i, std::size_t x, const Concept& c);

struct OracleBounds {
  std::size_t max_length = 24;
  std::size_t max_nesting = 3;
  std::uint32_t max_number = 4;
};

struct Model {
  Interpretation interpretation;
  std::size_t root = 0;
};

/// Searches for a tree model of c (c must already be unfolded).
/// Throws OracleBudgetExceeded when c is outside `bounds`.
std::optional<Model> oracle_model(const Concept& c,
                                  const OracleBounds& bounds = {});
bool oracle_satisfiable(const Concept& c, const OracleBounds& bounds = {});

/// A model whose root is in c but not in d, if one exists.
std::optional<Model> oracle_countermodel(const Concept& c, const Concept& d,
                                         const OracleBounds& bounds = {});

}  // namespace aln

#endif  // ALN_ORACLE_HPP
