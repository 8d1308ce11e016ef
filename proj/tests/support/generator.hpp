#ifndef ALN_TESTS_GENERATOR_HPP
#define ALN_TESTS_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aln/concept.hpp"
#include "aln/tbox.hpp"

namespace aln::testing {

struct GenConfig {
  int names = 6;
  int roles = 3;
  int depth = 2;
  std::uint32_t max_number = 3;
  int width = 4;
  int max_axioms = 5;
  double bottom_rate = 0.03;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed, GenConfig cfg = {});

  Concept concept_of(int depth);
  Concept concept_of() { return concept_of(cfg_.depth); }
  /// Up to max_axioms axioms over the name pool plus one disjoint group.
  TBox tbox();
  /// A concept free of negated defined names of t.
  Concept concept_for(const TBox& t, int depth);
  Concept concept_for(const TBox& t) { return concept_for(t, cfg_.depth); }
  /// Shuffles conjunctions at every depth.
  Concept permute(const Concept& c);
  /// One extra random conjunct, possibly nested under an existing universal.
  Concept specialize(const Concept& c, const TBox& t);

  std::string name(int i) const;
  std::string role(int i) const;
  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi);
  bool chance(double p);

 private:
  Concept atom(int depth, const TBox* t);

  std::mt19937_64 rng_;
  GenConfig cfg_;
};

}  // namespace aln::testing

#endif  // ALN_TESTS_GENERATOR_HPP
