#ifndef ALN_CONCEPT_HPP
#define ALN_CONCEPT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace aln {

/// Largest bound accepted in a number restriction.
inline constexpr std::uint32_t kMaxBound = 2147483647u;

/// An ALN concept expression.
///
/// Concepts are immutable values. Conjunctions are flattened when they are
/// built, but conjunct order is preserved so that a parsed concept still
/// mirrors its source text; canonical ordering is the job of the normalizer.
class Concept {
 public:
  enum class Kind : std::uint8_t {
    Top,
    Bottom,
    Name,
    NegName,
    AtLeast,
    AtMost,
    All,
    And,
  };

  Concept() = default;  // TOP

  static Concept top() { return Concept{}; }
  static Concept bottom();
  static Concept name(std::string id);
  static Concept neg(std::string id);
  static Concept at_least(std::uint32_t n, std::string role);
  static Concept at_most(std::uint32_t n, std::string role);
  /// (= n R), expanded to (>= n R) and (<= n R).
  static Concept exactly(std::uint32_t n, std::string role);
  static Concept all(std::string role, Concept filler);
  /// Conjunction of `parts`. Nested conjunctions are spliced in place; an
  /// empty list yields TOP and a single element is returned unchanged.
  static Concept conj(std::vector<Concept> parts);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  bool is_atomic() const;

  /// Concept name for Name/NegName, role for AtLeast/AtMost/All.
  const std::string& id() const { return id_; }
  std::uint32_t bound() const { return bound_; }
  const Concept& filler() const { return children_.front(); }
  const std::vector<Concept>& conjuncts() const { return children_; }

  friend bool operator==(const Concept&, const Concept&) = default;
  friend std::strong_ordering operator<=>(const Concept& a, const Concept& b);

 private:
  Concept(Kind kind, std::string id, std::uint32_t bound,
          std::vector<Concept> children)
      : kind_(kind), id_(std::move(id)), bound_(bound),
        children_(std::move(children)) {}

  Kind kind_ = Kind::Top;
  std::string id_;
  std::uint32_t bound_ = 0;
  std::vector<Concept> children_;
};

/// Number of atomic concepts (names, negated names, number restrictions).
/// TOP and BOTTOM have length zero.
std::size_t length(const Concept& c);

/// Quantification nesting: depth of nested universal quantifications.
std::size_t quantification_nesting(const Concept& c);

/// Number of AST nodes, used for unfolding budgets.
std::size_t node_count(const Concept& c);

}  // namespace aln

#endif  // ALN_CONCEPT_HPP
