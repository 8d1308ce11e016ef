#ifndef ALN_TBOX_HPP
#define ALN_TBOX_HPP

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "aln/concept.hpp"
#include "aln/errors.hpp"

namespace aln {

/// A ≡ C
struct Definition {
  std::string name;
  Concept body;
  friend bool operator==(const Definition&, const Definition&) = default;
};

/// A ⊑ C
struct Inclusion {
  std::string name;
  Concept body;
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

/// disj(A1, ..., Ak). The label only names the group; it has no semantics.
struct DisjointGroup {
  std::string label;
  std::vector<std::string> names;
  friend bool operator==(const DisjointGroup&, const DisjointGroup&) = default;
};

using Axiom = std::variant<Definition, Inclusion, DisjointGroup>;

struct Violation {
  enum class Kind {
    CyclicTBox,
    DuplicateDefinition,
    DefinedNameInDisjointGroup,
    DegenerateDisjointGroup,
    NegatedDefinedName,
  };

  Kind kind;
  std::string name;
  /// For cycles: the closed path, first element repeated at the end.
  std::vector<std::string> witness;

  std::string code() const;
  std::string message() const;
};

class TBoxError : public Error {
 public:
  explicit TBoxError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Arcs from the l.h.s. name of an axiom to every name in its body.
using DependencyGraph = std::map<std::string, std::set<std::string>>;

/// A validated simple (acyclic) terminology.
class TBox {
 public:
  TBox() = default;

  /// Validates `axioms`; throws TBoxError listing every violation found.
  static TBox validate(std::vector<Axiom> axioms);

  const std::vector<Axiom>& axioms() const { return axioms_; }
  const DependencyGraph& dependency_graph() const { return graph_; }
  std::size_t depth() const { return depth_; }
  bool empty() const { return axioms_.empty(); }

  const Concept* definition_of(const std::string& name) const;
  const Concept* inclusion_of(const std::string& name) const;
  bool is_defined(const std::string& name) const {
    return definition_of(name) != nullptr;
  }
  /// Names sharing a disjoint group with `name`.
  const std::set<std::string>& disjoint_partners(const std::string& name) const;

  /// Names with an axiom, dependencies before dependents.
  const std::vector<std::string>& topological_order() const { return order_; }

  /// Every concept name mentioned anywhere in the terminology.
  std::set<std::string> signature() const;

 private:
  std::vector<Axiom> axioms_;
  std::map<std::string, Concept> definitions_;
  std::map<std::string, Concept> inclusions_;
  std::map<std::string, std::set<std::string>> partners_;
  DependencyGraph graph_;
  std::vector<std::string> order_;
  std::size_t depth_ = 0;
};

/// Concept names (positive or negated) occurring in `c`.
void collect_names(const Concept& c, std::set<std::string>& out);
/// Role names occurring in `c`.
void collect_roles(const Concept& c, std::set<std::string>& out);

}  // namespace aln

#endif  // ALN_TBOX_HPP
