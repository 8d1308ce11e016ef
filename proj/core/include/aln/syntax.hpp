#ifndef ALN_SYNTAX_HPP
#define ALN_SYNTAX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "aln/concept.hpp"
#include "aln/errors.hpp"
#include "aln/tbox.hpp"

namespace aln {

/// Byte offsets [start, end) into the parsed text; line and column are 1-based.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& what, SourceSpan span);
  const SourceSpan& span() const { return span_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourceSpan span_;
  std::string detail_;
};

struct Advertisement {
  std::string id;
  Side side = Side::Demand;
  Concept description;
  friend bool operator==(const Advertisement&, const Advertisement&) = default;
};

struct KnowledgeBase {
  TBox tbox;
  std::vector<Advertisement> advertisements;

  const Advertisement* find(std::string_view id) const;
};

Concept parse_concept(std::string_view text);

/// Parses a .kb file: define / primitive / disjoint / instance forms.
/// Throws ParseError, or TBoxError when the axioms do not form a simple TBox.
KnowledgeBase parse_kb(std::string_view text);

/// Parses only the axioms of a .kb text (instance forms are rejected).
std::vector<Axiom> parse_axioms(std::string_view text);

std::string render_concept(const Concept& c);
std::string render_axiom(const Axiom& a);
std::string render_kb(const KnowledgeBase& kb);

bool is_identifier(std::string_view s);

}  // namespace aln

#endif  // ALN_SYNTAX_HPP
