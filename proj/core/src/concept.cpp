#include "aln/concept.hpp"

#include <algorithm>

namespace aln {

Concept Concept::bottom() { return Concept(Kind::Bottom, {}, 0, {}); }

Concept Concept::name(std::string id) {
  return Concept(Kind::Name, std::move(id), 0, {});
}

Concept Concept::neg(std::string id) {
  return Concept(Kind::NegName, std::move(id), 0, {});
}

Concept Concept::at_least(std::uint32_t n, std::string role) {
  return Concept(Kind::AtLeast, std::move(role), n, {});
}

Concept Concept::at_most(std::uint32_t n, std::string role) {
  return Concept(Kind::AtMost, std::move(role), n, {});
}

Concept Concept::exactly(std::uint32_t n, std::string role) {
  return conj({at_least(n, role), at_most(n, role)});
}

Concept Concept::all(std::string role, Concept filler) {
  std::vector<Concept> children;
  children.push_back(std::move(filler));
  return Concept(Kind::All, std::move(role), 0, std::move(children));
}

Concept Concept::conj(std::vector<Concept> parts) {
  std::vector<Concept> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (p.kind_ == Kind::And) {
      for (auto& q : p.children_) flat.push_back(std::move(q));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return top();
  if (flat.size() == 1) return std::move(flat.front());
  return Concept(Kind::And, {}, 0, std::move(flat));
}

bool Concept::is_atomic() const {
  switch (kind_) {
    case Kind::Name:
    case Kind::NegName:
    case Kind::AtLeast:
    case Kind::AtMost:
      return true;
    default:
      return false;
  }
}

std::strong_ordering operator<=>(const Concept& a, const Concept& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.id_ <=> b.id_; c != 0) return c;
  if (auto c = a.bound_ <=> b.bound_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children_.begin(), a.children_.end(), b.children_.begin(),
      b.children_.end());
}

std::size_t length(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      return 0;
    case Concept::Kind::All:
      return length(c.filler());
    case Concept::Kind::And: {
      std::size_t n = 0;
      for (const auto& x : c.conjuncts()) n += length(x);
      return n;
    }
    default:
      return 1;
  }
}

std::size_t quantification_nesting(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::All:
      return 1 + quantification_nesting(c.filler());
    case Concept::Kind::And: {
      std::size_t q = 0;
      for (const auto& x : c.conjuncts())
        q = std::max(q, quantification_nesting(x));
      return q;
    }
    default:
      return 0;
  }
}

std::size_t node_count(const Concept& c) {
  std::size_t n = 1;
  for (const auto& x : c.conjuncts()) n += node_count(x);
  return n;
}

}  // namespace aln
