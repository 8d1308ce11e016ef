#include "aln/tbox.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace aln {

void collect_names(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case Concept::Kind::Name:
    case Concept::Kind::NegName:
      out.insert(c.id());
      break;
    case Concept::Kind::All:
    case Concept::Kind::And:
      for (const auto& x : c.conjuncts()) collect_names(x, out);
      break;
    default:
      break;
  }
}

void collect_roles(const Concept& c, std::set<std::string>& out) {
  switch (c.kind()) {
    case Concept::Kind::AtLeast:
    case Concept::Kind::AtMost:
      out.insert(c.id());
      break;
    case Concept::Kind::All:
      out.insert(c.id());
      collect_roles(c.filler(), out);
      break;
    case Concept::Kind::And:
      for (const auto& x : c.conjuncts()) collect_roles(x, out);
      break;
    default:
      break;
  }
}

namespace {

void collect_negated(const Concept& c, std::set<std::string>& out) {
  if (c.is(Concept::Kind::NegName)) out.insert(c.id());
  if (c.is(Concept::Kind::All) || c.is(Concept::Kind::And))
    for (const auto& x : c.conjuncts()) collect_negated(x, out);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

}  // namespace

std::string Violation::code() const {
  switch (kind) {
    case Kind::CyclicTBox: return "cyclic-tbox";
    case Kind::DuplicateDefinition: return "duplicate-definition";
    case Kind::DefinedNameInDisjointGroup:
      return "defined-name-in-disjoint-group";
    case Kind::DegenerateDisjointGroup: return "degenerate-disjoint-group";
    case Kind::NegatedDefinedName: return "negated-defined-name";
  }
  return "tbox-error";
}

std::string Violation::message() const {
  switch (kind) {
    case Kind::CyclicTBox:
      return "cyclic terminology: " + join(witness, " -> ");
    case Kind::DuplicateDefinition:
      return "'" + name + "' appears on the left-hand side of several axioms";
    case Kind::DefinedNameInDisjointGroup:
      return "defined name '" + name + "' cannot appear in a disjoint group";
    case Kind::DegenerateDisjointGroup:
      return "disjoint group '" + name + "' needs at least two distinct names";
    case Kind::NegatedDefinedName:
      return "defined name '" + name + "' cannot be negated";
  }
  return name;
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].message();
  }
  return os.str();
}

}  // namespace

TBoxError::TBoxError(std::vector<Violation> violations)
    : Error(violations.empty() ? "tbox-error" : violations.front().code(),
            summarize(violations)),
      violations_(std::move(violations)) {}

TBox TBox::validate(std::vector<Axiom> axioms) {
  TBox t;
  std::vector<Violation> errors;
  std::set<std::string> reported_dup;

  auto add_lhs = [&](const std::string& name, const Concept& body,
                     std::map<std::string, Concept>& into) {
    if (t.definitions_.count(name) || t.inclusions_.count(name)) {
      if (reported_dup.insert(name).second)
        errors.push_back({Violation::Kind::DuplicateDefinition, name, {}});
      return;
    }
    into.emplace(name, body);
  };

  for (const auto& ax : axioms) {
    if (const auto* d = std::get_if<Definition>(&ax)) {
      add_lhs(d->name, d->body, t.definitions_);
    } else if (const auto* i = std::get_if<Inclusion>(&ax)) {
      add_lhs(i->name, i->body, t.inclusions_);
    }
  }

  for (const auto& ax : axioms) {
    const auto* g = std::get_if<DisjointGroup>(&ax);
    if (!g) continue;
    std::set<std::string> members(g->names.begin(), g->names.end());
    if (members.size() < 2) {
      errors.push_back({Violation::Kind::DegenerateDisjointGroup, g->label, {}});
      continue;
    }
    for (const auto& n : members) {
      if (t.definitions_.count(n)) {
        errors.push_back(
            {Violation::Kind::DefinedNameInDisjointGroup, n, {}});
        continue;
      }
      for (const auto& m : members)
        if (m != n) t.partners_[n].insert(m);
    }
  }

  auto check_negations = [&](const Concept& body) {
    std::set<std::string> negated;
    collect_negated(body, negated);
    for (const auto& n : negated)
      if (t.definitions_.count(n))
        errors.push_back({Violation::Kind::NegatedDefinedName, n, {}});
  };

  for (const auto* m : {&t.definitions_, &t.inclusions_}) {
    for (const auto& [name, body] : *m) {
      auto& arcs = t.graph_[name];
      collect_names(body, arcs);
      check_negations(body);
    }
  }
  // Names mentioned only on right-hand sides are nodes too.
  std::set<std::string> leaves;
  for (const auto& [_, arcs] : t.graph_) leaves.insert(arcs.begin(), arcs.end());
  for (const auto& n : leaves) t.graph_[n];
  for (const auto& [n, _] : t.partners_) t.graph_[n];

  // Depth-first search: post-order gives a topological order, a grey
  // successor closes a cycle.
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::map<std::string, std::size_t> longest;
  std::vector<std::string> stack;
  bool cyclic = false;

  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    mark[n] = Mark::Grey;
    stack.push_back(n);
    std::size_t best = 0;
    for (const auto& m : t.graph_[n]) {
      auto it = mark.find(m);
      Mark mm = it == mark.end() ? Mark::White : it->second;
      if (mm == Mark::Grey) {
        if (!cyclic) {
          auto from = std::find(stack.begin(), stack.end(), m);
          std::vector<std::string> witness(from, stack.end());
          witness.push_back(m);
          errors.push_back({Violation::Kind::CyclicTBox, m, witness});
        }
        cyclic = true;
        continue;
      }
      if (mm == Mark::White) visit(m);
      best = std::max(best, longest[m] + 1);
    }
    longest[n] = best;
    stack.pop_back();
    mark[n] = Mark::Black;
    t.order_.push_back(n);
  };
  for (const auto& [n, _] : t.graph_)
    if (!mark.count(n)) visit(n);

  if (!errors.empty()) throw TBoxError(std::move(errors));

  for (const auto& [_, d] : longest) t.depth_ = std::max(t.depth_, d);
  t.axioms_ = std::move(axioms);
  return t;
}

const Concept* TBox::definition_of(const std::string& name) const {
  auto it = definitions_.find(name);
  return it == definitions_.end() ? nullptr : &it->second;
}

const Concept* TBox::inclusion_of(const std::string& name) const {
  auto it = inclusions_.find(name);
  return it == inclusions_.end() ? nullptr : &it->second;
}

const std::set<std::string>& TBox::disjoint_partners(
    const std::string& name) const {
  static const std::set<std::string> none;
  auto it = partners_.find(name);
  return it == partners_.end() ? none : it->second;
}

std::set<std::string> TBox::signature() const {
  std::set<std::string> out;
  for (const auto& [n, _] : graph_) out.insert(n);
  return out;
}

}  // namespace aln
