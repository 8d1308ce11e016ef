#include "aln/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "aln/errors.hpp"

namespace aln {

std::size_t Interpretation::successors(const std::string& role,
                                       std::size_t x) const {
  auto it = roles.find(role);
  if (it == roles.end()) return 0;
  std::size_t n = 0;
  for (const auto& [a, b] : it->second)
    if (a == x) ++n;
  return n;
}

bool holds(const Interpretation& i, std::size_t x, const Concept& c) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: return true;
    case K::Bottom: return false;
    case K::Name:
    case K::NegName: {
      auto it = i.concepts.find(c.id());
      bool in = it != i.concepts.end() && it->second.count(x);
      return c.is(K::Name) ? in : !in;
    }
    case K::AtLeast: return i.successors(c.id(), x) >= c.bound();
    case K::AtMost: return i.successors(c.id(), x) <= c.bound();
    case K::All: {
      auto it = i.roles.find(c.id());
      if (it == i.roles.end()) return true;
      for (const auto& [a, b] : it->second)
        if (a == x && !holds(i, b, c.filler())) return false;
      return true;
    }
    case K::And:
      return std::all_of(c.conjuncts().begin(), c.conjuncts().end(),
                         [&](const Concept& y) { return holds(i, x, y); });
  }
  return false;
}

namespace {

// Negation normal form over ALCN without qualified restrictions.
struct F {
  enum K { Top, Bot, Atom, NAtom, Ge, Le, All, Some, And, Or } k;
  std::string id;
  std::uint32_t n = 0;
  std::vector<F> kids;
};

F nnf(const Concept& c, bool positive) {
  using CK = Concept::Kind;
  switch (c.kind()) {
    case CK::Top: return {positive ? F::Top : F::Bot, {}, 0, {}};
    case CK::Bottom: return {positive ? F::Bot : F::Top, {}, 0, {}};
    case CK::Name: return {positive ? F::Atom : F::NAtom, c.id(), 0, {}};
    case CK::NegName: return {positive ? F::NAtom : F::Atom, c.id(), 0, {}};
    case CK::AtLeast:
      if (positive) return {F::Ge, c.id(), c.bound(), {}};
      if (c.bound() == 0) return {F::Bot, {}, 0, {}};
      return {F::Le, c.id(), c.bound() - 1, {}};
    case CK::AtMost:
      if (positive) return {F::Le, c.id(), c.bound(), {}};
      return {F::Ge, c.id(), c.bound() + 1, {}};
    case CK::All:
      return {positive ? F::All : F::Some, c.id(), 0,
              {nnf(c.filler(), positive)}};
    case CK::And: {
      F f{positive ? F::And : F::Or, {}, 0, {}};
      for (const auto& x : c.conjuncts()) f.kids.push_back(nnf(x, positive));
      return f;
    }
  }
  return {F::Top, {}, 0, {}};
}

struct Tree {
  std::set<std::string> names;
  std::map<std::string, std::vector<Tree>> succ;
};

struct Label {
  std::set<std::string> pos, neg;
  std::map<std::string, std::uint32_t> ge, le;
  std::map<std::string, std::vector<F>> alls, somes;
};

class Search {
 public:
  explicit Search(std::size_t budget) : budget_(budget) {}

  std::optional<Tree> solve(std::vector<F> todo, Label l) {
    if (++steps_ > budget_)
      throw OracleBudgetExceeded("model search exceeded step budget");
    while (!todo.empty()) {
      F f = std::move(todo.back());
      todo.pop_back();
      switch (f.k) {
        case F::Top: break;
        case F::Bot: return std::nullopt;
        case F::Atom: l.pos.insert(f.id); break;
        case F::NAtom: l.neg.insert(f.id); break;
        case F::Ge: {
          auto& v = l.ge[f.id];
          v = std::max(v, f.n);
          break;
        }
        case F::Le: {
          auto [it, fresh] = l.le.emplace(f.id, f.n);
          if (!fresh) it->second = std::min(it->second, f.n);
          break;
        }
        case F::All: l.alls[f.id].push_back(std::move(f.kids.front())); break;
        case F::Some: l.somes[f.id].push_back(std::move(f.kids.front())); break;
        case F::And:
          for (auto& k : f.kids) todo.push_back(std::move(k));
          break;
        case F::Or:
          for (auto& k : f.kids) {
            auto branch = todo;
            branch.push_back(std::move(k));
            if (auto t = solve(std::move(branch), l)) return t;
          }
          return std::nullopt;
      }
    }
    for (const auto& a : l.pos)
      if (l.neg.count(a)) return std::nullopt;

    Tree tree;
    tree.names = l.pos;
    std::set<std::string> roles;
    for (const auto& [r, _] : l.ge) roles.insert(r);
    for (const auto& [r, _] : l.somes) roles.insert(r);
    for (const auto& r : roles) {
      auto kids = fillers(r, l);
      if (!kids) return std::nullopt;
      if (!kids->empty()) tree.succ[r] = std::move(*kids);
    }
    return tree;
  }

 private:
  // Chooses a number of r-successors and spreads the existential
  // requirements over them.
  std::optional<std::vector<Tree>> fillers(const std::string& r,
                                           const Label& l) {
    std::uint32_t lower = l.ge.count(r) ? l.ge.at(r) : 0;
    std::uint32_t upper = l.le.count(r) ? l.le.at(r) : UINT32_MAX;
    static const std::vector<F> none;
    const auto& alls = l.alls.count(r) ? l.alls.at(r) : none;
    const auto& somes = l.somes.count(r) ? l.somes.at(r) : none;
    const std::size_t e = somes.size();
    if (lower > upper) return std::nullopt;
    if (e > 0 && upper == 0) return std::nullopt;

    std::optional<Tree> plain;
    bool plain_done = false;
    auto plain_tree = [&]() -> const std::optional<Tree>& {
      if (!plain_done) {
        plain = solve(alls, {});
        plain_done = true;
      }
      return plain;
    };

    if (e == 0) {
      if (lower == 0) return std::vector<Tree>{};
      if (!plain_tree()) return std::nullopt;
      return std::vector<Tree>(lower, *plain);
    }

    // Restricted growth strings: successor j holds the existentials
    // assigned to it; successors beyond the used ones stay plain.
    std::vector<std::size_t> assign(e, 0);
    std::function<std::optional<std::vector<Tree>>(std::size_t, std::size_t)>
        go = [&](std::size_t i, std::size_t used)
        -> std::optional<std::vector<Tree>> {
      if (i == e) {
        if (used > upper) return std::nullopt;
        std::vector<Tree> out;
        for (std::size_t j = 0; j < used; ++j) {
          std::vector<F> todo = alls;
          for (std::size_t s = 0; s < e; ++s)
            if (assign[s] == j) todo.push_back(somes[s]);
          auto t = solve(std::move(todo), {});
          if (!t) return std::nullopt;
          out.push_back(std::move(*t));
        }
        if (used < lower) {
          if (!plain_tree()) return std::nullopt;
          out.resize(lower, *plain);
        }
        return out;
      }
      for (std::size_t j = 0; j <= used && j < upper; ++j) {
        assign[i] = j;
        if (auto out = go(i + 1, std::max(used, j + 1))) return out;
      }
      return std::nullopt;
    };
    return go(0, 0);
  }

  std::size_t budget_;
  std::size_t steps_ = 0;
};

void check_bounds(const Concept& c, const OracleBounds& b) {
  if (length(c) > b.max_length)
    throw OracleBudgetExceeded("concept longer than " +
                               std::to_string(b.max_length));
  if (quantification_nesting(c) > b.max_nesting)
    throw OracleBudgetExceeded("quantification nesting above " +
                               std::to_string(b.max_nesting));
  std::function<void(const Concept&)> numbers = [&](const Concept& x) {
    if ((x.is(Concept::Kind::AtLeast) || x.is(Concept::Kind::AtMost)) &&
        x.bound() > b.max_number)
      throw OracleBudgetExceeded("number restriction above " +
                                 std::to_string(b.max_number));
    for (const auto& y : x.conjuncts()) numbers(y);
  };
  numbers(c);
}

std::size_t materialize(const Tree& t, Interpretation& i) {
  std::size_t x = i.fresh();
  for (const auto& a : t.names) i.concepts[a].insert(x);
  for (const auto& [r, kids] : t.succ)
    for (const auto& k : kids) {
      std::size_t y = materialize(k, i);
      i.roles[r].insert({x, y});
    }
  return x;
}

constexpr std::size_t kStepBudget = 2000000;

std::optional<Model> search(const F& f) {
  Search s(kStepBudget);
  auto tree = s.solve({f}, {});
  if (!tree) return std::nullopt;
  Model m;
  m.root = materialize(*tree, m.interpretation);
  return m;
}

}  // namespace

std::optional<Model> oracle_model(const Concept& c, const OracleBounds& b) {
  check_bounds(c, b);
  auto m = search(nnf(c, true));
  if (m && !holds(m->interpretation, m->root, c))
    throw std::logic_error("oracle built a structure that is not a model");
  return m;
}

bool oracle_satisfiable(const Concept& c, const OracleBounds& b) {
  return oracle_model(c, b).has_value();
}

std::optional<Model> oracle_countermodel(const Concept& c, const Concept& d,
                                         const OracleBounds& b) {
  check_bounds(c, b);
  check_bounds(d, b);
  F f{F::And, {}, 0, {nnf(c, true), nnf(d, false)}};
  auto m = search(f);
  if (m && (!holds(m->interpretation, m->root, c) ||
            holds(m->interpretation, m->root, d)))
    throw std::logic_error("oracle countermodel does not separate the concepts");
  return m;
}

}  // namespace aln
