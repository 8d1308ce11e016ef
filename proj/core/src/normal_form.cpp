#include "aln/normal_form.hpp"

#include <algorithm>
#include <limits>

#include "aln/errors.hpp"
#include "aln/syntax.hpp"

namespace aln {

NormalConcept NormalConcept::bottom() {
  NormalConcept n;
  n.unsat = true;
  return n;
}

bool NormalConcept::is_top() const {
  return !unsat && pos.empty() && neg.empty() && at_least.empty() &&
         at_most.empty() && all.empty();
}

const NormalConcept* NormalConcept::filler(const std::string& role) const {
  for (const auto& u : all)
    if (u.role == role) return &u.filler;
  return nullptr;
}

NormalConcept* NormalConcept::filler(const std::string& role) {
  for (auto& u : all)
    if (u.role == role) return &u.filler;
  return nullptr;
}

void NormalConcept::set_filler(const std::string& role, NormalConcept f) {
  auto it = std::lower_bound(
      all.begin(), all.end(), role,
      [](const Universal& u, const std::string& r) { return u.role < r; });
  if (it != all.end() && it->role == role)
    it->filler = std::move(f);
  else
    all.insert(it, Universal{role, std::move(f)});
}

void NormalConcept::erase_filler(const std::string& role) {
  std::erase_if(all, [&](const Universal& u) { return u.role == role; });
}

bool NormalConcept::has_zero_unit(const std::string& role) const {
  auto it = at_most.find(role);
  return it != at_most.end() && it->second == 0;
}

bool operator==(const Universal& a, const Universal& b) {
  return a.role == b.role && a.filler == b.filler;
}

bool operator==(const NormalConcept& a, const NormalConcept& b) {
  return a.unsat == b.unsat && a.pos == b.pos && a.neg == b.neg &&
         a.at_least == b.at_least && a.at_most == b.at_most && a.all == b.all;
}

namespace {

class Unfolder {
 public:
  Unfolder(const TBox& t, std::size_t budget) : t_(t), budget_(budget) {
    for (const auto& name : t.topological_order()) expand(name);
  }

  Concept run(const Concept& c) {
    if (size(c) > budget_) throw UnfoldingBudgetExceeded(budget_);
    return rewrite(c);
  }

 private:
  static std::size_t add(std::size_t a, std::size_t b) {
    return a > std::numeric_limits<std::size_t>::max() - b
               ? std::numeric_limits<std::size_t>::max()
               : a + b;
  }

  std::size_t size(const Concept& c) const {
    if (c.is(Concept::Kind::Name)) {
      auto it = sizes_.find(c.id());
      return it == sizes_.end() ? 1 : it->second;
    }
    std::size_t n = 1;
    for (const auto& x : c.conjuncts()) n = add(n, size(x));
    return n;
  }

  Concept rewrite(const Concept& c) const {
    switch (c.kind()) {
      case Concept::Kind::Name: {
        auto it = expansion_.find(c.id());
        return it == expansion_.end() ? c : it->second;
      }
      case Concept::Kind::NegName:
        if (t_.is_defined(c.id()))
          throw Error("negated-defined-name",
                      "defined name '" + c.id() + "' cannot be negated");
        return c;
      case Concept::Kind::All:
        return Concept::all(c.id(), rewrite(c.filler()));
      case Concept::Kind::And: {
        std::vector<Concept> parts;
        parts.reserve(c.conjuncts().size());
        for (const auto& x : c.conjuncts()) parts.push_back(rewrite(x));
        return Concept::conj(std::move(parts));
      }
      default:
        return c;
    }
  }

  // Dependencies are expanded first, so rewrite() only looks up finished
  // entries.
  void expand(const std::string& name) {
    std::vector<Concept> parts;
    std::size_t n = 1;
    if (const Concept* d = t_.definition_of(name)) {
      n = size(*d);
      if (n > budget_) return mark_over(name);
      expansion_.emplace(name, rewrite(*d));
      sizes_[name] = n;
      return;
    }
    const auto& partners = t_.disjoint_partners(name);
    const Concept* inc = t_.inclusion_of(name);
    if (!inc && partners.empty()) return;
    n = add(n, 1 + partners.size());  // the name and the conjunction node
    if (inc) n = add(n, size(*inc));
    if (n > budget_) return mark_over(name);
    parts.push_back(Concept::name(name));
    if (inc) parts.push_back(rewrite(*inc));
    for (const auto& p : partners) parts.push_back(Concept::neg(p));
    expansion_.emplace(name, Concept::conj(std::move(parts)));
    sizes_[name] = n;
  }

  // Too large to materialize; any use of the name will trip the budget.
  void mark_over(const std::string& name) {
    sizes_[name] = std::numeric_limits<std::size_t>::max();
  }

  const TBox& t_;
  std::size_t budget_;
  std::map<std::string, Concept> expansion_;
  std::map<std::string, std::size_t> sizes_;
};

struct Accumulator {
  bool bottom = false;
  std::set<std::string> pos, neg;
  std::map<std::string, std::uint32_t> at_least, at_most;
  std::map<std::string, std::vector<Concept>> fillers;

  void add(const Concept& c) {
    switch (c.kind()) {
      case Concept::Kind::Top: break;
      case Concept::Kind::Bottom: bottom = true; break;
      case Concept::Kind::Name: pos.insert(c.id()); break;
      case Concept::Kind::NegName: neg.insert(c.id()); break;
      case Concept::Kind::AtLeast: {
        auto [it, fresh] = at_least.emplace(c.id(), c.bound());
        if (!fresh) it->second = std::max(it->second, c.bound());
        break;
      }
      case Concept::Kind::AtMost: {
        auto [it, fresh] = at_most.emplace(c.id(), c.bound());
        if (!fresh) it->second = std::min(it->second, c.bound());
        break;
      }
      case Concept::Kind::All: fillers[c.id()].push_back(c.filler()); break;
      case Concept::Kind::And:
        for (const auto& x : c.conjuncts()) add(x);
        break;
    }
  }

  NormalConcept finish() {
    if (bottom) return NormalConcept::bottom();
    for (const auto& n : pos)
      if (neg.count(n)) return NormalConcept::bottom();

    NormalConcept out;
    std::map<std::string, NormalConcept> nested;
    for (auto& [role, fs] : fillers) {
      auto f = normalize(Concept::conj(std::move(fs)));
      if (f.unsat) {
        auto [it, fresh] = at_most.emplace(role, 0);
        if (!fresh) it->second = 0;
      }
      nested.emplace(role, std::move(f));
    }
    for (const auto& [role, m] : at_most)
      if (m == 0) nested[role] = NormalConcept::bottom();
    for (const auto& [role, n] : at_least) {
      auto it = at_most.find(role);
      if (it != at_most.end() && n > it->second)
        return NormalConcept::bottom();
    }

    out.pos = std::move(pos);
    out.neg = std::move(neg);
    for (const auto& [role, n] : at_least)
      if (n > 0) out.at_least.emplace(role, n);
    out.at_most = std::move(at_most);
    for (auto& [role, f] : nested)
      if (!f.is_top()) out.all.push_back(Universal{role, std::move(f)});
    return out;
  }
};

void emit(const NormalConcept& n, std::vector<Concept>& parts) {
  for (const auto& a : n.pos) parts.push_back(Concept::name(a));
  for (const auto& a : n.neg) parts.push_back(Concept::neg(a));
  for (const auto& [r, k] : n.at_least) parts.push_back(Concept::at_least(k, r));
  for (const auto& [r, k] : n.at_most) parts.push_back(Concept::at_most(k, r));
  for (const auto& u : n.all) parts.push_back(Concept::all(u.role, embed(u.filler)));
}

}  // namespace

Concept unfold(const Concept& c, const TBox& t, std::size_t budget) {
  if (t.empty()) {
    if (node_count(c) > budget) throw UnfoldingBudgetExceeded(budget);
    return c;
  }
  return Unfolder(t, budget).run(c);
}

NormalConcept normalize(const Concept& c) {
  Accumulator acc;
  acc.add(c);
  return acc.finish();
}

NormalConcept cnf(const Concept& c, const TBox& t, std::size_t budget) {
  return normalize(unfold(c, t, budget));
}

Concept embed(const NormalConcept& n) {
  if (n.unsat) return Concept::bottom();
  std::vector<Concept> parts;
  emit(n, parts);
  return Concept::conj(std::move(parts));
}

NormalConcept conjoin(const NormalConcept& a, const NormalConcept& b) {
  if (a.unsat || b.unsat) return NormalConcept::bottom();
  return normalize(Concept::conj({embed(a), embed(b)}));
}

std::size_t length(const NormalConcept& n) {
  if (n.unsat) return 0;
  std::size_t k = n.pos.size() + n.neg.size() + n.at_least.size() +
                  n.at_most.size();
  for (const auto& u : n.all) k += length(u.filler);
  return k;
}

std::string render(const NormalConcept& n) { return render_concept(embed(n)); }

}  // namespace aln
