#include "aln/checkers.hpp"

#include <set>

#include "aln/contraction.hpp"
#include "aln/errors.hpp"
#include "aln/reasoner.hpp"

namespace aln {

std::vector<NormalConcept> single_deletions(const NormalConcept& n) {
  std::vector<NormalConcept> out;
  if (n.unsat) return out;
  for (const auto& a : n.pos) {
    auto m = n;
    m.pos.erase(a);
    out.push_back(std::move(m));
  }
  for (const auto& a : n.neg) {
    auto m = n;
    m.neg.erase(a);
    out.push_back(std::move(m));
  }
  for (const auto& [r, k] : n.at_least) {
    auto m = n;
    m.at_least.erase(r);
    out.push_back(std::move(m));
  }
  for (const auto& [r, k] : n.at_most) {
    auto m = n;
    m.at_most.erase(r);
    if (k == 0) m.erase_filler(r);
    out.push_back(std::move(m));
  }
  for (const auto& u : n.all) {
    if (u.filler.unsat) continue;
    auto m = n;
    m.erase_filler(u.role);
    out.push_back(std::move(m));
    for (auto& inner : single_deletions(u.filler)) {
      auto m2 = n;
      if (inner.is_top())
        m2.erase_filler(u.role);
      else
        m2.set_filler(u.role, std::move(inner));
      out.push_back(std::move(m2));
    }
  }
  return out;
}

bool is_cap_solution(const Concept& h, const Concept& c, const Concept& d,
                     const TBox& t) {
  auto both = cnf(Concept::conj({c, h}), t);
  return !both.unsat && subsumes(cnf(d, t), both);
}

bool is_irreducible(const Concept& h, const Concept& c, const Concept& d,
                    const TBox& t) {
  if (!is_cap_solution(h, c, d, t)) return false;
  for (const auto& smaller : single_deletions(normalize(h)))
    if (is_cap_solution(embed(smaller), c, d, t)) return false;
  return true;
}

std::vector<Concept> candidate_pool(const Concept& c, const Concept& d,
                                    const TBox& t, std::size_t max_atoms) {
  std::vector<Concept> atoms;
  auto add = [&](Concept x) {
    for (const auto& a : atoms)
      if (a == x) return;
    atoms.push_back(std::move(x));
  };
  auto nd = cnf(d, t);
  Concept top = embed(nd);
  if (top.is(Concept::Kind::And)) {
    for (const auto& x : top.conjuncts()) add(x);
  } else if (!top.is(Concept::Kind::Top)) {
    add(top);
  }
  std::set<std::string> names = t.signature();
  collect_names(c, names);
  collect_names(d, names);
  for (const auto& n : names) add(Concept::name(n));
  if (atoms.size() > max_atoms)
    throw EnumerationBudgetExceeded(std::to_string(atoms.size()) +
                                    " atoms exceed the pool limit of " +
                                    std::to_string(max_atoms));
  std::vector<Concept> pool;
  const std::size_t total = std::size_t{1} << atoms.size();
  pool.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Concept> parts;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) parts.push_back(atoms[i]);
    pool.push_back(Concept::conj(std::move(parts)));
  }
  return pool;
}

bool is_subsumption_maximal_witness(const Concept& h, const Concept& c,
                                    const Concept& d, const TBox& t,
                                    const std::vector<Concept>& pool) {
  if (!is_cap_solution(h, c, d, t)) return false;
  auto nh = cnf(h, t);
  for (const auto& p : pool) {
    if (!is_cap_solution(p, c, d, t)) continue;
    auto np = cnf(p, t);
    if (subsumes(np, nh) && !subsumes(nh, np)) return false;
  }
  return true;
}

bool is_length_minimal_witness(const Concept& h, const Concept& c,
                               const Concept& d, const TBox& t,
                               const std::vector<Concept>& pool) {
  if (!is_cap_solution(h, c, d, t)) return false;
  const std::size_t len = length(h);
  for (const auto& p : pool)
    if (length(p) < len && is_cap_solution(p, c, d, t)) return false;
  return true;
}

bool is_contraction(const Concept& g, const Concept& k, const Concept& c,
                    const Concept& d, const TBox& t) {
  return cnf(Concept::conj({g, k}), t) == cnf(c, t) &&
         !cnf(Concept::conj({k, d}), t).unsat;
}

namespace {

using Path = std::vector<std::string>;

std::vector<std::pair<Path, std::uint32_t>> restrictions(
    const NormalConcept& n, Concept::Kind kind) {
  std::vector<std::pair<Path, std::uint32_t>> out;
  for (const auto& occ : role_paths(embed(n)))
    if (occ.atom.is(kind)) {
      Path p = occ.path;
      p.push_back(occ.atom.id());
      out.emplace_back(std::move(p), occ.atom.bound());
    }
  return out;
}

}  // namespace

bool is_nmin_contraction(const Concept& g, const Concept& k, const Concept& c,
                         const Concept& d, const TBox& t) {
  if (!is_contraction(g, k, c, d, t)) return false;
  for (const auto& smaller : single_deletions(normalize(g)))
    if (is_contraction(embed(smaller), k, c, d, t)) return false;

  // Paths here end with the restricted role itself.
  auto kept = restrictions(cnf(k, t), Concept::Kind::AtLeast);
  auto limits = restrictions(cnf(d, t), Concept::Kind::AtMost);
  for (const auto& [path, n] : restrictions(cnf(g, t), Concept::Kind::AtLeast)) {
    bool retained = false;
    for (const auto& [p, m] : kept)
      if (p == path && m >= n) retained = true;
    if (retained) continue;
    bool conflict = false;
    for (const auto& [p, m] : limits)
      if (p == path && m < n) conflict = true;
    if (!conflict) return false;
  }
  return true;
}

}  // namespace aln
