#include "aln/contraction.hpp"

#include "aln/errors.hpp"

namespace aln {
namespace {

std::uint32_t get(const std::map<std::string, std::uint32_t>& m,
                  const std::string& r, std::uint32_t dflt) {
  auto it = m.find(r);
  return it == m.end() ? dflt : it->second;
}

bool forces_fillers(const std::map<std::string, std::uint32_t>& at_least,
                    const std::string& r) {
  return get(at_least, r, 0) >= 1;
}

}  // namespace

ContractionForms find_contract_forms(const NormalConcept& c,
                                     const NormalConcept& d) {
  if (c.unsat) return {NormalConcept::bottom(), NormalConcept::top()};
  NormalConcept g;
  NormalConcept k = c;

  for (const auto& a : c.pos)
    if (d.neg.count(a)) {
      g.pos.insert(a);
      k.pos.erase(a);
    }
  for (const auto& a : c.neg)
    if (d.pos.count(a)) {
      g.neg.insert(a);
      k.neg.erase(a);
    }

  for (const auto& [r, x] : c.at_least) {
    auto it = d.at_most.find(r);
    if (it != d.at_most.end() && it->second < x) {
      g.at_least[r] = x;
      k.at_least.erase(r);
    }
  }
  for (const auto& [r, x] : c.at_most) {
    auto it = d.at_least.find(r);
    if (it != d.at_least.end() && it->second > x) {
      g.at_most[r] = x;
      k.at_most.erase(r);
      if (x == 0) {
        g.set_filler(r, NormalConcept::bottom());
        k.erase_filler(r);
      }
    }
  }

  for (const auto& u : c.all) {
    const NormalConcept* f = k.filler(u.role);
    const NormalConcept* e = d.filler(u.role);
    if (!f || !e) continue;
    if (!forces_fillers(k.at_least, u.role) &&
        !forces_fillers(d.at_least, u.role))
      continue;
    auto sub = find_contract_forms(*f, *e);
    if (!sub.give_up.is_top()) {
      if (sub.give_up.unsat) g.at_most[u.role] = 0;
      g.set_filler(u.role, std::move(sub.give_up));
    }
    if (sub.keep.is_top())
      k.erase_filler(u.role);
    else
      k.set_filler(u.role, std::move(sub.keep));
  }
  return {std::move(g), std::move(k)};
}

std::size_t penalty_partial_raw(const NormalConcept& c,
                                const NormalConcept& d) {
  if (c.unsat) return length(d);
  std::size_t n = 0;
  for (const auto& a : c.pos) n += d.neg.count(a);
  for (const auto& a : c.neg) n += d.pos.count(a);

  for (const auto& [r, x] : c.at_least) {
    auto it = d.at_most.find(r);
    if (it != d.at_most.end() && it->second < x) ++n;
  }
  for (const auto& [r, x] : c.at_most) {
    auto it = d.at_least.find(r);
    if (it == d.at_least.end()) continue;
    // A (<= 0 R) unit whose (all R BOTTOM) half is charged |E| below only
    // counts on its own when D demands more than one filler.
    std::uint32_t bound = (x == 0 && d.filler(r)) ? 1 : x;
    if (it->second > bound) ++n;
  }

  for (const auto& u : c.all) {
    const NormalConcept* e = d.filler(u.role);
    if (!e) continue;
    bool own = false;
    if (auto it = c.at_least.find(u.role); it != c.at_least.end()) {
      auto lim = d.at_most.find(u.role);
      own = !(lim != d.at_most.end() && lim->second < it->second);
    }
    if (own || forces_fillers(d.at_least, u.role))
      n += penalty_partial_raw(u.filler, *e);
  }
  return n;
}

ContractionPair find_contract(const NormalConcept& c, const NormalConcept& d) {
  auto f = find_contract_forms(c, d);
  return {embed(f.give_up), embed(f.keep), penalty_partial_raw(c, d)};
}

ContractionPair contract(const Concept& c, const Concept& d, const TBox& t) {
  auto nc = cnf(c, t);
  if (nc.unsat) throw UnsatisfiableAdvertisement(Side::Supply);
  auto nd = cnf(d, t);
  if (nd.unsat) throw UnsatisfiableAdvertisement(Side::Demand);
  return find_contract(nc, nd);
}

std::size_t penalty_partial(const Concept& c, const Concept& d,
                            const TBox& t) {
  auto nc = cnf(c, t);
  if (nc.unsat) throw UnsatisfiableAdvertisement(Side::Supply);
  auto nd = cnf(d, t);
  if (nd.unsat) throw UnsatisfiableAdvertisement(Side::Demand);
  return penalty_partial_raw(nc, nd);
}

namespace {

void walk(const Concept& c, std::vector<std::string>& path,
          std::vector<RoleOccurrence>& out) {
  switch (c.kind()) {
    case Concept::Kind::All:
      path.push_back(c.id());
      walk(c.filler(), path, out);
      path.pop_back();
      break;
    case Concept::Kind::And:
      for (const auto& x : c.conjuncts()) walk(x, path, out);
      break;
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      break;
    default:
      out.push_back({c, path});
  }
}

}  // namespace

std::vector<RoleOccurrence> role_paths(const Concept& c) {
  std::vector<RoleOccurrence> out;
  std::vector<std::string> path;
  walk(c, path, out);
  return out;
}

}  // namespace aln
