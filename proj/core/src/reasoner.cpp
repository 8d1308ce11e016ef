#include "aln/reasoner.hpp"

#include "aln/errors.hpp"

namespace aln {

const char* to_string(MatchType m) {
  switch (m) {
    case MatchType::Exact: return "exact";
    case MatchType::Full: return "full";
    case MatchType::PlugIn: return "plug-in";
    case MatchType::Potential: return "potential";
    case MatchType::Partial: return "partial";
  }
  return "?";
}

std::optional<MatchType> match_type_from_string(std::string_view s) {
  for (auto m : {MatchType::Exact, MatchType::Full, MatchType::PlugIn,
                 MatchType::Potential, MatchType::Partial})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

bool is_satisfiable(const Concept& c, const TBox& t) {
  return !cnf(c, t).unsat;
}

bool subsumes(const NormalConcept& d, const NormalConcept& c) {
  if (c.unsat) return true;
  if (d.unsat) return false;
  for (const auto& a : d.pos)
    if (!c.pos.count(a)) return false;
  for (const auto& a : d.neg)
    if (!c.neg.count(a)) return false;
  for (const auto& [r, n] : d.at_least) {
    auto it = c.at_least.find(r);
    if (it == c.at_least.end() || it->second < n) return false;
  }
  for (const auto& [r, n] : d.at_most) {
    auto it = c.at_most.find(r);
    if (it == c.at_most.end() || it->second > n) return false;
  }
  // Fillers are never TOP, so a universal of d needs a partner in c.
  for (const auto& u : d.all) {
    const NormalConcept* f = c.filler(u.role);
    if (!f || !subsumes(u.filler, *f)) return false;
  }
  return true;
}

bool subsumes(const Concept& d, const Concept& c, const TBox& t) {
  return subsumes(cnf(d, t), cnf(c, t));
}

bool equivalent(const Concept& a, const Concept& b, const TBox& t) {
  return cnf(a, t) == cnf(b, t);
}

MatchType classify(const NormalConcept& sup, const NormalConcept& dem) {
  bool full = subsumes(dem, sup);
  bool plug = subsumes(sup, dem);
  if (full && plug) return MatchType::Exact;
  if (full) return MatchType::Full;
  if (plug) return MatchType::PlugIn;
  return conjoin(sup, dem).unsat ? MatchType::Partial : MatchType::Potential;
}

MatchType classify_match(const Concept& sup, const Concept& dem,
                         const TBox& t) {
  auto s = cnf(sup, t);
  if (s.unsat) throw UnsatisfiableAdvertisement(Side::Supply);
  auto d = cnf(dem, t);
  if (d.unsat) throw UnsatisfiableAdvertisement(Side::Demand);
  return classify(s, d);
}

}  // namespace aln
