#include "aln/matchmaker.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "aln/abduction.hpp"
#include "aln/contraction.hpp"
#include "aln/errors.hpp"
#include "aln/normal_form.hpp"
#include "aln/syntax.hpp"

namespace aln {

MatchReport score_offer(const std::string& id, const NormalConcept& offer,
                        const NormalConcept& request) {
  MatchReport r;
  r.offer_id = id;
  r.match_type = classify(offer, request);
  if (r.match_type == MatchType::Partial) {
    auto pair = find_contract(offer, request);
    r.penalty = pair.penalty;
    r.explanation = Contraction{std::move(pair.give_up), std::move(pair.keep)};
  } else {
    auto sol = find_irred_traced(offer, request);
    r.penalty = sol.penalty;
    r.explanation = Hypothesis{std::move(sol.hypothesis)};
  }
  return r;
}

namespace {

bool before(const MatchReport& a, const MatchReport& b) {
  bool pa = a.match_type == MatchType::Partial;
  bool pb = b.match_type == MatchType::Partial;
  if (pa != pb) return pb;
  if (a.penalty != b.penalty) return a.penalty < b.penalty;
  if (a.match_type != b.match_type)
    return precedence(a.match_type) < precedence(b.match_type);
  return a.offer_id < b.offer_id;
}

}  // namespace

RankedList rank_offers(const Concept& request, const std::vector<Offer>& offers,
                       const TBox& t, unsigned threads) {
  auto req = cnf(request, t);
  if (req.unsat) throw UnsatisfiableAdvertisement(Side::Demand);

  std::vector<std::optional<MatchReport>> scored(offers.size());
  std::vector<std::optional<Rejection>> failed(offers.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < offers.size();) {
      const auto& [id, c] = offers[i];
      try {
        auto n = cnf(c, t);
        if (n.unsat) throw UnsatisfiableAdvertisement(Side::Supply);
        scored[i] = score_offer(id, n, req);
      } catch (const Error& e) {
        failed[i] = Rejection{id, e.code(), e.what()};
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(offers.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  RankedList out;
  for (std::size_t i = 0; i < offers.size(); ++i) {
    if (scored[i]) out.reports.push_back(std::move(*scored[i]));
    if (failed[i]) out.rejected.push_back(std::move(*failed[i]));
  }
  std::sort(out.reports.begin(), out.reports.end(), before);
  std::sort(out.rejected.begin(), out.rejected.end(),
            [](const Rejection& a, const Rejection& b) {
              return a.offer_id < b.offer_id;
            });
  for (std::size_t i = 0; i < out.reports.size();) {
    std::size_t j = i + 1;
    while (j < out.reports.size() &&
           out.reports[j].match_type == out.reports[i].match_type &&
           out.reports[j].penalty == out.reports[i].penalty)
      ++j;
    out.tie_groups.emplace_back(i, j);
    i = j;
  }
  return out;
}

namespace {

std::string explain(const Explanation& e) {
  if (const auto* h = std::get_if<Hypothesis>(&e))
    return "H=" + render_concept(h->h);
  const auto& c = std::get<Contraction>(e);
  return "G=" + render_concept(c.give_up) + " K=" + render_concept(c.keep);
}

}  // namespace

std::string format_table(const RankedList& r) {
  std::ostringstream os;
  os << "rank\tid\tclass\tpenalty\texplanation\n";
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    const auto& m = r.reports[i];
    os << i + 1 << '\t' << m.offer_id << '\t' << to_string(m.match_type) << '\t'
       << m.penalty << '\t' << explain(m.explanation) << '\n';
  }
  for (const auto& x : r.rejected)
    os << "-\t" << x.offer_id << "\trejected\t-\t" << x.code << '\n';
  return os.str();
}

std::string format_json(const RankedList& r) {
  using nlohmann::json;
  json reports = json::array();
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    const auto& m = r.reports[i];
    json j = {{"rank", i + 1},
              {"id", m.offer_id},
              {"class", to_string(m.match_type)},
              {"penalty", m.penalty}};
    if (const auto* h = std::get_if<Hypothesis>(&m.explanation)) {
      j["hypothesis"] = render_concept(h->h);
    } else {
      const auto& c = std::get<Contraction>(m.explanation);
      j["give_up"] = render_concept(c.give_up);
      j["keep"] = render_concept(c.keep);
    }
    reports.push_back(std::move(j));
  }
  json ties = json::array();
  for (const auto& [a, b] : r.tie_groups) {
    json g = json::array();
    for (std::size_t i = a; i < b; ++i) g.push_back(r.reports[i].offer_id);
    ties.push_back(std::move(g));
  }
  json rejected = json::array();
  for (const auto& x : r.rejected)
    rejected.push_back(
        {{"id", x.offer_id}, {"code", x.code}, {"message", x.message}});
  json doc = {{"reports", reports}, {"ties", ties}, {"rejected", rejected}};
  return doc.dump(2) + "\n";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  auto g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational rnorm(const std::vector<std::string>& sys, const Preference& usr) {
  std::map<std::string, std::size_t> grade;
  for (std::size_t g = 0; g < usr.size(); ++g)
    for (const auto& id : usr[g])
      if (!grade.emplace(id, g).second)
        throw Error("id-mismatch", "'" + id + "' appears twice in preference");
  std::set<std::string> seen;
  for (const auto& id : sys) {
    if (!grade.count(id))
      throw Error("id-mismatch", "'" + id + "' is not in the preference");
    if (!seen.insert(id).second)
      throw Error("id-mismatch", "'" + id + "' appears twice in ranking");
  }
  if (seen.size() != grade.size())
    throw Error("id-mismatch", "ranking and preference cover different ids");

  std::int64_t plus = 0, minus = 0, max = 0;
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      auto gi = grade[sys[i]], gj = grade[sys[j]];
      if (gi == gj) continue;
      ++max;
      (gi < gj ? plus : minus) += 1;
    }
  if (max == 0) throw EmptyPreference();
  return make_rational(max + plus - minus, 2 * max);
}

namespace {

void terms_of(const Concept& c, std::vector<std::string>& out) {
  switch (c.kind()) {
    case Concept::Kind::Top:
    case Concept::Kind::Bottom:
      break;
    case Concept::Kind::And:
      for (const auto& x : c.conjuncts()) terms_of(x, out);
      break;
    case Concept::Kind::All:
      out.push_back(c.id());
      terms_of(c.filler(), out);
      break;
    default:
      out.push_back(c.id());
  }
}

}  // namespace

std::vector<std::string> vsm_terms(const Concept& c, const TBox& t) {
  std::vector<std::string> terms;
  terms_of(embed(cnf(c, t)), terms);
  return terms;
}

std::vector<VsmScore> vsm_rank(const Concept& request,
                               const std::vector<Offer>& offers,
                               const TBox& t) {
  using Vec = std::map<std::string, double>;
  std::vector<Vec> tf;
  tf.reserve(offers.size() + 1);
  auto count = [&](const Concept& c) {
    Vec v;
    for (auto& term : vsm_terms(c, t)) v[term] += 1;
    tf.push_back(std::move(v));
  };
  count(request);
  for (const auto& o : offers) count(o.second);

  std::map<std::string, double> df;
  for (const auto& v : tf)
    for (const auto& [term, _] : v) df[term] += 1;
  const double n = static_cast<double>(tf.size());
  for (auto& v : tf)
    for (auto& [term, w] : v) w *= std::log(n / df[term]);

  auto norm = [](const Vec& v) {
    double s = 0;
    for (const auto& [_, w] : v) s += w * w;
    return std::sqrt(s);
  };
  const Vec& q = tf.front();
  const double nq = norm(q);
  std::vector<VsmScore> out;
  for (std::size_t i = 0; i < offers.size(); ++i) {
    const Vec& v = tf[i + 1];
    double dot = 0;
    for (const auto& [term, w] : q)
      if (auto it = v.find(term); it != v.end()) dot += w * it->second;
    double nv = norm(v);
    out.push_back({offers[i].first, nq > 0 && nv > 0 ? dot / (nq * nv) : 0.0});
  }
  std::sort(out.begin(), out.end(), [](const VsmScore& a, const VsmScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });
  return out;
}

}  // namespace aln
