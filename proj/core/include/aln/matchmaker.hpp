#ifndef ALN_MATCHMAKER_HPP
#define ALN_MATCHMAKER_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aln/concept.hpp"
#include "aln/reasoner.hpp"
#include "aln/tbox.hpp"

namespace aln {

struct Hypothesis {
  Concept h;
};

struct Contraction {
  Concept give_up;
  Concept keep;
};

using Explanation = std::variant<Hypothesis, Contraction>;

struct MatchReport {
  std::string offer_id;
  MatchType match_type = MatchType::Potential;
  std::size_t penalty = 0;
  Explanation explanation;
};

struct Rejection {
  std::string offer_id;
  std::string code;
  std::string message;
};

struct RankedList {
  std::vector<MatchReport> reports;
  /// Index ranges [first, last) of reports sharing class and penalty.
  std::vector<std::pair<std::size_t, std::size_t>> tie_groups;
  std::vector<Rejection> rejected;
};

using Offer = std::pair<std::string, Concept>;

/// Scores every offer against the request (offer as supply, request as
/// demand). Compatible offers come first by penalty, then class, then id;
/// conflicting ones follow by partial penalty, then id.
/// Throws UnsatisfiableAdvertisement if the request itself is unsatisfiable.
RankedList rank_offers(const Concept& request, const std::vector<Offer>& offers,
                       const TBox& t, unsigned threads = 0);

MatchReport score_offer(const std::string& id, const NormalConcept& offer,
                        const NormalConcept& request);

std::string format_table(const RankedList& r);
std::string format_json(const RankedList& r);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Reference preference as groups, best first; ids in one group are tied.
using Preference = std::vector<std::vector<std::string>>;

/// Normalized pairwise agreement of `sys` with `usr`.
/// Throws EmptyPreference when usr orders no pair strictly.
Rational rnorm(const std::vector<std::string>& sys, const Preference& usr);

struct VsmScore {
  std::string id;
  double score = 0;
};

/// Terms of a concept for the vector space baseline: names, negated base
/// names and roles of CNF(c, t), one per occurrence.
std::vector<std::string> vsm_terms(const Concept& c, const TBox& t);

/// TF-IDF cosine ranking, best first, ties by id.
std::vector<VsmScore> vsm_rank(const Concept& request,
                               const std::vector<Offer>& offers, const TBox& t);

}  // namespace aln

#endif  // ALN_MATCHMAKER_HPP
