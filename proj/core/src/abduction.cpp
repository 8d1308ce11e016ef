#include "aln/abduction.hpp"

#include <functional>
#include <optional>

#include "aln/errors.hpp"
#include "aln/reasoner.hpp"
#include "aln/syntax.hpp"

namespace aln {
namespace {

using SolTest = std::function<bool(const NormalConcept&)>;

std::string join_path(const std::string& path, const std::string& role) {
  return path.empty() ? role : path + "." + role;
}

class Irred {
 public:
  explicit Irred(const TBox* t) : t_(t) {}

  std::vector<TraceEntry> generated, deleted;

  // nullopt stands for BOTTOM (Step 0).
  std::optional<NormalConcept> run(const NormalConcept& c,
                                   const NormalConcept& d,
                                   const std::string& path) {
    if (c.unsat || d.unsat || conjoin(c, d).unsat) return std::nullopt;
    NormalConcept h;
    for (const auto& a : d.pos)
      if (!c.pos.count(a)) {
        h.pos.insert(a);
        note("1", path, Concept::name(a));
      }
    for (const auto& a : d.neg)
      if (!c.neg.count(a)) {
        h.neg.insert(a);
        note("1", path, Concept::neg(a));
      }
    for (const auto& [r, n] : d.at_least) {
      auto it = c.at_least.find(r);
      if (it == c.at_least.end() || it->second < n) {
        h.at_least[r] = n;
        note("2", path, Concept::at_least(n, r));
      }
    }
    for (const auto& [r, n] : d.at_most) {
      auto it = c.at_most.find(r);
      if (it == c.at_most.end() || it->second > n) {
        h.at_most[r] = n;
        note("3", path, Concept::at_most(n, r));
      }
    }
    for (const auto& u : d.all) {
      if (const NormalConcept* f = c.filler(u.role)) {
        auto sub = run(*f, u.filler, join_path(path, u.role));
        if (!sub) {
          h.at_most[u.role] = 0;
          h.set_filler(u.role, NormalConcept::bottom());
          note("4.1.1", path, Concept::all(u.role, Concept::bottom()));
        } else if (!sub->is_top()) {
          note("4.1.1", path, Concept::all(u.role, embed(*sub)));
          h.set_filler(u.role, std::move(*sub));
        }
      } else {
        h.set_filler(u.role, u.filler);
        if (u.filler.unsat) h.at_most[u.role] = 0;
        note("4.1.2", path, Concept::all(u.role, embed(u.filler)));
      }
    }
    for (const auto& [r, m] : h.at_most)
      if (m == 0) h.set_filler(r, NormalConcept::bottom());

    SolTest sol = [&](const NormalConcept& x) { return is_solution(c, d, x); };
    reduce(h, h, path, sol);
    return h;
  }

  bool is_solution(const NormalConcept& c, const NormalConcept& d,
                   const NormalConcept& h) const {
    NormalConcept both =
        t_ ? cnf(Concept::conj({embed(c), embed(h)}), *t_) : conjoin(c, h);
    return !both.unsat && subsumes(d, both);
  }

 private:
  void note(const char* step, const std::string& path, Concept c) {
    generated.push_back({step, path, render_concept(c)});
  }

  // Step 5: greedy single pass, fillers first, then the conjuncts of `node`
  // in canonical order. `root` is what the solution test sees.
  void reduce(NormalConcept& root, NormalConcept& node, const std::string& path,
              const SolTest& sol) {
    std::vector<std::string> roles;
    for (const auto& u : node.all) roles.push_back(u.role);
    for (const auto& r : roles) {
      NormalConcept* f = node.filler(r);
      if (!f || f->unsat) continue;
      reduce(root, *f, join_path(path, r), sol);
      if (node.filler(r)->is_top()) node.erase_filler(r);
    }

    auto attempt = [&](auto erase, auto restore, Concept shown) {
      erase();
      if (sol(root)) {
        deleted.push_back({"5", path, render_concept(shown)});
      } else {
        restore();
      }
    };

    for (const auto& a : std::set<std::string>(node.pos))
      attempt([&] { node.pos.erase(a); }, [&] { node.pos.insert(a); },
              Concept::name(a));
    for (const auto& a : std::set<std::string>(node.neg))
      attempt([&] { node.neg.erase(a); }, [&] { node.neg.insert(a); },
              Concept::neg(a));
    for (const auto& [r, n] : std::map(node.at_least))
      attempt([&, r = r] { node.at_least.erase(r); },
              [&, r = r, n = n] { node.at_least[r] = n; },
              Concept::at_least(n, r));
    for (const auto& [r, n] : std::map(node.at_most)) {
      if (n == 0) {
        // (<= 0 R) and (all R BOTTOM) leave together.
        attempt(
            [&, r = r] {
              node.at_most.erase(r);
              node.erase_filler(r);
            },
            [&, r = r] {
              node.at_most[r] = 0;
              node.set_filler(r, NormalConcept::bottom());
            },
            Concept::at_most(0, r));
      } else {
        attempt([&, r = r] { node.at_most.erase(r); },
                [&, r = r, n = n] { node.at_most[r] = n; },
                Concept::at_most(n, r));
      }
    }
    for (const auto& r : roles) {
      const NormalConcept* f = node.filler(r);
      if (!f || f->unsat) continue;
      NormalConcept saved = *f;
      Concept shown = Concept::all(r, embed(saved));
      attempt([&] { node.erase_filler(r); },
              [&] { node.set_filler(r, saved); }, shown);
    }
  }

  const TBox* t_;
};

AbductionSolution solve(const NormalConcept& c, const NormalConcept& d,
                        const TBox* step5) {
  Irred irred(step5);
  auto h = irred.run(c, d, "");
  AbductionSolution s;
  s.hypothesis = h ? embed(*h) : Concept::bottom();
  s.penalty = h ? length(*h) : 0;
  s.generated = std::move(irred.generated);
  s.deleted = std::move(irred.deleted);
  return s;
}

AbductionSolution checked(const Concept& c, const Concept& d, const TBox& t,
                          bool tbox_step5) {
  auto nc = cnf(c, t);
  if (nc.unsat) throw UnsatisfiableAdvertisement(Side::Supply);
  auto nd = cnf(d, t);
  if (nd.unsat) throw UnsatisfiableAdvertisement(Side::Demand);
  if (conjoin(nc, nd).unsat) throw PartialMatch();
  return solve(nc, nd, tbox_step5 ? &t : nullptr);
}

}  // namespace

Concept find_irred(const NormalConcept& c, const NormalConcept& d) {
  return solve(c, d, nullptr).hypothesis;
}

AbductionSolution find_irred_traced(const NormalConcept& c,
                                    const NormalConcept& d,
                                    const TBox* step5) {
  return solve(c, d, step5);
}

AbductionSolution abduce(const Concept& c, const Concept& d, const TBox& t) {
  return checked(c, d, t, false);
}

AbductionSolution abduce_with_tbox(const Concept& c, const Concept& d,
                                   const TBox& t) {
  return checked(c, d, t, true);
}

std::size_t penalty_potential(const Concept& c, const Concept& d,
                              const TBox& t) {
  return abduce(c, d, t).penalty;
}

}  // namespace aln
