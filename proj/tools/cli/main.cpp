#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "aln/abduction.hpp"
#include "aln/contraction.hpp"
#include "aln/errors.hpp"
#include "aln/matchmaker.hpp"
#include "aln/normal_form.hpp"
#include "aln/reasoner.hpp"
#include "aln/syntax.hpp"
#include "service.hpp"

namespace {

using namespace aln;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KnowledgeBase load(const std::string& path) {
  if (path.empty()) return {};
  return parse_kb(slurp(path));
}

// An instance id of the KB, or an s-expression.
Concept resolve(const KnowledgeBase& kb, const std::string& arg) {
  if (const auto* ad = kb.find(arg)) return ad->description;
  return parse_concept(arg);
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::vector<std::string>> read_lines(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<std::vector<std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto w = words(line);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

int report(const Error& e) {
  std::cerr << "error: " << e.code();
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    const auto& s = p->span();
    std::cerr << " at " << s.line << ":" << s.column << " [" << s.start << ","
              << s.end << "): " << p->detail() << "\n";
  } else {
    std::cerr << ": " << e.what() << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ALN matchmaking: abduction, contraction and ranking"};
  app.require_subcommand(1);
  std::string kb_path;

  auto* classify_cmd = app.add_subcommand("classify", "Match class of a supply/demand pair");
  std::string sup, dem;
  classify_cmd->add_option("--kb", kb_path, "Knowledge base file");
  classify_cmd->add_option("--sup", sup, "Supply concept or instance id")->required();
  classify_cmd->add_option("--dem", dem, "Demand concept or instance id")->required();

  auto* abduce_cmd = app.add_subcommand("abduce", "Hypothesis H with C and H subsumed by D");
  std::string c_arg, d_arg;
  bool tbox_step5 = false;
  abduce_cmd->add_option("--kb", kb_path, "Knowledge base file");
  abduce_cmd->add_option("--c", c_arg, "Concept C")->required();
  abduce_cmd->add_option("--d", d_arg, "Concept D")->required();
  abduce_cmd->add_flag("--tbox-step5", tbox_step5,
                       "Use the TBox when reducing the hypothesis");

  auto* contract_cmd = app.add_subcommand("contract", "Give-up / keep split of C against D");
  contract_cmd->add_option("--kb", kb_path, "Knowledge base file");
  contract_cmd->add_option("--c", c_arg, "Concept C")->required();
  contract_cmd->add_option("--d", d_arg, "Concept D")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank the offers of a file against a request");
  std::string request, offers_path, baseline, format = "table";
  unsigned threads = 0;
  rank_cmd->add_option("--kb", kb_path, "Knowledge base file");
  rank_cmd->add_option("--request", request, "Request concept or instance id")->required();
  rank_cmd->add_option("--offers", offers_path, "File of instance forms")->required();
  rank_cmd->add_option("--baseline", baseline, "Alternative ranking")
      ->check(CLI::IsMember({"vsm"}));
  rank_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
  rank_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* rnorm_cmd = app.add_subcommand("eval-rnorm", "Rnorm of a ranking against a preference");
  std::string sys_path, usr_path;
  rnorm_cmd->add_option("--sys", sys_path, "System ranking, one id per line")->required();
  rnorm_cmd->add_option("--usr", usr_path, "Preference, one tie group per line")->required();

  auto* norm_cmd = app.add_subcommand("normalize", "Canonical normal form of a concept");
  std::string concept_arg;
  norm_cmd->add_option("--kb", kb_path, "Knowledge base file");
  norm_cmd->add_option("--concept", concept_arg, "Concept or instance id")->required();

  auto* serve_cmd = app.add_subcommand("serve", "Run the XML knowledge-base service");
  int port = -1;
  double ttl = -1, period = 10;
  std::string host = "0.0.0.0";
  serve_cmd->add_option("--port", port, "Port (default MAMAS_PORT or 8080)");
  serve_cmd->add_option("--host", host, "Bind address");
  serve_cmd->add_option("--ttl", ttl, "Idle seconds before a KB is released");
  serve_cmd->add_option("--reaper-period", period, "Seconds between reaper sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      auto kb = load(kb_path);
      std::cout << to_string(classify_match(resolve(kb, sup), resolve(kb, dem), kb.tbox))
                << "\n";
    } else if (*abduce_cmd) {
      auto kb = load(kb_path);
      auto c = resolve(kb, c_arg), d = resolve(kb, d_arg);
      auto sol = tbox_step5 ? abduce_with_tbox(c, d, kb.tbox) : abduce(c, d, kb.tbox);
      std::cout << "H = " << render_concept(sol.hypothesis) << "\n"
                << "penalty = " << sol.penalty << "\n";
    } else if (*contract_cmd) {
      auto kb = load(kb_path);
      auto pair = contract(resolve(kb, c_arg), resolve(kb, d_arg), kb.tbox);
      std::cout << "G = " << render_concept(pair.give_up) << "\n"
                << "K = " << render_concept(pair.keep) << "\n"
                << "penalty = " << pair.penalty << "\n";
    } else if (*rank_cmd) {
      auto kb = load(kb_path);
      auto offers_kb = parse_kb(slurp(offers_path));
      if (!offers_kb.tbox.empty()) {
        auto axioms = kb.tbox.axioms();
        for (const auto& a : offers_kb.tbox.axioms()) axioms.push_back(a);
        kb.tbox = TBox::validate(std::move(axioms));
      }
      auto req = resolve(kb, request);
      std::vector<Offer> offers;
      for (const auto& ad : offers_kb.advertisements)
        offers.emplace_back(ad.id, ad.description);
      if (baseline == "vsm") {
        std::cout << "rank\tid\tscore\n";
        auto scores = vsm_rank(req, offers, kb.tbox);
        for (std::size_t i = 0; i < scores.size(); ++i)
          std::cout << i + 1 << '\t' << scores[i].id << '\t' << std::fixed
                    << std::setprecision(6) << scores[i].score << '\n';
      } else {
        auto ranked = rank_offers(req, offers, kb.tbox, threads);
        std::cout << (format == "json" ? format_json(ranked) : format_table(ranked));
      }
    } else if (*rnorm_cmd) {
      std::vector<std::string> sys;
      for (auto& line : read_lines(sys_path))
        for (auto& w : line) sys.push_back(w);
      std::cout << rnorm(sys, read_lines(usr_path)).str() << "\n";
    } else if (*norm_cmd) {
      auto kb = load(kb_path);
      std::cout << render_concept(embed(cnf(resolve(kb, concept_arg), kb.tbox)))
                << "\n";
    } else if (*serve_cmd) {
      auto opts = service::options_from_env();
      if (ttl >= 0)
        opts.ttl = std::chrono::milliseconds(static_cast<long long>(ttl * 1000));
      opts.reaper_period =
          std::chrono::milliseconds(static_cast<long long>(period * 1000));
      if (port < 0) {
        const char* p = std::getenv("MAMAS_PORT");
        port = p ? std::atoi(p) : 8080;
      }
      service::Service svc(opts);
      service::HttpServer http(svc);
      int bound = http.bind(host, port);
      if (bound < 0) throw Error("bind-failed", "cannot bind port " + std::to_string(port));
      svc.start_reaper();
      std::cerr << "listening on " << host << ":" << bound << "\n";
      http.run();
    }
  } catch (const Error& e) {
    return report(e);
  }
  return 0;
}
