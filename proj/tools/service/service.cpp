#include "service.hpp"

#include <cstdlib>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "httplib.h"

#include "aln/abduction.hpp"
#include "aln/contraction.hpp"
#include "aln/errors.hpp"
#include "aln/normal_form.hpp"
#include "aln/reasoner.hpp"
#include "aln/syntax.hpp"

namespace aln::service {

namespace pt = boost::property_tree;

namespace {

struct Failure {
  int status;
  std::string code;
  std::string message;
};

[[noreturn]] void malformed(const std::string& what) {
  throw Failure{400, "malformed-query", what};
}

bool is_meta(const std::string& key) {
  return key == "<xmlattr>" || key == "<xmlcomment>";
}

std::string attr(const pt::ptree& node, const std::string& name,
                 const std::string& dflt = "") {
  return node.get<std::string>("<xmlattr>." + name, dflt);
}

std::vector<const pt::ptree::value_type*> elements(const pt::ptree& node) {
  std::vector<const pt::ptree::value_type*> out;
  for (const auto& kv : node)
    if (!is_meta(kv.first)) out.push_back(&kv);
  return out;
}

std::string name_attr(const pt::ptree& node, const char* what) {
  auto n = attr(node, "name");
  if (!is_identifier(n) || n == "TOP" || n == "BOTTOM")
    malformed(std::string("invalid ") + what + " name '" + n + "'");
  return n;
}

std::string role_of(const pt::ptree& node) {
  auto kids = elements(node);
  if (kids.empty() || kids.front()->first != "ratom")
    malformed("expected <ratom> as first child");
  return name_attr(kids.front()->second, "role");
}

std::uint32_t num_of(const pt::ptree& node) {
  auto s = attr(node, "num");
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0 || v > kMaxBound) throw 0;
    return static_cast<std::uint32_t>(v);
  } catch (...) {
    malformed("invalid num '" + s + "'");
  }
}

Concept to_concept(const std::string& tag, const pt::ptree& node) {
  if (tag == "top") return Concept::top();
  if (tag == "bottom") return Concept::bottom();
  if (tag == "catom") return Concept::name(name_attr(node, "concept"));
  auto kids = elements(node);
  if (tag == "not") {
    if (kids.size() != 1 || kids[0]->first != "catom")
      malformed("<not> takes a single <catom>");
    return Concept::neg(name_attr(kids[0]->second, "concept"));
  }
  if (tag == "and") {
    if (kids.size() < 2) malformed("<and> takes at least two concepts");
    std::vector<Concept> parts;
    for (const auto* k : kids) parts.push_back(to_concept(k->first, k->second));
    return Concept::conj(std::move(parts));
  }
  if (tag == "all") {
    if (kids.size() != 2) malformed("<all> takes a role and a concept");
    return Concept::all(role_of(node), to_concept(kids[1]->first, kids[1]->second));
  }
  if (tag == "atleast" || tag == "atmost") {
    if (kids.size() != 1) malformed("<" + tag + "> takes a single <ratom>");
    auto n = num_of(node);
    auto r = role_of(node);
    return tag == "atleast" ? Concept::at_least(n, r) : Concept::at_most(n, r);
  }
  malformed("unknown concept element <" + tag + ">");
}

std::pair<Concept, Concept> two_concepts(const pt::ptree& node,
                                         const std::string& verb) {
  auto kids = elements(node);
  if (kids.size() != 2) malformed("<" + verb + "> takes two concepts");
  return {to_concept(kids[0]->first, kids[0]->second),
          to_concept(kids[1]->first, kids[1]->second)};
}

pt::ptree concept_tree(const Concept& c, std::string& tag) {
  pt::ptree n;
  auto ratom = [](const std::string& r) {
    pt::ptree x;
    x.put("<xmlattr>.name", r);
    return x;
  };
  switch (c.kind()) {
    case Concept::Kind::Top: tag = "top"; break;
    case Concept::Kind::Bottom: tag = "bottom"; break;
    case Concept::Kind::Name:
      tag = "catom";
      n.put("<xmlattr>.name", c.id());
      break;
    case Concept::Kind::NegName: {
      tag = "not";
      pt::ptree a;
      a.put("<xmlattr>.name", c.id());
      n.add_child("catom", a);
      break;
    }
    case Concept::Kind::AtLeast:
    case Concept::Kind::AtMost:
      tag = c.is(Concept::Kind::AtLeast) ? "atleast" : "atmost";
      n.put("<xmlattr>.num", c.bound());
      n.add_child("ratom", ratom(c.id()));
      break;
    case Concept::Kind::All: {
      tag = "all";
      n.add_child("ratom", ratom(c.id()));
      std::string t;
      auto f = concept_tree(c.filler(), t);
      n.add_child(t, f);
      break;
    }
    case Concept::Kind::And:
      tag = "and";
      for (const auto& x : c.conjuncts()) {
        std::string t;
        auto f = concept_tree(x, t);
        n.add_child(t, f);
      }
      break;
  }
  return n;
}

void add_concept(pt::ptree& parent, const Concept& c) {
  std::string tag;
  auto n = concept_tree(c, tag);
  parent.add_child(tag, n);
}

pt::ptree parse(const std::string& body) {
  pt::ptree doc;
  std::istringstream in(body);
  try {
    pt::read_xml(in, doc, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    malformed(std::string("XML: ") + e.message());
  }
  return doc;
}

std::string write(const pt::ptree& doc) {
  std::ostringstream out;
  pt::write_xml(out, doc);
  return out.str();
}

std::string element(const pt::ptree& doc) {
  auto s = write(doc);
  auto p = s.find("?>");
  if (p != std::string::npos) s.erase(0, p + 2);
  while (!s.empty() && (s.front() == '\n' || s.front() == '\r')) s.erase(0, 1);
  return s;
}

Response error_response(const Failure& f) {
  pt::ptree doc;
  auto& e = doc.add("error", f.message);
  e.put("<xmlattr>.code", f.code);
  return {f.status, write(doc)};
}

bool flag(const pt::ptree& node, const std::string& name, bool dflt) {
  auto v = attr(node, name, dflt ? "true" : "false");
  if (v == "true") return true;
  if (v == "false") return false;
  malformed("attribute " + name + " must be true or false");
}

}  // namespace

Concept concept_from_xml_text(const std::string& xml) {
  try {
    auto doc = parse(xml);
    auto kids = elements(doc);
    if (kids.size() != 1) malformed("expected one concept element");
    return to_concept(kids[0]->first, kids[0]->second);
  } catch (const Failure& f) {
    throw Error(f.code, f.message);
  }
}

std::string concept_to_xml_text(const Concept& c) {
  pt::ptree doc;
  add_concept(doc, c);
  return element(doc);
}

std::string tells_xml(const std::string& uri, const std::vector<Axiom>& axioms) {
  pt::ptree doc;
  auto& t = doc.add_child("tells", pt::ptree{});
  t.put("<xmlattr>.uri", uri);
  for (const auto& a : axioms) {
    if (const auto* g = std::get_if<DisjointGroup>(&a)) {
      auto& x = t.add_child("disjoint", pt::ptree{});
      x.put("<xmlattr>.label", g->label);
      for (const auto& n : g->names) add_concept(x, Concept::name(n));
      continue;
    }
    bool def = std::holds_alternative<Definition>(a);
    const auto& name = def ? std::get<Definition>(a).name : std::get<Inclusion>(a).name;
    const auto& body = def ? std::get<Definition>(a).body : std::get<Inclusion>(a).body;
    auto& x = t.add_child(def ? "equalc" : "impliesc", pt::ptree{});
    add_concept(x, Concept::name(name));
    add_concept(x, body);
  }
  return element(doc);
}

Options options_from_env(Options opts) {
  if (const char* s = std::getenv("MAMAS_TTL_SECONDS")) {
    try {
      opts.ttl = std::chrono::seconds(std::stoll(s));
    } catch (...) {
      throw Error("bad-config", std::string("MAMAS_TTL_SECONDS='") + s + "'");
    }
  }
  return opts;
}

Service::Service(Options opts) : opts_(std::move(opts)) {}

Service::~Service() { stop_reaper(); }

std::shared_ptr<Service::Session> Service::lookup(const std::string& uri) {
  std::lock_guard g(mu_);
  auto it = kbs_.find(uri);
  if (it == kbs_.end()) {
    if (expired_.count(uri))
      throw Failure{410, "expired-kb", "knowledge base '" + uri + "' expired"};
    throw Failure{404, "unknown-kb", "no knowledge base '" + uri + "'"};
  }
  auto now = opts_.now();
  auto& s = it->second;
  if (!s->permanent && now - s->last_used > opts_.ttl) {
    kbs_.erase(it);
    expired_.insert(uri);
    throw Failure{410, "expired-kb", "knowledge base '" + uri + "' expired"};
  }
  s->last_used = now;
  return s;
}

std::size_t Service::reap() {
  std::lock_guard g(mu_);
  auto now = opts_.now();
  std::size_t n = 0;
  for (auto it = kbs_.begin(); it != kbs_.end();) {
    if (!it->second->permanent && now - it->second->last_used > opts_.ttl) {
      expired_.insert(it->first);
      it = kbs_.erase(it);
      ++n;
    } else {
      ++it;
    }
  }
  return n;
}

std::size_t Service::live_kbs() const {
  std::lock_guard g(mu_);
  return kbs_.size();
}

void Service::start_reaper() {
  if (reaper_.joinable()) return;
  stopping_ = false;
  reaper_ = std::thread([this] {
    std::unique_lock lk(reaper_mu_);
    while (!reaper_cv_.wait_for(lk, opts_.reaper_period,
                                [this] { return stopping_; }))
      reap();
  });
}

void Service::stop_reaper() {
  {
    std::lock_guard lk(reaper_mu_);
    stopping_ = true;
  }
  reaper_cv_.notify_all();
  if (reaper_.joinable()) reaper_.join();
}

struct Handler {
  Service& svc;
  const std::string& client;

  Response new_kb(const pt::ptree& node) {
    auto s = std::make_shared<Service::Session>();
    s->owner = client;
    s->shared = flag(node, "shared", true);
    s->permanent = flag(node, "permanent", false);
    s->last_used = svc.opts_.now();
    std::string uri;
    {
      std::lock_guard g(svc.mu_);
      uri = "kb" + std::to_string(++svc.next_id_);
      svc.kbs_.emplace(uri, s);
    }
    pt::ptree doc;
    doc.put("response.kb.<xmlattr>.uri", uri);
    return {200, write(doc)};
  }

  std::shared_ptr<Service::Session> owned(const pt::ptree& node,
                                          const std::string& verb) {
    auto s = svc.lookup(attr(node, "uri"));
    if (!s->shared && s->owner != client)
      throw Failure{403, "unauthorized-tell",
                    verb + " on a private knowledge base from a non-owner"};
    return s;
  }

  Response release(const pt::ptree& node) {
    auto uri = attr(node, "uri");
    owned(node, "releaseKB");
    {
      std::lock_guard g(svc.mu_);
      svc.kbs_.erase(uri);
    }
    pt::ptree doc;
    doc.put("ok", "");
    return {200, write(doc)};
  }

  Response tells(const pt::ptree& node) {
    std::vector<Axiom> added;
    int groups = 0;
    for (const auto* k : elements(node)) {
      const auto& tag = k->first;
      const auto& body = k->second;
      if (tag == "defconcept" || tag == "defrole") {
        name_attr(body, "concept");
        continue;
      }
      auto kids = elements(body);
      if (tag == "equalc" || tag == "impliesc") {
        if (kids.size() != 2 || kids[0]->first != "catom")
          malformed("<" + tag + "> takes a <catom> and a concept");
        auto lhs = name_attr(kids[0]->second, "concept");
        auto rhs = to_concept(kids[1]->first, kids[1]->second);
        if (tag == "equalc")
          added.push_back(Definition{lhs, rhs});
        else
          added.push_back(Inclusion{lhs, rhs});
      } else if (tag == "disjoint") {
        DisjointGroup g{attr(body, "label"), {}};
        ++groups;
        for (const auto* a : kids) {
          if (a->first != "catom") malformed("<disjoint> takes <catom> elements");
          g.names.push_back(name_attr(a->second, "concept"));
        }
        added.push_back(std::move(g));
      } else {
        malformed("unknown tell <" + tag + ">");
      }
    }
    auto s = owned(node, "tell");
    std::unique_lock w(s->lock);
    auto all = s->axioms;
    for (auto& a : added) {
      if (auto* g = std::get_if<DisjointGroup>(&a); g && g->label.empty())
        g->label = "g" + std::to_string(all.size() + 1);
      all.push_back(a);
    }
    try {
      s->tbox = TBox::validate(all);
    } catch (const TBoxError& e) {
      throw Failure{422, e.violations().front().code(), e.what()};
    }
    s->axioms = std::move(all);
    pt::ptree doc;
    doc.put("ok", "");
    return {200, write(doc)};
  }

  struct Query {
    std::string verb, id;
    const pt::ptree* node;
    Concept a, b;
  };

  Response asks(const pt::ptree& node) {
    std::vector<Query> qs;
    for (const auto* k : elements(node)) {
      Query q{k->first, attr(k->second, "id"), &k->second, {}, {}};
      if (q.verb == "satisfiable") {
        auto kids = elements(k->second);
        if (kids.size() != 1) malformed("<satisfiable> takes one concept");
        q.a = to_concept(kids[0]->first, kids[0]->second);
      } else if (q.verb == "subsumes" || q.verb == "matchType" ||
                 q.verb == "abduce" || q.verb == "contract" || q.verb == "rank") {
        std::tie(q.a, q.b) = two_concepts(k->second, q.verb);
        if (q.verb == "rank") {
          auto type = attr(k->second, "type");
          if (type != "potential" && type != "partial")
            malformed("<rank> type must be potential or partial");
        }
        if (q.verb == "abduce") flag(k->second, "tbox", false);
      } else {
        malformed("unknown ask <" + q.verb + ">");
      }
      qs.push_back(std::move(q));
    }
    auto s = svc.lookup(attr(node, "uri"));
    std::shared_lock r(s->lock);
    const TBox& t = s->tbox;
    pt::ptree doc;
    auto& out = doc.add_child("responses", pt::ptree{});
    for (const auto& q : qs) {
      try {
        answer(out, q, t);
      } catch (const Error& e) {
        auto& x = out.add("error", e.what());
        x.put("<xmlattr>.id", q.id);
        x.put("<xmlattr>.code", e.code());
      }
    }
    return {200, write(doc)};
  }

  static void answer(pt::ptree& out, const Query& q, const TBox& t) {
    auto tagged = [&](const std::string& tag, const std::string& text = "")
        -> pt::ptree& {
      auto& x = out.add(tag, text);
      x.put("<xmlattr>.id", q.id);
      return x;
    };
    if (q.verb == "satisfiable") {
      tagged(is_satisfiable(q.a, t) ? "true" : "false");
    } else if (q.verb == "subsumes") {
      tagged(subsumes(q.a, q.b, t) ? "true" : "false");
    } else if (q.verb == "matchType") {
      tagged("matchType", to_string(classify_match(q.a, q.b, t)));
    } else if (q.verb == "abduce") {
      auto sol = flag(*q.node, "tbox", false) ? abduce_with_tbox(q.a, q.b, t)
                                              : abduce(q.a, q.b, t);
      auto& x = tagged("hypothesis");
      x.put("<xmlattr>.penalty", sol.penalty);
      add_concept(x, sol.hypothesis);
    } else if (q.verb == "contract") {
      auto pair = contract(q.a, q.b, t);
      auto& x = tagged("contraction");
      x.put("<xmlattr>.penalty", pair.penalty);
      add_concept(x.add_child("giveUp", pt::ptree{}), pair.give_up);
      add_concept(x.add_child("keep", pt::ptree{}), pair.keep);
    } else {
      auto type = attr(*q.node, "type");
      auto p = type == "potential" ? penalty_potential(q.a, q.b, t)
                                   : penalty_partial(q.a, q.b, t);
      auto& x = tagged("penalty", std::to_string(p));
      x.put("<xmlattr>.type", type);
    }
  }
};

Response Service::handle(const std::string& body, const std::string& client) {
  try {
    auto doc = parse(body);
    auto kids = elements(doc);
    if (kids.size() != 1) malformed("expected one request element");
    const auto& verb = kids[0]->first;
    const auto& node = kids[0]->second;
    Handler h{*this, client};
    if (verb == "newKB") return h.new_kb(node);
    if (verb == "releaseKB") return h.release(node);
    if (verb == "tells") return h.tells(node);
    if (verb == "asks") return h.asks(node);
    malformed("unknown request <" + verb + ">");
  } catch (const Failure& f) {
    return error_response(f);
  } catch (const Error& e) {
    return error_response({400, e.code(), e.what()});
  } catch (const std::exception& e) {
    return error_response({500, "internal-error", e.what()});
  }
}

struct HttpServer::Impl {
  Service& svc;
  httplib::Server http;
};

HttpServer::HttpServer(Service& service)
    : impl_(new Impl{service, {}}) {
  impl_->http.Post("/", [this](const httplib::Request& req,
                               httplib::Response& res) {
    auto client = req.get_header_value("X-Mamas-Client");
    if (client.empty()) client = req.remote_addr;
    auto r = impl_->svc.handle(req.body, client);
    res.status = r.status;
    res.set_content(r.body, "application/xml");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->http.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace aln::service
