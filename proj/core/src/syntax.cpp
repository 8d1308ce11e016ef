#include "aln/syntax.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace aln {

ParseError::ParseError(std::string code, const std::string& what,
                       SourceSpan span)
    : Error(std::move(code), std::to_string(span.line) + ":" +
                                 std::to_string(span.column) + ": " + what),
      span_(span),
      detail_(what) {}

const Advertisement* KnowledgeBase::find(std::string_view id) const {
  for (const auto& a : advertisements)
    if (a.id == id) return &a;
  return nullptr;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
    return false;
  for (char ch : s) {
    auto u = static_cast<unsigned char>(ch);
    if (!std::isalnum(u) && ch != '_' && ch != '-') return false;
  }
  return true;
}

namespace {

struct Node {
  bool list = false;
  std::string atom;
  std::vector<Node> items;
  SourceSpan span;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Node> read_all() {
    std::vector<Node> out;
    for (skip(); pos_ < text_.size(); skip()) out.push_back(read());
    return out;
  }

 private:
  SourceSpan here() const { return {pos_, pos_, line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  Node read() {
    Node n;
    n.span = here();
    char ch = text_[pos_];
    if (ch == ')') {
      n.span.end = pos_ + 1;
      throw ParseError("syntax-error", "unexpected ')'", n.span);
    }
    if (ch == '(') {
      n.list = true;
      advance();
      for (;;) {
        skip();
        if (pos_ >= text_.size()) {
          n.span.end = pos_;
          throw ParseError("syntax-error", "unbalanced '('", n.span);
        }
        if (text_[pos_] == ')') break;
        n.items.push_back(read());
      }
      advance();
      n.span.end = pos_;
      return n;
    }
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(' || c == ')' || c == ';' ||
          std::isspace(static_cast<unsigned char>(c)))
        break;
      advance();
    }
    n.span.end = pos_;
    n.atom = std::string(text_.substr(n.span.start, pos_ - n.span.start));
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail(const Node& n, const std::string& code,
                       const std::string& what) {
  throw ParseError(code, what, n.span);
}

bool is_reserved(std::string_view s) { return s == "TOP" || s == "BOTTOM"; }

std::string ident(const Node& n, const char* what) {
  if (n.list) fail(n, "syntax-error", std::string("expected ") + what);
  if (!is_identifier(n.atom))
    fail(n, "syntax-error", "invalid " + std::string(what) + " '" + n.atom + "'");
  return n.atom;
}

std::string concept_name(const Node& n) {
  auto s = ident(n, "concept name");
  if (is_reserved(s)) fail(n, "syntax-error", "'" + s + "' is reserved");
  return s;
}

std::uint32_t bound(const Node& n) {
  if (n.list) fail(n, "syntax-error", "expected a number");
  const auto& s = n.atom;
  if (!s.empty() && s.front() == '-')
    fail(n, "negative-bound", "number restriction bound must be non-negative");
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || p != s.data() + s.size() ||
      ec == std::errc::invalid_argument)
    fail(n, "syntax-error", "expected a number, got '" + s + "'");
  if (ec == std::errc::result_out_of_range || v > kMaxBound)
    fail(n, "bound-overflow", "bound exceeds " + std::to_string(kMaxBound));
  return static_cast<std::uint32_t>(v);
}

void arity(const Node& n, std::size_t want) {
  if (n.items.size() != want)
    fail(n, "syntax-error",
         "'" + n.items.front().atom + "' expects " + std::to_string(want - 1) +
             " argument" + (want == 2 ? "" : "s"));
}

Concept to_concept(const Node& n) {
  if (!n.list) {
    if (n.atom == "TOP") return Concept::top();
    if (n.atom == "BOTTOM") return Concept::bottom();
    return Concept::name(concept_name(n));
  }
  if (n.items.empty()) fail(n, "syntax-error", "empty form");
  const Node& head = n.items.front();
  if (head.list) fail(head, "syntax-error", "expected a constructor");
  const std::string& op = head.atom;
  if (op == "and") {
    if (n.items.size() < 3)
      fail(n, "syntax-error", "'and' expects at least two conjuncts");
    std::vector<Concept> parts;
    for (std::size_t i = 1; i < n.items.size(); ++i)
      parts.push_back(to_concept(n.items[i]));
    return Concept::conj(std::move(parts));
  }
  if (op == "not") {
    arity(n, 2);
    const Node& arg = n.items[1];
    if (arg.list || is_reserved(arg.atom))
      fail(arg, "negated-compound", "only concept names can be negated");
    return Concept::neg(concept_name(arg));
  }
  if (op == "all") {
    arity(n, 3);
    return Concept::all(ident(n.items[1], "role"), to_concept(n.items[2]));
  }
  if (op == "at-least" || op == "at-most" || op == "exactly") {
    arity(n, 3);
    auto k = bound(n.items[1]);
    auto r = ident(n.items[2], "role");
    if (op == "at-least") return Concept::at_least(k, r);
    if (op == "at-most") return Concept::at_most(k, r);
    return Concept::exactly(k, r);
  }
  fail(head, "syntax-error", "unknown constructor '" + op + "'");
}

std::vector<Node> read_forms(std::string_view text) {
  return Reader(text).read_all();
}

struct Forms {
  std::vector<Axiom> axioms;
  std::vector<Advertisement> ads;
};

Forms interpret(const std::vector<Node>& forms, bool allow_instances) {
  Forms out;
  std::set<std::string> ids;
  for (const auto& f : forms) {
    if (!f.list || f.items.empty() || f.items.front().list)
      fail(f, "syntax-error", "expected a top-level form");
    const auto& op = f.items.front().atom;
    if (op == "define" || op == "primitive") {
      arity(f, 3);
      auto name = concept_name(f.items[1]);
      auto body = to_concept(f.items[2]);
      if (op == "define")
        out.axioms.push_back(Definition{name, std::move(body)});
      else
        out.axioms.push_back(Inclusion{name, std::move(body)});
    } else if (op == "disjoint") {
      if (f.items.size() < 3)
        fail(f, "syntax-error", "'disjoint' expects a label and names");
      DisjointGroup g{ident(f.items[1], "group label"), {}};
      for (std::size_t i = 2; i < f.items.size(); ++i)
        g.names.push_back(concept_name(f.items[i]));
      out.axioms.push_back(std::move(g));
    } else if (op == "instance" && allow_instances) {
      arity(f, 4);
      auto id = ident(f.items[1], "instance id");
      const Node& side = f.items[2];
      if (side.list || (side.atom != "demand" && side.atom != "supply"))
        fail(side, "syntax-error", "expected 'demand' or 'supply'");
      if (!ids.insert(id).second)
        fail(f.items[1], "duplicate-instance", "instance '" + id + "' redefined");
      out.ads.push_back({id, side.atom == "demand" ? Side::Demand : Side::Supply,
                         to_concept(f.items[3])});
    } else {
      fail(f.items.front(), "syntax-error", "unknown form '" + op + "'");
    }
  }
  return out;
}

void render(const Concept& c, std::string& out) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::Top: out += "TOP"; return;
    case K::Bottom: out += "BOTTOM"; return;
    case K::Name: out += c.id(); return;
    case K::NegName:
      out += "(not " + c.id() + ")";
      return;
    case K::AtLeast:
      out += "(at-least " + std::to_string(c.bound()) + " " + c.id() + ")";
      return;
    case K::AtMost:
      out += "(at-most " + std::to_string(c.bound()) + " " + c.id() + ")";
      return;
    case K::All:
      out += "(all " + c.id() + " ";
      render(c.filler(), out);
      out += ")";
      return;
    case K::And:
      out += "(and";
      for (const auto& x : c.conjuncts()) {
        out += " ";
        render(x, out);
      }
      out += ")";
      return;
  }
}

}  // namespace

Concept parse_concept(std::string_view text) {
  auto forms = read_forms(text);
  if (forms.empty())
    throw ParseError("syntax-error", "empty concept",
                     SourceSpan{text.size(), text.size(), 1, 1});
  if (forms.size() > 1)
    fail(forms[1], "syntax-error", "trailing input after concept");
  return to_concept(forms.front());
}

std::vector<Axiom> parse_axioms(std::string_view text) {
  return interpret(read_forms(text), false).axioms;
}

KnowledgeBase parse_kb(std::string_view text) {
  auto forms = interpret(read_forms(text), true);
  KnowledgeBase kb;
  kb.tbox = TBox::validate(std::move(forms.axioms));
  kb.advertisements = std::move(forms.ads);
  return kb;
}

std::string render_concept(const Concept& c) {
  std::string out;
  render(c, out);
  return out;
}

std::string render_axiom(const Axiom& a) {
  if (const auto* d = std::get_if<Definition>(&a))
    return "(define " + d->name + " " + render_concept(d->body) + ")";
  if (const auto* i = std::get_if<Inclusion>(&a))
    return "(primitive " + i->name + " " + render_concept(i->body) + ")";
  const auto& g = std::get<DisjointGroup>(a);
  std::string s = "(disjoint " + g.label;
  for (const auto& n : g.names) s += " " + n;
  return s + ")";
}

std::string render_kb(const KnowledgeBase& kb) {
  std::ostringstream os;
  for (const auto& a : kb.tbox.axioms()) os << render_axiom(a) << "\n";
  for (const auto& ad : kb.advertisements)
    os << "(instance " << ad.id << " " << to_string(ad.side) << " "
       << render_concept(ad.description) << ")\n";
  return os.str();
}

}  // namespace aln
