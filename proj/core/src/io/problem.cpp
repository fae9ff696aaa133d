#include "kcert/io/problem.hpp"

namespace kcert::io {

using fittings::FitIndex;
using logic::ModalFormula;

namespace {

[[noreturn]] void fail(const Sexpr& e, const std::string& what) { throw ParseError(e.pos, what); }

const std::string& symbol_arg(const Sexpr& e, std::size_t i) {
  const Sexpr& a = e.items[i];
  if (a.kind != Sexpr::Kind::Symbol) fail(a, "expected a symbol");
  return a.text;
}

void expect_arity(const Sexpr& e, std::size_t n, const char* form) {
  if (e.items.size() != n + 1) {
    fail(e, std::string("'") + form + "' expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
  }
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

ModalFormula parse_formula(const Sexpr& e) {
  if (e.kind != Sexpr::Kind::List || e.items.empty() || e.items.front().kind != Sexpr::Kind::Symbol)
    fail(e, "expected a formula");
  const std::string& head = e.items.front().text;
  if (head == "+" || head == "-") {
    expect_arity(e, 1, head.c_str());
    const std::string& p = symbol_arg(e, 1);
    return head == "+" ? ModalFormula::pos(p) : ModalFormula::neg(p);
  }
  if (head == "and" || head == "or") {
    expect_arity(e, 2, head.c_str());
    auto l = parse_formula(e.items[1]);
    auto r = parse_formula(e.items[2]);
    return head == "and" ? ModalFormula::conj(std::move(l), std::move(r))
                         : ModalFormula::disj(std::move(l), std::move(r));
  }
  if (head == "box" || head == "dia") {
    expect_arity(e, 1, head.c_str());
    auto b = parse_formula(e.items[1]);
    return head == "box" ? ModalFormula::box(std::move(b)) : ModalFormula::dia(std::move(b));
  }
  fail(e.items.front(), "unknown connective '" + head + "'");
}

ModalFormula parse_formula(std::string_view text) { return parse_formula(parse_sexpr(text)); }

FitIndex parse_index(const Sexpr& e) {
  if (e.is_symbol("eind")) return FitIndex::eind();
  if (e.is_symbol("none")) return FitIndex::none();
  if (e.is_form("lind") || e.is_form("rind")) {
    expect_arity(e, 1, e.items.front().text.c_str());
    auto i = parse_index(e.items[1]);
    return e.is_form("lind") ? FitIndex::lind(std::move(i)) : FitIndex::rind(std::move(i));
  }
  if (e.is_form("bind")) {
    expect_arity(e, 2, "bind");
    return FitIndex::bind(parse_index(e.items[1]), parse_index(e.items[2]));
  }
  fail(e, "expected an index");
}

FitIndex parse_index(std::string_view text) { return parse_index(parse_sexpr(text)); }

fittings::DecTree parse_dectree(const Sexpr& e) {
  if (!e.is_form("dt")) fail(e, "expected (dt ...)");
  expect_arity(e, 3, "dt");
  const Sexpr& kids = e.items[3];
  if (kids.kind != Sexpr::Kind::List) fail(kids, "expected a list of subtrees");
  if (kids.items.size() > 2) fail(kids, "a decide tree node has at most two subtrees");
  std::vector<fittings::DecTree> children;
  for (const auto& k : kids.items) children.push_back(parse_dectree(k));
  return fittings::dt(parse_index(e.items[1]), parse_index(e.items[2]), std::move(children));
}

Certificate parse_certificate(const Sexpr& e) {
  if (e.is_form("fittings")) {
    expect_arity(e, 1, "fittings");
    return parse_dectree(e.items[1]);
  }
  if (e.is_form("simpfit")) {
    expect_arity(e, 2, "simpfit");
    const Sexpr& cls = e.items[1];
    const Sexpr& bis = e.items[2];
    if (!cls.is_form("closures")) fail(cls, "expected (closures ...)");
    if (!bis.is_form("boxinfos")) fail(bis, "expected (boxinfos ...)");
    simpfit::Evidence ev;
    for (std::size_t i = 1; i < cls.items.size(); ++i) {
      const Sexpr& c = cls.items[i];
      if (!c.is_form("cl")) fail(c, "expected (cl <index> <index>)");
      expect_arity(c, 2, "cl");
      ev.closures.push_back({parse_index(c.items[1]), parse_index(c.items[2])});
    }
    for (std::size_t i = 1; i < bis.items.size(); ++i) {
      const Sexpr& b = bis.items[i];
      if (!b.is_form("bi")) fail(b, "expected (bi <index> <index>)");
      expect_arity(b, 2, "bi");
      ev.boxinfos.push_back({parse_index(b.items[1]), parse_index(b.items[2])});
    }
    return ev;
  }
  fail(e, "expected (fittings ...) or (simpfit ...)");
}

Problem parse_problem(std::string_view text) {
  const Sexpr e = parse_sexpr(text);
  if (!e.is_form("problem")) fail(e, "expected (problem ...)");
  expect_arity(e, 3, "problem");
  if (e.items[1].kind != Sexpr::Kind::String) fail(e.items[1], "expected the problem name as a string");
  return Problem{e.items[1].text, parse_formula(e.items[2]), parse_certificate(e.items[3])};
}

std::string print_dectree(const fittings::DecTree& t, int indent) {
  std::string out = pad(indent) + "(dt " + to_string(t->decide_on) + " " + to_string(t->aux) + " (";
  for (const auto& c : t->children) out += "\n" + print_dectree(c, indent + 2);
  return out + "))";
}

std::string print_certificate(const Certificate& c, int indent) {
  if (const auto* t = std::get_if<fittings::DecTree>(&c)) {
    return pad(indent) + "(fittings\n" + print_dectree(*t, indent + 2) + ")";
  }
  const auto& ev = std::get<simpfit::Evidence>(c);
  std::string out = pad(indent) + "(simpfit\n" + pad(indent + 2) + "(closures";
  for (const auto& cl : ev.closures)
    out += "\n" + pad(indent + 4) + "(cl " + to_string(cl.a) + " " + to_string(cl.b) + ")";
  out += ")\n" + pad(indent + 2) + "(boxinfos";
  for (const auto& bi : ev.boxinfos)
    out += "\n" + pad(indent + 4) + "(bi " + to_string(bi.ex) + " " + to_string(bi.univ) + ")";
  return out + "))";
}

std::string print_problem(const Problem& p) {
  return "(problem " + quote(p.name) + "\n  " + logic::to_string(p.theorem) + "\n" +
         print_certificate(p.certificate, 2) + ")\n";
}

}  // namespace kcert::io
