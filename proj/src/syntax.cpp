#include "yuppie/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>

#include "yuppie/error.hpp"

namespace yuppie {

std::string_view to_string(Level l) {
  switch (l) {
    case Level::Comb:
      return "comb";
    case Level::Alloc:
      return "alloc";
    case Level::Hide:
      return "hide";
    case Level::Chart:
      return "flowchart";
  }
  return "comb";
}

Level level_for_path(std::string_view path) {
  auto ends = [&](std::string_view s) {
    return path.size() >= s.size() && path.substr(path.size() - s.size()) == s;
  };
  if (ends(".pia")) return Level::Alloc;
  if (ends(".chi")) return Level::Hide;
  if (ends(".qfc")) return Level::Chart;
  return Level::Comb;
}

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.has_targs == b.has_targs && a.targs == b.targs &&
         a.has_args == b.has_args && a.args == b.args && a.angle == b.angle &&
         a.annot_level == b.annot_level && a.annot == b.annot;
}

bool operator==(const ChartExpr& a, const ChartExpr& b) {
  return a.kind == b.kind && a.name == b.name && a.vars == b.vars && a.unitary == b.unitary &&
         a.children == b.children;
}

bool operator==(const Definition& a, const Definition& b) {
  return a.name == b.name && a.level == b.level && a.annotated == b.annotated && a.annot == b.annot &&
         a.body == b.body && a.chart == b.chart && a.input == b.input;
}

const Definition* Program::find(std::string_view name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Names

const std::set<std::string, std::less<>> kArrowNames = {"lift",  "arr",   "left", "right", "first", "second",
                                                        "alloc", "inl",   "inr",  "clone", "inhab"};
const std::set<std::string, std::less<>> kHideNames = {"discard", "fst", "snd", "merge", "measure"};

bool is_macro(std::string_view n) {
  const auto& m = macro_names();
  return std::find(m.begin(), m.end(), n) != m.end();
}

bool is_prim(std::string_view n) {
  Prim p;
  return prim_from_name(n, p);
}

bool is_reserved(std::string_view n) {
  return is_prim(n) || is_macro(n) || kArrowNames.count(n) || kHideNames.count(n) || n == "hadamard" ||
         n == "phase" || n == "def" || n == "in" || n == "qbit" || n == "pi";
}

// Identifiers that carry an operator suffix.
bool is_suffixed(std::string_view n) { return is_prim(n) || n == "midswap+" || n == "midswap*"; }

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind { Ident, Number, Sym, End };
  Kind kind;
  std::string text;
  double number = 0.0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t{Token::Kind::End, "", 0.0, line_, col_};
      if (i_ >= s_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\'')) ++j;
        std::string id(s_.substr(i_, j - i_));
        if (j < s_.size() && (s_[j] == '+' || s_[j] == '*') && is_suffixed(id + s_[j])) {
          id += s_[j];
          ++j;
        } else if (starts(j, "\xC3\x97") && is_suffixed(id + '*')) {
          id += '*';
          j += 2;
        }
        advance(j - i_);
        t.kind = id == "_" ? Token::Kind::Sym : Token::Kind::Ident;
        t.text = id;
        out.push_back(t);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
        char* end = nullptr;
        std::string buf(s_.substr(i_, std::min<std::size_t>(64, s_.size() - i_)));
        const double v = std::strtod(buf.c_str(), &end);
        const std::size_t len = static_cast<std::size_t>(end - buf.c_str());
        t.kind = Token::Kind::Number;
        t.text = buf.substr(0, len);
        t.number = v;
        advance(len);
        out.push_back(t);
        continue;
      }
      static const std::pair<const char*, const char*> kSyms[] = {
          {"\xE2\x8A\x95", "(+)"}, {"\xE2\x86\x94", "<->"}, {"\xE2\x86\xA3", ">->"}, {"\xE2\x86\x9D", "~>"},
          {"\xE2\xA8\xBE", ";"},   {"\xC3\x97", "*"},       {"\xCF\x80", "pi"},     {">>>", ">>>"},
          {"***", "***"},          {"+++", "+++"},          {"<->", "<->"},         {">->", ">->"},
          {"(+)", "(+)"},          {"~>", "~>"},            {":=", ":="},           {"*=", "*="},
          {";", ";"},              {"+", "+"},              {"*", "*"},             {"-", "-"},
          {"/", "/"},              {"(", "("},              {")", ")"},             {"[", "["},
          {"]", "]"},              {",", ","},              {":", ":"},             {"=", "="},
      };
      bool matched = false;
      for (const auto& [lit, sym] : kSyms) {
        if (starts(i_, lit)) {
          advance(std::char_traits<char>::length(lit));
          t.kind = std::string_view(sym) == "pi" ? Token::Kind::Ident : Token::Kind::Sym;
          t.text = sym;
          out.push_back(t);
          matched = true;
          break;
        }
      }
      if (!matched) {
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
      }
    }
  }

 private:
  bool starts(std::size_t at, std::string_view lit) const { return s_.substr(at, lit.size()) == lit; }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++i_;
    }
  }

  void skip() {
    while (i_ < s_.size()) {
      const char c = s_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else if (c == '#' || starts(i_, "//")) {
        while (i_ < s_.size() && s_[i_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

int binary_prec(std::string_view op) {
  if (op == ">>>") return 0;
  if (op == "+++") return 1;
  if (op == "***") return 2;
  if (op == ";") return 3;
  if (op == "+") return 4;
  if (op == "*") return 5;
  return -1;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  Program program(Level default_level) {
    Program p;
    while (!at_end()) {
      const Token& kw = peek();
      if (!is_ident("def")) error("expected 'def'");
      next();
      Definition d;
      d.line = kw.line;
      d.column = kw.column;
      const Token& nm = peek();
      if (nm.kind != Token::Kind::Ident) error("expected a definition name");
      if (is_reserved(nm.text)) error("'" + nm.text + "' is a reserved name");
      if (p.find(nm.text)) error("duplicate definition '" + nm.text + "'");
      d.name = nm.text;
      next();
      d.level = default_level;
      if (accept(":")) {
        TypeExpr src = type();
        d.level = arrow_kind();
        TypeExpr tgt = type();
        d.annotated = true;
        d.annot = {src, tgt};
      } else if (is_ident("in")) {
        next();
        d.input = context_sum();
        d.level = Level::Chart;
      }
      expect("=");
      if (d.level == Level::Chart) {
        d.chart = chart();
      } else {
        d.body = expr();
      }
      if (!at_end() && !is_ident("def")) error("unexpected '" + peek().text + "'");
      p.defs.push_back(std::move(d));
    }
    return p;
  }

  Expr whole_expr() {
    Expr e = expr();
    if (!at_end()) error("unexpected '" + peek().text + "'");
    return e;
  }

  TypeExpr whole_type() {
    TypeExpr t = type();
    if (!at_end()) error("unexpected '" + peek().text + "'");
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Sym && peek(k).text == s;
  }
  bool is_ident(std::string_view s) const { return peek().kind == Token::Kind::Ident && peek().text == s; }
  bool accept(std::string_view s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) error("expected '" + std::string(s) + "'");
  }
  [[noreturn]] void error(const std::string& msg) const { error_at(peek(), msg); }
  [[noreturn]] static void error_at(const Token& t, const std::string& msg) {
    throw ParseError(t.kind == Token::Kind::End ? msg + " at end of input" : msg, t.line, t.column);
  }
  std::string ident(const char* what) {
    if (peek().kind != Token::Kind::Ident) error(std::string("expected ") + what);
    return next().text;
  }

  Level arrow_kind() {
    if (accept("<->")) return Level::Comb;
    if (accept(">->")) return Level::Alloc;
    if (accept("~>")) return Level::Hide;
    error("expected '<->', '>->' or '~>'");
  }

  // Types: '+' binds looser than '*'; both left-associative.
  TypeExpr type() {
    TypeExpr t = type_prod();
    while (accept("+")) t = TypeExpr::sum(t, type_prod());
    return t;
  }
  TypeExpr type_prod() {
    TypeExpr t = type_atom();
    while (accept("*")) t = TypeExpr::prod(t, type_atom());
    return t;
  }
  TypeExpr type_atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number && (t.text == "0" || t.text == "1")) {
      next();
      return t.text == "0" ? TypeExpr::zero() : TypeExpr::one();
    }
    if (is_ident("qbit")) {
      next();
      return TypeExpr::sum(TypeExpr::one(), TypeExpr::one());
    }
    if (accept("_")) return TypeExpr::hole();
    if (accept("(")) {
      TypeExpr inner = type();
      expect(")");
      return inner;
    }
    error("expected a type");
  }

  // Numeric expressions inside phase(...) and scale(...).
  double num() {
    double v = num_term();
    for (;;) {
      if (accept("+")) {
        v += num_term();
      } else if (accept("-")) {
        v -= num_term();
      } else {
        return v;
      }
    }
  }
  double num_term() {
    double v = num_factor();
    for (;;) {
      if (accept("*")) {
        v *= num_factor();
      } else if (accept("/")) {
        v /= num_factor();
      } else {
        return v;
      }
    }
  }
  double num_factor() {
    if (accept("-")) return -num_factor();
    if (peek().kind == Token::Kind::Number) return next().number;
    if (is_ident("pi")) {
      next();
      return std::numbers::pi;
    }
    if (accept("(")) {
      const double v = num();
      expect(")");
      return v;
    }
    error("expected a number");
  }

  bool starts_primary() const {
    return peek().kind == Token::Kind::Ident || is_sym("(");
  }

  Expr expr(int min_prec = 0) {
    Expr lhs = primary();
    for (;;) {
      const Token& op = peek();
      if (op.kind != Token::Kind::Sym) return lhs;
      const int p = binary_prec(op.text);
      if (p < 0 || p < min_prec) return lhs;
      next();
      if (!starts_primary()) error_at(op, "expected an expression after '" + op.text + "'");
      Expr rhs = expr(p + 1);
      Expr b;
      b.kind = Expr::Kind::Binary;
      b.name = op.text;
      b.args = {std::move(lhs), std::move(rhs)};
      b.line = op.line;
      b.column = op.column;
      lhs = std::move(b);
    }
  }

  Expr primary() {
    const Token& t = peek();
    if (accept("(")) {
      Expr inner = expr();
      if (accept(":")) {
        Expr a;
        a.kind = Expr::Kind::Annot;
        TypeExpr src = type();
        a.annot_level = arrow_kind();
        TypeExpr tgt = type();
        a.annot = {src, tgt};
        a.args = {std::move(inner)};
        a.line = t.line;
        a.column = t.column;
        inner = std::move(a);
      }
      expect(")");
      return inner;
    }
    if (t.kind != Token::Kind::Ident || t.text == "def") error("expected an expression");
    next();
    Expr e;
    e.line = t.line;
    e.column = t.column;
    if (t.text == "phase") {
      e.kind = Expr::Kind::Phase;
      e.name = "phase";
      expect("(");
      e.angle = num();
      expect(")");
      return e;
    }
    e.kind = Expr::Kind::Name;
    e.name = t.text;
    if (accept("[")) {
      e.has_targs = true;
      if (!is_sym("]")) {
        e.targs.push_back(type());
        while (accept(",")) e.targs.push_back(type());
      }
      expect("]");
    }
    if (accept("(")) {
      e.has_args = true;
      bool first = true;
      if (t.text == "scale") {
        e.angle = num();
        first = false;
      }
      if (!is_sym(")")) {
        if (!first) expect(",");
        e.args.push_back(expr());
        while (accept(",")) e.args.push_back(expr());
      }
      expect(")");
    }
    return e;
  }

  // Context sums: [q, r] + [q] + 0
  ContextSum context_sum() {
    ContextSum c = context_atom();
    while (accept("+")) c = ContextSum::plus(c, context_atom());
    return c;
  }
  ContextSum context_atom() {
    if (peek().kind == Token::Kind::Number && peek().text == "0") {
      next();
      return ContextSum::zero();
    }
    if (accept("(")) {
      ContextSum c = context_sum();
      expect(")");
      return c;
    }
    expect("[");
    std::vector<std::string> names;
    if (!is_sym("]")) {
      names.push_back(ident("a variable"));
      while (accept(",")) names.push_back(ident("a variable"));
    }
    expect("]");
    return ContextSum::ctx(std::move(names));
  }

  ChartExpr chart() {
    ChartExpr c = chart_branch();
    while (is_sym(";")) {
      const Token& op = next();
      ChartExpr r = chart_branch();
      c = combine(FlowChart::Kind::Seq, std::move(c), std::move(r), op);
    }
    return c;
  }
  ChartExpr chart_branch() {
    ChartExpr c = chart_atom();
    while (is_sym("(+)")) {
      const Token& op = next();
      ChartExpr r = chart_atom();
      c = combine(FlowChart::Kind::Branch, std::move(c), std::move(r), op);
    }
    return c;
  }
  static ChartExpr combine(FlowChart::Kind k, ChartExpr a, ChartExpr b, const Token& op) {
    ChartExpr c;
    c.kind = k;
    c.children = {std::move(a), std::move(b)};
    c.line = op.line;
    c.column = op.column;
    return c;
  }
  ChartExpr chart_atom() {
    const Token& t = peek();
    if (accept("(")) {
      ChartExpr c = chart();
      expect(")");
      return c;
    }
    ChartExpr c;
    c.line = t.line;
    c.column = t.column;
    if (t.kind != Token::Kind::Ident || t.text == "def") error("expected a flowchart command");
    if (t.text == "new") {
      next();
      if (!is_ident("qbit")) error("expected 'qbit'");
      next();
      c.kind = FlowChart::Kind::NewQbit;
      c.name = ident("a variable");
      if (accept(":=")) {
        if (!(peek().kind == Token::Kind::Number && peek().text == "0")) error("qubits are initialised to 0");
        next();
      }
    } else if (t.text == "discard" || t.text == "measure") {
      next();
      c.kind = t.text == "discard" ? FlowChart::Kind::Discard : FlowChart::Kind::Measure;
      c.name = ident("a variable");
    } else if (t.text == "initial" || t.text == "merge") {
      next();
      c.kind = t.text == "initial" ? FlowChart::Kind::Initial : FlowChart::Kind::Merge;
    } else if (t.text == "permute") {
      next();
      c.kind = FlowChart::Kind::Permute;
      while (peek().kind == Token::Kind::Ident && peek().text != "def") c.vars.push_back(next().text);
    } else {
      c.kind = FlowChart::Kind::Apply;
      c.vars.push_back(ident("a variable"));
      while (accept(",")) c.vars.push_back(ident("a variable"));
      expect("*=");
      if (!starts_primary()) error("expected a unitary");
      c.unitary.push_back(primary());
    }
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view arrow_symbol(Level l) {
  switch (l) {
    case Level::Alloc:
      return ">->";
    case Level::Hide:
      return "~>";
    default:
      return "<->";
  }
}

int expr_prec(const Expr& e) { return e.kind == Expr::Kind::Binary ? binary_prec(e.name) : 10; }

void render(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::Phase:
      out += "phase(" + fmt_double(e.angle.value_or(0.0)) + ")";
      return;
    case Expr::Kind::Annot:
      out += '(';
      render(e.args[0], out);
      out += " : " + e.annot[0].to_string() + " " + std::string(arrow_symbol(e.annot_level)) + " " +
             e.annot[1].to_string() + ")";
      return;
    case Expr::Kind::Name: {
      out += e.name;
      if (e.has_targs) {
        out += '[';
        for (std::size_t i = 0; i < e.targs.size(); ++i) {
          if (i) out += ", ";
          out += e.targs[i].to_string();
        }
        out += ']';
      }
      if (e.has_args) {
        out += '(';
        bool first = true;
        if (e.angle) {
          out += fmt_double(*e.angle);
          first = false;
        }
        for (const auto& a : e.args) {
          if (!first) out += ", ";
          first = false;
          render(a, out);
        }
        out += ')';
      }
      return;
    }
    case Expr::Kind::Binary: {
      const int p = binary_prec(e.name);
      const bool lp = expr_prec(e.args[0]) < p;
      const bool rp = expr_prec(e.args[1]) <= p;
      if (lp) out += '(';
      render(e.args[0], out);
      if (lp) out += ')';
      out += " " + e.name + " ";
      if (rp) out += '(';
      render(e.args[1], out);
      if (rp) out += ')';
      return;
    }
  }
}

int chart_level(const ChartExpr& c) {
  switch (c.kind) {
    case FlowChart::Kind::Seq:
      return 0;
    case FlowChart::Kind::Branch:
      return 1;
    default:
      return 2;
  }
}

void render(const ChartExpr& c, std::string& out) {
  switch (c.kind) {
    case FlowChart::Kind::NewQbit:
      out += "new qbit " + c.name + " := 0";
      return;
    case FlowChart::Kind::Discard:
      out += "discard " + c.name;
      return;
    case FlowChart::Kind::Measure:
      out += "measure " + c.name;
      return;
    case FlowChart::Kind::Initial:
      out += "initial";
      return;
    case FlowChart::Kind::Merge:
      out += "merge";
      return;
    case FlowChart::Kind::Permute:
      out += "permute";
      for (const auto& v : c.vars) out += " " + v;
      return;
    case FlowChart::Kind::Apply: {
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        if (i) out += ", ";
        out += c.vars[i];
      }
      out += " *= ";
      const Expr& u = c.unitary.at(0);
      const bool wrap = u.kind == Expr::Kind::Binary;
      if (wrap) out += '(';
      render(u, out);
      if (wrap) out += ')';
      return;
    }
    case FlowChart::Kind::Seq:
    case FlowChart::Kind::Branch: {
      const int p = chart_level(c);
      const bool lp = chart_level(c.children[0]) < p;
      const bool rp = chart_level(c.children[1]) <= p;
      if (lp) out += '(';
      render(c.children[0], out);
      if (lp) out += ')';
      out += p == 0 ? "; " : " (+) ";
      if (rp) out += '(';
      render(c.children[1], out);
      if (rp) out += ')';
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Elaboration

struct Node {
  enum class Op {
    Comb, Arr, Lift, Compose, Prod, Sum, Left, Right, First, Second,
    Alloc, Inl, Inr, Clone, Inhab, Discard, Fst, Snd, Merge, Measure,
  };
  Op op;
  int level;
  std::vector<TypeExpr> params;
  std::vector<Node> kids;
  std::optional<ElabComb> comb;
  TypeExpr source;
  TypeExpr target;
};

int level_index(Level l) {
  switch (l) {
    case Level::Comb:
      return 0;
    case Level::Alloc:
      return 1;
    case Level::Hide:
      return 2;
    case Level::Chart:
      break;
  }
  fail(ErrorKind::TypeMismatch, "a flowchart is not a term");
}

const char* level_noun(int l) {
  switch (l) {
    case 0:
      return "combinator";
    case 1:
      return "allocation arrow";
    default:
      return "hiding arrow";
  }
}

class Elaborator {
 public:
  explicit Elaborator(const Program& p) : prog_(p) {}

  Unifier& unifier() { return u_; }
  void enter(const std::string& name) { stack_.push_back(name); }

  Term term(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Phase:
        return Term::phase(*e.angle);
      case Expr::Kind::Binary: {
        if (e.name == ";") return Term::seq(term(e.args[0]), term(e.args[1]));
        if (e.name == "+") return Term::sum(term(e.args[0]), term(e.args[1]));
        if (e.name == "*") return Term::prod(term(e.args[0]), term(e.args[1]));
        fail(ErrorKind::TypeMismatch, "'" + e.name + "' combines arrows, but a combinator is expected");
      }
      case Expr::Kind::Annot:
        if (e.annot_level != Level::Comb) {
          fail(ErrorKind::TypeMismatch, "an arrow annotation where a combinator is expected");
        }
        return Term::annot(term(e.args[0]), e.annot[0], e.annot[1]);
      case Expr::Kind::Name:
        break;
    }
    const std::string& n = e.name;
    Prim p;
    if (prim_from_name(n, p)) {
      if (e.has_args) fail(ErrorKind::ArityError, n + " takes no arguments");
      if (e.has_targs && e.targs.size() != prim_arity(p)) {
        fail(ErrorKind::ArityError, n + " takes " + std::to_string(prim_arity(p)) + " type parameter(s)");
      }
      return Term::prim(p, e.has_targs ? e.targs : std::vector<TypeExpr>{});
    }
    if (n == "hadamard") {
      if (e.has_args || e.has_targs) fail(ErrorKind::ArityError, "hadamard takes no arguments");
      return Term::hadamard();
    }
    if (is_macro(n)) {
      std::vector<MacroArg> args;
      if (e.angle) args.emplace_back(*e.angle);
      for (const auto& t : e.targs) args.emplace_back(t);
      for (const auto& a : e.args) args.emplace_back(term(a));
      return Term::macro(n, std::move(args));
    }
    if (kArrowNames.count(n) || kHideNames.count(n)) {
      fail(ErrorKind::TypeMismatch, "'" + n + "' is an arrow, but a combinator is expected");
    }
    const Definition& d = lookup(e);
    if (d.annotated && d.level != Level::Comb) {
      fail(ErrorKind::TypeMismatch, "'" + n + "' is a " + level_noun(level_index(d.level)) +
                                        ", but a combinator is expected");
    }
    enter(n);
    Term t = term(*d.body);
    stack_.pop_back();
    return d.annotated ? Term::annot(t, d.annot[0], d.annot[1]) : t;
  }

  Node node(const Expr& e, int level) {
    if (level == 0) return comb_node(term(e));
    switch (e.kind) {
      case Expr::Kind::Phase:
        return lift_to(comb_node(term(e)), level);
      case Expr::Kind::Annot: {
        const int l = level_index(e.annot_level);
        if (l > level) {
          fail(ErrorKind::TypeMismatch, std::string("a ") + level_noun(l) + " where a " + level_noun(level) +
                                            " is expected");
        }
        if (l == 0) return lift_to(comb_node(term(e)), level);
        Node n = node(e.args[0], l);
        u_.unify(n.source, u_.instantiate(e.annot[0]), "annotation (source)");
        u_.unify(n.target, u_.instantiate(e.annot[1]), "annotation (target)");
        return lift_to(std::move(n), level);
      }
      case Expr::Kind::Binary: {
        if (e.name == ";" || e.name == "+" || e.name == "*") return lift_to(comb_node(term(e)), level);
        Node a = node(e.args[0], level);
        Node b = node(e.args[1], level);
        if (e.name == ">>>") {
          u_.unify(a.target, b.source, "arrow composition");
          TypeExpr s = a.source, t = b.target;
          return make(Node::Op::Compose, level, {}, {std::move(a), std::move(b)}, s, t);
        }
        const bool sum = e.name == "+++";
        auto par = sum ? TypeExpr::sum : TypeExpr::prod;
        TypeExpr s = par(a.source, b.source), t = par(a.target, b.target);
        return make(sum ? Node::Op::Sum : Node::Op::Prod, level, {}, {std::move(a), std::move(b)}, s, t);
      }
      case Expr::Kind::Name:
        break;
    }
    const std::string& n = e.name;
    if (is_prim(n) || is_macro(n) || n == "hadamard") return lift_to(comb_node(term(e)), level);
    if (n == "lift" || n == "arr") {
      one_arg(e);
      no_targs(e);
      Node k = node(e.args[0], level - 1);
      if (n == "arr") {
        TypeExpr s = k.source, t = k.target;
        return make(Node::Op::Arr, level, {}, {std::move(k)}, s, t);
      }
      if (level == 1) {
        TypeExpr a = u_.fresh(), h = u_.fresh();
        u_.unify(k.source, TypeExpr::sum(a, h), "lift (the source must be a sum with the heap on the right)");
        TypeExpr t = k.target;
        return make(Node::Op::Lift, level, {}, {std::move(k)}, a, t);
      }
      TypeExpr b = u_.fresh(), g = u_.fresh();
      u_.unify(k.target, TypeExpr::prod(b, g), "lift (the target must be a product with the garbage on the right)");
      TypeExpr s = k.source;
      return make(Node::Op::Lift, level, {}, {std::move(k)}, s, b);
    }
    if (n == "left" || n == "right" || n == "first" || n == "second") {
      one_arg(e);
      TypeExpr b = params(e, 1)[0];
      Node k = node(e.args[0], level);
      const bool sum = n == "left" || n == "right";
      const bool on_left = n == "left" || n == "first";
      auto par = sum ? TypeExpr::sum : TypeExpr::prod;
      TypeExpr s = on_left ? par(k.source, b) : par(b, k.source);
      TypeExpr t = on_left ? par(k.target, b) : par(b, k.target);
      const Node::Op op = n == "left" ? Node::Op::Left
                          : n == "right" ? Node::Op::Right
                          : n == "first" ? Node::Op::First
                                         : Node::Op::Second;
      return make(op, level, {b}, {std::move(k)}, s, t);
    }
    if (kArrowNames.count(n)) {
      no_args(e);
      Node prim = alloc_prim(e);
      return lift_to(std::move(prim), level);
    }
    if (kHideNames.count(n)) {
      if (level != 2) fail(ErrorKind::TypeMismatch, "'" + n + "' is only available in hiding arrows");
      no_args(e);
      return hide_prim(e);
    }
    const Definition& d = lookup(e);
    int l = level;
    if (d.annotated) {
      l = level_index(d.level);
      if (l > level) {
        fail(ErrorKind::TypeMismatch, "'" + n + "' is a " + level_noun(l) + ", but a " + level_noun(level) +
                                          " is expected");
      }
    }
    enter(n);
    Node k = node(*d.body, l);
    stack_.pop_back();
    if (d.annotated) {
      u_.unify(k.source, u_.instantiate(d.annot[0]), "annotation of '" + n + "' (source)");
      u_.unify(k.target, u_.instantiate(d.annot[1]), "annotation of '" + n + "' (target)");
    }
    return lift_to(std::move(k), level);
  }

  Comb build_comb(const Node& n) const { return build(*n.comb, u_); }

  ArrowA build_a(const Node& n) const {
    switch (n.op) {
      case Node::Op::Arr:
        return arr_a(build_comb(n.kids[0]));
      case Node::Op::Lift:
        return lift_a(build_comb(n.kids[0]));
      case Node::Op::Compose:
        return compose_a(build_a(n.kids[0]), build_a(n.kids[1]));
      case Node::Op::Prod:
        return prod_a(build_a(n.kids[0]), build_a(n.kids[1]));
      case Node::Op::Sum:
        return sum_a(build_a(n.kids[0]), build_a(n.kids[1]));
      case Node::Op::Left:
        return left_a(build_a(n.kids[0]), param(n, 0));
      case Node::Op::Right:
        return right_a(param(n, 0), build_a(n.kids[0]));
      case Node::Op::First:
        return first_a(build_a(n.kids[0]), param(n, 0));
      case Node::Op::Second:
        return second_a(param(n, 0), build_a(n.kids[0]));
      case Node::Op::Alloc:
        return alloc_a(param(n, 0));
      case Node::Op::Inl:
        return inl_a(param(n, 0), param(n, 1));
      case Node::Op::Inr:
        return inr_a(param(n, 0), param(n, 1));
      case Node::Op::Clone:
        return clone_a(param(n, 0));
      case Node::Op::Inhab:
        return inhab_a(param(n, 0));
      default:
        break;
    }
    fail(ErrorKind::IllTyped, "not an allocation arrow");
  }

  ArrowChi build_chi(const Node& n) const {
    switch (n.op) {
      case Node::Op::Arr:
        return arr_chi(build_a(n.kids[0]));
      case Node::Op::Lift:
        return lift_chi(build_a(n.kids[0]));
      case Node::Op::Compose:
        return compose_chi(build_chi(n.kids[0]), build_chi(n.kids[1]));
      case Node::Op::Prod:
        return prod_chi(build_chi(n.kids[0]), build_chi(n.kids[1]));
      case Node::Op::Sum:
        return sum_chi(build_chi(n.kids[0]), build_chi(n.kids[1]));
      case Node::Op::Left:
        return left_chi(build_chi(n.kids[0]), param(n, 0));
      case Node::Op::Right:
        return right_chi(param(n, 0), build_chi(n.kids[0]));
      case Node::Op::First:
        return first_chi(build_chi(n.kids[0]), param(n, 0));
      case Node::Op::Second:
        return second_chi(param(n, 0), build_chi(n.kids[0]));
      case Node::Op::Discard:
        return discard_chi(param(n, 0));
      case Node::Op::Fst:
        return fst_chi(param(n, 0), param(n, 1));
      case Node::Op::Snd:
        return snd_chi(param(n, 0), param(n, 1));
      case Node::Op::Merge:
        return merge_chi(param(n, 0));
      case Node::Op::Measure:
        return measure_chi(param(n, 0));
      default:
        break;
    }
    fail(ErrorKind::IllTyped, "not a hiding arrow");
  }

 private:
  static Node make(Node::Op op, int level, std::vector<TypeExpr> params, std::vector<Node> kids, TypeExpr s,
                   TypeExpr t) {
    return Node{op, level, std::move(params), std::move(kids), std::nullopt, std::move(s), std::move(t)};
  }

  Node comb_node(const Term& t) {
    ElabComb e = infer(t, u_);
    TypeExpr s = e.source, tg = e.target;
    Node n = make(Node::Op::Comb, 0, {}, {}, s, tg);
    n.comb = std::move(e);
    return n;
  }

  static Node lift_to(Node n, int level) {
    while (n.level < level) {
      TypeExpr s = n.source, t = n.target;
      const int l = n.level + 1;
      n = make(Node::Op::Arr, l, {}, {std::move(n)}, s, t);
    }
    return n;
  }

  static void one_arg(const Expr& e) {
    if (!e.has_args || e.args.size() != 1 || e.angle) {
      fail(ErrorKind::ArityError, e.name + " takes exactly one argument");
    }
  }
  static void no_args(const Expr& e) {
    if (e.has_args) fail(ErrorKind::ArityError, e.name + " takes type parameters only");
  }
  static void no_targs(const Expr& e) {
    if (e.has_targs) fail(ErrorKind::ArityError, e.name + " takes no type parameters");
  }

  std::vector<TypeExpr> params(const Expr& e, std::size_t n) {
    std::vector<TypeExpr> out;
    if (e.has_targs) {
      if (e.targs.size() != n) {
        fail(ErrorKind::ArityError, e.name + " takes " + std::to_string(n) + " type parameter(s)");
      }
      for (const auto& t : e.targs) out.push_back(u_.instantiate(t));
    } else {
      for (std::size_t i = 0; i < n; ++i) out.push_back(u_.fresh());
    }
    return out;
  }

  Node alloc_prim(const Expr& e) {
    const std::string& n = e.name;
    if (n == "alloc") {
      auto p = params(e, 1);
      return make(Node::Op::Alloc, 1, p, {}, TypeExpr::zero(), p[0]);
    }
    if (n == "inl" || n == "inr") {
      auto p = params(e, 2);
      TypeExpr s = n == "inl" ? p[0] : p[1];
      return make(n == "inl" ? Node::Op::Inl : Node::Op::Inr, 1, p, {}, s, TypeExpr::sum(p[0], p[1]));
    }
    if (n == "clone") {
      auto p = params(e, 1);
      return make(Node::Op::Clone, 1, p, {}, p[0], TypeExpr::prod(p[0], p[0]));
    }
    if (n == "inhab") {
      auto p = params(e, 1);
      return make(Node::Op::Inhab, 1, p, {}, TypeExpr::one(), p[0]);
    }
    fail(ErrorKind::ArityError, n + " needs an argument");
  }

  Node hide_prim(const Expr& e) {
    const std::string& n = e.name;
    if (n == "discard") {
      auto p = params(e, 1);
      return make(Node::Op::Discard, 2, p, {}, p[0], TypeExpr::one());
    }
    if (n == "fst" || n == "snd") {
      auto p = params(e, 2);
      TypeExpr t = n == "fst" ? p[0] : p[1];
      return make(n == "fst" ? Node::Op::Fst : Node::Op::Snd, 2, p, {}, TypeExpr::prod(p[0], p[1]), t);
    }
    if (n == "merge") {
      auto p = params(e, 1);
      return make(Node::Op::Merge, 2, p, {}, TypeExpr::sum(p[0], p[0]), p[0]);
    }
    auto p = params(e, 1);
    return make(Node::Op::Measure, 2, p, {}, p[0], p[0]);
  }

  BaseType param(const Node& n, std::size_t i) const {
    return u_.resolve(n.params.at(i), "a type parameter");
  }

  const Definition& lookup(const Expr& e) {
    const Definition* d = prog_.find(e.name);
    if (!d) fail(ErrorKind::UnknownDefinition, "unknown name '" + e.name + "'");
    if (e.has_args || e.has_targs) fail(ErrorKind::ArityError, "definition '" + e.name + "' takes no arguments");
    if (std::find(stack_.begin(), stack_.end(), e.name) != stack_.end()) {
      fail(ErrorKind::RecursiveDefinition, "definition '" + e.name + "' refers to itself");
    }
    if (d->level == Level::Chart) {
      fail(ErrorKind::TypeMismatch, "'" + e.name + "' is a flowchart, not a term");
    }
    return *d;
  }

  const Program& prog_;
  Unifier u_;
  std::vector<std::string> stack_;
};

Value elaborate_in(Elaborator& el, const Expr& e, Level level,
                   const std::optional<std::pair<TypeExpr, TypeExpr>>& expected) {
  const int l = level_index(level);
  Node n = el.node(e, l);
  if (expected) {
    el.unifier().unify(n.source, el.unifier().instantiate(expected->first), "expected type (source)");
    el.unifier().unify(n.target, el.unifier().instantiate(expected->second), "expected type (target)");
  }
  switch (l) {
    case 0:
      return el.build_comb(n);
    case 1:
      return el.build_a(n);
    default:
      return el.build_chi(n);
  }
}

FlowChart build_chart(const ChartExpr& c, const Program& p) {
  switch (c.kind) {
    case FlowChart::Kind::NewQbit:
      return FlowChart::new_qbit(c.name);
    case FlowChart::Kind::Discard:
      return FlowChart::discard(c.name);
    case FlowChart::Kind::Measure:
      return FlowChart::measure(c.name);
    case FlowChart::Kind::Initial:
      return FlowChart::initial();
    case FlowChart::Kind::Merge:
      return FlowChart::merge();
    case FlowChart::Kind::Permute:
      return FlowChart::permute(c.vars);
    case FlowChart::Kind::Apply: {
      const TypeExpr q = TypeExpr::from(qbit_power(c.vars.size()));
      Comb u = std::get<Comb>(elaborate_expr(c.unitary.at(0), Level::Comb, p, std::make_pair(q, q)));
      return FlowChart::apply(c.vars, std::move(u));
    }
    case FlowChart::Kind::Seq:
      return FlowChart::seq(build_chart(c.children[0], p), build_chart(c.children[1], p));
    case FlowChart::Kind::Branch:
      return FlowChart::branch(build_chart(c.children[0], p), build_chart(c.children[1], p));
  }
  fail(ErrorKind::IllTyped, "unknown command");
}

}  // namespace

Program parse_program(std::string_view text, Level default_level) { return Parser(text).program(default_level); }
Expr parse_expr(std::string_view text) { return Parser(text).whole_expr(); }
TypeExpr parse_type(std::string_view text) { return Parser(text).whole_type(); }

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

std::string to_string(const ChartExpr& c) {
  std::string out;
  render(c, out);
  return out;
}

std::string to_string(const Program& p) {
  std::string out;
  for (const auto& d : p.defs) {
    out += "def " + d.name;
    if (d.annotated) {
      out += " : " + d.annot[0].to_string() + " " + std::string(arrow_symbol(d.level)) + " " +
             d.annot[1].to_string();
    } else if (d.input) {
      out += " in " + d.input->to_string();
    }
    out += " = ";
    out += d.chart ? to_string(*d.chart) : to_string(*d.body);
    out += "\n";
  }
  return out;
}

const Definition& default_definition(const Program& p) {
  if (p.defs.empty()) fail(ErrorKind::UnknownDefinition, "the program has no definitions");
  return p.defs.back();
}

Value elaborate_expr(const Expr& e, Level level, const Program& p,
                     const std::optional<std::pair<TypeExpr, TypeExpr>>& expected) {
  Elaborator el(p);
  return elaborate_in(el, e, level, expected);
}

Value elaborate_definition(const Program& p, std::string_view name) {
  const Definition* d = p.find(name);
  if (!d) fail(ErrorKind::UnknownDefinition, "unknown definition '" + std::string(name) + "'");
  try {
    if (d->level == Level::Chart) {
      FlowChart fc = build_chart(*d->chart, p);
      ContextSum in = d->input.value_or(ContextSum::zero());
      ContextSum out = check_flowchart(fc, in);
      return ChartValue{std::move(fc), std::move(in), std::move(out)};
    }
    Elaborator el(p);
    el.enter(d->name);
    std::optional<std::pair<TypeExpr, TypeExpr>> expected;
    if (d->annotated) expected = std::make_pair(d->annot[0], d->annot[1]);
    return elaborate_in(el, *d->body, d->level, expected);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw Error(err.kind(), "in definition '" + d->name + "': " + err.what());
  }
}

Comb parse_comb(std::string_view text) { return std::get<Comb>(elaborate_expr(parse_expr(text), Level::Comb)); }

ArrowA parse_arrow_a(std::string_view text) {
  return std::get<ArrowA>(elaborate_expr(parse_expr(text), Level::Alloc));
}

ArrowChi parse_arrow_chi(std::string_view text) {
  return std::get<ArrowChi>(elaborate_expr(parse_expr(text), Level::Hide));
}

Comb as_comb(const Value& v) {
  if (const auto* c = std::get_if<Comb>(&v)) return *c;
  fail(ErrorKind::TypeMismatch, "expected a combinator");
}

ArrowA as_arrow_a(const Value& v) {
  if (const auto* c = std::get_if<Comb>(&v)) return arr_a(*c);
  if (const auto* a = std::get_if<ArrowA>(&v)) return *a;
  fail(ErrorKind::TypeMismatch, "expected an allocation arrow or a combinator");
}

ArrowChi as_arrow_chi(const Value& v) {
  if (const auto* c = std::get_if<Comb>(&v)) return pure_chi(*c);
  if (const auto* a = std::get_if<ArrowA>(&v)) return arr_chi(*a);
  if (const auto* h = std::get_if<ArrowChi>(&v)) return *h;
  fail(ErrorKind::TypeMismatch, "a flowchart is not an arrow; translate it first");
}

}  // namespace yuppie
