#include "yuppie/term.hpp"

#include <cmath>
#include <numbers>

#include "yuppie/error.hpp"

namespace yuppie {

// ---------------------------------------------------------------------------
// TypeExpr

struct TypeExpr::Node {
  Kind kind;
  TypeExpr left;
  TypeExpr right;
  std::size_t id = 0;
};

TypeExpr TypeExpr::zero() {
  static const TypeExpr t(std::make_shared<const Node>(Node{Kind::Zero, TypeExpr(nullptr), TypeExpr(nullptr)}));
  return t;
}

TypeExpr TypeExpr::one() {
  static const TypeExpr t(std::make_shared<const Node>(Node{Kind::One, TypeExpr(nullptr), TypeExpr(nullptr)}));
  return t;
}

TypeExpr TypeExpr::sum(TypeExpr a, TypeExpr b) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Sum, std::move(a), std::move(b)}));
}

TypeExpr TypeExpr::prod(TypeExpr a, TypeExpr b) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Prod, std::move(a), std::move(b)}));
}

TypeExpr TypeExpr::hole() {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Hole, TypeExpr(nullptr), TypeExpr(nullptr)}));
}

TypeExpr TypeExpr::var(std::size_t id) {
  return TypeExpr(std::make_shared<const Node>(Node{Kind::Var, TypeExpr(nullptr), TypeExpr(nullptr), id}));
}

TypeExpr TypeExpr::from(const BaseType& t) {
  switch (t.kind()) {
    case BaseType::Kind::Zero:
      return zero();
    case BaseType::Kind::One:
      return one();
    case BaseType::Kind::Sum:
      return sum(from(t.left()), from(t.right()));
    case BaseType::Kind::Prod:
      return prod(from(t.left()), from(t.right()));
  }
  return zero();
}

TypeExpr::Kind TypeExpr::kind() const { return node_->kind; }
const TypeExpr& TypeExpr::left() const { return node_->left; }
const TypeExpr& TypeExpr::right() const { return node_->right; }
std::size_t TypeExpr::var_id() const { return node_->id; }

std::optional<BaseType> TypeExpr::concrete() const {
  switch (kind()) {
    case Kind::Zero:
      return BaseType::zero();
    case Kind::One:
      return BaseType::one();
    case Kind::Sum:
    case Kind::Prod: {
      auto l = left().concrete();
      if (!l) return std::nullopt;
      auto r = right().concrete();
      if (!r) return std::nullopt;
      return kind() == Kind::Sum ? BaseType::sum(*l, *r) : BaseType::prod(*l, *r);
    }
    default:
      return std::nullopt;
  }
}

namespace {

int type_precedence(TypeExpr::Kind k) {
  switch (k) {
    case TypeExpr::Kind::Sum:
      return 1;
    case TypeExpr::Kind::Prod:
      return 2;
    default:
      return 3;
  }
}

void render_type(const TypeExpr& t, std::string& out) {
  switch (t.kind()) {
    case TypeExpr::Kind::Zero:
      out += '0';
      return;
    case TypeExpr::Kind::One:
      out += '1';
      return;
    case TypeExpr::Kind::Hole:
      out += '_';
      return;
    case TypeExpr::Kind::Var:
      out += "?" + std::to_string(t.var_id());
      return;
    default: {
      const int p = type_precedence(t.kind());
      const bool lp = type_precedence(t.left().kind()) < p;
      const bool rp = type_precedence(t.right().kind()) <= p;
      if (lp) out += '(';
      render_type(t.left(), out);
      if (lp) out += ')';
      out += t.kind() == TypeExpr::Kind::Sum ? " + " : " * ";
      if (rp) out += '(';
      render_type(t.right(), out);
      if (rp) out += ')';
    }
  }
}

}  // namespace

std::string TypeExpr::to_string() const {
  std::string out;
  render_type(*this, out);
  return out;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeExpr::Kind::Zero:
    case TypeExpr::Kind::One:
    case TypeExpr::Kind::Hole:
      return true;
    case TypeExpr::Kind::Var:
      return a.var_id() == b.var_id();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

// ---------------------------------------------------------------------------
// Term

struct Term::Node {
  Kind kind;
  Prim prim = Prim::Id;
  std::vector<TypeExpr> params;
  double angle = 0.0;
  std::vector<Term> children;
  std::vector<TypeExpr> annot;
  std::string name;
  std::vector<MacroArg> args;
};

Term Term::prim(Prim p, std::vector<TypeExpr> params) {
  if (!params.empty() && params.size() != prim_arity(p)) {
    fail(ErrorKind::ArityError, std::string(prim_name(p)) + " expects " +
                                    std::to_string(prim_arity(p)) + " type parameters");
  }
  Node n{Kind::Prim};
  n.prim = p;
  n.params = std::move(params);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::phase(double angle) {
  if (!std::isfinite(angle)) fail(ErrorKind::BadPhase, "phase angle must be finite");
  Node n{Kind::Phase};
  n.angle = angle;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::hadamard() { return Term(std::make_shared<const Node>(Node{Kind::Hadamard})); }

Term Term::seq(Term a, Term b) { return binary(Kind::Seq, std::move(a), std::move(b)); }
Term Term::sum(Term a, Term b) { return binary(Kind::Sum, std::move(a), std::move(b)); }
Term Term::prod(Term a, Term b) { return binary(Kind::Prod, std::move(a), std::move(b)); }

Term Term::annot(Term t, TypeExpr source, TypeExpr target) {
  Node n{Kind::Annot};
  n.children.push_back(std::move(t));
  n.annot = {std::move(source), std::move(target)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::macro(std::string name, std::vector<MacroArg> args) {
  Node n{Kind::Macro};
  n.name = std::move(name);
  n.args = std::move(args);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::binary(Kind k, Term a, Term b) {
  Node n{k};
  n.children = {std::move(a), std::move(b)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term::Kind Term::kind() const { return node_->kind; }
Prim Term::prim() const { return node_->prim; }
const std::vector<TypeExpr>& Term::params() const { return node_->params; }
double Term::angle() const { return node_->angle; }
const Term& Term::left() const { return node_->children.at(0); }
const Term& Term::right() const { return node_->children.at(1); }
const Term& Term::body() const { return node_->children.at(0); }
const TypeExpr& Term::annot_source() const { return node_->annot.at(0); }
const TypeExpr& Term::annot_target() const { return node_->annot.at(1); }
const std::string& Term::macro_name() const { return node_->name; }
const std::vector<MacroArg>& Term::macro_args() const { return node_->args; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.prim == y.prim && x.params == y.params && x.angle == y.angle &&
         x.children == y.children && x.annot == y.annot && x.name == y.name && x.args == y.args;
}

Term to_term(const Comb& c) {
  switch (c.kind()) {
    case Comb::Kind::Prim: {
      std::vector<TypeExpr> params;
      for (const auto& t : c.params()) params.push_back(TypeExpr::from(t));
      return Term::prim(c.prim(), std::move(params));
    }
    case Comb::Kind::Phase:
      return Term::phase(c.angle());
    case Comb::Kind::Hadamard:
      return Term::hadamard();
    case Comb::Kind::Seq:
      return Term::seq(to_term(c.left()), to_term(c.right()));
    case Comb::Kind::Sum:
      return Term::sum(to_term(c.left()), to_term(c.right()));
    case Comb::Kind::Prod:
      return Term::prod(to_term(c.left()), to_term(c.right()));
  }
  return Term::hadamard();
}

// ---------------------------------------------------------------------------
// Macros

namespace {

Term p(Prim prim) { return Term::prim(prim); }

Term seq_all(std::initializer_list<Term> ts) {
  auto it = ts.begin();
  Term acc = *it++;
  for (; it != ts.end(); ++it) acc = Term::seq(std::move(acc), *it);
  return acc;
}

TypeExpr qbit_expr() { return TypeExpr::sum(TypeExpr::one(), TypeExpr::one()); }

Term on_qbit(Term t) { return Term::annot(std::move(t), qbit_expr(), qbit_expr()); }

void expect_args(const std::string& name, const std::vector<MacroArg>& args, std::size_t n) {
  if (args.size() != n) {
    fail(ErrorKind::ArityError,
         name + " expects " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()));
  }
}

template <class T>
const T& arg_as(const std::string& name, const MacroArg& a, const char* what) {
  if (const T* v = std::get_if<T>(&a)) return *v;
  fail(ErrorKind::ArityError, name + " expects " + what + " argument");
}

}  // namespace

const std::vector<std::string>& macro_names() {
  static const std::vector<std::string> names = {
      "midswap+", "midswap*", "superposition", "px", "py", "pz", "s",
      "t",        "ctrl",     "cnot",          "toffoli", "fredkin", "scale"};
  return names;
}

Term expand_macro(const std::string& name, const std::vector<MacroArg>& args) {
  using std::numbers::pi;
  if (name == "midswap+" || name == "midswap*") {
    const bool plus = name == "midswap+";
    const Prim assoc = plus ? Prim::AssocPlus : Prim::AssocTimes;
    const Prim associ = plus ? Prim::AssociPlus : Prim::AssociTimes;
    const Prim swap = plus ? Prim::SwapPlus : Prim::SwapTimes;
    auto par = plus ? Term::sum : Term::prod;
    Term body = seq_all({p(assoc), par(p(Prim::Id), p(associ)),
                         par(p(Prim::Id), par(p(swap), p(Prim::Id))), par(p(Prim::Id), p(assoc)),
                         p(associ)});
    if (args.empty()) return body;
    expect_args(name, args, 4);
    std::vector<TypeExpr> b;
    for (const auto& a : args) b.push_back(arg_as<TypeExpr>(name, a, "type"));
    auto tpar = plus ? TypeExpr::sum : TypeExpr::prod;
    return Term::annot(std::move(body), tpar(tpar(b[0], b[1]), tpar(b[2], b[3])),
                       tpar(tpar(b[0], b[2]), tpar(b[1], b[3])));
  }
  if (name == "superposition") {
    expect_args(name, args, 1);
    const TypeExpr& b = arg_as<TypeExpr>(name, args[0], "type");
    Term body = seq_all({Term::sum(p(Prim::UnitiTimes), p(Prim::UnitiTimes)), p(Prim::Distribi),
                         Term::prod(p(Prim::Id), Term::hadamard()), p(Prim::Distrib),
                         Term::sum(p(Prim::UnitTimes), p(Prim::UnitTimes))});
    return Term::annot(std::move(body), TypeExpr::sum(b, b), TypeExpr::sum(b, b));
  }
  if (name == "px") {
    expect_args(name, args, 0);
    return on_qbit(p(Prim::SwapPlus));
  }
  if (name == "py") {
    expect_args(name, args, 0);
    return on_qbit(Term::seq(p(Prim::SwapPlus), Term::sum(Term::phase(-pi / 2), Term::phase(pi / 2))));
  }
  if (name == "pz") {
    expect_args(name, args, 0);
    return on_qbit(Term::sum(p(Prim::Id), Term::phase(pi)));
  }
  if (name == "s") {
    expect_args(name, args, 0);
    return on_qbit(Term::sum(p(Prim::Id), Term::phase(pi / 2)));
  }
  if (name == "t") {
    expect_args(name, args, 0);
    return on_qbit(Term::sum(p(Prim::Id), Term::phase(pi / 4)));
  }
  if (name == "ctrl") {
    expect_args(name, args, 1);
    const Term& c = arg_as<Term>(name, args[0], "combinator");
    return seq_all({p(Prim::SwapTimes), p(Prim::Distrib),
                    Term::sum(p(Prim::UnitTimes), p(Prim::UnitTimes)), Term::sum(p(Prim::Id), c),
                    Term::sum(p(Prim::UnitiTimes), p(Prim::UnitiTimes)), p(Prim::Distribi),
                    p(Prim::SwapTimes)});
  }
  if (name == "cnot") {
    expect_args(name, args, 0);
    return Term::macro("ctrl", {Term::macro("px")});
  }
  if (name == "toffoli" || name == "fredkin") {
    expect_args(name, args, 0);
    const TypeExpr q3 = TypeExpr::prod(qbit_expr(), TypeExpr::prod(qbit_expr(), qbit_expr()));
    Term inner = name == "toffoli" ? Term::macro("cnot") : p(Prim::SwapTimes);
    return Term::annot(Term::macro("ctrl", {std::move(inner)}), q3, q3);
  }
  if (name == "scale") {
    expect_args(name, args, 2);
    const double angle = arg_as<double>(name, args[0], "angle");
    const Term& c = arg_as<Term>(name, args[1], "combinator");
    return seq_all({p(Prim::UnitiTimes), Term::prod(c, Term::phase(angle)), p(Prim::UnitTimes)});
  }
  fail(ErrorKind::UnknownMacro, "unknown derived combinator '" + name + "'");
}

Term expand_all(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Prim:
    case Term::Kind::Phase:
    case Term::Kind::Hadamard:
      return t;
    case Term::Kind::Seq:
      return Term::seq(expand_all(t.left()), expand_all(t.right()));
    case Term::Kind::Sum:
      return Term::sum(expand_all(t.left()), expand_all(t.right()));
    case Term::Kind::Prod:
      return Term::prod(expand_all(t.left()), expand_all(t.right()));
    case Term::Kind::Annot:
      return Term::annot(expand_all(t.body()), t.annot_source(), t.annot_target());
    case Term::Kind::Macro:
      return expand_all(expand_macro(t.macro_name(), t.macro_args()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Unification

TypeExpr Unifier::fresh() {
  bindings_.emplace_back();
  return TypeExpr::var(bindings_.size() - 1);
}

TypeExpr Unifier::instantiate(const TypeExpr& t) {
  switch (t.kind()) {
    case TypeExpr::Kind::Hole:
      return fresh();
    case TypeExpr::Kind::Sum:
      return TypeExpr::sum(instantiate(t.left()), instantiate(t.right()));
    case TypeExpr::Kind::Prod:
      return TypeExpr::prod(instantiate(t.left()), instantiate(t.right()));
    default:
      return t;
  }
}

TypeExpr Unifier::prune(const TypeExpr& t) const {
  TypeExpr cur = t;
  while (cur.kind() == TypeExpr::Kind::Var && bindings_.at(cur.var_id())) {
    cur = *bindings_[cur.var_id()];
  }
  return cur;
}

bool Unifier::occurs(std::size_t id, const TypeExpr& t) const {
  const TypeExpr x = prune(t);
  switch (x.kind()) {
    case TypeExpr::Kind::Var:
      return x.var_id() == id;
    case TypeExpr::Kind::Sum:
    case TypeExpr::Kind::Prod:
      return occurs(id, x.left()) || occurs(id, x.right());
    default:
      return false;
  }
}

void Unifier::unify(const TypeExpr& a, const TypeExpr& b, const std::string& what) {
  const TypeExpr x = prune(a);
  const TypeExpr y = prune(b);
  if (x.kind() == TypeExpr::Kind::Var && y.kind() == TypeExpr::Kind::Var &&
      x.var_id() == y.var_id()) {
    return;
  }
  auto mismatch = [&] {
    fail(ErrorKind::TypeMismatch,
         "type mismatch in " + what + ": " + zonk(a).to_string() + " vs " + zonk(b).to_string());
  };
  if (x.kind() == TypeExpr::Kind::Var || y.kind() == TypeExpr::Kind::Var) {
    const TypeExpr& v = x.kind() == TypeExpr::Kind::Var ? x : y;
    const TypeExpr& other = x.kind() == TypeExpr::Kind::Var ? y : x;
    if (occurs(v.var_id(), other)) mismatch();
    bindings_[v.var_id()] = other;
    return;
  }
  if (x.kind() == TypeExpr::Kind::Hole || y.kind() == TypeExpr::Kind::Hole) {
    fail(ErrorKind::TypeMismatch, "uninstantiated hole in " + what);
  }
  if (x.kind() != y.kind()) mismatch();
  if (x.kind() == TypeExpr::Kind::Sum || x.kind() == TypeExpr::Kind::Prod) {
    unify(x.left(), y.left(), what);
    unify(x.right(), y.right(), what);
  }
}

TypeExpr Unifier::zonk(const TypeExpr& t) const {
  const TypeExpr x = prune(t);
  switch (x.kind()) {
    case TypeExpr::Kind::Sum:
      return TypeExpr::sum(zonk(x.left()), zonk(x.right()));
    case TypeExpr::Kind::Prod:
      return TypeExpr::prod(zonk(x.left()), zonk(x.right()));
    default:
      return x;
  }
}

BaseType Unifier::resolve(const TypeExpr& t, const std::string& what) const {
  const TypeExpr z = zonk(t);
  auto c = z.concrete();
  if (!c) {
    fail(ErrorKind::UnresolvedHole,
         "cannot infer the type of " + what + " (partially known: " + z.to_string() + ")");
  }
  return *c;
}

// ---------------------------------------------------------------------------
// Inference

namespace {

struct ExprAlg {
  TypeExpr zero() const { return TypeExpr::zero(); }
  TypeExpr one() const { return TypeExpr::one(); }
  TypeExpr sum(const TypeExpr& a, const TypeExpr& b) const { return TypeExpr::sum(a, b); }
  TypeExpr prod(const TypeExpr& a, const TypeExpr& b) const { return TypeExpr::prod(a, b); }
};

}  // namespace

ElabComb infer(const Term& t, Unifier& u) {
  switch (t.kind()) {
    case Term::Kind::Prim: {
      std::vector<TypeExpr> params;
      if (t.params().empty()) {
        for (std::size_t i = 0; i < prim_arity(t.prim()); ++i) params.push_back(u.fresh());
      } else {
        for (const auto& p : t.params()) params.push_back(u.instantiate(p));
      }
      auto [src, tgt] = prim_signature<TypeExpr>(t.prim(), params, ExprAlg{});
      return ElabComb{Comb::Kind::Prim, t.prim(), std::move(params), 0.0, {}, std::move(src), std::move(tgt)};
    }
    case Term::Kind::Phase:
      return ElabComb{Comb::Kind::Phase, Prim::Id, {}, t.angle(), {}, TypeExpr::one(), TypeExpr::one()};
    case Term::Kind::Hadamard: {
      const TypeExpr q = TypeExpr::sum(TypeExpr::one(), TypeExpr::one());
      return ElabComb{Comb::Kind::Hadamard, Prim::Id, {}, 0.0, {}, q, q};
    }
    case Term::Kind::Seq: {
      ElabComb a = infer(t.left(), u);
      ElabComb b = infer(t.right(), u);
      u.unify(a.target, b.source, "sequential composition");
      TypeExpr src = a.source;
      TypeExpr tgt = b.target;
      return ElabComb{Comb::Kind::Seq, Prim::Id, {}, 0.0, {std::move(a), std::move(b)}, std::move(src),
                      std::move(tgt)};
    }
    case Term::Kind::Sum:
    case Term::Kind::Prod: {
      const bool sum = t.kind() == Term::Kind::Sum;
      ElabComb a = infer(t.left(), u);
      ElabComb b = infer(t.right(), u);
      auto par = sum ? TypeExpr::sum : TypeExpr::prod;
      TypeExpr src = par(a.source, b.source);
      TypeExpr tgt = par(a.target, b.target);
      return ElabComb{sum ? Comb::Kind::Sum : Comb::Kind::Prod, Prim::Id, {}, 0.0,
                      {std::move(a), std::move(b)}, std::move(src), std::move(tgt)};
    }
    case Term::Kind::Annot: {
      ElabComb e = infer(t.body(), u);
      u.unify(e.source, u.instantiate(t.annot_source()), "annotation (source)");
      u.unify(e.target, u.instantiate(t.annot_target()), "annotation (target)");
      return e;
    }
    case Term::Kind::Macro:
      return infer(expand_macro(t.macro_name(), t.macro_args()), u);
  }
  fail(ErrorKind::IllTyped, "unknown term");
}

Comb build(const ElabComb& e, const Unifier& u) {
  switch (e.kind) {
    case Comb::Kind::Prim: {
      std::vector<BaseType> params;
      for (const auto& p : e.params) {
        params.push_back(u.resolve(p, "a parameter of " + std::string(prim_name(e.prim))));
      }
      return Comb::prim(e.prim, std::move(params));
    }
    case Comb::Kind::Phase:
      return Comb::phase(e.angle);
    case Comb::Kind::Hadamard:
      return Comb::hadamard();
    case Comb::Kind::Seq:
      return Comb::seq(build(e.children[0], u), build(e.children[1], u));
    case Comb::Kind::Sum:
      return Comb::sum(build(e.children[0], u), build(e.children[1], u));
    case Comb::Kind::Prod:
      return Comb::prod(build(e.children[0], u), build(e.children[1], u));
  }
  fail(ErrorKind::IllTyped, "unknown term");
}

Comb elaborate(const Term& t, const std::optional<std::pair<TypeExpr, TypeExpr>>& expected) {
  Unifier u;
  ElabComb e = infer(t, u);
  if (expected) {
    u.unify(e.source, u.instantiate(expected->first), "expected type (source)");
    u.unify(e.target, u.instantiate(expected->second), "expected type (target)");
  }
  return build(e, u);
}

CombType typecheck(const Term& t, const std::optional<std::pair<TypeExpr, TypeExpr>>& expected) {
  return elaborate(t, expected).type();
}

}  // namespace yuppie
