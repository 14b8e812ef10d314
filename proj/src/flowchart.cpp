#include "yuppie/flowchart.hpp"

#include <algorithm>

#include "yuppie/error.hpp"

namespace yuppie {

ContextSum ContextSum::zero() { return ContextSum{}; }

ContextSum ContextSum::ctx(std::vector<std::string> names) {
  return ContextSum{Kind::Ctx, std::move(names), {}};
}

ContextSum ContextSum::plus(ContextSum a, ContextSum b) {
  return ContextSum{Kind::Plus, {}, {std::move(a), std::move(b)}};
}

BaseType context_type(const std::vector<std::string>& names) {
  BaseType t = BaseType::one();
  for (std::size_t i = 0; i < names.size(); ++i) t = t * BaseType::qbit();
  return t;
}

BaseType ContextSum::type() const {
  switch (kind) {
    case Kind::Zero:
      return BaseType::zero();
    case Kind::Ctx:
      return context_type(names);
    case Kind::Plus:
      return parts[0].type() + parts[1].type();
  }
  return BaseType::zero();
}

std::string ContextSum::to_string() const {
  switch (kind) {
    case Kind::Zero:
      return "0";
    case Kind::Ctx: {
      std::string out = "[";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
      }
      return out + "]";
    }
    case Kind::Plus: {
      std::string r = parts[1].to_string();
      if (parts[1].kind == Kind::Plus) r = "(" + r + ")";
      return parts[0].to_string() + " + " + r;
    }
  }
  return "";
}

struct FlowChart::Node {
  Kind kind;
  std::string name;
  std::vector<std::string> vars;
  std::optional<Comb> u;
  std::vector<FlowChart> children;
};

FlowChart FlowChart::new_qbit(std::string name) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::NewQbit, std::move(name)}));
}
FlowChart FlowChart::discard(std::string name) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::Discard, std::move(name)}));
}
FlowChart FlowChart::apply(std::vector<std::string> vars, Comb u) {
  if (vars.empty()) fail(ErrorKind::ArityError, "unitary application needs at least one variable");
  return FlowChart(std::make_shared<const Node>(Node{Kind::Apply, {}, std::move(vars), std::move(u)}));
}
FlowChart FlowChart::permute(std::vector<std::string> order) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::Permute, {}, std::move(order)}));
}
FlowChart FlowChart::initial() { return FlowChart(std::make_shared<const Node>(Node{Kind::Initial})); }
FlowChart FlowChart::measure(std::string name) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::Measure, std::move(name)}));
}
FlowChart FlowChart::merge() { return FlowChart(std::make_shared<const Node>(Node{Kind::Merge})); }
FlowChart FlowChart::seq(FlowChart a, FlowChart b) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::Seq, {}, {}, {}, {std::move(a), std::move(b)}}));
}
FlowChart FlowChart::branch(FlowChart a, FlowChart b) {
  return FlowChart(std::make_shared<const Node>(Node{Kind::Branch, {}, {}, {}, {std::move(a), std::move(b)}}));
}

FlowChart::Kind FlowChart::kind() const { return node_->kind; }
const std::string& FlowChart::name() const { return node_->name; }
const std::vector<std::string>& FlowChart::vars() const { return node_->vars; }
const Comb& FlowChart::unitary() const { return node_->u.value(); }
const FlowChart& FlowChart::left() const { return node_->children.at(0); }
const FlowChart& FlowChart::right() const { return node_->children.at(1); }

bool operator==(const FlowChart& a, const FlowChart& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.vars == y.vars && x.u == y.u && x.children == y.children;
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

// 0: seq, 1: branch, 2: atom
int level(const FlowChart& fc) {
  switch (fc.kind()) {
    case FlowChart::Kind::Seq:
      return 0;
    case FlowChart::Kind::Branch:
      return 1;
    default:
      return 2;
  }
}

void render(const FlowChart& fc, std::string& out) {
  switch (fc.kind()) {
    case FlowChart::Kind::NewQbit:
      out += "new qbit " + fc.name() + " := 0";
      return;
    case FlowChart::Kind::Discard:
      out += "discard " + fc.name();
      return;
    case FlowChart::Kind::Apply:
      out += join(fc.vars(), ", ") + " *= (" + to_string(fc.unitary()) + ")";
      return;
    case FlowChart::Kind::Permute:
      out += "permute";
      for (const auto& v : fc.vars()) out += " " + v;
      return;
    case FlowChart::Kind::Initial:
      out += "initial";
      return;
    case FlowChart::Kind::Measure:
      out += "measure " + fc.name();
      return;
    case FlowChart::Kind::Merge:
      out += "merge";
      return;
    case FlowChart::Kind::Seq:
    case FlowChart::Kind::Branch: {
      const int p = level(fc);
      const bool lp = level(fc.left()) < p;
      const bool rp = level(fc.right()) <= p;
      if (lp) out += '(';
      render(fc.left(), out);
      if (lp) out += ')';
      out += p == 0 ? "; " : " (+) ";
      if (rp) out += '(';
      render(fc.right(), out);
      if (rp) out += ')';
      return;
    }
  }
}

const std::vector<std::string>& single(const ContextSum& c, const char* what) {
  if (c.kind != ContextSum::Kind::Ctx) {
    fail(ErrorKind::ContextShape, std::string(what) + " needs a single context, got " + c.to_string());
  }
  return c.names;
}

std::size_t position(const std::vector<std::string>& ctx, const std::string& v) {
  auto it = std::find(ctx.begin(), ctx.end(), v);
  if (it == ctx.end()) fail(ErrorKind::UnboundVariable, "variable '" + v + "' is not in scope");
  return static_cast<std::size_t>(it - ctx.begin());
}

void check_distinct(const std::vector<std::string>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) fail(ErrorKind::DuplicateVariable, "variable '" + vs[i] + "' listed twice");
}

std::vector<std::string> without(const std::vector<std::string>& ctx, const std::vector<std::string>& vs) {
  std::vector<std::string> out;
  for (const auto& n : ctx)
    if (std::find(vs.begin(), vs.end(), n) == vs.end()) out.push_back(n);
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Swaps the variables at positions i and i+1 of an n-variable context.
Comb adjacent_swap(std::size_t n, std::size_t i) {
  const BaseType q = BaseType::qbit();
  const BaseType pre = context_type(std::vector<std::string>(i));
  Comb c = seq({assoc_times(pre, q, q), Comb::prod(id(pre), swap_times(q, q)), associ_times(pre, q, q)});
  for (std::size_t j = i + 2; j < n; ++j) c = Comb::prod(c, id(q));
  return c;
}

// Bubble sort from `from` into `to` (same names) as adjacent swaps.
Comb reorder(std::vector<std::string> from, const std::vector<std::string>& to) {
  Comb c = id(context_type(from));
  const std::size_t n = from.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t at = position(from, to[k]);
    while (at > k) {
      c = Comb::seq(c, adjacent_swap(n, at - 1));
      std::swap(from[at - 1], from[at]);
      --at;
    }
  }
  return c;
}

// ((R * Q) * ... ) * Q  <->  R * Q^k, with Q^k right-nested.
Comb gather(std::size_t rest, std::size_t k) {
  const BaseType q = BaseType::qbit();
  Comb c = id(context_type(std::vector<std::string>(rest + k)));
  for (std::size_t j = 1; j < k; ++j) {
    Comb step = assoc_times(context_type(std::vector<std::string>(rest + k - j - 1)), q, qbit_power(j));
    c = Comb::seq(c, step);
  }
  return c;
}

ArrowChi ket(bool one) {
  const BaseType u = BaseType::one();
  return arr_chi(one ? inr_a(u, u) : inl_a(u, u));
}

struct Result {
  ContextSum out;
  std::optional<ArrowChi> arrow;
};

Result run(const FlowChart& fc, const ContextSum& in, bool build) {
  const BaseType q = BaseType::qbit();
  switch (fc.kind()) {
    case FlowChart::Kind::Initial: {
      if (in.kind != ContextSum::Kind::Zero) {
        fail(ErrorKind::ContextShape, "initial expects the empty context sum, got " + in.to_string());
      }
      Result r{ContextSum::ctx({})};
      if (build) r.arrow = arr_chi(alloc_a(BaseType::one()));
      return r;
    }
    case FlowChart::Kind::NewQbit: {
      const auto& ctx = single(in, "new qbit");
      if (std::find(ctx.begin(), ctx.end(), fc.name()) != ctx.end()) {
        fail(ErrorKind::DuplicateVariable, "variable '" + fc.name() + "' already in scope");
      }
      Result r{ContextSum::ctx(concat(ctx, {fc.name()}))};
      if (build) {
        const BaseType g = context_type(ctx);
        r.arrow = compose_chi(pure_chi(uniti_times(g)), prod_chi(id_chi(g), ket(false)));
      }
      return r;
    }
    case FlowChart::Kind::Discard: {
      const auto& ctx = single(in, "discard");
      position(ctx, fc.name());
      const auto rest = without(ctx, {fc.name()});
      Result r{ContextSum::ctx(rest)};
      if (build) {
        r.arrow = compose_chi(pure_chi(reorder(ctx, concat(rest, {fc.name()}))),
                              fst_chi(context_type(rest), q));
      }
      return r;
    }
    case FlowChart::Kind::Permute: {
      const auto& ctx = single(in, "permute");
      check_distinct(fc.vars());
      for (const auto& v : fc.vars()) position(ctx, v);
      if (fc.vars().size() != ctx.size()) {
        fail(ErrorKind::ContextShape, "permute must list every variable of " + in.to_string());
      }
      Result r{ContextSum::ctx(fc.vars())};
      if (build) r.arrow = pure_chi(reorder(ctx, fc.vars()));
      return r;
    }
    case FlowChart::Kind::Apply: {
      const auto& ctx = single(in, "unitary application");
      check_distinct(fc.vars());
      for (const auto& v : fc.vars()) position(ctx, v);
      const std::size_t k = fc.vars().size();
      const BaseType qk = qbit_power(k);
      if (!(fc.unitary().source() == qk) || !(fc.unitary().target() == qk)) {
        fail(ErrorKind::TypeMismatch, "unitary on " + std::to_string(k) + " qubit(s) must have type " +
                                          qk.to_string() + " <-> " + qk.to_string());
      }
      Result r{in};
      if (build) {
        const auto rest = without(ctx, fc.vars());
        const Comb order = reorder(ctx, concat(rest, fc.vars()));
        const Comb g = gather(rest.size(), k);
        ArrowChi a = compose_chi(pure_chi(order), pure_chi(g));
        a = compose_chi(a, prod_chi(id_chi(context_type(rest)), pure_chi(fc.unitary())));
        a = compose_chi(a, pure_chi(invert(g)));
        r.arrow = compose_chi(a, pure_chi(invert(order)));
      }
      return r;
    }
    case FlowChart::Kind::Measure: {
      const auto& ctx = single(in, "measure");
      position(ctx, fc.name());
      Result r{ContextSum::plus(in, in)};
      if (build) {
        const auto rest = without(ctx, {fc.name()});
        const Comb order = reorder(ctx, concat(rest, {fc.name()}));
        const BaseType l = context_type(rest);
        const BaseType u = BaseType::one();
        ArrowChi a = compose_chi(pure_chi(order), prod_chi(id_chi(l), measure_chi(q)));
        a = compose_chi(a, pure_chi(distrib(l, u, u)));
        a = compose_chi(a, sum_chi(prod_chi(id_chi(l), ket(false)), prod_chi(id_chi(l), ket(true))));
        r.arrow = compose_chi(a, sum_chi(pure_chi(invert(order)), pure_chi(invert(order))));
      }
      return r;
    }
    case FlowChart::Kind::Merge: {
      if (in.kind != ContextSum::Kind::Plus) {
        fail(ErrorKind::ContextShape, "merge needs two branches, got " + in.to_string());
      }
      if (!(in.parts[0] == in.parts[1])) {
        fail(ErrorKind::BranchMismatch,
             "cannot merge " + in.parts[0].to_string() + " with " + in.parts[1].to_string());
      }
      Result r{in.parts[0]};
      if (build) r.arrow = merge_chi(in.parts[0].type());
      return r;
    }
    case FlowChart::Kind::Seq: {
      Result a = run(fc.left(), in, build);
      Result b = run(fc.right(), a.out, build);
      if (build) b.arrow = compose_chi(*a.arrow, *b.arrow);
      return b;
    }
    case FlowChart::Kind::Branch: {
      if (in.kind != ContextSum::Kind::Plus) {
        fail(ErrorKind::ContextShape, "branching needs two input branches, got " + in.to_string());
      }
      Result a = run(fc.left(), in.parts[0], build);
      Result b = run(fc.right(), in.parts[1], build);
      Result r{ContextSum::plus(a.out, b.out)};
      if (build) r.arrow = sum_chi(*a.arrow, *b.arrow);
      return r;
    }
  }
  fail(ErrorKind::IllTyped, "unknown command");
}

// The chart minus its leading `initial`; nullopt when nothing remains.
std::optional<FlowChart> drop_initial(const FlowChart& fc) {
  if (fc.kind() == FlowChart::Kind::Initial) return std::nullopt;
  if (fc.kind() == FlowChart::Kind::Seq) {
    auto rest = drop_initial(fc.left());
    if (!rest) return fc.right();
    return FlowChart::seq(*rest, fc.right());
  }
  fail(ErrorKind::ContextShape, "a runnable chart must start with initial");
}

void collect(const ContextSum& c, const CMatrix& rho, std::size_t& offset, std::vector<BranchResult>& out) {
  if (c.kind == ContextSum::Kind::Plus) {
    collect(c.parts[0], rho, offset, out);
    collect(c.parts[1], rho, offset, out);
    return;
  }
  if (c.kind == ContextSum::Kind::Zero) return;
  const auto d = static_cast<Eigen::Index>(c.type().dim());
  const auto o = static_cast<Eigen::Index>(offset);
  CMatrix block = rho.block(o, o, d, d);
  const double w = block.trace().real();
  out.push_back(BranchResult{c.names, std::move(block), w});
  offset += c.type().dim();
}

}  // namespace

std::string to_string(const FlowChart& fc) {
  std::string out;
  render(fc, out);
  return out;
}

ContextSum check_flowchart(const FlowChart& fc, const ContextSum& input) { return run(fc, input, false).out; }

ArrowChi translate(const FlowChart& fc, const ContextSum& input) { return *run(fc, input, true).arrow; }

RunResult run_flowchart(const FlowChart& fc) {
  const ContextSum start = ContextSum::ctx({});
  auto rest = drop_initial(fc);
  RunResult out;
  CMatrix rho = CMatrix::Identity(1, 1);
  if (rest) {
    Result r = run(*rest, start, true);
    out.output = r.out;
    out.state = apply_channel(channel_of(*r.arrow), rho);
  } else {
    out.output = start;
    out.state = rho;
  }
  std::size_t offset = 0;
  collect(out.output, out.state, offset, out.branches);
  return out;
}

}  // namespace yuppie
