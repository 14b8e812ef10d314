#include <gtest/gtest.h>

#include "oracles.hpp"
#include "yuppie/channel.hpp"
#include "yuppie/error.hpp"
#include "yuppie/flowchart.hpp"
#include "yuppie/syntax.hpp"

using namespace yuppie;

namespace {

const BaseType one = BaseType::one();
const BaseType q = BaseType::qbit();
using F = FlowChart;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Io;
}

F seq(std::initializer_list<F> fs) {
  auto it = fs.begin();
  F acc = *it++;
  for (; it != fs.end(); ++it) acc = F::seq(acc, *it);
  return acc;
}

F chart(const std::string& src) {
  const Program p = parse_program(src, Level::Chart);
  return std::get<ChartValue>(elaborate_definition(p, default_definition(p).name)).chart;
}

}  // namespace

TEST(Flowchart, NewQbitAfterInitial) {
  EXPECT_EQ(check_flowchart(F::seq(F::initial(), F::new_qbit("q"))), ContextSum::ctx({"q"}));
}

TEST(Flowchart, MeasureBranches) {
  const ContextSum in = ContextSum::ctx({"q"});
  EXPECT_EQ(check_flowchart(F::measure("q"), in), ContextSum::plus(in, in));
  EXPECT_EQ(context_type({"q", "r"}), (one * q) * q);
}

TEST(Flowchart, Errors) {
  const ContextSum in = ContextSum::ctx({"q"});
  const ContextSum two = ContextSum::ctx({"q", "r"});
  EXPECT_EQ(kind_of([&] { check_flowchart(F::seq(F::branch(F::discard("q"), F::new_qbit("r")), F::merge()),
                                          ContextSum::plus(in, in)); }),
            ErrorKind::BranchMismatch);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::discard("r"), in); }), ErrorKind::UnboundVariable);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::new_qbit("q"), in); }), ErrorKind::DuplicateVariable);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::apply({"q", "q"}, parse_comb("cnot")), two); }),
            ErrorKind::DuplicateVariable);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::apply({"q"}, parse_comb("cnot")), two); }), ErrorKind::TypeMismatch);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::initial(), in); }), ErrorKind::ContextShape);
  EXPECT_EQ(kind_of([&] { check_flowchart(F::measure("q"), ContextSum::plus(in, in)); }), ErrorKind::ContextShape);
}

TEST(Flowchart, TranslationTypes) {
  const F fc = seq({F::initial(), F::new_qbit("q"), F::apply({"q"}, Comb::hadamard()), F::measure("q")});
  const ArrowChi c = translate(fc);
  EXPECT_EQ(c.source, BaseType::zero());
  EXPECT_EQ(c.target, check_flowchart(fc).type());
}

TEST(Flowchart, CoinDemo) {
  const F fc = seq({F::initial(), F::new_qbit("q"), F::apply({"q"}, Comb::hadamard()), F::measure("q")});
  const RunResult r = run_flowchart(fc);
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_NEAR(r.branches[0].weight, 0.5, 1e-9);
  EXPECT_NEAR(r.branches[1].weight, 0.5, 1e-9);
  // qubit set classically in each branch
  EXPECT_LE(oracle::dist(r.branches[0].state, oracle::from_rows({{0.5, 0}, {0, 0}})), 1e-9);
  EXPECT_LE(oracle::dist(r.branches[1].state, oracle::from_rows({{0, 0}, {0, 0.5}})), 1e-9);
}

TEST(Flowchart, ZeroDemo) {
  const RunResult r = run_flowchart(seq({F::initial(), F::new_qbit("q"), F::measure("q")}));
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_NEAR(r.branches[0].weight, 1.0, 1e-9);
  EXPECT_NEAR(r.branches[1].weight, 0.0, 1e-9);
  EXPECT_LE(oracle::dist(r.branches[0].state, oracle::from_rows({{1, 0}, {0, 0}})), 1e-9);
}

TEST(Flowchart, ParsedCharts) {
  const F coin = chart("def coin = initial; new qbit q := 0; q *= hadamard; measure q");
  EXPECT_EQ(coin, seq({F::initial(), F::new_qbit("q"), F::apply({"q"}, Comb::hadamard()), F::measure("q")}));
}

TEST(Flowchart, BellMergesToMixedState) {
  const F fc = chart(
      "def bell = initial; new qbit a := 0; new qbit b := 0; a, b *= ((hadamard * id) ; cnot); measure a; "
      "(discard a (+) discard a); merge");
  const RunResult r = run_flowchart(fc);
  ASSERT_EQ(r.branches.size(), 1u);
  EXPECT_NEAR(r.branches[0].weight, 1.0, 1e-9);
  EXPECT_LE(oracle::dist(r.state, oracle::from_rows({{0.5, 0}, {0, 0.5}})), 1e-9);
}

TEST(Flowchart, ApplyOnReorderedVariables) {
  // cnot with b as control flips a when b is |1>
  const F fc = seq({F::initial(), F::new_qbit("a"), F::new_qbit("b"), F::apply({"b"}, parse_comb("px")),
                    F::apply({"b", "a"}, parse_comb("cnot")), F::measure("a")});
  const RunResult r = run_flowchart(fc);
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_NEAR(r.branches[0].weight, 0.0, 1e-9);
  EXPECT_NEAR(r.branches[1].weight, 1.0, 1e-9);
}

TEST(Flowchart, PermuteChangesOrder) {
  const ContextSum out = check_flowchart(F::permute({"b", "a"}), ContextSum::ctx({"a", "b"}));
  EXPECT_EQ(out, ContextSum::ctx({"b", "a"}));
}

TEST(Flowchart, SequenceIsComposition) {
  const ContextSum in = ContextSum::ctx({"q"});
  const F a = F::apply({"q"}, Comb::hadamard());
  const F b = F::measure("q");
  EXPECT_TRUE(chan_equal(translate(F::seq(a, b), in), compose_chi(translate(a, in), translate(b, in))));
  const F br = F::branch(F::apply({"q"}, parse_comb("px")), F::discard("q"));
  const ContextSum two = ContextSum::plus(in, in);
  EXPECT_TRUE(chan_equal(translate(br, two), sum_chi(translate(br.left(), in), translate(br.right(), in))));
}

TEST(Flowchart, Printing) {
  const F fc = seq({F::initial(), F::new_qbit("q"), F::apply({"q"}, Comb::hadamard()), F::measure("q")});
  EXPECT_EQ(to_string(fc), "initial; new qbit q := 0; q *= (hadamard); measure q");
  EXPECT_EQ(ContextSum::plus(ContextSum::ctx({"a"}), ContextSum::zero()).to_string(), "[a] + 0");
}
