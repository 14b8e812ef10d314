// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "oracles.hpp"
#include "props.hpp"
#include "yuppie/channel.hpp"
#include "yuppie/classical.hpp"
#include "yuppie/flowchart.hpp"
#include "yuppie/syntax.hpp"

using namespace yuppie;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* title, double limit_ms, const std::function<Outcome()>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (limit_ms > 0 && ms > limit_ms) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(static_cast<long>(limit_ms)) + " ms budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s [%.3f ms] %s\n", o.pass ? "PASS" : "FAIL", n, title, ms, o.detail.c_str());
  std::fflush(stdout);
}

Outcome from(const props::Report& r, const std::string& label) {
  return {r.ok(), label + ": " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) +
                      (r.failures ? "; first failure: " + r.first_failure : "")};
}

Outcome all_of(std::initializer_list<std::pair<const char*, props::Report>> rs) {
  Outcome o{true, ""};
  for (const auto& [label, r] : rs) {
    const Outcome x = from(r, label);
    o.pass = o.pass && x.pass;
    o.detail += (o.detail.empty() ? "" : "; ") + x.detail;
  }
  return o;
}

CMatrix plus_state() { return CMatrix::Constant(2, 2, 0.5); }

}  // namespace

int main() {
  reset_channel_stats();
  const BaseType q = BaseType::qbit();

  criterion(1, "hadamard golden", 1.0, [] {
    const double d = oracle::dist(eval_unitary(Comb::hadamard()), oracle::hadamard());
    return Outcome{d <= 1e-12, "max deviation " + std::to_string(d)};
  });

  criterion(2, "clone behaviour", 0, [&] {
    const CMatrix v = iso_of(clone_a(q)).matrix;
    const double d1 = oracle::dist(v * oracle::ket(2, 1), oracle::ket(4, 3));
    const CMatrix plus = (oracle::ket(2, 0) + oracle::ket(2, 1)) / std::sqrt(2.0);
    const CMatrix bell = (oracle::ket(4, 0) + oracle::ket(4, 3)) / std::sqrt(2.0);
    const double d2 = oracle::dist(v * plus, bell);
    return Outcome{d1 <= 1e-9 && d2 <= 1e-9, "|1>: " + std::to_string(d1) + ", |+>: " + std::to_string(d2)};
  });

  criterion(3, "measurement", 0, [&] {
    const CMatrix out = apply_channel(channel_of(measure_chi(q)), plus_state());
    const double d1 = oracle::dist(out, oracle::from_rows({{0.5, 0}, {0, 0.5}}));
    const ArrowChi hm = parse_arrow_chi("hadamard >>> measure >>> hadamard");
    const double d2 = oracle::dist(apply_channel(channel_of(hm), plus_state()), plus_state());
    return Outcome{d1 <= 1e-9 && d2 <= 1e-9,
                   "computational: " + std::to_string(d1) + ", hadamard basis: " + std::to_string(d2)};
  });

  criterion(4, "measurement laws sweep", 60000.0, [] {
    return all_of({{"injections", props::p4_measure_injections()},
                   {"classical states", props::p5_classical_states()},
                   {"products", props::p6_measure_products()},
                   {"projections", props::p7_measure_projections()},
                   {"clone assoc", props::p8_clone_associative()},
                   {"idempotence", props::p9_measure_idempotent()}});
  });

  criterion(5, "toffoli fullness", 10000.0, [] { return from(props::p11_toffoli_fullness(), "functions"); });

  criterion(6, "gate library permutations", 0, [] { return from(props::p12_gate_goldens(), "gates"); });

  criterion(7, "flowchart demo", 0, [] {
    using F = FlowChart;
    const RunResult coin = run_flowchart(
        F::seq(F::seq(F::seq(F::initial(), F::new_qbit("q")), F::apply({"q"}, Comb::hadamard())), F::measure("q")));
    const RunResult zero = run_flowchart(F::seq(F::seq(F::initial(), F::new_qbit("q")), F::measure("q")));
    if (coin.branches.size() != 2 || zero.branches.size() != 2) return Outcome{false, "expected two branches"};
    const double w[4] = {coin.branches[0].weight, coin.branches[1].weight, zero.branches[0].weight,
                         zero.branches[1].weight};
    const bool ok = std::abs(w[0] - 0.5) <= 1e-9 && std::abs(w[1] - 0.5) <= 1e-9 && std::abs(w[2] - 1) <= 1e-9 &&
                    std::abs(w[3]) <= 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof buf, "hadamard: (%.12g, %.12g), no hadamard: (%.12g, %.12g)", w[0], w[1], w[2], w[3]);
    return Outcome{ok, buf};
  });

  criterion(8, "quotient soundness", 0, [] {
    return all_of({{"heap mediators", props::p2_heap_mediators(500, 2000)},
                   {"garbage mediators", props::p3_garbage_mediators(500, 3000)}});
  });

  criterion(9, "trace preservation", 0, [] {
    const ChannelStats s = channel_stats();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu channels, max |sum K^dag K - I| = %.3g, min Choi eigenvalue = %.3g", s.count,
                  s.max_trace_error, s.min_choi_eigenvalue);
    return Outcome{s.count > 0 && s.max_trace_error <= 1e-9 && s.min_choi_eigenvalue >= -1e-9, buf};
  });

  return failures == 0 ? 0 : 1;
}
