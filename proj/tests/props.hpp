#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "yuppie/base_type.hpp"

namespace props {

struct Report {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void check(bool pass, const std::string& what);
};

// Type families for the exhaustive sweeps.
// Every type with at most three leaves (all of dim <= 3).
std::vector<yuppie::BaseType> types_dim3();
// All types up to four leaves plus every five-leaf type of dim 5 or 6.
std::vector<yuppie::BaseType> types_dim6();

Report p1_inversion(std::size_t n, std::uint64_t seed);
Report p2_heap_mediators(std::size_t n, std::uint64_t seed);
Report p3_garbage_mediators(std::size_t n, std::uint64_t seed);
Report p4_measure_injections();
Report p5_classical_states();
Report p6_measure_products();
Report p7_measure_projections();
Report p8_clone_associative();
Report p9_measure_idempotent();
Report p10_arrow_laws(std::size_t n, std::uint64_t seed);
Report p11_toffoli_fullness();
Report p12_gate_goldens();

}  // namespace props
