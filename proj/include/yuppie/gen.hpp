#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "yuppie/arrow_hide.hpp"

namespace yuppie {

using Rng = std::mt19937_64;

/// Random type with dim <= max_dim and at most max_leaves leaves; may
/// contain 0.
BaseType gen_type(Rng& rng, std::size_t max_dim, std::size_t max_leaves = 5);

/// Random well-typed combinator out of `source`, nesting at most `depth`.
Comb gen_comb_from(Rng& rng, const BaseType& source, std::size_t depth);
/// Deterministic in (type_budget, depth, seed); type_budget bounds dims.
Comb gen_comb(std::size_t type_budget, std::size_t depth, std::uint64_t seed);

ArrowA gen_arrow_a_from(Rng& rng, const BaseType& source, std::size_t depth, std::size_t max_dim);
ArrowA gen_arrow_a(std::size_t type_budget, std::size_t depth, std::uint64_t seed);

ArrowChi gen_arrow_chi_from(Rng& rng, const BaseType& source, std::size_t depth, std::size_t max_dim);
ArrowChi gen_arrow_chi(std::size_t type_budget, std::size_t depth, std::uint64_t seed);

/// Every type with exactly `leaves` leaves over {0, 1}, all bracketings.
std::vector<BaseType> all_types(std::size_t leaves);
/// all_types(1..max_leaves) filtered to dim <= max_dim.
std::vector<BaseType> all_types_up_to(std::size_t max_leaves, std::size_t max_dim);

/// The classical states 1 >-> b: composites of inl/inr out of 1, one per
/// basis vector of b.
std::vector<ArrowA> classical_states(const BaseType& b);

}  // namespace yuppie
