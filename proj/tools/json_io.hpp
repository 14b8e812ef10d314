#pragma once

#include <string>

#include <json.hpp>

#include "yuppie/channel.hpp"
#include "yuppie/classical.hpp"

namespace yuppie::cli {

using Json = nlohmann::ordered_json;

/// {"type", "rows", "cols", "entries": [[re, im], ...]} in row-major order.
Json matrix_json(const CMatrix& m, const std::string& type);
Json channel_json(const Channel& c);
Json bijection_json(const FinBijection& b);

/// Accepts the matrix schema above, or a list of rows whose entries are
/// numbers or [re, im] pairs. BadState on malformed input.
CMatrix matrix_from_json(const Json& j);

/// Compact JSON with every double printed to 17 significant digits.
std::string dump(const Json& j);

}  // namespace yuppie::cli
