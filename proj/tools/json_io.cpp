#include "json_io.hpp"

#include <cstdio>

#include "yuppie/error.hpp"

namespace yuppie::cli {

Json matrix_json(const CMatrix& m, const std::string& type) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return Json{{"type", type}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json channel_json(const Channel& c) {
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(matrix_json(k, "kraus"));
  return Json{{"type", "channel"},
              {"in_dim", c.in_dim()},
              {"out_dim", c.out_dim()},
              {"kraus", std::move(kraus)},
              {"choi", matrix_json(c.choi(), "choi")}};
}

Json bijection_json(const FinBijection& b) { return Json{{"type", "bijection"}, {"perm", b.image}}; }

namespace {

Complex entry(const Json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  fail(ErrorKind::BadState, "matrix entries must be numbers or [re, im] pairs");
}

}  // namespace

CMatrix matrix_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries") || !j["rows"].is_number_unsigned() ||
        !j["cols"].is_number_unsigned() || !j["entries"].is_array()) {
      fail(ErrorKind::BadState, "matrix object needs rows, cols and entries");
    }
    const auto r = j["rows"].get<Eigen::Index>();
    const auto c = j["cols"].get<Eigen::Index>();
    const Json& e = j["entries"];
    if (static_cast<Eigen::Index>(e.size()) != r * c) fail(ErrorKind::BadState, "entries do not match rows x cols");
    CMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index k = 0; k < c; ++k) m(i, k) = entry(e[static_cast<std::size_t>(i * c + k)]);
    return m;
  }
  if (j.is_array()) {
    const auto r = static_cast<Eigen::Index>(j.size());
    const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0);
    CMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Json& row = j[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) fail(ErrorKind::BadState, "ragged matrix rows");
      for (Eigen::Index k = 0; k < c; ++k) m(i, k) = entry(row[static_cast<std::size_t>(k)]);
    }
    return m;
  }
  fail(ErrorKind::BadState, "a state must be a matrix object or a list of rows");
}

namespace {

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        write(v, out);
      }
      out += ']';
      return;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        write(v, out);
      }
      out += '}';
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, out);
  return out;
}

}  // namespace yuppie::cli
