#pragma once

#include "slodowy/matrix.hpp"
#include "slodowy/partitions.hpp"
#include "slodowy/rational.hpp"

#include <json.hpp>

#include <string>

namespace slodowy {

/// All JSON produced by the library keeps insertion order, so output is
/// byte-reproducible.  Rationals travel as strings ("2", "-3/4"), matrices
/// as row-major arrays of such strings, partitions as arrays of integers.
using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j)
{
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return rational_from_string(j.get<std::string>());
}

inline Json mat_to_json(const Mat& m)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Mat mat_from_json(const Json& j)
{
  if (!j.is_array() || j.empty()) throw std::invalid_argument("mat_from_json: expected rows");
  const std::size_t rows = j.size(), cols = j.at(0).size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw std::invalid_argument("mat_from_json: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j.at(i).at(c));
  }
  return m;
}

inline Json partition_to_json(const Partition& p)
{
  Json a = Json::array();
  for (std::size_t k = 0; k < p.size(); ++k) a.push_back(p[k]);
  return a;
}

inline Partition partition_from_json(const Json& j)
{
  std::vector<int> parts;
  for (const auto& x : j) parts.push_back(x.get<int>());
  return Partition(std::move(parts));
}

} // namespace slodowy
