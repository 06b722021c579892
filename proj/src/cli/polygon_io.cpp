// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polydist/cli.hpp"
#include "polydist/errors.hpp"

namespace polydist::cli {

Polygon parse_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);  // error messages carry line/column
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices")) {
    throw ParseError(path + ": expected an object with a \"vertices\" array");
  }
  const nlohmann::json& verts = doc["vertices"];
  if (!verts.is_array()) {
    throw ParseError(path + ": \"vertices\" must be an array of [x, y] pairs");
  }
  std::vector<Point> pts;
  pts.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const nlohmann::json& v = verts[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      throw ParseError(path + ": vertex " + std::to_string(i) +
                       " is not a [x, y] number pair");
    }
    const double x = v[0].get<double>();
    const double y = v[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw PolygonValidationError(path + ": vertex " + std::to_string(i) +
                                   " has a non-finite coordinate");
    }
    pts.push_back({x, y});
  }
  try {
    return Polygon(std::move(pts));
  } catch (const PolygonValidationError& e) {
    throw PolygonValidationError(path + ": " + e.what());
  }
}

}  // namespace polydist::cli
