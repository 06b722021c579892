// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: polygon file ingestion, curve computation and
// CSV emission. Kept as a library so jobs can be driven in-process by tests.

#pragma once

#include <iosfwd>
#include <string>

#include "polydist/distribution.hpp"
#include "polydist/geometry.hpp"
#include "polydist/montecarlo.hpp"

namespace polydist::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidationFail = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceError = 3;
inline constexpr int kExitInternalError = 4;

enum class Command { pdf, cdf, simulate, validate, bounds };

struct JobSpec {
  Command command = Command::pdf;
  std::string polygon_a_path;
  std::string polygon_b_path;
  QuadratureConfig config;
  std::size_t n_samples = 4000;
  RandomSeed seed{1};
  int bins = 40;
  double threshold = 0.015;
  int workers = 1;
  std::string output_path;  // may be empty for `bounds`
};

// Parses a polygon file: a JSON object {"vertices": [[x, y], ...]}.
// Throws ParseError (with line/column context from the JSON parser) or
// PolygonValidationError naming the violated invariant.
Polygon parse_polygon_file(const std::string& path);

// Runs a job end to end. Results for `bounds` and `validate` are printed to
// `out`; diagnostics go to `err`. Returns one of the kExit* codes. Running
// the same JobSpec twice produces byte-identical output files.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// argv-level entry point (flag parsing + run).
int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace polydist::cli
