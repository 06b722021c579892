// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#include "polydist/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydist/closed_forms.hpp"
#include "polydist/errors.hpp"
#include "polydist/version.hpp"

namespace polydist::cli {
namespace {

// Decimal with 12 significant digits, locale-independent.
std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt5(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::pdf: return "pdf";
    case Command::cdf: return "cdf";
    case Command::simulate: return "simulate";
    case Command::validate: return "validate";
    case Command::bounds: return "bounds";
  }
  return "?";
}

std::string header_comment(const JobSpec& job) {
  std::ostringstream os;
  os << "# polydist " << kVersion << " command=" << command_name(job.command)
     << " a=" << job.polygon_a_path << " b=" << job.polygon_b_path
     << " theta_divisions=" << job.config.theta_divisions
     << " r_points=" << job.config.r_points << " seed=" << job.seed.value
     << " workers=" << job.workers;
  if (job.command == Command::simulate || job.command == Command::validate) {
    os << " n_samples=" << job.n_samples;
  }
  if (job.command == Command::simulate) os << " bins=" << job.bins;
  if (job.command == Command::validate) {
    os << " threshold=" << fmt12(job.threshold);
  }
  os << "\n";
  return os.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open output file for writing");
  return out;
}

int run_pdf(const JobSpec& job, const Polygon& a, const Polygon& b) {
  const DistanceDistribution dist =
      pdf_curve(a, b, job.config, job.workers);
  std::ofstream out = open_output(job.output_path);
  out << header_comment(job) << "r,f\n";
  for (std::size_t i = 0; i < dist.r_grid.size(); ++i) {
    out << fmt12(dist.r_grid[i]) << "," << fmt12(dist.pdf_values[i]) << "\n";
  }
  return kExitSuccess;
}

int run_cdf(const JobSpec& job, const Polygon& a, const Polygon& b) {
  const DistanceDistribution dist =
      pdf_curve(a, b, job.config, job.workers);
  const std::vector<CdfPoint> cdf = cdf_curve(dist);
  std::ofstream out = open_output(job.output_path);
  out << header_comment(job) << "r,F\n";
  for (const CdfPoint& p : cdf) {
    out << fmt12(p.r) << "," << fmt12(p.F) << "\n";
  }
  return kExitSuccess;
}

int run_simulate(const JobSpec& job, const Polygon& a, const Polygon& b) {
  const SampleSet s =
      empirical_distances(a, b, job.n_samples, job.seed, job.workers);
  const std::vector<HistogramBin> hist = histogram_pdf(s, job.bins);
  const double mean =
      std::accumulate(s.distances.begin(), s.distances.end(), 0.0) /
      static_cast<double>(s.n_pairs);
  std::ofstream out = open_output(job.output_path);
  out << header_comment(job);
  out << "# n=" << job.n_samples << " seed=" << job.seed.value
      << " n_pairs=" << s.n_pairs << " min=" << fmt12(s.distances.front())
      << " max=" << fmt12(s.distances.back()) << " mean=" << fmt12(mean)
      << "\n";
  out << "bin_center,density\n";
  for (const HistogramBin& hb : hist) {
    out << fmt12(hb.center) << "," << fmt12(hb.density) << "\n";
  }
  return kExitSuccess;
}

// Relative disagreement between the direct and triangle-sum pipelines,
// taken pointwise; both values zero counts as agreement.
double pipelines_max_rel_diff(const DistanceDistribution& x,
                              const DistanceDistribution& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.pdf_values.size(); ++i) {
    const double fx = x.pdf_values[i];
    const double fy = y.pdf_values[i];
    const double denom = std::max(std::fabs(fx), std::fabs(fy));
    if (denom == 0.0) continue;
    worst = std::max(worst, std::fabs(fx - fy) / denom);
  }
  return worst;
}

int run_validate(const JobSpec& job, const Polygon& a, const Polygon& b,
                 std::ostream& console) {
  const DistanceDistribution direct =
      pdf_curve(a, b, job.config, job.workers);
  const DistanceDistribution viasum =
      pdf_via_triangle_sum(a, b, job.config, job.workers);
  const double pipe_diff = pipelines_max_rel_diff(direct, viasum);
  if (pipe_diff > 1e-9) {
    throw InternalError("pipeline disagreement: triangle-sum vs direct "
                        "relative difference " +
                        fmt12(pipe_diff));
  }
  const std::vector<CdfPoint> cdf = cdf_curve(direct);
  const SampleSet s =
      empirical_distances(a, b, job.n_samples, job.seed, job.workers);
  const KsResult ks = ks_statistic(s, cdf);
  const bool pass = ks.statistic < job.threshold;

  std::ofstream out = open_output(job.output_path);
  out << header_comment(job) << "metric,value\n";
  out << "ks_statistic," << fmt12(ks.statistic) << "\n";
  out << "threshold," << fmt12(job.threshold) << "\n";
  out << "pipeline_max_rel_diff," << fmt12(pipe_diff) << "\n";
  out << "ecdf_extrapolated," << (ks.extrapolated ? 1 : 0) << "\n";
  out << "result," << (pass ? "pass" : "fail") << "\n";

  console << "KS statistic " << fmt12(ks.statistic) << " vs threshold "
          << fmt12(job.threshold) << ": " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitSuccess : kExitValidationFail;
}

int run_bounds(const JobSpec& job, const Polygon& a, const Polygon& b,
               std::ostream& console) {
  const DistanceBounds bounds = distance_bounds(a, b);
  console << fmt5(bounds.r_min) << ", " << fmt5(bounds.r_max) << "\n";
  if (!job.output_path.empty()) {
    std::ofstream out = open_output(job.output_path);
    out << header_comment(job) << "r_min,r_max\n";
    out << fmt12(bounds.r_min) << "," << fmt12(bounds.r_max) << "\n";
  }
  return kExitSuccess;
}

void validate_job(const JobSpec& job) {
  job.config.validate();
  if (job.workers < 1) throw InvalidInputError("workers must be >= 1");
  if (job.bins < 2) throw InvalidInputError("bins must be >= 2");
  if (!(job.threshold > 0)) throw InvalidInputError("threshold must be > 0");
  const bool needs_output = job.command != Command::bounds;
  if (needs_output && job.output_path.empty()) {
    throw InvalidInputError("an output path (-o) is required");
  }
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    validate_job(job);
    // Both inputs must exist and parse before any computation starts.
    const Polygon a = parse_polygon_file(job.polygon_a_path);
    const Polygon b = parse_polygon_file(job.polygon_b_path);
    switch (job.command) {
      case Command::pdf: return run_pdf(job, a, b);
      case Command::cdf: return run_cdf(job, a, b);
      case Command::simulate: return run_simulate(job, a, b);
      case Command::validate: return run_validate(job, a, b, out);
      case Command::bounds: return run_bounds(job, a, b, out);
    }
    return kExitInternalError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PolygonValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InvalidInputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

int main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"distance distributions between two random points in polygons"};
  app.set_version_flag("--version", std::string("polydist ") + kVersion);

  JobSpec job;
  const auto add_common = [&](CLI::App* sub, bool with_output) {
    sub->add_option("--a", job.polygon_a_path, "polygon A file (JSON)")
        ->required();
    sub->add_option("--b", job.polygon_b_path, "polygon B file (JSON)")
        ->required();
    sub->add_option("--workers", job.workers, "worker thread count");
    if (with_output) {
      sub->add_option("-o,--output", job.output_path, "output CSV path")
          ->required();
    }
  };
  const auto add_quadrature = [&](CLI::App* sub) {
    sub->add_option("--theta-divisions", job.config.theta_divisions,
                    "theta quadrature divisions (>= 8)");
    sub->add_option("--r-points", job.config.r_points,
                    "points on the r grid (>= 2)");
  };
  const auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--n-samples", job.n_samples,
                    "random points per polygon (n^2 pair distances)");
    sub->add_option("--seed", job.seed.value, "random seed");
  };

  CLI::App* pdf = app.add_subcommand("pdf", "write the PDF curve as CSV");
  add_common(pdf, true);
  add_quadrature(pdf);

  CLI::App* cdf = app.add_subcommand("cdf", "write the CDF curve as CSV");
  add_common(cdf, true);
  add_quadrature(cdf);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo distance histogram as CSV");
  add_common(simulate, true);
  add_sampling(simulate);
  simulate->add_option("--bins", job.bins, "histogram bin count (>= 2)");

  CLI::App* validate = app.add_subcommand(
      "validate", "compare both pipelines against Monte Carlo (KS test)");
  add_common(validate, true);
  add_quadrature(validate);
  add_sampling(validate);
  validate->add_option("--threshold", job.threshold,
                       "KS pass/fail threshold");

  CLI::App* bounds =
      app.add_subcommand("bounds", "print the distance support interval");
  add_common(bounds, false);
  bounds->add_option("-o,--output", job.output_path,
                     "optional output CSV path");

  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/error text
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  if (pdf->parsed()) job.command = Command::pdf;
  else if (cdf->parsed()) job.command = Command::cdf;
  else if (simulate->parsed()) job.command = Command::simulate;
  else if (validate->parsed()) job.command = Command::validate;
  else job.command = Command::bounds;

  return run(job, out, err);
}

}  // namespace polydist::cli
