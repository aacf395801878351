// Copyright 2026 The fadw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fadw/faddeeva.hpp"
#include "fadw/oracle.hpp"
#include "fadw/oracle_cache.hpp"
#include "fadw/params.hpp"

namespace fadw {

/// Componentwise relative errors |ref - approx| / |ref|, computed in quad
/// precision.  A reference component that is exactly zero yields a NaN
/// sentinel for that component (never an infinity); sentinels are excluded
/// from all aggregates.
std::pair<double, double> relative_errors(Complex approx,
                                          const oracle::OracleValue& ref);

/// Aggregates over the non-sentinel cells of a map.  Means are geometric
/// (the arithmetic mean of the stored log10 fields), matching the log10
/// representation of the grid; maxima are plain maxima.
struct ErrorStats {
    double max_dre = 0;
    double max_dim = 0;
    double mean_dre = 0;
    double mean_dim = 0;
};

struct ErrorMapGrid {
    std::vector<double> x_axis;       // nx values, linear spacing
    std::vector<double> y_axis;       // ny values, linear or log10 spacing
    std::vector<double> log10_dre;    // ny*nx cells, row-major over y then x
    std::vector<double> log10_dim;    // NaN marks a zero-reference sentinel
    ErrorStats stats;
};

ErrorStats compute_stats(const ErrorMapGrid& grid);

/// Identifies a rectangular sweep; the signature string keys the oracle
/// cache so a cache generated for a different grid is refused loudly.
struct GridSpec {
    double x0 = 0.0, x1 = 15.0;
    int nx = 100;
    double y0 = 1e-6, y1 = 15.0;
    int ny = 100;
    bool y_log = true;

    std::vector<double> x_values() const;
    std::vector<double> y_values() const;
    std::string signature() const;
};

class CacheMismatchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ground-truth provider for sweeps and samplers: either a preloaded cache
/// (validated record by record against the requested points) or the live
/// oracle.
class OracleSource {
  public:
    static OracleSource from_cache(oracle::OracleCache cache);
    static OracleSource live();

    bool is_live() const { return !cache_; }
    const std::string* signature() const;

    /// Value for the ordinal-th requested point.  Cache-backed sources
    /// require the stored coordinates to match (x, y) exactly as printed at
    /// 17 significant digits; any mismatch throws CacheMismatchError.
    oracle::OracleValue at(double x, double y, std::size_t ordinal) const;

  private:
    std::shared_ptr<const oracle::OracleCache> cache_;
};

/// Sweeps the dispatcher against the oracle over the grid and fills the
/// log10 error fields.  Rows are distributed over threads; the output is
/// bit-identical for any thread count.  Throws CacheMismatchError (naming
/// the expected signature) if a cache-backed source does not match the grid.
ErrorMapGrid sweep_domain(const GridSpec& spec,
                          const ApproximationParams& params,
                          const CoefficientSet& coeffs,
                          const OracleSource& oracle_source,
                          unsigned num_threads = 0);

/// The spectroscopy-relevant evaluation domain.
struct HitranDomain {
    double x0 = 0.0, x1 = 40000.0;
    double y0 = 1e-4, y1 = 100.0;
};

/// Deterministic sample of the domain: x uniform, y log-uniform, drawn from
/// a seeded 64-bit generator with an explicit bits-to-double mapping (so
/// identical across platforms).
std::vector<Complex> hitran_sample_points(std::size_t count,
                                          std::uint64_t seed,
                                          const HitranDomain& domain = {});

/// Signature string for a cached oracle subsample of the above.
std::string hitran_cache_signature(std::size_t count, std::uint64_t seed,
                                   std::size_t stride,
                                   const HitranDomain& domain = {});

struct AccuracyAggregates {
    double mean_dre = 0;  // geometric mean over checked points
    double mean_dim = 0;
    double max_dre = 0;
    double max_dim = 0;
    std::size_t points = 0;   // evaluated
    std::size_t checked = 0;  // compared against the oracle
};

/// Evaluates `count` seeded points and compares every stride-th one against
/// the oracle source (whose records must correspond to exactly those
/// subsampled points, in order).
AccuracyAggregates hitran_accuracy_sample(std::size_t count,
                                          std::uint64_t seed,
                                          const ApproximationParams& params,
                                          const CoefficientSet& coeffs,
                                          const OracleSource& oracle_source,
                                          std::size_t stride = 10,
                                          const HitranDomain& domain = {});

/// One sample of the cosine-kernel comparison underlying the expansion:
///   approx(t) = 2 sqrt(pi) h_i [1 + 2 sum_n exp(-(2 pi n h_i)^2)
///                                      cos(2 pi t n h_i)] exp(-sigma t)
///   exact(t)  = exp(-t^2/4) exp(-sigma t)
/// For small sigma the sampled curve exhibits periodic images near t = k/h_i;
/// by sigma ~ 1 they are damped below visibility.
struct KernelSample {
    double t;
    double approx;
    double exact;
};

std::vector<KernelSample> sample_cosine_kernel(double sigma, double t_max,
                                               int nt,
                                               const ApproximationParams& params);

/// CSV header `x,y,log10_dre,log10_dim`, one row per cell, row-major over y
/// then x, sentinels rendered as a literal `nan`, 17 significant digits.
void emit_map_csv(const ErrorMapGrid& grid, std::ostream& out);

/// Inverse of emit_map_csv; round-trips losslessly.
ErrorMapGrid parse_map_csv(std::istream& in);

}  // namespace fadw
