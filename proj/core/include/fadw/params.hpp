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

#include <optional>
#include <string>
#include <vector>

namespace fadw {

/// Tunable parameters of the rational approximation of w(z).
///
/// The derived quantities obey, up to machine rounding,
///   nu_m = t_margin / (2*pi)     and     h_i = nu_m / n_terms.
/// With the defaults (n_terms = 16, t_margin = 6) this gives
/// h_i = 5.968310365946075e-2.
struct ApproximationParams {
    int n_terms = 16;               // summation terms N
    double sigma = 1.5;             // shift constant, must be >= 1
    double t_margin = 6.0;          // Gaussian integration margin t_m
    double nu_m = 0.0;              // frequency margin, t_margin / (2*pi)
    double h_i = 0.0;               // sampling step, nu_m / n_terms
    double y_min = 1e-5;            // reference height of the small-y blend
    double y_narrow = 1e-6;         // ceiling of the narrow-band domain
    double z_cf_threshold = 15.0;   // |z| cutoff for the continued fraction

    friend bool operator==(const ApproximationParams&,
                           const ApproximationParams&) = default;
};

/// Builds a validated parameter set.
///
/// Rejects (std::invalid_argument): n_terms < 1, sigma < 1 (the validity
/// condition of the shifted expansion), broken height ordering
/// (requires 0 < y_narrow < y_min < 1), non-positive z_cf_threshold or
/// t_margin.
ApproximationParams make_params(int n_terms = 16, double sigma = 1.5,
                                double y_min = 1e-5, double y_narrow = 1e-6,
                                double z_cf_threshold = 15.0,
                                double t_margin = 6.0);

/// Expansion coefficients of the rational approximation, derived once per
/// parameter set and immutable afterwards.  Arrays are indexed by n-1 for
/// n = 1..N:
///   a[n-1] = 8*pi*h_i^2*n * exp(sigma^2 - (2*pi*h_i*n)^2) * sin(4*pi*h_i*n*sigma)
///   b[n-1] = 4*h_i        * exp(sigma^2 - (2*pi*h_i*n)^2) * cos(4*pi*h_i*n*sigma)
///   c[n-1] = 2*pi*h_i*n
/// pole_prefactor = 2*h_i*exp(sigma^2).
struct CoefficientSet {
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> c;
    double pole_prefactor = 0.0;

    friend bool operator==(const CoefficientSet&, const CoefficientSet&) = default;
};

/// Closed-form coefficient derivation.  Pure: same params give bit-identical
/// results.
CoefficientSet derive_coefficients(const ApproximationParams& params);

/// Partial parameter overrides, as accepted on the command line and in
/// key=value config files (keys: N, sigma, y_min, y_narrow, z_cf_threshold).
struct ParamOverrides {
    std::optional<int> n_terms;
    std::optional<double> sigma;
    std::optional<double> y_min;
    std::optional<double> y_narrow;
    std::optional<double> z_cf_threshold;
};

/// Parses a plain-text config file, one `key=value` per line.  Blank lines
/// and lines starting with '#' are ignored; unknown keys are rejected
/// (std::runtime_error with the offending line number).
ParamOverrides parse_params_file(const std::string& path);

/// Applies overrides on top of defaults and validates via make_params().
ApproximationParams apply_overrides(const ParamOverrides& overrides);

}  // namespace fadw
