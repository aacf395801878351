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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "fadw/params.hpp"

namespace fadw::oracle {

// Ground-truth evaluator for the test and error-analysis layers.  Values are
// produced by two independent methods (a high-precision Maclaurin series and
// adaptive panel quadrature of the damped-oscillatory integral
// representation) and cross-validated before they are emitted; spot checks
// against a deep Laplace continued fraction and a Lorentzian-convolution
// quadrature cover the regions one of the primary methods cannot reach.
// Never called from the double-precision fast path.

using Float128 = __float128;

/// Digits the oracle targets for every validated value.
inline constexpr int kOracleDigits = 30;

/// Every value the oracle emits as validated carries est_error at or below
/// this bound (relative, complex norm).
inline constexpr double kValidatedEstError = 1e-25;

struct OracleValue {
    Float128 re;
    Float128 im;
    double est_error;  // conservative relative bound on the oracle's own error

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

class OracleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Maclaurin-series evaluation of w(z), summed in 130-digit (and, beyond
/// |z| = 12, 300-digit) binary floating point until the term magnitude drops
/// below 10^-(digits+5); est_error combines the first omitted term with a
/// rounding model of the summation.  Practical radius |z| <= 12 for the
/// public entry point; throws OracleError beyond it or if the term budget is
/// exhausted.
OracleValue oracle_series(std::complex<double> z, int digits = kOracleDigits);

/// Adaptive panel quadrature of
///   w(x, y) = (1/sqrt(pi)) * integral_0^infty exp(-t^2/4 - y t + i x t) dt
/// in quad precision, for Im z >= 0.  The truncation point T satisfies
/// exp(-T^2/4 - y T) < 10^-(digits+5); for large x the same integral is
/// taken along the equivalent upward contour leg (the discarded horizontal
/// leg is bounded and folded into est_error), which removes the oscillation.
/// Throws OracleError if the panel budget cannot reach the requested digits.
OracleValue oracle_quadrature(std::complex<double> z,
                              int digits = kOracleDigits);

/// Laplace continued fraction at a given depth in quad precision.  Only a
/// spot-check instrument: reliable far from the real axis or for large |z|.
OracleValue oracle_cf(std::complex<double> z, int depth);

/// Quadrature of the Lorentzian-convolution (principal-value) representation
///   w(x, y) = (i/pi) * integral exp(-t^2) / (z - t) dt,      y > 0,
/// through the substitution t = x + y*tan(theta).  Independent of the
/// damped-oscillatory form; used as the cross-check where neither the series
/// nor the continued fraction applies.
OracleValue oracle_pv(std::complex<double> z, int digits = kOracleDigits);

/// Validated full-plane evaluation: dispatches (series for |z| <= 10,
/// quadrature above), cross-checks every value with an independent method,
/// and throws OracleError if the two disagree beyond 10x the combined
/// est_error bounds (never averages).  Lower half-plane via the reflection
/// identity in quad precision; negative x via conjugate parity.
OracleValue oracle_w(std::complex<double> z);

/// Dawson integral for real arguments, computed two ways (series/asymptotic
/// sum and the quadrature of the sine transform) and cross-validated.
OracleValue oracle_daw(double x);

/// erf(z) from its Maclaurin series, cross-checked through the w identity.
OracleValue oracle_erf(std::complex<double> z);

/// Fresnel integral from its Maclaurin series, cross-checked through the
/// w identity.
OracleValue oracle_fresnel(std::complex<double> z);

/// Extended-precision recomputation of the coefficient closed forms, for
/// ulp-level validation of the double-precision derivation.
struct ReferenceCoefficients {
    std::vector<Float128> a;
    std::vector<Float128> b;
    std::vector<Float128> c;
    Float128 pole_prefactor;
};
ReferenceCoefficients reference_coefficients(const ApproximationParams& params);

/// The rational sum recomputed term by term in quad precision (same finite
/// formula as psi_eval, higher precision).
OracleValue reference_psi(std::complex<double> z,
                          const ApproximationParams& params);

/// Decimal formatting with 33 significant digits (round-trips Float128).
std::string to_string(Float128 v);
Float128 parse_float128(const std::string& s);

}  // namespace fadw::oracle
