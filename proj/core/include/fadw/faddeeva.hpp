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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fadw/params.hpp"

namespace fadw {

using Complex = std::complex<double>;

/// Reasons an evaluation can fail.
enum class ErrorCode : unsigned char {
    None = 0,
    NonFiniteInput,   // x or y is NaN/Inf
    Overflow,         // exp(-z^2) in the reflection exceeds double range
    PoleProximity,    // a rational-sum denominator is below 1e-300
};

const char* to_string(ErrorCode code);

class EvaluationError : public std::runtime_error {
  public:
    EvaluationError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Base computation path chosen by the dispatcher.
enum class BasePath : unsigned char { Rational, ContinuedFraction, NarrowBand };

/// Which path produced a value, plus the identity compositions applied on
/// top of it.  Reflection (lower half-plane) is always applied outside the
/// parity mirror (negative x).
struct RegionTag {
    BasePath base = BasePath::Rational;
    bool reflected = false;
    bool mirrored = false;

    friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

/// Composed name, e.g. "ReflectedLowerHalf+ParityMirrored+Rational".
std::string to_string(const RegionTag& tag);

struct EvaluationResult {
    Complex value;
    RegionTag region;
};

/// Truncation depth of the Laplace continued fraction.  Calibrated against
/// the extended-precision oracle over |z| in [15, 1e6], Im z >= 0: depth 7
/// is the smallest whose worst relative error (on the |z| = 15 circle near
/// the real axis) stays at or below 1e-15; from there on the error sits at
/// the double rounding floor (~2.6e-16).  Shipped with one extra step of
/// margin.  See tools/calibrate_cf.
inline constexpr int kContinuedFractionDepth = 8;

/// exp(-z^2), evaluated as exp(y^2-x^2) * (cos(2xy) - i*sin(2xy)) so the
/// magnitude is controlled before any complex product.  Throws
/// EvaluationError(Overflow) once y^2 - x^2 exceeds the double exp range.
Complex exp_minus_z_sq(Complex z);

/// The rational sum psi(z) = i*pole_prefactor/z + sum (A_n - i z B_n)/(C_n^2 - z^2).
/// Callers pass already-shifted arguments; z must avoid 0 and +-C_n.
/// Throws EvaluationError(PoleProximity) if a denominator falls below 1e-300.
Complex psi_eval(Complex z, const CoefficientSet& coeffs);

/// Term-wise derivative of psi; used by the differential-equation self-test.
Complex psi_derivative(Complex z, const CoefficientSet& coeffs);

/// w(z) ~= psi(z + i*sigma) for Im z >= 0.  With sigma >= 1 the shifted
/// argument keeps every denominator away from zero.
Complex w_rational(Complex z, const ApproximationParams& params,
                   const CoefficientSet& coeffs);

/// Laplace continued fraction mu0/(z- (1/2)/(z- 1/(z- (3/2)/(z- ...)))),
/// mu0 = i/sqrt(pi), evaluated bottom-up from `depth`.
/// Requires |z| >= z_cf_threshold (throws std::domain_error otherwise as a
/// caller bug) and Im z >= 0.
Complex w_continued_fraction(Complex z, int depth = kContinuedFractionDepth,
                             double z_cf_threshold = 15.0);

/// Small-y evaluation over 0 <= x <= z_cf_threshold, 0 <= y < y_narrow.
/// The real part blends exp(-x^2) at y = 0 with Re w(x, y_min) linearly in
/// y; the imaginary part is taken from the rational sum at the actual
/// height, which stays well conditioned down to y = 0.
Complex w_narrow_band(double x, double y, const ApproximationParams& params,
                      const CoefficientSet& coeffs);

/// w(z) = 2*exp(-z^2) - w(-z) for Im z < 0, given w_upper = w(-z).
/// Throws EvaluationError(Overflow) instead of producing infinities.
Complex reflect_lower_half(Complex z, Complex w_upper);

/// w(-x + iy) = conj(w(x + iy)) for y >= 0; the input is w(|x| + iy).
Complex mirror_negative_x(Complex w_pos);

/// Full-plane evaluation.  Dispatch, in order:
///   1. Im z < 0  -> recurse on -z, then the reflection identity;
///   2. Re z < 0  -> recurse on (-Re z, Im z), then conjugate parity;
///   3. |z| >= z_cf_threshold              -> continued fraction;
///   4. Im z < y_narrow                    -> narrow band;
///   5. otherwise                          -> rational sum.
/// |z| is compared via x^2 + y^2 against the squared threshold, making the
/// region assignment total and deterministic at boundaries.
/// Throws EvaluationError on non-finite input or reflection overflow.
EvaluationResult evaluate(Complex z, const ApproximationParams& params,
                          const CoefficientSet& coeffs);

/// Batch element: value/region plus a per-point error code; a failing point
/// never poisons the rest of the batch.
struct PointResult {
    Complex value;
    RegionTag region;
    ErrorCode error = ErrorCode::None;

    bool ok() const noexcept { return error == ErrorCode::None; }
};

/// Element-wise evaluate() over a sequence, order preserved.  Work is
/// partitioned across threads (0 = hardware default); results are
/// bit-identical regardless of the partitioning since every point is a pure
/// function of (z, params, coeffs).
std::vector<PointResult> evaluate_batch(std::span<const Complex> points,
                                        const ApproximationParams& params,
                                        const CoefficientSet& coeffs,
                                        unsigned num_threads = 0);

}  // namespace fadw
