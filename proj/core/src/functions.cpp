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

#include "fadw/functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fadw {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrt2 = 0.70710678118654752440;

Complex w_of(Complex z, const ApproximationParams& params,
             const CoefficientSet& coeffs) {
    return evaluate(z, params, coeffs).value;
}

// exp(w) with the same overflow discipline as exp_minus_z_sq.
Complex checked_exp(Complex w) {
    if (w.real() > 709.0)
        throw EvaluationError(ErrorCode::Overflow,
                              "exp() overflows double range");
    const double mag = std::exp(w.real());
    return {mag * std::cos(w.imag()), mag * std::sin(w.imag())};
}

}  // namespace

VoigtPair voigt(double x, double y, const ApproximationParams& params,
                const CoefficientSet& coeffs) {
    if (y < 0.0)
        throw std::domain_error("voigt: requires y >= 0");
    const Complex w = w_of({x, y}, params, coeffs);
    return {w.real(), w.imag()};
}

Complex erf_complex(Complex z, const ApproximationParams& params,
                    const CoefficientSet& coeffs) {
    const Complex iz{-z.imag(), z.real()};
    return 1.0 - exp_minus_z_sq(z) * w_of(iz, params, coeffs);
}

Complex dawson(Complex z, const ApproximationParams& params,
               const CoefficientSet& coeffs) {
    const Complex diff = w_of(z, params, coeffs) - exp_minus_z_sq(z);
    // sqrt(pi)/(2i) * diff == (sqrt(pi)/2) * (im, -re)
    return {0.5 * kSqrtPi * diff.imag(), -0.5 * kSqrtPi * diff.real()};
}

Complex plasma_dispersion(Complex z, const ApproximationParams& params,
                          const CoefficientSet& coeffs) {
    return Complex{0.0, kSqrtPi} * w_of(z, params, coeffs);
}

Complex fresnel(Complex z, const ApproximationParams& params,
                const CoefficientSet& coeffs) {
    const Complex z_sq = z * z;
    // exp(i pi z^2 / 2)
    const Complex phase = checked_exp(
        {-0.5 * std::numbers::pi * z_sq.imag(), 0.5 * std::numbers::pi * z_sq.real()});
    const Complex arg = 0.5 * kSqrtPi * Complex{1.0, 1.0} * z;
    const Complex bracket = 1.0 - phase * w_of(arg, params, coeffs);
    return 0.5 * Complex{1.0, 1.0} * bracket;
}

Complex normal_distribution(Complex z, const ApproximationParams& params,
                            const CoefficientSet& coeffs) {
    const Complex zs = z * kInvSqrt2;  // z / sqrt(2)
    const Complex izs{-zs.imag(), zs.real()};
    return 0.5 * (1.0 - exp_minus_z_sq(zs) * w_of(izs, params, coeffs));
}

Complex erfc_scaled(Complex z, const ApproximationParams& params,
                    const CoefficientSet& coeffs) {
    const Complex iz{-z.imag(), z.real()};
    return w_of(iz, params, coeffs);
}

}  // namespace fadw
