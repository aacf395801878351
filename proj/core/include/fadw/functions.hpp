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

#include "fadw/faddeeva.hpp"
#include "fadw/params.hpp"

namespace fadw {

/// The special-function family, each reduced to evaluate(w).  All of them
/// share the overflow-guarded exp(-z^2) kernel of the core module and
/// propagate its EvaluationError on extreme arguments.

struct VoigtPair {
    double k;  // Voigt function, Re w(x+iy)
    double l;  // imaginary companion, Im w(x+iy)
};

/// Voigt function and companion for y >= 0 (rejects y < 0 with
/// std::domain_error).
VoigtPair voigt(double x, double y, const ApproximationParams& params,
                const CoefficientSet& coeffs);

/// erf(z) = 1 - exp(-z^2) w(iz).
Complex erf_complex(Complex z, const ApproximationParams& params,
                    const CoefficientSet& coeffs);

/// daw(z) = sqrt(pi) (w(z) - exp(-z^2)) / (2i).
Complex dawson(Complex z, const ApproximationParams& params,
               const CoefficientSet& coeffs);

/// Z(z) = i sqrt(pi) w(z).
Complex plasma_dispersion(Complex z, const ApproximationParams& params,
                          const CoefficientSet& coeffs);

/// Fresnel integral F(z) = integral_0^z exp(i pi t^2 / 2) dt
///                       = (1+i) [1 - exp(i pi z^2 / 2) w(sqrt(pi)(1+i)z/2)] / 2.
/// The inner w argument can leave the upper half-plane, exercising the
/// reflection path; its overflow is propagated for large |z|.
Complex fresnel(Complex z, const ApproximationParams& params,
                const CoefficientSet& coeffs);

/// Phi(z) = (1/sqrt(2 pi)) integral_0^z exp(-t^2/2) dt
///        = [1 - exp(-z^2/2) w(iz/sqrt(2))] / 2.
/// Note: no +1/2 offset; Phi(0) = 0, odd in z.
Complex normal_distribution(Complex z, const ApproximationParams& params,
                            const CoefficientSet& coeffs);

/// Scaled complementary error function exp(z^2) erfc(z) = w(iz).
Complex erfc_scaled(Complex z, const ApproximationParams& params,
                    const CoefficientSet& coeffs);

}  // namespace fadw
