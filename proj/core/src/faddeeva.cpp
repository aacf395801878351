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

#include "fadw/faddeeva.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace fadw {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;

// Largest argument exp() can take before overflowing to infinity.
constexpr double kExpOverflowLimit = 709.0;

constexpr double kDenominatorFloor = 1e-300;

}  // namespace

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::None: return "ok";
        case ErrorCode::NonFiniteInput: return "non-finite-input";
        case ErrorCode::Overflow: return "overflow";
        case ErrorCode::PoleProximity: return "pole-proximity";
    }
    return "unknown";
}

std::string to_string(const RegionTag& tag) {
    std::string out;
    if (tag.reflected) out += "ReflectedLowerHalf+";
    if (tag.mirrored) out += "ParityMirrored+";
    switch (tag.base) {
        case BasePath::Rational: out += "Rational"; break;
        case BasePath::ContinuedFraction: out += "ContinuedFraction"; break;
        case BasePath::NarrowBand: out += "NarrowBand"; break;
    }
    return out;
}

Complex exp_minus_z_sq(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    const double re_exponent = (y - x) * (y + x);  // y^2 - x^2
    if (re_exponent > kExpOverflowLimit)
        throw EvaluationError(ErrorCode::Overflow,
                              "exp(-z^2) overflows double range");
    const double mag = std::exp(re_exponent);
    const double angle = 2.0 * x * y;
    return {mag * std::cos(angle), -mag * std::sin(angle)};
}

Complex psi_eval(Complex z, const CoefficientSet& coeffs) {
    if (std::abs(z) < kDenominatorFloor)
        throw EvaluationError(ErrorCode::PoleProximity,
                              "psi_eval: argument too close to the origin pole");
    const Complex z_sq = z * z;
    Complex sum{0.0, 0.0};
    const std::size_t n = coeffs.c.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex den = coeffs.c[k] * coeffs.c[k] - z_sq;
        if (std::abs(den) < kDenominatorFloor)
            throw EvaluationError(ErrorCode::PoleProximity,
                                  "psi_eval: argument too close to a pole");
        const Complex num{coeffs.a[k] + coeffs.b[k] * z.imag(),
                          -coeffs.b[k] * z.real()};  // A_k - i z B_k
        sum += num / den;
    }
    // i * pole_prefactor / z
    const Complex pole =
        Complex{0.0, coeffs.pole_prefactor} / z;
    return pole + sum;
}

Complex psi_derivative(Complex z, const CoefficientSet& coeffs) {
    const Complex z_sq = z * z;
    Complex sum{0.0, 0.0};
    const std::size_t n = coeffs.c.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex den = coeffs.c[k] * coeffs.c[k] - z_sq;
        const Complex num{coeffs.a[k] + coeffs.b[k] * z.imag(),
                          -coeffs.b[k] * z.real()};
        const Complex minus_i_b{0.0, -coeffs.b[k]};
        sum += (minus_i_b * den + 2.0 * z * num) / (den * den);
    }
    return -Complex{0.0, coeffs.pole_prefactor} / z_sq + sum;
}

Complex w_rational(Complex z, const ApproximationParams& params,
                   const CoefficientSet& coeffs) {
    return psi_eval({z.real(), z.imag() + params.sigma}, coeffs);
}

Complex w_continued_fraction(Complex z, int depth, double z_cf_threshold) {
    const double norm_sq = z.real() * z.real() + z.imag() * z.imag();
    if (norm_sq < z_cf_threshold * z_cf_threshold)
        throw std::domain_error(
            "w_continued_fraction: |z| below the continued-fraction cutoff");
    Complex tail{0.0, 0.0};
    for (int k = depth; k >= 1; --k) tail = (0.5 * k) / (z - tail);
    return Complex{0.0, kInvSqrtPi} / (z - tail);
}

Complex w_narrow_band(double x, double y, const ApproximationParams& params,
                      const CoefficientSet& coeffs) {
    const Complex at_ref = w_rational({x, params.y_min}, params, coeffs);
    const Complex at_y = w_rational({x, y}, params, coeffs);
    const double f = y / params.y_min;
    const double re = (1.0 - f) * std::exp(-x * x) + f * at_ref.real();
    return {re, at_y.imag()};
}

Complex reflect_lower_half(Complex z, Complex w_upper) {
    return 2.0 * exp_minus_z_sq(z) - w_upper;
}

Complex mirror_negative_x(Complex w_pos) { return std::conj(w_pos); }

EvaluationResult evaluate(Complex z, const ApproximationParams& params,
                          const CoefficientSet& coeffs) {
    const double x = z.real();
    const double y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y))
        throw EvaluationError(ErrorCode::NonFiniteInput,
                              "evaluate: non-finite argument");

    if (y < 0.0) {
        EvaluationResult inner = evaluate(-z, params, coeffs);
        inner.region.reflected = true;
        inner.value = reflect_lower_half(z, inner.value);
        return inner;
    }
    if (x < 0.0) {
        EvaluationResult inner = evaluate({-x, y}, params, coeffs);
        inner.region.mirrored = true;
        inner.value = mirror_negative_x(inner.value);
        return inner;
    }

    const double thr = params.z_cf_threshold;
    if (x * x + y * y >= thr * thr)
        return {w_continued_fraction(z, kContinuedFractionDepth, thr),
                {BasePath::ContinuedFraction}};
    if (y < params.y_narrow)
        return {w_narrow_band(x, y, params, coeffs), {BasePath::NarrowBand}};
    return {w_rational(z, params, coeffs), {BasePath::Rational}};
}

std::vector<PointResult> evaluate_batch(std::span<const Complex> points,
                                        const ApproximationParams& params,
                                        const CoefficientSet& coeffs,
                                        unsigned num_threads) {
    std::vector<PointResult> out(points.size());

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const EvaluationResult r = evaluate(points[i], params, coeffs);
                out[i] = {r.value, r.region, ErrorCode::None};
            } catch (const EvaluationError& e) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                out[i] = {{nan, nan}, {}, e.code()};
            } catch (const std::domain_error&) {
                const double nan = std::numeric_limits<double>::quiet_NaN();
                out[i] = {{nan, nan}, {}, ErrorCode::NonFiniteInput};
            }
        }
    };

    if (num_threads == 0) num_threads = std::thread::hardware_concurrency();
    if (num_threads == 0) num_threads = 1;

    constexpr std::size_t kMinPerThread = 4096;
    const std::size_t max_useful =
        points.size() / kMinPerThread + (points.size() % kMinPerThread != 0);
    num_threads = static_cast<unsigned>(
        std::min<std::size_t>(num_threads, std::max<std::size_t>(1, max_useful)));

    if (num_threads == 1) {
        run(0, points.size());
        return out;
    }

    std::vector<std::thread> workers;
    workers.reserve(num_threads);
    const std::size_t chunk = (points.size() + num_threads - 1) / num_threads;
    for (unsigned t = 0; t < num_threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(points.size(), begin + chunk);
        if (begin >= end) break;
        workers.emplace_back(run, begin, end);
    }
    for (auto& w : workers) w.join();
    return out;
}

}  // namespace fadw
