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

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "fadw/oracle.hpp"
#include "oracle_internal.hpp"

namespace fadw::oracle {

namespace detail {

namespace {

// Gauss-Legendre rule on [-1, 1], nodes refined to quad precision by Newton
// iteration on the Legendre recurrence.
struct GlRule {
    std::vector<f128> nodes;
    std::vector<f128> weights;
};

GlRule make_rule(int n) {
    GlRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        f128 x = cos(M_PI * (i + 0.75) / (n + 0.5));
        f128 dp = 1;
        for (int it = 0; it < 6; ++it) {
            f128 p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const f128 p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            x -= p1 / dp;
        }
        const f128 w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GlRule& rule16() {
    static const GlRule r = make_rule(16);
    return r;
}
const GlRule& rule32() {
    static const GlRule r = make_rule(32);
    return r;
}

template <class F>
Cplx128 apply_rule(const GlRule& rule, const F& f, f128 a, f128 b) {
    const f128 half = (b - a) / 2;
    const f128 mid = (a + b) / 2;
    Cplx128 acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

struct Segment {
    f128 a, b;
    Cplx128 value;  // 32-point estimate
    f128 err;       // |G32 - G16|

    bool operator<(const Segment& o) const { return err < o.err; }
};

template <class F>
Segment make_segment(const F& f, f128 a, f128 b) {
    Segment s;
    s.a = a;
    s.b = b;
    const Cplx128 coarse = apply_rule(rule16(), f, a, b);
    s.value = apply_rule(rule32(), f, a, b);
    s.err = qabs(s.value - coarse);
    return s;
}

}  // namespace

AdaptiveOutcome integrate_adaptive(const std::function<Cplx128(f128)>& f,
                                   const std::vector<f128>& breakpoints,
                                   f128 abs_tol_target, f128 abs_tol_required,
                                   int max_segments) {
    std::priority_queue<Segment> queue;
    f128 total_err = 0;
    int segments = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) continue;
        Segment s = make_segment(f, breakpoints[i], breakpoints[i + 1]);
        total_err += s.err;
        queue.push(std::move(s));
        ++segments;
    }
    // Refine the worst segment until the target is met; the |G32-G16|
    // estimator bottoms out at the quad-precision rounding floor, so bail
    // once refinement stops paying instead of splitting forever.
    int stalls = 0;
    while (total_err > abs_tol_target && segments < max_segments &&
           stalls < 64) {
        Segment worst = queue.top();
        queue.pop();
        const f128 before = total_err;
        total_err -= worst.err;
        const f128 mid = (worst.a + worst.b) / 2;
        Segment left = make_segment(f, worst.a, mid);
        Segment right = make_segment(f, mid, worst.b);
        total_err += left.err + right.err;
        queue.push(std::move(left));
        queue.push(std::move(right));
        ++segments;
        if (total_err > before * f128(0.999))
            ++stalls;
        else
            stalls = 0;
    }
    AdaptiveOutcome out;
    out.converged = !(total_err > abs_tol_required);
    out.err_abs = total_err;
    out.segments = segments;
    while (!queue.empty()) {
        out.value += queue.top().value;
        out.value_l1 += qabs(queue.top().value);
        queue.pop();
    }
    return out;
}

}  // namespace detail

namespace {

using detail::Cplx128;
using detail::f128;

constexpr double kLn10 = 2.302585092994045684;

std::vector<f128> uniform_breakpoints(f128 lo, f128 hi, int pieces) {
    std::vector<f128> bp(pieces + 1);
    for (int i = 0; i <= pieces; ++i)
        bp[i] = lo + (hi - lo) * i / pieces;
    return bp;
}

}  // namespace

namespace detail {

OracleValue quad_w_xy(f128 fx128, f128 fy128, int digits) {
    const double x = static_cast<double>(fx128);
    const double y = static_cast<double>(fy128);
    if (!std::isfinite(x) || !std::isfinite(y))
        throw OracleError("oracle_quadrature: non-finite argument");
    if (y < 0.0)
        throw OracleError("oracle_quadrature: requires Im z >= 0");
    digits = std::clamp(digits, 10, 32);

    const double big_l = (digits + 6) * kLn10;  // target tail exponent
    // Truncation of the real-axis integral: T solves T^2/4 + y T = L.
    const double t_end = 2.0 * big_l / (std::sqrt(y * y + big_l) + y);
    const double count_real = std::abs(x) * t_end / (2.0 * M_PI);

    const bool vertical_ok = x > 0.0 && x * x > 1.3 * big_l;
    double leg = 0.0, count_vert = std::numeric_limits<double>::infinity();
    if (vertical_ok) {
        // Upward contour leg: u solves x u - u^2/4 = L.
        leg = 2.0 * big_l / (x + std::sqrt(x * x - big_l));
        count_vert = y * leg / (2.0 * M_PI);
    }

    const f128 tol_target = detail::pow10_f128(-(digits + 4));
    const f128 tol_required = detail::pow10_f128(-digits);
    const int max_segments = 40000;
    detail::AdaptiveOutcome outcome;
    f128 extra_err = 0;

    if (vertical_ok && count_vert < count_real) {
        // i/sqrt(pi) * int_0^A exp(u^2/4 - x u) (cos(yu) - i sin(yu)) du;
        // the discarded horizontal return leg is bounded by exp(-L).
        const f128 fx = fx128, fy = fy128;
        auto f = [fx, fy](f128 u) -> Cplx128 {
            const f128 mag = detail::qexp(u * u / 4 - fx * u);
            return {mag * detail::qcos(fy * u), -mag * detail::qsin(fy * u)};
        };
        const int pieces = std::max(8, static_cast<int>(3.0 * count_vert) + 1);
        outcome = detail::integrate_adaptive(
            f, uniform_breakpoints(0, f128(leg), pieces), tol_target,
            tol_required, max_segments);
        outcome.value = Cplx128{0, 1} * outcome.value;
        extra_err = detail::qexp(f128(-big_l)) * detail::kSqrtPi128;
    } else {
        // (1/sqrt(pi)) prefactor applied after integrating
        // exp(-t^2/4 - y t) (cos(xt) + i sin(xt)) over [0, T].
        const f128 fx = fx128, fy = fy128;
        auto f = [fx, fy](f128 t) -> Cplx128 {
            const f128 mag = detail::qexp(-t * t / 4 - fy * t);
            return {mag * detail::qcos(fx * t), mag * detail::qsin(fx * t)};
        };
        // Panels no wider than half an oscillation or the Gaussian scale.
        const int pieces = std::max(
            8, static_cast<int>(3.0 * count_real + t_end) + 1);
        outcome = detail::integrate_adaptive(
            f, uniform_breakpoints(0, f128(t_end), pieces), tol_target,
            tol_required, max_segments);
        extra_err = detail::qexp(f128(-big_l)) / f128(t_end / 2 + y + 1);
    }
    if (!outcome.converged)
        throw OracleError(
            "oracle_quadrature: panel budget exhausted before reaching the "
            "requested accuracy");

    const Cplx128 value = detail::kInvSqrtPi128 * outcome.value;
    const f128 norm = detail::qabs(value);
    // Rounding model: ~48 evaluations per segment, scaled by the mass the
    // segments actually carry.
    const f128 rounding = detail::kEps128 * 64 * outcome.value_l1;
    const f128 est =
        (detail::kInvSqrtPi128 * (outcome.err_abs + rounding) + extra_err) /
        (norm > 0 ? norm : f128(1));

    OracleValue out;
    out.re = value.re;
    out.im = value.im;
    out.est_error = std::max(static_cast<double>(est), 1e-32);
    return out;
}

// w along the full plane with a quad-precision argument; reflection and
// parity applied here so identity cross-checks do not lose digits to the
// double rounding of their inner arguments.
OracleValue w_f128(Cplx128 z, int digits) {
    if (z.im < 0) {
        const OracleValue upper = w_f128(Cplx128{-z.re, -z.im}, digits);
        const Cplx128 z_sq = z * z;
        const Cplx128 gauss = qexp(Cplx128{-z_sq.re, -z_sq.im});
        const Cplx128 value =
            f128(2) * gauss - Cplx128{upper.re, upper.im};
        const f128 norm = qabs(value);
        OracleValue out;
        out.re = value.re;
        out.im = value.im;
        out.est_error = static_cast<double>(
            (f128(upper.est_error) * qabs(Cplx128{upper.re, upper.im}) +
             8 * kEps128 * qabs(gauss)) /
            (norm > 0 ? norm : f128(1)));
        return out;
    }
    if (z.re < 0) {
        OracleValue v = w_f128(Cplx128{-z.re, z.im}, digits);
        v.im = -v.im;
        return v;
    }
    return quad_w_xy(z.re, z.im, digits);
}

}  // namespace detail

OracleValue oracle_quadrature(std::complex<double> z, int digits) {
    return detail::quad_w_xy(f128(z.real()), f128(z.imag()), digits);
}

OracleValue oracle_pv(std::complex<double> z, int digits) {
    const double x = z.real();
    const double y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y))
        throw OracleError("oracle_pv: non-finite argument");
    if (!(y > 0.0))
        throw OracleError("oracle_pv: requires Im z > 0");
    digits = std::clamp(digits, 10, 32);

    const double big_l = (digits + 6) * kLn10;
    const double support = std::sqrt(big_l) + 2.0;  // exp(-t^2) support edge

    // theta = atan((t - x)/y) maps the Lorentzian peak t = x to theta = 0
    // scale; seed breakpoints at unit steps of t across the Gaussian support
    // plus a cluster around the peak so the adaptive pass cannot miss it.
    std::vector<f128> bp;
    const f128 half_pi = detail::kPi128 / 2;
    bp.push_back(-half_pi);
    auto push_t = [&](double t) {
        bp.push_back(detail::qatan2(f128(t - x), f128(y)));
    };
    for (double t = -support; t <= support + 0.5; t += 1.0) push_t(t);
    if (std::abs(x) <= support + 4.0) {
        for (double k : {-30.0, -10.0, -3.0, -1.0, 1.0, 3.0, 10.0, 30.0})
            push_t(x + k * y);
        push_t(x);
    }
    bp.push_back(half_pi);
    std::sort(bp.begin(), bp.end(), [](f128 a, f128 b) { return a < b; });

    const f128 fx = x, fy = y;
    auto f = [fx, fy](f128 theta) -> Cplx128 {
        const f128 tan_theta = detail::qtan(theta);
        const f128 t = fx + fy * tan_theta;
        const f128 gauss = detail::qexp(-t * t);
        return {gauss, -tan_theta * gauss};
    };

    const f128 tol_target = detail::pow10_f128(-(digits + 4));
    const f128 tol_required = detail::pow10_f128(-digits);
    const auto outcome = detail::integrate_adaptive(f, bp, tol_target,
                                                    tol_required, 40000);
    if (!outcome.converged)
        throw OracleError(
            "oracle_pv: panel budget exhausted before reaching the requested "
            "accuracy");

    const Cplx128 value = (f128(1) / detail::kPi128) * outcome.value;
    const f128 norm = detail::qabs(value);
    const f128 rounding = detail::kEps128 * 64 *
                          (outcome.value_l1 + detail::qabs(fx) / fy);
    const f128 est = ((outcome.err_abs + rounding) / detail::kPi128) /
                     (norm > 0 ? norm : f128(1));

    OracleValue out;
    out.re = value.re;
    out.im = value.im;
    out.est_error = std::max(static_cast<double>(est), 1e-32);
    return out;
}

}  // namespace fadw::oracle
