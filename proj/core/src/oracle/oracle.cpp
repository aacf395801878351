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
#include <cstdio>
#include <string>

#include "fadw/oracle.hpp"
#include "oracle_internal.hpp"

namespace fadw::oracle {

namespace {

using detail::Cplx128;
using detail::f128;

// exp(re) at quad precision saturates the type near 11350; stay inside it.
constexpr double kExtExpLimit = 11000.0;

Cplx128 as_cplx(const OracleValue& v) { return {v.re, v.im}; }

double agreement(const OracleValue& a, const OracleValue& b) {
    const f128 num = detail::qabs(as_cplx(a) - as_cplx(b));
    const f128 den = detail::qabs(as_cplx(a));
    return static_cast<double>(num / (den > 0 ? den : f128(1)));
}

// Hard cross-validation: two independently produced values must sit within
// 10x their combined error bounds, otherwise the oracle aborts rather than
// average or guess.
std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

void require_agreement(const OracleValue& a, const OracleValue& b,
                       const char* what) {
    const double gap = agreement(a, b);
    if (gap > 10.0 * (a.est_error + b.est_error))
        throw OracleError(std::string("oracle cross-validation failed for ") +
                          what + ": methods disagree by " + sci(gap) +
                          " (bounds " + sci(a.est_error) + ", " +
                          sci(b.est_error) + ")");
}

OracleValue checked(OracleValue v) {
    if (v.est_error > kValidatedEstError)
        throw OracleError(
            "oracle value exceeds the validated error budget (est " +
            sci(v.est_error) + ")");
    return v;
}

bool cf_reliable(double y, double r) { return r >= 100.0 || y >= 2.0; }

int cf_depth_for(double r) { return r >= 100.0 ? 128 : 800; }

OracleValue w_upper_half(double x, double y);

// Real axis: Re w = exp(-x^2) exactly, Im w = 2 daw(x)/sqrt(pi); the
// quadrature cross-checks the composite.
OracleValue w_real_axis(double x) {
    const OracleValue daw = detail::daw_real(x);
    OracleValue out;
    out.re = detail::qexp(f128(-x) * f128(x));
    out.im = 2 * detail::kInvSqrtPi128 * daw.re;
    out.est_error = std::max(daw.est_error, 1e-31);
    const OracleValue cross = oracle_quadrature({x, 0.0}, kOracleDigits);
    require_agreement(out, cross, "w on the real axis");
    return out;
}

OracleValue w_upper_half(double x, double y) {
    if (y == 0.0) return checked(w_real_axis(x));
    const double r = std::hypot(x, y);

    if (r <= 10.0) {
        const OracleValue primary = oracle_series({x, y}, kOracleDigits);
        const OracleValue cross = oracle_quadrature({x, y}, kOracleDigits - 2);
        require_agreement(primary, cross, "w (series vs quadrature)");
        return checked(primary);
    }

    const OracleValue primary = oracle_quadrature({x, y}, kOracleDigits);
    OracleValue cross;
    const char* what;
    if (r <= detail::kSeriesWideRadius) {
        cross = detail::series_w_any({x, y}, kOracleDigits);
        what = "w (quadrature vs wide series)";
    } else if (cf_reliable(y, r)) {
        cross = oracle_cf({x, y}, cf_depth_for(r));
        what = "w (quadrature vs continued fraction)";
    } else {
        cross = oracle_pv({x, y}, kOracleDigits - 2);
        what = "w (quadrature vs Lorentzian convolution)";
    }
    require_agreement(primary, cross, what);
    return checked(primary);
}

}  // namespace

OracleValue oracle_cf(std::complex<double> z, int depth) {
    if (depth < 2) throw OracleError("oracle_cf: depth must be >= 2");
    const Cplx128 fz{f128(z.real()), f128(z.imag())};
    auto convergent = [&fz](int d) {
        Cplx128 tail{0, 0};
        for (int k = d; k >= 1; --k)
            tail = f128(0.5) * f128(k) / (fz - tail);
        return Cplx128{0, detail::kInvSqrtPi128} / (fz - tail);
    };
    const Cplx128 full = convergent(depth);
    const Cplx128 shallow = convergent(std::max(2, (3 * depth) / 4));
    OracleValue out;
    out.re = full.re;
    out.im = full.im;
    const f128 norm = detail::qabs(full);
    out.est_error = std::max(
        static_cast<double>(detail::qabs(full - shallow) /
                            (norm > 0 ? norm : f128(1))),
        5e-32);
    return out;
}

OracleValue oracle_w(std::complex<double> z) {
    const double x = z.real();
    const double y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y))
        throw OracleError("oracle_w: non-finite argument");

    if (y < 0.0) {
        // w(z) = 2 exp(-z^2) - w(-z), applied at quad precision.
        const double re_exp = (y - x) * (y + x);
        if (re_exp > kExtExpLimit)
            throw OracleError(
                "oracle_w: exp(-z^2) exceeds the quad-precision range");
        const OracleValue upper = oracle_w({-x, -y});
        const Cplx128 gauss =
            detail::qexp(Cplx128{f128(y) * f128(y) - f128(x) * f128(x),
                                 -2 * f128(x) * f128(y)});
        const Cplx128 value = f128(2) * gauss - as_cplx(upper);
        const f128 norm = detail::qabs(value);
        const f128 est_abs = f128(upper.est_error) * detail::qabs(as_cplx(upper)) +
                             8 * detail::kEps128 * detail::qabs(gauss);
        OracleValue out;
        out.re = value.re;
        out.im = value.im;
        out.est_error =
            static_cast<double>(est_abs / (norm > 0 ? norm : f128(1)));
        return checked(out);
    }
    if (x < 0.0) {
        OracleValue v = oracle_w({-x, y});
        v.im = -v.im;
        return v;
    }
    return w_upper_half(x, y);
}

OracleValue oracle_daw(double x) {
    const OracleValue direct = detail::daw_real(x);
    // Independent route: daw(x) = (sqrt(pi)/2) Im w(x), with Im w from the
    // sine-transform quadrature.
    const OracleValue w_quad = oracle_quadrature({x, 0.0}, kOracleDigits);
    OracleValue via_w;
    via_w.re = detail::kSqrtPi128 / 2 * w_quad.im;
    via_w.im = 0;
    via_w.est_error = w_quad.est_error * 2.0;
    require_agreement(direct, via_w, "daw (sum vs quadrature)");
    return checked(direct);
}

OracleValue oracle_erf(std::complex<double> z) {
    const OracleValue direct = detail::erf_series(z, kOracleDigits);
    // Cross through the w identity: erf(z) = 1 - exp(-z^2) w(iz).
    const OracleValue w_iz = oracle_w({-z.imag(), z.real()});
    const Cplx128 gauss = detail::qexp(
        Cplx128{f128(z.imag()) * f128(z.imag()) - f128(z.real()) * f128(z.real()),
                -2 * f128(z.real()) * f128(z.imag())});
    const Cplx128 value = Cplx128{1, 0} - gauss * as_cplx(w_iz);
    OracleValue via_w;
    via_w.re = value.re;
    via_w.im = value.im;
    const f128 norm = detail::qabs(value);
    via_w.est_error = static_cast<double>(
        (f128(w_iz.est_error) * detail::qabs(gauss * as_cplx(w_iz)) +
         8 * detail::kEps128 * (1 + detail::qabs(gauss * as_cplx(w_iz)))) /
        (norm > 0 ? norm : f128(1)));
    require_agreement(direct, via_w, "erf (series vs w identity)");
    return checked(direct);
}

OracleValue oracle_fresnel(std::complex<double> z) {
    const OracleValue direct = detail::fresnel_series(z, kOracleDigits);
    // Cross through the w identity:
    //   F(z) = (1+i) [1 - exp(i pi z^2/2) w(sqrt(pi)(1+i) z/2)] / 2.
    const Cplx128 fz{f128(z.real()), f128(z.imag())};
    const Cplx128 z_sq = fz * fz;
    const Cplx128 phase = detail::qexp(
        Cplx128{-detail::kPi128 / 2 * z_sq.im, detail::kPi128 / 2 * z_sq.re});
    const Cplx128 one_plus_i{1, 1};
    const Cplx128 arg128 = detail::kSqrtPi128 / 2 * (one_plus_i * fz);
    const OracleValue w_inner = detail::w_f128(arg128, kOracleDigits);
    const Cplx128 bracket = Cplx128{1, 0} - phase * as_cplx(w_inner);
    const Cplx128 value = f128(0.5) * (one_plus_i * bracket);
    OracleValue via_w;
    via_w.re = value.re;
    via_w.im = value.im;
    const f128 norm = detail::qabs(value);
    via_w.est_error = static_cast<double>(
        ((f128(w_inner.est_error) + 1e-31) *
             detail::qabs(phase * as_cplx(w_inner)) +
         8 * detail::kEps128 * (1 + detail::qabs(phase))) /
        (norm > 0 ? norm : f128(1)));
    require_agreement(direct, via_w, "fresnel (series vs w identity)");
    return checked(direct);
}

ReferenceCoefficients reference_coefficients(const ApproximationParams& p) {
    ReferenceCoefficients out;
    const int n = p.n_terms;
    out.a.resize(n);
    out.b.resize(n);
    out.c.resize(n);
    const f128 h_i = f128(p.t_margin) / p.n_terms / (2 * detail::kPi128);
    const f128 sigma = p.sigma;
    const f128 sigma_sq = sigma * sigma;
    for (int k = 1; k <= n; ++k) {
        const f128 c = 2 * detail::kPi128 * h_i * k;
        const f128 damp = detail::qexp(sigma_sq - c * c);
        const f128 phase = 2 * c * sigma;
        out.a[k - 1] =
            8 * detail::kPi128 * h_i * h_i * k * damp * detail::qsin(phase);
        out.b[k - 1] = 4 * h_i * damp * detail::qcos(phase);
        out.c[k - 1] = c;
    }
    out.pole_prefactor = 2 * h_i * detail::qexp(sigma_sq);
    return out;
}

OracleValue reference_psi(std::complex<double> z,
                          const ApproximationParams& params) {
    const ReferenceCoefficients coeffs = reference_coefficients(params);
    const Cplx128 fz{f128(z.real()), f128(z.imag())};
    const Cplx128 z_sq = fz * fz;
    Cplx128 sum;
    for (std::size_t k = 0; k < coeffs.c.size(); ++k) {
        const Cplx128 den = Cplx128{coeffs.c[k] * coeffs.c[k], 0} - z_sq;
        const Cplx128 num =
            Cplx128{coeffs.a[k], 0} - Cplx128{0, 1} * (fz * Cplx128{coeffs.b[k], 0});
        sum += num / den;
    }
    const Cplx128 value = Cplx128{0, coeffs.pole_prefactor} / fz + sum;
    OracleValue out;
    out.re = value.re;
    out.im = value.im;
    out.est_error = static_cast<double>(detail::kEps128) * 64;
    return out;
}

std::string to_string(Float128 v) { return detail::format_f128(v); }

Float128 parse_float128(const std::string& s) {
    return strtoflt128(s.c_str(), nullptr);
}

}  // namespace fadw::oracle
