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

#include "fadw/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fadw {

ApproximationParams make_params(int n_terms, double sigma, double y_min,
                                double y_narrow, double z_cf_threshold,
                                double t_margin) {
    if (n_terms < 1)
        throw std::invalid_argument("make_params: n_terms must be >= 1");
    if (!(sigma >= 1.0))
        throw std::invalid_argument(
            "make_params: sigma must be >= 1 (validity condition of the "
            "shifted expansion)");
    if (!(y_narrow > 0.0) || !(y_min > y_narrow) || !(y_min < 1.0))
        throw std::invalid_argument(
            "make_params: heights must satisfy 0 < y_narrow < y_min < 1");
    if (!(z_cf_threshold > 0.0))
        throw std::invalid_argument("make_params: z_cf_threshold must be > 0");
    if (!(t_margin > 0.0))
        throw std::invalid_argument("make_params: t_margin must be > 0");

    ApproximationParams p;
    p.n_terms = n_terms;
    p.sigma = sigma;
    p.t_margin = t_margin;
    p.nu_m = t_margin / (2.0 * std::numbers::pi);
    p.h_i = p.nu_m / n_terms;
    p.y_min = y_min;
    p.y_narrow = y_narrow;
    p.z_cf_threshold = z_cf_threshold;
    return p;
}

CoefficientSet derive_coefficients(const ApproximationParams& p) {
    const int n = p.n_terms;
    CoefficientSet out;
    out.a.resize(n);
    out.b.resize(n);
    out.c.resize(n);

    const double sigma_sq = p.sigma * p.sigma;
    const double eight_pi_hi_sq = 8.0 * std::numbers::pi * p.h_i * p.h_i;
    const double four_hi = 4.0 * p.h_i;
    for (int k = 1; k <= n; ++k) {
        // 2*pi*h_i*k == t_margin*k/N exactly in real arithmetic; the rational
        // form keeps C_k (and the phase 2*C_k*sigma) free of pi roundings.
        const double c = p.t_margin * k / p.n_terms;
        const double damp = std::exp(sigma_sq - c * c);
        const double phase = 2.0 * c * p.sigma;  // == 4*pi*h_i*k*sigma
        out.a[k - 1] = eight_pi_hi_sq * k * damp * std::sin(phase);
        out.b[k - 1] = four_hi * damp * std::cos(phase);
        out.c[k - 1] = c;
    }
    out.pole_prefactor = 2.0 * p.h_i * std::exp(sigma_sq);
    return out;
}

namespace {

void trim(std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    s = (begin == std::string::npos) ? std::string{}
                                     : s.substr(begin, end - begin + 1);
}

}  // namespace

ParamOverrides parse_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);

    ParamOverrides o;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        trim(key);
        trim(value);

        std::size_t used = 0;
        try {
            if (key == "N") {
                o.n_terms = std::stoi(value, &used);
            } else if (key == "sigma") {
                o.sigma = std::stod(value, &used);
            } else if (key == "y_min") {
                o.y_min = std::stod(value, &used);
            } else if (key == "y_narrow") {
                o.y_narrow = std::stod(value, &used);
            } else if (key == "z_cf_threshold") {
                o.z_cf_threshold = std::stod(value, &used);
            } else {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad numeric value '" + value + "'");
        }
        if (used != value.size())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": trailing characters in value '" +
                                     value + "'");
    }
    return o;
}

ApproximationParams apply_overrides(const ParamOverrides& o) {
    const ApproximationParams d;  // defaults
    return make_params(o.n_terms.value_or(d.n_terms),
                       o.sigma.value_or(d.sigma), o.y_min.value_or(d.y_min),
                       o.y_narrow.value_or(d.y_narrow),
                       o.z_cf_threshold.value_or(d.z_cf_threshold));
}

}  // namespace fadw
