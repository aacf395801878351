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

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "fadw/params.hpp"
#include "frozen_values.hpp"

using namespace fadw;

namespace {

double ulps_apart(double a, double b) {
    return std::abs(a - b) / (std::abs(b) * 2.220446049250313e-16);
}

}  // namespace

TEST_CASE("default parameters") {
    const auto p = make_params();
    CHECK(p.n_terms == 16);
    CHECK(p.sigma == 1.5);
    // h_i to all printed digits.
    CHECK(ulps_apart(p.h_i, 5.968310365946075e-2) <= 2.0);
    // nu_m * 2*pi recovers the margin exactly up to rounding.
    CHECK(ulps_apart(p.nu_m * 2.0 * std::numbers::pi, 6.0) <= 2.0);
}

TEST_CASE("h_i scales exactly with 1/N") {
    const auto p16 = make_params(16);
    const auto p8 = make_params(8);
    CHECK(p8.h_i == 2.0 * p16.h_i);  // power-of-two rescale is exact
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_params(0), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 1.5, 1e-6, 1e-5), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 1.5, 1e-5, -1e-7), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 1.5, 2.0, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(make_params(16, 1.5, 1e-5, 1e-6, 0.0), std::invalid_argument);
    CHECK_NOTHROW(make_params(1, 1.0));
}

TEST_CASE("coefficient derivation") {
    const auto p = make_params();
    const auto c = derive_coefficients(p);
    REQUIRE(c.a.size() == 16);

    SUBCASE("pole locations are 0.375*n at defaults") {
        for (int n = 1; n <= 16; ++n) {
            CHECK(c.c[n - 1] == doctest::Approx(0.375 * n).epsilon(1e-15));
            CHECK(ulps_apart(c.c[n - 1], 0.375 * n) <= 2.0);
        }
        CHECK(c.c[15] == 6.0);
    }

    SUBCASE("strictly increasing positive poles") {
        double prev = 0.0;
        for (double v : c.c) {
            CHECK(v > prev);
            prev = v;
        }
    }

    SUBCASE("first coefficients match the quad-precision closed forms") {
        CHECK(ulps_apart(c.a[0], testvals::kCoeffA1) <= 4.0);
        CHECK(ulps_apart(c.b[0], testvals::kCoeffB1) <= 4.0);
    }

    SUBCASE("phase argument is 1.125*n at defaults") {
        for (int n = 1; n <= 16; ++n) {
            const double phase = 2.0 * c.c[n - 1] * p.sigma;
            CHECK(ulps_apart(phase, 1.125 * n) <= 4.0);
        }
    }

    SUBCASE("tail magnitudes are negligible") {
        const double bound = std::exp(p.sigma * p.sigma - 36.0) *
                             (8.0 * std::numbers::pi * p.h_i * p.h_i * 16.0 +
                              4.0 * p.h_i);
        CHECK(std::abs(c.a[15]) < bound);
        CHECK(std::abs(c.b[15]) < bound);
    }

    SUBCASE("A/B share the exponential factor") {
        for (int n = 1; n <= 16; ++n) {
            const double phase = 2.0 * c.c[n - 1] * p.sigma;
            const double lhs = c.a[n - 1] * std::cos(phase) * 4.0 * p.h_i;
            const double rhs = c.b[n - 1] * std::sin(phase) * 8.0 *
                               std::numbers::pi * p.h_i * p.h_i * n;
            if (lhs == 0.0 || rhs == 0.0) continue;
            CHECK(std::abs(lhs / rhs - 1.0) < 1e-12);
        }
    }

    SUBCASE("gaussian decay bound") {
        for (int n = 1; n <= 16; ++n) {
            const double damp =
                std::exp(p.sigma * p.sigma - c.c[n - 1] * c.c[n - 1]);
            CHECK(std::abs(c.a[n - 1]) <=
                  damp * 8.0 * std::numbers::pi * p.h_i * p.h_i * n * 1.0001);
            CHECK(std::abs(c.b[n - 1]) <= damp * 4.0 * p.h_i * 1.0001);
        }
    }

    SUBCASE("truncation is converged at N = 16") {
        // Appending terms n > N, computed by the same formulas, moves the
        // absolute sums by less than 1e-16 relative.
        double sum_a = 0.0, sum_b = 0.0;
        for (int n = 0; n < 16; ++n) {
            sum_a += std::abs(c.a[n]);
            sum_b += std::abs(c.b[n]);
        }
        double extra_a = 0.0, extra_b = 0.0;
        for (int n = 17; n <= 32; ++n) {
            const double cn = p.t_margin * n / p.n_terms;
            const double damp = std::exp(p.sigma * p.sigma - cn * cn);
            const double phase = 2.0 * cn * p.sigma;
            extra_a += std::abs(8.0 * std::numbers::pi * p.h_i * p.h_i * n *
                                damp * std::sin(phase));
            extra_b += std::abs(4.0 * p.h_i * damp * std::cos(phase));
        }
        CHECK(extra_a / sum_a < 1e-16);
        CHECK(extra_b / sum_b < 1e-16);
    }

    SUBCASE("derivation is pure") {
        CHECK(derive_coefficients(p) == c);
    }
}

TEST_CASE("config file parsing") {
    const char* path = "fadw_test_params.cfg";

    SUBCASE("valid file with comments") {
        {
            std::ofstream f(path);
            f << "# tuning\nN = 8\nsigma=2.0\n\ny_min = 1e-4\n";
        }
        const auto o = parse_params_file(path);
        CHECK(o.n_terms == 8);
        CHECK(o.sigma == 2.0);
        CHECK(o.y_min == 1e-4);
        CHECK(!o.y_narrow.has_value());
        const auto p = apply_overrides(o);
        CHECK(p.n_terms == 8);
        CHECK(p.h_i == doctest::Approx(2.0 * make_params().h_i));
    }

    SUBCASE("unknown key rejected") {
        {
            std::ofstream f(path);
            f << "n_terms=8\n";
        }
        CHECK_THROWS_WITH_AS(parse_params_file(path),
                             doctest::Contains("unknown key"),
                             std::runtime_error);
    }

    SUBCASE("bad value rejected") {
        {
            std::ofstream f(path);
            f << "sigma=fast\n";
        }
        CHECK_THROWS_AS(parse_params_file(path), std::runtime_error);
    }

    SUBCASE("trailing junk rejected") {
        {
            std::ofstream f(path);
            f << "sigma=1.5x\n";
        }
        CHECK_THROWS_AS(parse_params_file(path), std::runtime_error);
    }

    std::remove(path);
}
