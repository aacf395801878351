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

#include "fadw/error_map.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace fadw {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double component_error(__float128 ref, double approx) {
    if (ref == 0) return kNaN;  // sentinel: relative error undefined
    const __float128 diff = ref - (__float128)approx;
    return static_cast<double>(fabsq(diff / ref));
}

double safe_log10(double v) {
    return std::log10(std::max(v, 1e-300));
}

}  // namespace

std::pair<double, double> relative_errors(Complex approx,
                                          const oracle::OracleValue& ref) {
    return {component_error(ref.re, approx.real()),
            component_error(ref.im, approx.imag())};
}

ErrorStats compute_stats(const ErrorMapGrid& grid) {
    ErrorStats s;
    double sum_re = 0, sum_im = 0;
    std::size_t n_re = 0, n_im = 0;
    for (double v : grid.log10_dre) {
        if (std::isnan(v)) continue;
        sum_re += v;
        ++n_re;
        s.max_dre = std::max(s.max_dre, std::pow(10.0, v));
    }
    for (double v : grid.log10_dim) {
        if (std::isnan(v)) continue;
        sum_im += v;
        ++n_im;
        s.max_dim = std::max(s.max_dim, std::pow(10.0, v));
    }
    s.mean_dre = n_re ? std::pow(10.0, sum_re / n_re) : kNaN;
    s.mean_dim = n_im ? std::pow(10.0, sum_im / n_im) : kNaN;
    return s;
}

std::vector<double> GridSpec::x_values() const {
    std::vector<double> xs(nx);
    for (int i = 0; i < nx; ++i)
        xs[i] = nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
    return xs;
}

std::vector<double> GridSpec::y_values() const {
    std::vector<double> ys(ny);
    if (y_log) {
        const double l0 = std::log10(y0), l1 = std::log10(y1);
        for (int j = 0; j < ny; ++j)
            ys[j] = ny == 1 ? y0
                            : std::pow(10.0, l0 + (l1 - l0) * j / (ny - 1));
    } else {
        for (int j = 0; j < ny; ++j)
            ys[j] = ny == 1 ? y0 : y0 + (y1 - y0) * j / (ny - 1);
    }
    return ys;
}

std::string GridSpec::signature() const {
    std::ostringstream os;
    os << "kind=grid x0=" << format17(x0) << " x1=" << format17(x1)
       << " nx=" << nx << " y0=" << format17(y0) << " y1=" << format17(y1)
       << " ny=" << ny << " ylog=" << (y_log ? 1 : 0);
    return os.str();
}

OracleSource OracleSource::from_cache(oracle::OracleCache cache) {
    OracleSource s;
    s.cache_ = std::make_shared<const oracle::OracleCache>(std::move(cache));
    return s;
}

OracleSource OracleSource::live() { return OracleSource{}; }

const std::string* OracleSource::signature() const {
    return cache_ ? &cache_->signature : nullptr;
}

oracle::OracleValue OracleSource::at(double x, double y,
                                     std::size_t ordinal) const {
    if (!cache_) return oracle::oracle_w({x, y});
    if (ordinal >= cache_->records.size())
        throw CacheMismatchError("oracle cache too short at record " +
                                 std::to_string(ordinal) + " (signature '" +
                                 cache_->signature + "')");
    const oracle::CacheRecord& rec = cache_->records[ordinal];
    if (rec.x != x || rec.y != y)
        throw CacheMismatchError(
            "oracle cache record " + std::to_string(ordinal) +
            " is for (" + format17(rec.x) + ", " + format17(rec.y) +
            "), expected (" + format17(x) + ", " + format17(y) +
            ") (signature '" + cache_->signature + "')");
    return {rec.re, rec.im, rec.est_error};
}

ErrorMapGrid sweep_domain(const GridSpec& spec,
                          const ApproximationParams& params,
                          const CoefficientSet& coeffs,
                          const OracleSource& oracle_source,
                          unsigned num_threads) {
    if (spec.nx < 1 || spec.ny < 1)
        throw std::invalid_argument("sweep_domain: empty grid");
    if (spec.y_log && !(spec.y0 > 0.0 && spec.y1 > 0.0))
        throw std::invalid_argument(
            "sweep_domain: log-spaced y requires positive bounds");
    if (const std::string* sig = oracle_source.signature();
        sig && *sig != spec.signature())
        throw CacheMismatchError("oracle cache signature '" + *sig +
                                 "' does not match the requested grid '" +
                                 spec.signature() + "'");

    ErrorMapGrid grid;
    grid.x_axis = spec.x_values();
    grid.y_axis = spec.y_values();
    const std::size_t nx = grid.x_axis.size();
    const std::size_t ny = grid.y_axis.size();
    grid.log10_dre.assign(nx * ny, kNaN);
    grid.log10_dim.assign(nx * ny, kNaN);

    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto run_rows = [&](std::size_t j_begin, std::size_t j_end) {
        try {
            for (std::size_t j = j_begin; j < j_end; ++j) {
                for (std::size_t i = 0; i < nx; ++i) {
                    const double x = grid.x_axis[i];
                    const double y = grid.y_axis[j];
                    const std::size_t cell = j * nx + i;
                    const oracle::OracleValue ref =
                        oracle_source.at(x, y, cell);
                    const Complex approx = evaluate({x, y}, params, coeffs).value;
                    const auto [dre, dim] = relative_errors(approx, ref);
                    grid.log10_dre[cell] =
                        std::isnan(dre) ? kNaN : safe_log10(dre);
                    grid.log10_dim[cell] =
                        std::isnan(dim) ? kNaN : safe_log10(dim);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (num_threads == 0) num_threads = std::thread::hardware_concurrency();
    if (num_threads == 0) num_threads = 1;
    num_threads = static_cast<unsigned>(
        std::min<std::size_t>(num_threads, ny));

    if (num_threads <= 1) {
        run_rows(0, ny);
    } else {
        std::vector<std::thread> workers;
        const std::size_t rows_per = (ny + num_threads - 1) / num_threads;
        for (unsigned t = 0; t < num_threads; ++t) {
            const std::size_t b = t * rows_per;
            if (b >= ny) break;
            workers.emplace_back(run_rows, b, std::min(ny, b + rows_per));
        }
        for (auto& w : workers) w.join();
    }
    if (failure) std::rethrow_exception(failure);

    grid.stats = compute_stats(grid);
    return grid;
}

namespace {

// Explicit 53-bit mapping keeps the stream identical across platforms.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Complex> hitran_sample_points(std::size_t count,
                                          std::uint64_t seed,
                                          const HitranDomain& d) {
    std::mt19937_64 rng(seed);
    const double ly0 = std::log10(d.y0), ly1 = std::log10(d.y1);
    std::vector<Complex> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = d.x0 + (d.x1 - d.x0) * uniform01(rng);
        const double y = std::pow(10.0, ly0 + (ly1 - ly0) * uniform01(rng));
        pts.emplace_back(x, y);
    }
    return pts;
}

std::string hitran_cache_signature(std::size_t count, std::uint64_t seed,
                                   std::size_t stride,
                                   const HitranDomain& d) {
    std::ostringstream os;
    os << "kind=hitran count=" << count << " seed=" << seed
       << " stride=" << stride << " x0=" << format17(d.x0)
       << " x1=" << format17(d.x1) << " y0=" << format17(d.y0)
       << " y1=" << format17(d.y1);
    return os.str();
}

AccuracyAggregates hitran_accuracy_sample(std::size_t count,
                                          std::uint64_t seed,
                                          const ApproximationParams& params,
                                          const CoefficientSet& coeffs,
                                          const OracleSource& oracle_source,
                                          std::size_t stride,
                                          const HitranDomain& domain) {
    if (count < 1)
        throw std::invalid_argument("hitran_accuracy_sample: count must be >= 1");
    if (stride < 1) stride = 1;
    if (const std::string* sig = oracle_source.signature();
        sig && *sig != hitran_cache_signature(count, seed, stride, domain))
        throw CacheMismatchError(
            "oracle cache signature '" + *sig +
            "' does not match the requested sample '" +
            hitran_cache_signature(count, seed, stride, domain) + "'");

    const std::vector<Complex> pts = hitran_sample_points(count, seed, domain);
    const std::vector<PointResult> results =
        evaluate_batch(pts, params, coeffs);

    AccuracyAggregates agg;
    agg.points = count;
    double sum_re = 0, sum_im = 0;
    std::size_t n_re = 0, n_im = 0;
    std::size_t ordinal = 0;
    for (std::size_t i = 0; i < count; i += stride, ++ordinal) {
        const oracle::OracleValue ref =
            oracle_source.at(pts[i].real(), pts[i].imag(), ordinal);
        const auto [dre, dim] = relative_errors(results[i].value, ref);
        if (!std::isnan(dre)) {
            sum_re += safe_log10(dre);
            ++n_re;
            agg.max_dre = std::max(agg.max_dre, dre);
        }
        if (!std::isnan(dim)) {
            sum_im += safe_log10(dim);
            ++n_im;
            agg.max_dim = std::max(agg.max_dim, dim);
        }
        ++agg.checked;
    }
    agg.mean_dre = n_re ? std::pow(10.0, sum_re / n_re) : kNaN;
    agg.mean_dim = n_im ? std::pow(10.0, sum_im / n_im) : kNaN;
    return agg;
}

std::vector<KernelSample> sample_cosine_kernel(double sigma, double t_max,
                                               int nt,
                                               const ApproximationParams& p) {
    if (nt < 2)
        throw std::invalid_argument("sample_cosine_kernel: nt must be >= 2");
    if (!(t_max > 0.0))
        throw std::invalid_argument("sample_cosine_kernel: t_max must be > 0");

    // exp(-(2 pi n h_i)^2) factors; 2*pi*n*h_i == t_margin*n/N exactly.
    std::vector<double> damp(p.n_terms), freq(p.n_terms);
    for (int n = 1; n <= p.n_terms; ++n) {
        const double c = p.t_margin * n / p.n_terms;
        damp[n - 1] = std::exp(-c * c);
        freq[n - 1] = c;
    }
    const double prefactor = 2.0 * std::sqrt(std::numbers::pi) * p.h_i;

    std::vector<KernelSample> out(nt);
    for (int j = 0; j < nt; ++j) {
        const double t = t_max * j / (nt - 1);
        double series = 1.0;
        for (int n = 0; n < p.n_terms; ++n)
            series += 2.0 * damp[n] * std::cos(freq[n] * t);
        const double envelope = std::exp(-sigma * t);
        out[j] = {t, prefactor * series * envelope,
                  std::exp(-0.25 * t * t) * envelope};
    }
    return out;
}

void emit_map_csv(const ErrorMapGrid& grid, std::ostream& out) {
    out << "x,y,log10_dre,log10_dim\n";
    const std::size_t nx = grid.x_axis.size();
    const std::size_t ny = grid.y_axis.size();
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t cell = j * nx + i;
            auto field = [](double v) {
                return std::isnan(v) ? std::string("nan") : format17(v);
            };
            out << format17(grid.x_axis[i]) << ',' << format17(grid.y_axis[j])
                << ',' << field(grid.log10_dre[cell]) << ','
                << field(grid.log10_dim[cell]) << '\n';
        }
    }
    if (!out) throw std::runtime_error("emit_map_csv: write failure");
}

ErrorMapGrid parse_map_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "x,y,log10_dre,log10_dim")
        throw std::runtime_error("parse_map_csv: bad header");

    std::vector<double> col_x, col_y, dre, dim;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string f[4];
        for (int k = 0; k < 4; ++k)
            if (!std::getline(row, f[k], ','))
                throw std::runtime_error("parse_map_csv: short row at line " +
                                         std::to_string(lineno));
        auto num = [&](const std::string& s) {
            if (s == "nan") return kNaN;
            return std::stod(s);
        };
        col_x.push_back(num(f[0]));
        col_y.push_back(num(f[1]));
        dre.push_back(num(f[2]));
        dim.push_back(num(f[3]));
    }
    if (col_x.empty()) throw std::runtime_error("parse_map_csv: empty map");

    // Rows are emitted row-major over y then x: the first block shares y.
    std::size_t nx = 1;
    while (nx < col_y.size() && col_y[nx] == col_y[0]) ++nx;
    if (col_x.size() % nx != 0)
        throw std::runtime_error("parse_map_csv: inconsistent grid shape");
    const std::size_t ny = col_x.size() / nx;

    ErrorMapGrid grid;
    grid.x_axis.assign(col_x.begin(), col_x.begin() + nx);
    grid.y_axis.resize(ny);
    for (std::size_t j = 0; j < ny; ++j) grid.y_axis[j] = col_y[j * nx];
    grid.log10_dre = std::move(dre);
    grid.log10_dim = std::move(dim);
    grid.stats = compute_stats(grid);
    return grid;
}

}  // namespace fadw
