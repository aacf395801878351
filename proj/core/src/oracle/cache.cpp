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

#include "fadw/oracle_cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "f128_math.hpp"

namespace fadw::oracle {

namespace {
constexpr const char* kMagic = "# fadw oracle cache v1";
constexpr const char* kGenerator =
    "# generator: fadw 0.1.0 target_digits=30 est_bound=1e-25";
}

OracleCache load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open oracle cache: " + path);

    OracleCache cache;
    std::string line;
    int lineno = 0;
    bool magic_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (line == kMagic) magic_seen = true;
            const std::string key = "# signature: ";
            if (line.rfind(key, 0) == 0) cache.signature = line.substr(key.size());
            continue;
        }
        if (!magic_seen)
            throw std::runtime_error(path + ": missing cache header magic");
        std::istringstream row(line);
        std::string re_s, im_s;
        CacheRecord rec;
        if (!(row >> rec.x >> rec.y >> re_s >> im_s >> rec.est_error))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": malformed cache record");
        char* end = nullptr;
        rec.re = strtoflt128(re_s.c_str(), &end);
        if (end == re_s.c_str() || *end != '\0')
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad re field '" + re_s + "'");
        rec.im = strtoflt128(im_s.c_str(), &end);
        if (end == im_s.c_str() || *end != '\0')
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": bad im field '" + im_s + "'");
        cache.records.push_back(rec);
    }
    if (!magic_seen)
        throw std::runtime_error(path + ": not a fadw oracle cache");
    return cache;
}

void save_cache(const OracleCache& cache, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write oracle cache: " + path);
    out << kMagic << "\n";
    out << kGenerator << "\n";
    out << "# signature: " << cache.signature << "\n";
    out << "# columns: x y re im est_error\n";
    char buf[64];
    for (const CacheRecord& r : cache.records) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", r.x, r.y);
        out << buf << ' ' << to_string(r.re) << ' ' << to_string(r.im);
        std::snprintf(buf, sizeof buf, " %.3g\n", r.est_error);
        out << buf;
    }
    if (!out) throw std::runtime_error("write failure on oracle cache: " + path);
}

}  // namespace fadw::oracle
