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

#include <string>
#include <vector>

#include "fadw/oracle.hpp"

namespace fadw::oracle {

// Plain-text oracle cache: '#'-prefixed header lines carrying the generator
// version and a signature describing exactly which point set was computed,
// then one record per line, `x y re im est_error`, space-separated, with re
// and im at 33 significant digits.  Written once, read many; consumers must
// refuse caches whose signature does not match the point set they expect.

struct CacheRecord {
    double x;
    double y;
    Float128 re;
    Float128 im;
    double est_error;
};

struct OracleCache {
    std::string signature;  // e.g. "kind=grid x0=0 x1=15 nx=100 ..."
    std::vector<CacheRecord> records;
};

/// Parses a cache file; throws std::runtime_error with the offending line on
/// malformed input.
OracleCache load_cache(const std::string& path);

void save_cache(const OracleCache& cache, const std::string& path);

}  // namespace fadw::oracle
