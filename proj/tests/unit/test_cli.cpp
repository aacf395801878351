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

// End-to-end checks of the fadw binary.  FADW_CLI_PATH and
// FADW_GOLDEN_DIR come from the build.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FADW_CLI_PATH) + " " + args;
    std::array<char, 4096> buf;
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("eval at the origin matches the golden file") {
    const auto r = run_cli("eval --x 0 --y 0 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(std::string(FADW_GOLDEN_DIR) + "/eval_origin.csv"));
}

TEST_CASE("eval reflection region") {
    const auto r = run_cli("eval --x 1 --y -2 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ReflectedLowerHalf") != std::string::npos);
}

TEST_CASE("eval file input") {
    const char* in_path = "fadw_cli_in.csv";

    SUBCASE("with header and rows") {
        {
            std::ofstream f(in_path);
            f << "x,y\n1,1\n2,1\n";
        }
        const auto r = run_cli(std::string("eval --in ") + in_path +
                               " 2>/dev/null");
        CHECK(r.exit_code == 0);
        CHECK(count_lines(r.out) == 3);  // header + 2 rows
    }

    SUBCASE("empty file gives a header-only output") {
        { std::ofstream f(in_path); }
        const auto r = run_cli(std::string("eval --in ") + in_path +
                               " 2>/dev/null");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "x,y,re,im,region\n");
    }

    SUBCASE("malformed row names the line") {
        {
            std::ofstream f(in_path);
            f << "1,1\n2,oops\n";
        }
        const auto r = run_cli(std::string("eval --in ") + in_path +
                               " 2>&1 1>/dev/null");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find(":2:") != std::string::npos);
    }

    SUBCASE("non-finite rows produce per-row error tokens") {
        {
            std::ofstream f(in_path);
            f << "1,1\nnan,1\n2,1\n";
        }
        const auto r = run_cli(std::string("eval --in ") + in_path +
                               " 2>/dev/null");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("error:non-finite-input") != std::string::npos);
        CHECK(count_lines(r.out) == 4);  // one bad row, two good ones
    }

    SUBCASE("strict appendix mode rejects the whole batch") {
        {
            std::ofstream f(in_path);
            f << "1,1\n2,1e-7\n";
        }
        const auto r = run_cli(std::string("eval --strict-appendix-a --in ") +
                               in_path + " 2>/dev/null");
        CHECK(r.exit_code == 2);
        CHECK(r.out.find("rejected") != std::string::npos);
        CHECK(r.out.find("Rational") == std::string::npos);
    }

    std::remove(in_path);
}

TEST_CASE("eval function selection") {
    const auto r = run_cli("eval --function dawson --x 1 --y 0 2>/dev/null");
    CHECK(r.exit_code == 0);
    // daw(1) = 0.53807950691276842 with the ~1.3e-11 real-axis residual
    // of the rational form.
    CHECK(r.out.find("0.5380795069") != std::string::npos);
    const auto bad = run_cli("eval --function nope --x 1 --y 0 2>/dev/null");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("parameter flags and config files") {
    SUBCASE("sigma below 1 is rejected up front") {
        const auto r = run_cli("selftest --sigma 0.5 2>/dev/null");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("config file applies, flags win") {
        const char* cfg = "fadw_cli_cfg.txt";
        {
            std::ofstream f(cfg);
            f << "sigma=0.5\n";
        }
        const auto reject = run_cli(std::string("eval --x 1 --y 1 --config ") +
                                    cfg + " 2>/dev/null");
        CHECK(reject.exit_code == 2);
        const auto accept = run_cli(std::string("eval --x 1 --y 1 --sigma 2 "
                                                "--config ") +
                                    cfg + " 2>/dev/null");
        CHECK(accept.exit_code == 0);
        std::remove(cfg);
    }
    SUBCASE("unknown flags are a usage error") {
        const auto r = run_cli("eval --x 1 --y 1 --frobnicate 2>/dev/null");
        CHECK(r.exit_code == 1);
    }
}

TEST_CASE("kernel emission") {
    const auto r = run_cli("kernel --sigma 0.1 --nt 2 --tmax 5 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 3);
    CHECK(r.out.rfind("t,approx,exact\n", 0) == 0);
}

TEST_CASE("map requires a cache or --with-oracle") {
    const char* out_path = "fadw_cli_map.csv";
    const auto r = run_cli(std::string("map --nx 2 --ny 2 --out ") + out_path +
                           " 2>/dev/null");
    CHECK(r.exit_code == 2);
    CHECK(!std::filesystem::exists(out_path));  // no partial file

    const auto ok = run_cli(std::string("map --nx 2 --ny 2 --y0 0.5 --y1 2 "
                                        "--with-oracle --out ") +
                            out_path + " 2>/dev/null");
    CHECK(ok.exit_code == 0);
    const std::string text = slurp(out_path);
    CHECK(count_lines(text) == 5);  // header + 4 cells
    std::remove(out_path);
}

TEST_CASE("bench is deterministic given a seed") {
    auto strip_timing = [](const std::string& s) {
        std::istringstream in(s);
        std::string line, kept;
        while (std::getline(in, line))
            if (line.find("wall time") == std::string::npos &&
                line.find("throughput") == std::string::npos)
                kept += line + "\n";
        return kept;
    };
    const auto a = run_cli("bench --count 1000 --seed 7 2>/dev/null");
    const auto b = run_cli("bench --count 1000 --seed 7 2>/dev/null");
    CHECK(a.exit_code == 0);
    CHECK(strip_timing(a.out) == strip_timing(b.out));

    const auto zero = run_cli("bench --count 0 2>/dev/null");
    CHECK(zero.exit_code == 0);
    CHECK(zero.out.find("0 points") != std::string::npos);
}

TEST_CASE("selftest passes on the default build") {
    const auto r = run_cli("selftest 2>/dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    // Tolerances carry enough margin that the verdict is seed-stable.
    const auto r2 = run_cli("selftest --seed 99 2>/dev/null");
    CHECK(r2.exit_code == 0);
}
