/*
   Copyright 2026 The p3d7 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::vector<std::string> header;             // "# key: value" lines
    std::vector<std::vector<std::string>> rows;  // CSV body after the column line
    std::vector<std::string> columns;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + P3D7_CLI_PATH + " " + args + " 2>/tmp/p3d7_cli_test_stderr";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r{};
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool cols = false;
    for (const auto& line : split(r.out, '\n')) {
        if (line.rfind("# ", 0) == 0) {
            r.header.push_back(line.substr(2));
        } else if (!cols) {
            r.columns = split(line, ',');
            cols = true;
        } else if (!line.empty()) {
            r.rows.push_back(split(line, ','));
        }
    }
    return r;
}

std::string last_stderr() {
    std::ifstream f("/tmp/p3d7_cli_test_stderr");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string meta(const RunResult& r, const std::string& key) {
    for (const auto& h : r.header)
        if (h.rfind(key + ": ", 0) == 0) return h.substr(key.size() + 2);
    return "<missing>";
}

double num(const std::string& s) { return std::stod(s); }

}  // namespace

TEST(CliSolve, SeedIsOneNumeratorRowOverOne) {
    auto r = run("solve --n 0");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.columns, (std::vector<std::string>{"role", "part", "exponent", "re_num", "re_den", "im_num", "im_den"}));
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0], (std::vector<std::string>{"u", "num", "1", "1", "2", "0", "1"}));
    EXPECT_EQ(r.rows[1], (std::vector<std::string>{"u", "den", "0", "1", "1", "0", "1"}));
    for (const char* k : {"command_line", "version", "precision_bits", "realizes"}) EXPECT_NE(meta(r, k), "<missing>");
}

TEST(CliSolve, FirstSolutionAndFullState) {
    auto r = run("solve --n 1");
    ASSERT_EQ(r.code, 0);
    // zeta/2 - 1/(6 zeta) = (3 zeta^2 - 1)/(6 zeta) = (zeta^2/2 - 1/6)/zeta
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_EQ(r.rows[0], (std::vector<std::string>{"u", "num", "0", "-1", "6", "0", "1"}));
    EXPECT_EQ(r.rows[1], (std::vector<std::string>{"u", "num", "2", "1", "2", "0", "1"}));
    EXPECT_EQ(r.rows[2], (std::vector<std::string>{"u", "den", "1", "1", "1", "0", "1"}));
    auto f = run("solve --n 1 --full");
    ASSERT_EQ(f.code, 0);
    std::set<std::string> roles;
    for (const auto& row : f.rows) roles.insert(row[0]);
    EXPECT_EQ(roles, (std::set<std::string>{"u", "E", "P", "Q"}));
}

TEST(CliSolve, JsonAndBudget) {
    auto r = run("solve --n 2 --format json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["columns"].size(), 7u);
    EXPECT_EQ(j["metadata"]["n"], "2");
    EXPECT_FALSE(j["rows"].empty());
    EXPECT_EQ(run("solve --n 41").code, 2);
    EXPECT_NE(last_stderr().find("exceeds"), std::string::npos);
    EXPECT_EQ(run("solve --n 3 --max-n 2").code, 2);
    EXPECT_EQ(run("solve --n 1 --bogus").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(CliValidate, PassesAndNegativeControls) {
    EXPECT_EQ(run("validate --n-max 5").code, 0);
    auto seed = run("validate --n-max 0");
    EXPECT_EQ(seed.code, 0);
    EXPECT_EQ(seed.rows.size(), 9u);
    for (const char* c : {"u", "E", "P", "Q"}) {
        auto r = run(std::string("validate --n-max 2 --perturb ") + c + " --perturb-n -2");
        EXPECT_EQ(r.code, 1) << c;
        EXPECT_NE(last_stderr().find("at n = -2"), std::string::npos) << c;
        EXPECT_NE(meta(r, "result").find("first failure"), std::string::npos);
    }
    EXPECT_EQ(run("validate --n-max 1 --perturb X").code, 2);
}

TEST(CliRoots, SmallCases) {
    auto r1 = run("roots --n 1");
    ASSERT_EQ(r1.code, 0);
    EXPECT_EQ(r1.columns, (std::vector<std::string>{"n", "re_zeta", "im_zeta", "re_Y", "im_Y", "residual"}));
    ASSERT_EQ(r1.rows.size(), 1u);
    EXPECT_EQ(num(r1.rows[0][1]), 0.0);
    EXPECT_EQ(num(r1.rows[0][2]), 0.0);
    auto r2 = run("roots --n 2");
    ASSERT_EQ(r2.rows.size(), 3u);
    EXPECT_NEAR(num(r2.rows[0][1]), -0.57735, 1e-5);
    EXPECT_EQ(num(r2.rows[1][1]), 0.0);
    EXPECT_NEAR(num(r2.rows[2][1]), 0.57735, 1e-5);
}

TEST(CliRoots, PrecisionFlagAndEnvironment) {
    EXPECT_EQ(meta(run("roots --n 3"), "precision_bits"), "256");
    EXPECT_EQ(meta(run("roots --n 3", "P3D7_PRECISION_BITS=128"), "precision_bits"), "128");
    EXPECT_EQ(meta(run("roots --n 3 --precision 512", "P3D7_PRECISION_BITS=128"), "precision_bits"), "512");
    EXPECT_EQ(run("roots --n 3 --precision 32").code, 2);
    EXPECT_EQ(run("roots --n 3", "P3D7_PRECISION_BITS=abc").code, 2);
    EXPECT_EQ(run("roots --n 0").code, 2);
}

TEST(CliRoots, DeterministicAndAtomicFileOutput) {
    const auto dir = std::filesystem::temp_directory_path() / "p3d7_cli_test";
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.csv", b = dir / "b.csv";
    ASSERT_EQ(run("roots --n 6 --out " + a.string()).code, 0);
    ASSERT_EQ(run("roots --n 6 --out " + b.string()).code, 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p);
        std::string s((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
        return s.substr(s.find('\n'));  // the first line echoes the differing --out path
    };
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(std::filesystem::exists(a.string() + ".tmp"));
    EXPECT_EQ(run("roots --n 6 --out /nonexistent_dir/x.csv").code, 3);
    std::filesystem::remove_all(dir);
}

TEST(CliBoundary, CornersAndSymmetry) {
    auto r = run("boundary --resolution 64");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.columns, (std::vector<std::string>{"segment_id", "kind", "re_Y", "im_Y"}));
    const double rad = std::cbrt(2.0) / std::sqrt(3.0);
    int corners = 0;
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : r.rows) {
        const double x = num(row[2]), y = num(row[3]);
        pts.emplace_back(x, y);
        if (row[1] == "corner") {
            ++corners;
            EXPECT_NEAR(std::hypot(x, y), rad, 1e-10);
            EXPECT_NEAR(std::abs(std::atan2(y, x)), x > 0 ? M_PI / 6 : 5 * M_PI / 6, 1e-10);
        }
    }
    EXPECT_EQ(corners, 4);
    const double tol = 2.0 * 1.2 / 64;
    for (auto [x, y] : pts) {
        double best = INFINITY;
        for (auto [u, v] : pts) best = std::min(best, std::hypot(u + x, v + y));
        EXPECT_LE(best, tol);
    }
    EXPECT_NEAR(num(meta(r, "real_axis_crossing")), 0.6634, 5e-3);
    EXPECT_EQ(run("boundary --resolution 63").code, 2);
}

TEST(CliCompare, ConvergenceAndLimits) {
    auto r = run("compare --y 1 --n-list 2,5,10");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.columns[0], "n");
    EXPECT_EQ(r.columns[1], "exact_re");
    EXPECT_EQ(r.columns[2], "exact_im");
    EXPECT_EQ(r.columns[3], "asymptotic");
    EXPECT_EQ(r.columns[4], "abs_error");
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_GT(num(r.rows[0][4]), num(r.rows[1][4]));
    EXPECT_GT(num(r.rows[1][4]), num(r.rows[2][4]));
    EXPECT_NEAR(num(meta(r, "U_re")), 0.3411, 1e-4);
    EXPECT_NE(meta(r, "s_re"), "<missing>");

    auto big = run("compare --y 1e6 --n-list 5");
    ASSERT_EQ(big.code, 0);
    EXPECT_NEAR(num(big.rows[0][3]), 50.0, 0.05);

    auto im = run("compare --Y-imag 1.2 --n-list 4,8");
    ASSERT_EQ(im.code, 0);
    EXPECT_EQ(num(im.rows[0][3]), 0.0);
    EXPECT_GT(num(im.rows[0][5]), 0.0);

    EXPECT_EQ(run("compare --y 0.2 --n-list 2,5").code, 2);
    EXPECT_NE(last_stderr().find("critical"), std::string::npos);
    EXPECT_EQ(run("compare --n-list 2").code, 2);
    EXPECT_EQ(run("compare --y 1 --Y-imag 1 --n-list 2").code, 2);
}

TEST(CliCritical, ValueAndDeterminism) {
    auto r = run("critical");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.columns, (std::vector<std::string>{"y_c", "s", "d"}));
    EXPECT_NEAR(num(r.rows[0][0]), 0.29177, 1e-4);
    EXPECT_NEAR(num(r.rows[0][1]), -0.0737, 2e-4);
    auto a = run("critical --tol 1e-10"), b = run("critical --tol 1e-10");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.rows[0][0].substr(0, 12), r.rows[0][0].substr(0, 12));
    EXPECT_EQ(run("critical --tol -1").code, 2);
}
