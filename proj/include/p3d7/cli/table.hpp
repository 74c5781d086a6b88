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

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "../errors.hpp"

namespace p3d7::cli {

using Cell = std::variant<std::string, long, double>;

/// 17 significant digits, enough to round-trip a binary64 value.
inline std::string format_double(double v) {
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// A result table plus ordered metadata; rendered as CSV or JSON.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void meta(std::string key, std::string value) { metadata.emplace_back(std::move(key), std::move(value)); }
    void meta(std::string key, double value) { meta(std::move(key), format_double(value)); }

    std::string csv() const {
        std::ostringstream os;
        for (const auto& [k, v] : metadata) os << "# " << k << ": " << v << '\n';
        for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
        os << '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) os << ',';
                std::visit(
                    [&](const auto& x) {
                        using T = std::decay_t<decltype(x)>;
                        if constexpr (std::is_same_v<T, double>)
                            os << format_double(x);
                        else
                            os << x;
                    },
                    row[c]);
            }
            os << '\n';
        }
        return os.str();
    }

    std::string json() const {
        nlohmann::ordered_json j;
        j["metadata"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : metadata) j["metadata"][k] = v;
        j["columns"] = columns;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            auto r = nlohmann::ordered_json::array();
            for (const auto& cell : row) std::visit([&](const auto& x) { r.push_back(x); }, cell);
            j["rows"].push_back(std::move(r));
        }
        return j.dump(2) + "\n";
    }

    std::string render(const std::string& format) const {
        if (format == "csv") return csv();
        if (format == "json") return json();
        throw DomainError("unknown output format '" + format + "'");
    }
};

/// Writes via a sibling temporary file and rename; "-" or empty means stdout.
inline void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content << std::flush;
        return;
    }
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open '" + tmp.string() + "' for writing");
        f << content;
        f.flush();
        if (!f) throw Error("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move output into place at '" + path + "': " + ec.message());
    }
}

}  // namespace p3d7::cli
