// Copyright 2026 The frselect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "frselect/bench.hpp"

namespace frselect {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// 50000 -> "50K", 1000000 -> "1M"; other sizes verbatim.
std::string size_label(std::int64_t n) {
    if (n >= 1000000 && n % 1000000 == 0) return std::to_string(n / 1000000) + "M";
    if (n >= 1000 && n % 1000 == 0) return std::to_string(n / 1000) + "K";
    return std::to_string(n);
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double to_double(const std::string& field) {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument("table: bad number '" + field + "'");
    return v;
}

std::int64_t to_int(const std::string& field) {
    std::size_t used = 0;
    const long long v = std::stoll(field, &used);
    if (used != field.size()) throw std::invalid_argument("table: bad integer '" + field + "'");
    return v;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> columns = {
        "sequence", "n",        "reps",      "time_avg_ms", "time_max_ms",   "time_min_ms", "c_avg_n",  "c_max_n",
        "c_min_n",  "gamma_avg", "l_avg_n", "p_avg_lnn",   "n_avg_lnn", "p_sselect_avg", "s_avg_pct",
    };
    return columns;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::kCsv;
    if (name == "markdown") return TableFormat::kMarkdown;
    return std::nullopt;
}

std::string emit_table(const std::vector<TableRow>& rows, TableFormat format) {
    std::ostringstream os;
    if (format == TableFormat::kCsv) {
        const auto& cols = csv_columns();
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
        os << '\n';
        for (const auto& row : rows) {
            const AggregateStats& s = row.stats;
            os << row.sequence << ',' << s.n << ',' << s.reps << ',' << fixed(s.time_avg, 3) << ','
               << fixed(s.time_max, 3) << ',' << fixed(s.time_min, 3) << ',' << fixed(s.c_avg, 2) << ','
               << fixed(s.c_max, 2) << ',' << fixed(s.c_min, 2) << ',' << fixed(s.gamma_avg, 2) << ','
               << fixed(s.l_avg, 2) << ',' << fixed(s.p_avg, 2) << ',' << fixed(s.n_avg, 2) << ','
               << fixed(s.p_sselect_avg, 2) << ',' << fixed(s.s_avg, 2) << '\n';
        }
        return os.str();
    }

    os << "| Sequence | Size n | Time avg [ms] | Time max | Time min | C avg [n] | C max | C min | gamma_avg "
          "| L_avg [n] | P_avg [ln n] | N_avg [ln n] | p_avg | s_avg [%n] |\n";
    os << "|:---|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    std::string previous;
    for (const auto& row : rows) {
        const AggregateStats& s = row.stats;
        const std::string label = row.sequence == previous ? "" : row.sequence;
        previous = row.sequence;
        os << "| " << label << " | " << size_label(s.n) << " | " << fixed(s.time_avg, 3) << " | "
           << fixed(s.time_max, 3) << " | " << fixed(s.time_min, 3) << " | " << fixed(s.c_avg, 2) << " | "
           << fixed(s.c_max, 2) << " | " << fixed(s.c_min, 2) << " | " << fixed(s.gamma_avg, 2) << " | "
           << fixed(s.l_avg, 2) << " | " << fixed(s.p_avg, 2) << " | " << fixed(s.n_avg, 2) << " | "
           << fixed(s.p_sselect_avg, 2) << " | " << fixed(s.s_avg, 2) << " |\n";
    }
    return os.str();
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || split(line, ',') != csv_columns()) {
        throw std::invalid_argument("table: unexpected CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != csv_columns().size()) {
            throw std::invalid_argument("table: wrong field count in '" + line + "'");
        }
        TableRow row;
        row.sequence = f[0];
        AggregateStats& s = row.stats;
        s.n = to_int(f[1]);
        s.reps = to_int(f[2]);
        s.time_avg = to_double(f[3]);
        s.time_max = to_double(f[4]);
        s.time_min = to_double(f[5]);
        s.c_avg = to_double(f[6]);
        s.c_max = to_double(f[7]);
        s.c_min = to_double(f[8]);
        s.gamma_avg = to_double(f[9]);
        s.l_avg = to_double(f[10]);
        s.p_avg = to_double(f[11]);
        s.n_avg = to_double(f[12]);
        s.p_sselect_avg = to_double(f[13]);
        s.s_avg = to_double(f[14]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace frselect
