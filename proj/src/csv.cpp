// Copyright 2026 The spinmotion Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinmotion/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spinmotion/errors.hpp"

namespace spinmotion {

std::string format_sig17(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::vector<std::string> split_line(const std::string &line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

void write_table(const std::string &path, const std::vector<std::string> &header,
                 const std::vector<std::vector<double>> &columns)
{
    std::ofstream os(path, std::ios::binary); // '\n' line ends, unconditionally
    if (!os) {
        throw ParseError("cannot open for writing: " + path);
    }
    for (size_t c = 0; c < header.size(); ++c) {
        os << (c ? "," : "") << header[c];
    }
    os << '\n';
    const size_t n = columns.empty() ? 0 : columns[0].size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t c = 0; c < columns.size(); ++c) {
            os << (c ? "," : "") << format_sig17(columns[c][i]);
        }
        os << '\n';
    }
    if (!os) {
        throw ParseError("write failed: " + path);
    }
}

} // namespace

CsvTable read_csv(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw ParseError("cannot open: " + path);
    }
    CsvTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (lineno == 1) {
            table.header = split_line(line);
            if (table.header.empty()) {
                throw ParseError("missing header row", 1);
            }
            continue;
        }
        const std::vector<std::string> cells = split_line(line);
        if (cells.size() != table.header.size()) {
            throw ParseError("wrong number of columns", lineno);
        }
        std::vector<double> row(cells.size());
        for (size_t c = 0; c < cells.size(); ++c) {
            try {
                size_t used = 0;
                row[c] = std::stod(cells[c], &used);
                if (used != cells[c].size()) {
                    throw ParseError("trailing characters in numeric cell", lineno);
                }
            } catch (const ParseError &) {
                throw;
            } catch (const std::exception &) {
                throw ParseError("not a number: '" + cells[c] + "'", lineno);
            }
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) {
        throw ParseError("empty file: " + path, 0);
    }
    return table;
}

void write_scan_csv(const std::string &path, const ScanResult &scan)
{
    scan.validate();
    write_table(path, {"x", "p", "sigma"}, {scan.x, scan.p, scan.sigma});
}

ScanResult read_scan_csv(const std::string &path)
{
    const CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"x", "p", "sigma"}) {
        throw ParseError("expected header x,p,sigma in " + path, 1);
    }
    ScanResult scan;
    scan.meta = "loaded from " + path;
    for (const auto &row : table.rows) {
        scan.x.push_back(row[0]);
        scan.p.push_back(row[1]);
        scan.sigma.push_back(row[2]);
    }
    scan.validate();
    return scan;
}

void write_detuning_csv(const std::string &path, const ScanResult &scan)
{
    scan.validate();
    write_table(path, {"delta_rad_s", "p_f1"}, {scan.x, scan.p});
}

void write_trajectory_csv(const std::string &path, const std::vector<TrajectoryPoint> &traj)
{
    std::vector<double> t, re, im;
    t.reserve(traj.size());
    re.reserve(traj.size());
    im.reserve(traj.size());
    for (const auto &pt : traj) {
        t.push_back(pt.t);
        re.push_back(pt.alpha.real());
        im.push_back(pt.alpha.imag());
    }
    write_table(path, {"t_s", "re_alpha", "im_alpha"}, {t, re, im});
}

} // namespace spinmotion
