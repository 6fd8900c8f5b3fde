/*
* Copyright (C) 2026 The t2dsim Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "t2dsim/trajectory_io.hpp"
#include "t2dsim/errors.hpp"
#include "t2dsim/kv_document.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

namespace t2d
{
namespace
{

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", kOutputDigits, v);
    return buf;
}

std::vector<double> row_values(const Sample& s)
{
    std::vector<double> row;
    row.reserve(1 + kStateCount + kDerivedCount);
    row.push_back(s.t);
    row.insert(row.end(), s.x.values.begin(), s.x.values.end());
    for (double d : derived_values(s.derived)) {
        row.push_back(d);
    }
    return row;
}

Sample sample_from(const std::vector<double>& row)
{
    Sample s;
    s.t = row[0];
    for (std::size_t i = 0; i < kStateCount; ++i) {
        s.x.values[i] = row[1 + i];
    }
    const double* d = row.data() + 1 + kStateCount;
    s.derived = DerivedOutputs{d[0], d[1], d[2], d[3], d[4], d[5], d[6]};
    return s;
}

} // namespace

std::optional<OutputFormat> output_format_from_name(std::string_view name) noexcept
{
    if (name == "csv") {
        return OutputFormat::csv;
    }
    if (name == "jsonl") {
        return OutputFormat::jsonl;
    }
    return std::nullopt;
}

void write_trajectory(const Trajectory& traj, std::ostream& os, OutputFormat format)
{
    if (traj.empty()) {
        throw DomainError("cannot write an empty trajectory");
    }
    const auto cols = trajectory_columns();
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            os << (i ? "," : "") << cols[i];
        }
        os << '\n';
        for (const auto& s : traj.samples) {
            const auto row = row_values(s);
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << fmt(row[i]);
            }
            os << '\n';
        }
    }
    else {
        for (const auto& s : traj.samples) {
            const auto row = row_values(s);
            nlohmann::ordered_json rec;
            for (std::size_t i = 0; i < row.size(); ++i) {
                // round through the text form so both formats carry the same digits
                rec[cols[i]] = std::strtod(fmt(row[i]).c_str(), nullptr);
            }
            os << rec.dump() << '\n';
        }
    }
    if (!os) {
        throw Error("failed writing trajectory");
    }
}

Trajectory read_trajectory(std::istream& is, OutputFormat format)
{
    const auto cols = trajectory_columns();
    Trajectory traj;
    std::string line;
    int line_no = 0;
    if (format == OutputFormat::csv) {
        if (!std::getline(is, line)) {
            throw DomainError("missing CSV header");
        }
        ++line_no;
        std::string expected;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            expected += (i ? "," : "") + cols[i];
        }
        if (line != expected) {
            throw DocumentError("<csv>", line_no, "", "unexpected header");
        }
        while (std::getline(is, line)) {
            ++line_no;
            if (line.empty()) {
                continue;
            }
            std::vector<double> row;
            std::size_t pos = 0;
            while (true) {
                const auto comma = line.find(',', pos);
                const auto cell = std::string_view(line).substr(pos, comma == std::string::npos ? std::string::npos
                                                                                               : comma - pos);
                row.push_back(parse_number(cell, "<csv>", line_no, cols[std::min(row.size(), cols.size() - 1)]));
                if (comma == std::string::npos) {
                    break;
                }
                pos = comma + 1;
            }
            if (row.size() != cols.size()) {
                throw DocumentError("<csv>", line_no, "", "wrong column count");
            }
            traj.samples.push_back(sample_from(row));
        }
        return traj;
    }

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        }
        catch (const nlohmann::json::exception& e) {
            throw DocumentError("<jsonl>", line_no, "", e.what());
        }
        std::vector<double> row;
        for (const auto& c : cols) {
            const auto it = rec.find(c);
            if (it == rec.end() || !it->is_number()) {
                throw DocumentError("<jsonl>", line_no, c, "missing or non-numeric field");
            }
            row.push_back(it->get<double>());
        }
        if (rec.size() != cols.size()) {
            throw DocumentError("<jsonl>", line_no, "", "unexpected fields");
        }
        traj.samples.push_back(sample_from(row));
    }
    return traj;
}

} // namespace t2d
