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
#include "t2dsim/scenario.hpp"
#include "t2dsim/errors.hpp"
#include "t2dsim/kv_document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <set>

namespace t2d
{
namespace
{

struct Quantity
{
    double value;
    std::string unit;
};

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

/// "<number>[ ]<unit>"; unit may be empty.
Quantity split_quantity(std::string_view text, const std::string& source, int line, const std::string& field)
{
    text = trim(text);
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || !std::isfinite(v)) {
        throw DocumentError(source, line, field, "expected a number, got '" + std::string(text) + "'");
    }
    return {v, std::string(trim(std::string_view(ptr, static_cast<std::size_t>(last - ptr))))};
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = s.find(',', pos);
        out.push_back(trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

double dose_amount(DoseKind kind, std::string_view text, const std::string& source, int line,
                   const std::string& field)
{
    const auto q = split_quantity(text, source, line, field);
    const auto unit = lower(q.unit);
    double scale = 0.0;
    switch (kind) {
    case DoseKind::meal:
        scale = unit == "g" ? 1000.0 : unit == "mg" ? 1.0 : 0.0;
        break;
    case DoseKind::fast_insulin:
    case DoseKind::long_insulin:
        scale = unit == "u" ? 1000.0 : unit == "mu" ? 1.0 : 0.0;
        break;
    case DoseKind::metformin:
        scale = unit == "g" ? 1e6 : unit == "mg" ? 1e3 : unit == "ug" ? 1.0 : 0.0;
        break;
    case DoseKind::vildagliptin:
        scale = unit == "nmol" ? 1.0 : 0.0;
        break;
    }
    if (scale == 0.0) {
        throw DocumentError(source, line, field, "missing or unsupported unit '" + q.unit + "'");
    }
    if (!(q.value > 0.0)) {
        throw DocumentError(source, line, field, "dose amount must be > 0");
    }
    return q.value * scale;
}

double plain_number(std::string_view text, const std::string& source, int line, const std::string& field)
{
    return parse_number(trim(text), source, line, field);
}

void parse_top(const KvSection& s, Scenario& sc, const std::string& src)
{
    bool has_version = false;
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
        if (!seen.insert(e.key).second) {
            throw DocumentError(src, e.line, e.key, "duplicate key");
        }
        if (e.key == "version") {
            const double v = plain_number(e.value, src, e.line, e.key);
            if (v != kScenarioVersion) {
                throw DocumentError(src, e.line, e.key, "unsupported schema version");
            }
            sc.version = kScenarioVersion;
            has_version = true;
        }
        else if (e.key == "name") {
            sc.name = e.value;
        }
        else if (e.key == "description") {
            sc.description = e.value;
        }
        else if (e.key == "duration") {
            sc.duration = plain_number(e.value, src, e.line, e.key);
            if (!(sc.duration > 0.0)) {
                throw DocumentError(src, e.line, e.key, "duration must be > 0");
            }
        }
        else {
            throw DocumentError(src, e.line, e.key, "unknown field");
        }
    }
    if (!has_version) {
        throw DocumentError(src, s.line, "version", "missing mandatory field");
    }
}

void parse_subject(const KvSection& s, Scenario& sc, const std::string& src)
{
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
        if (!seen.insert(e.key).second) {
            throw DocumentError(src, e.line, e.key, "duplicate key");
        }
        if (e.key == "basal_glucose") {
            sc.subject.basal_glucose = parse_glucose(e.value, src, e.line, e.key);
            if (!(sc.subject.basal_glucose > 0.0)) {
                throw DocumentError(src, e.line, e.key, "must be > 0");
            }
        }
        else if (e.key == "basal_I_PF") {
            sc.subject.basal_I_PF = plain_number(e.value, src, e.line, e.key);
            if (!(sc.subject.basal_I_PF > 0.0)) {
                throw DocumentError(src, e.line, e.key, "must be > 0");
            }
        }
        else if (e.key == "HR_b") {
            sc.subject.HR_b = plain_number(e.value, src, e.line, e.key);
            if (!(sc.subject.HR_b > 0.0)) {
                throw DocumentError(src, e.line, e.key, "must be > 0");
            }
        }
        else {
            throw DocumentError(src, e.line, e.key, "unknown field");
        }
    }
}

void parse_initial(const KvSection& s, Scenario& sc, const std::string& src)
{
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
        const auto st = state_from_name(e.key);
        if (!st) {
            throw DocumentError(src, e.line, e.key, "unknown state");
        }
        if (!seen.insert(e.key).second) {
            throw DocumentError(src, e.line, e.key, "duplicate key");
        }
        double v = 0.0;
        if (e.key.starts_with("G_")) {
            v = parse_glucose(e.value, src, e.line, e.key);
        }
        else {
            v = plain_number(e.value, src, e.line, e.key);
            if (is_guarded(*st) && v < 0.0) {
                throw DocumentError(src, e.line, e.key, "must be >= 0");
            }
        }
        sc.initial.push_back({*st, v});
    }
}

void parse_solver(const KvSection& s, Scenario& sc, const std::string& src)
{
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
        if (!seen.insert(e.key).second) {
            throw DocumentError(src, e.line, e.key, "duplicate key");
        }
        auto positive = [&] {
            const double v = plain_number(e.value, src, e.line, e.key);
            if (!(v > 0.0)) {
                throw DocumentError(src, e.line, e.key, "must be > 0");
            }
            return v;
        };
        if (e.key == "method") {
            if (e.value == "adaptive") {
                sc.settings.method = Method::adaptive;
            }
            else if (e.value == "fixed") {
                sc.settings.method = Method::fixed_step;
            }
            else {
                throw DocumentError(src, e.line, e.key, "expected 'adaptive' or 'fixed'");
            }
        }
        else if (e.key == "rtol") {
            sc.settings.rtol = positive();
        }
        else if (e.key == "atol") {
            sc.settings.atol = positive();
        }
        else if (e.key == "max_step") {
            sc.settings.max_step = positive();
        }
        else if (e.key == "fixed_step") {
            sc.settings.fixed_step = positive();
        }
        else if (e.key == "sample_interval") {
            sc.settings.sample_interval = positive();
        }
        else {
            throw DocumentError(src, e.line, e.key, "unknown field");
        }
    }
}

void parse_parameter_overrides(const KvSection& s, Scenario& sc, const std::string& src)
{
    std::set<std::string> seen;
    for (const auto& e : s.entries) {
        double* field = find_parameter(sc.params, e.key);
        if (field == nullptr) {
            throw DocumentError(src, e.line, e.key, "unknown parameter");
        }
        if (!seen.insert(e.key).second) {
            throw DocumentError(src, e.line, e.key, "duplicate key");
        }
        *field = plain_number(e.value, src, e.line, e.key);
    }
    if (seen.contains("k_abs") && !seen.contains("k_t")) {
        sc.params.k_t = sc.params.k_abs;
    }
    if (seen.contains("V_I_PF") && !seen.contains("V_I")) {
        sc.params.V_I = sc.params.V_I_PF;
    }
    try {
        validate(sc.params);
    }
    catch (const ParameterDomainError& err) {
        throw DocumentError(src, s.line, "parameters", err.what());
    }
}

void parse_schedule(const KvSection& s, Scenario& sc, const std::string& src)
{
    for (const auto& e : s.entries) {
        const auto items = split_list(e.value);
        if (e.key == "exercise" || e.key == "stress") {
            if (items.size() != 3) {
                throw DocumentError(src, e.line, e.key, "expected 'start, duration, value'");
            }
            SignalInterval iv{plain_number(items[0], src, e.line, e.key), plain_number(items[1], src, e.line, e.key),
                              plain_number(items[2], src, e.line, e.key)};
            if (!(iv.duration > 0.0)) {
                throw DocumentError(src, e.line, e.key, "interval duration must be > 0");
            }
            if (!(iv.start >= 0.0) || iv.end() > sc.duration) {
                throw DocumentError(src, e.line, e.key, "interval must lie within [0, duration]");
            }
            if (e.key == "stress" && !(iv.value >= 0.0 && iv.value <= 1.0)) {
                throw DocumentError(src, e.line, e.key, "stress severity must lie in [0, 1]");
            }
            (e.key == "exercise" ? sc.exercise : sc.stress).push_back(iv);
            continue;
        }
        const auto kind = dose_kind_from_name(e.key);
        if (!kind) {
            throw DocumentError(src, e.line, e.key, "unknown schedule entry");
        }
        if (items.size() != 2) {
            throw DocumentError(src, e.line, e.key, "expected 'time, amount unit'");
        }
        const double t = plain_number(items[0], src, e.line, e.key);
        if (!(t >= 0.0 && t <= sc.duration)) {
            throw DocumentError(src, e.line, e.key, "event time must lie within [0, duration]");
        }
        sc.events.push_back({t, *kind, dose_amount(*kind, items[1], src, e.line, e.key)});
    }
}

} // namespace

double parse_glucose(std::string_view text, const std::string& source, int line, const std::string& field)
{
    const auto q = split_quantity(text, source, line, field);
    const auto unit = lower(q.unit);
    double mg = 0.0;
    if (unit == "mmol/l" || unit == "mmol") {
        mg = q.value * kGlucoseMgPerDlPerMmolPerL;
    }
    else if (unit == "mg/dl" || unit == "mg") {
        mg = q.value;
    }
    else if (unit.empty()) {
        throw DocumentError(source, line, field, "glucose needs a unit tag (mmol/l or mg/dl)");
    }
    else {
        throw DocumentError(source, line, field, "unsupported glucose unit '" + q.unit + "'");
    }
    if (!(mg >= 0.0)) {
        throw DocumentError(source, line, field, "glucose must be >= 0");
    }
    return mg;
}

void Scenario::validate() const
{
    if (version != kScenarioVersion) {
        throw DomainError("unsupported scenario version");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw DomainError("duration must be > 0");
    }
    if (!(subject.basal_glucose > 0.0) || !(subject.basal_I_PF > 0.0) || !(subject.HR_b > 0.0)) {
        throw InvalidBasalError("subject basal values must be > 0");
    }
    settings.validate();
    t2d::validate(params);
    for (const auto& e : events) {
        if (!(e.time >= 0.0 && e.time <= duration)) {
            throw ScheduleError("event at t = " + format_double(e.time) + " lies outside [0, duration]");
        }
        if (!(e.amount > 0.0) || !std::isfinite(e.amount)) {
            throw ScheduleError("dose amount must be > 0");
        }
    }
    for (const auto* list : {&exercise, &stress}) {
        for (const auto& iv : *list) {
            if (!(iv.start >= 0.0) || !(iv.duration > 0.0) || iv.end() > duration) {
                throw ScheduleError("interval [" + format_double(iv.start) + ", " + format_double(iv.end()) +
                                    ") lies outside [0, duration]");
            }
        }
    }
    ExogenousSignals(subject.HR_b, exercise, stress);
}

Scenario parse_scenario(std::string_view text, const std::string& source, const ParameterSet& base)
{
    const auto doc = parse_kv_document(text, source);
    Scenario sc;
    sc.params = base;
    const KvSection* top = doc.find("");
    if (top == nullptr) {
        throw DocumentError(source, 1, "version", "missing mandatory field");
    }
    parse_top(*top, sc, source);
    for (const auto& s : doc.sections) {
        if (s.name.empty()) {
            continue;
        }
        if (s.name == "subject") {
            parse_subject(s, sc, source);
        }
        else if (s.name == "initial") {
            parse_initial(s, sc, source);
        }
        else if (s.name == "solver") {
            parse_solver(s, sc, source);
        }
        else if (s.name == "parameters") {
            parse_parameter_overrides(s, sc, source);
        }
        else if (s.name == "schedule") {
            parse_schedule(s, sc, source);
        }
        else {
            throw DocumentError(source, s.line, s.name, "unknown section");
        }
    }
    try {
        sc.validate();
    }
    catch (const DocumentError&) {
        throw;
    }
    catch (const DomainError& err) {
        throw DocumentError(source, 0, "", err.what());
    }
    return sc;
}

Scenario load_scenario(const std::string& path, const ParameterSet& base)
{
    return parse_scenario(read_text_file(path), path, base);
}

std::vector<std::string> bundled_case_paths()
{
    namespace fs = std::filesystem;
    const char* env = std::getenv("T2DSIM_CASES_DIR");
    const fs::path dir = env != nullptr ? fs::path(env) : fs::path(T2DSIM_CASES_DIR);
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".scn") {
            out.push_back(entry.path().string());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace t2d
