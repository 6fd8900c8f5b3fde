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
#include "t2dsim/kv_document.hpp"
#include "t2dsim/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace t2d
{

const KvSection* KvDocument::find(std::string_view name) const noexcept
{
    for (const auto& s : sections) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

std::string_view trim(std::string_view s) noexcept
{
    const auto ws = " \t\r";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

KvDocument parse_kv_document(std::string_view text, std::string source)
{
    KvDocument doc;
    doc.source = std::move(source);
    doc.sections.push_back(KvSection{"", 0, {}});

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw DocumentError(doc.source, line_no, "", "malformed section header '" + std::string(line) + "'");
            }
            auto name = std::string(trim(line.substr(1, line.size() - 2)));
            if (doc.find(name) != nullptr) {
                throw DocumentError(doc.source, line_no, name, "duplicate section");
            }
            doc.sections.push_back(KvSection{name, line_no, {}});
        }
        else {
            auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw DocumentError(doc.source, line_no, "", "expected 'key = value', got '" + std::string(line) + "'");
            }
            auto key   = trim(line.substr(0, eq));
            auto value = trim(line.substr(eq + 1));
            if (key.empty()) {
                throw DocumentError(doc.source, line_no, "", "missing key");
            }
            if (value.empty()) {
                throw DocumentError(doc.source, line_no, std::string(key), "missing value");
            }
            doc.sections.back().entries.push_back(KvEntry{std::string(key), std::string(value), line_no});
        }
        if (end == text.size()) {
            break;
        }
    }
    return doc;
}

double parse_number(std::string_view text, const std::string& source, int line, const std::string& field)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw DocumentError(source, line, field, "not a number: '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) {
        throw DocumentError(source, line, field, "value must be finite");
    }
    return v;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace t2d
