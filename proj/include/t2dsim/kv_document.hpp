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
#ifndef T2DSIM_KV_DOCUMENT_HPP
#define T2DSIM_KV_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace t2d
{

/**
 * @brief Line-oriented key/value text shared by parameter and scenario files.
 *
 *     # comment
 *     key = value          # trailing comment
 *     [section]
 *     key = value
 *
 * Entries before the first header belong to the unnamed section "". Keys may repeat
 * inside a section; section names may not.
 */
struct KvEntry
{
    std::string key;
    std::string value;
    int line = 0;
};

struct KvSection
{
    std::string name;
    int line = 0;
    std::vector<KvEntry> entries;
};

struct KvDocument
{
    std::string source;
    std::vector<KvSection> sections;

    const KvSection* find(std::string_view name) const noexcept;
};

KvDocument parse_kv_document(std::string_view text, std::string source);

std::string_view trim(std::string_view s) noexcept;

/// Strict floating point parse of the whole string; throws DocumentError on failure.
double parse_number(std::string_view text, const std::string& source, int line, const std::string& field);

std::string read_text_file(const std::string& path);

} // namespace t2d

#endif // T2DSIM_KV_DOCUMENT_HPP
