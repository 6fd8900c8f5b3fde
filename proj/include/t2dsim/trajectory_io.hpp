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
#ifndef T2DSIM_TRAJECTORY_IO_HPP
#define T2DSIM_TRAJECTORY_IO_HPP

#include "t2dsim/solver.hpp"

#include <iosfwd>
#include <optional>
#include <string_view>

namespace t2d
{

enum class OutputFormat
{
    csv,
    jsonl, ///< one JSON object per sample, keyed by column name
};

std::optional<OutputFormat> output_format_from_name(std::string_view name) noexcept;

/// Significant digits written for every number.
inline constexpr int kOutputDigits = 10;

/**
 * Write every sample with the column layout of trajectory_columns().
 * @throws DomainError for an empty trajectory, Error when the stream fails.
 */
void write_trajectory(const Trajectory& traj, std::ostream& os, OutputFormat format);

/// Inverse of write_trajectory. @throws DomainError on malformed input.
Trajectory read_trajectory(std::istream& is, OutputFormat format);

} // namespace t2d

#endif // T2DSIM_TRAJECTORY_IO_HPP
