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
#ifndef T2DSIM_CLI_HPP
#define T2DSIM_CLI_HPP

#include <iosfwd>

namespace t2d
{

inline constexpr int kExitOk         = 0;
inline constexpr int kExitInvalid    = 1;
inline constexpr int kExitSolverFail = 2;

/**
 * Command-line entry point: `run`, `basal` and `cases` subcommands.
 * Diagnostics go to `err`; results go to `out` unless `run --out` names a file.
 */
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace t2d

#endif // T2DSIM_CLI_HPP
