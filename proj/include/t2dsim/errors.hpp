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
#ifndef T2DSIM_ERRORS_HPP
#define T2DSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace t2d
{

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: out-of-range values, bad units, malformed documents.
class DomainError : public Error
{
public:
    using Error::Error;
};

class InvalidBasalError : public DomainError
{
public:
    using DomainError::DomainError;
};

class ParameterDomainError : public DomainError
{
public:
    using DomainError::DomainError;
};

class ScheduleError : public DomainError
{
public:
    using DomainError::DomainError;
};

/// Parse or validation failure with a location in the source document.
class DocumentError : public DomainError
{
public:
    DocumentError(std::string source, int line, std::string field, const std::string& what)
        : DomainError(source + ":" + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") + ": " + what)
        , m_source(std::move(source))
        , m_line(line)
        , m_field(std::move(field))
    {
    }

    const std::string& source() const noexcept { return m_source; }
    int line() const noexcept { return m_line; }
    const std::string& field() const noexcept { return m_field; }

private:
    std::string m_source;
    int m_line;
    std::string m_field;
};

class BasalConvergenceError : public Error
{
public:
    BasalConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")")
        , m_residual(residual)
    {
    }

    double residual() const noexcept { return m_residual; }

private:
    double m_residual;
};

/// Integration failure. Carries the simulation time and the offending state, if known.
class SolverError : public Error
{
public:
    SolverError(const std::string& what, double time, std::string state = {})
        : Error(what + " at t = " + std::to_string(time) + " min" + (state.empty() ? "" : " (state " + state + ")"))
        , m_time(time)
        , m_state(std::move(state))
    {
    }

    double time() const noexcept { return m_time; }
    const std::string& state() const noexcept { return m_state; }

private:
    double m_time;
    std::string m_state;
};

} // namespace t2d

#endif // T2DSIM_ERRORS_HPP
