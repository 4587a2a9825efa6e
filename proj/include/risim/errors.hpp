// SPDX-License-Identifier: Apache-2.0
//
// risim: simulation library for RIS-assisted physical-layer secrecy
// Copyright (C) 2026 The risim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISIM_ERRORS_HPP
#define RISIM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace risim
{

// Exception hierarchy. The C API maps each type onto a distinct status code.

// Argument outside the mathematical domain of an operation (d <= 0, chi <= 0, alpha > 1, ...)
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Vector lengths that must agree do not
class DimensionError : public std::length_error
{
public:
    using std::length_error::length_error;
};

// Element index out of range
class IndexError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Requested work exceeds a configured cap (oracle grids)
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// File could not be read or written
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed or invalid configuration document. Carries the offending key and
// the 1-based line number (0 when the problem is not tied to a line).
class ConfigError : public std::invalid_argument
{
public:
    ConfigError(std::string key, std::size_t line, const std::string &message)
        : std::invalid_argument(format(key, line, message)), key_(std::move(key)), line_(line) {}

    const std::string &key() const noexcept { return key_; }
    std::size_t line() const noexcept { return line_; }

private:
    static std::string format(const std::string &key, std::size_t line, const std::string &message)
    {
        std::string out;
        if (line != 0)
            out += "line " + std::to_string(line) + ": ";
        if (!key.empty())
            out += "'" + key + "': ";
        return out + message;
    }

    std::string key_;
    std::size_t line_;
};

} // namespace risim

#endif
