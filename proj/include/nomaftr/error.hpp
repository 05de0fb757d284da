// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nomaftr {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Series, recurrence or quadrature that did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Series truncated too early for the requested parameters.
class TruncationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed or physically invalid run configuration.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, std::size_t line, const std::string& message)
        : std::runtime_error(format(key, line, message)), key_(std::move(key)), line_(line)
    {
    }

    const std::string& key() const noexcept { return key_; }
    //! Zero when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

  private:
    static std::string format(const std::string& key, std::size_t line, const std::string& message)
    {
        std::string out;
        if (line > 0)
            out += "line " + std::to_string(line) + ": ";
        if (!key.empty())
            out += "'" + key + "': ";
        return out + message;
    }

    std::string key_;
    std::size_t line_;
};

}  // namespace nomaftr
