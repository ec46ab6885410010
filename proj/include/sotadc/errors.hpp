/* Copyright 2026 The sotadc Authors
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

#ifndef SOTADC_ERRORS_HPP
#define SOTADC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sotadc {

/// Error category, mapped to process exit codes by the CLI:
/// Input -> 2 (malformed files, bad configuration), Model -> 3 (numeric or
/// state errors inside the simulation).
enum class ErrorKind { Input, Model };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return kind_ == ErrorKind::Input ? 2 : 3; }

  private:
    ErrorKind kind_;
};

/// Operation argument outside its mathematical domain (negative width,
/// non-finite current, ...).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(ErrorKind::Model, msg) {}
};

/// Index outside a container (device id not present in a topology, ...).
class RangeError : public Error {
  public:
    explicit RangeError(const std::string& msg) : Error(ErrorKind::Model, msg) {}
};

/// Operation called in the wrong phase (convert on an un-reset bank).
class StateError : public Error {
  public:
    explicit StateError(const std::string& msg) : Error(ErrorKind::Model, msg) {}
};

/// Numeric failure of an algorithm (singular fit, exhausted redraws, ...).
class NumericError : public Error {
  public:
    explicit NumericError(const std::string& msg) : Error(ErrorKind::Model, msg) {}
};

/// A requested output code never appears in a transfer sweep.
class MissingCodeError : public NumericError {
  public:
    MissingCodeError(int code, const std::string& msg)
        : NumericError(msg), code_(code) {}

    int code() const { return code_; }

  private:
    int code_;
};

/// Malformed input file; message carries file:line context.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error(ErrorKind::Input, msg) {}
};

/// Filesystem problem (missing file, unwritable directory).
class IoError : public Error {
  public:
    explicit IoError(const std::string& msg) : Error(ErrorKind::Input, msg) {}
};

} // namespace sotadc

#endif
