// Copyright 2026 The sboost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SBOOST_ERROR_H_
#define SBOOST_ERROR_H_

#include <stdexcept>
#include <string>

namespace sboost {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input data (parse failures, non-finite values).
class DataError : public Error {
 public:
  using Error::Error;
};

// A parameter violates an operation's precondition.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A persisted document does not follow the expected schema. The message
// carries the JSON pointer of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Violation of the simulated collective protocol (missing contribution,
// mismatched layouts).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace sboost

#endif  // SBOOST_ERROR_H_
