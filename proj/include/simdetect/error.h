// Copyright 2026 The simdetect Authors.
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

#ifndef SIMDETECT_ERROR_H_
#define SIMDETECT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simdetect {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter outside its documented domain (k = 0, negative weight, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read, written, or is not valid UTF-8.
class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Index schema version or config snapshot incompatible with the caller.
class VersionError : public Error {
 public:
  using Error::Error;
};

// A line of an index file that does not parse as the expected record.
class MalformedRecordError : public Error {
 public:
  MalformedRecordError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateIdError : public Error {
 public:
  explicit DuplicateIdError(std::string id)
      : Error("duplicate document id: " + id), id_(std::move(id)) {}

  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

}  // namespace simdetect

#endif  // SIMDETECT_ERROR_H_
