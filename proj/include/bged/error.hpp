// Copyright 2026 The bangla-ged Authors.
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

#ifndef BGED_ERROR_HPP_
#define BGED_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bged {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidUtf8 : public Error {
 public:
  explicit InvalidUtf8(std::size_t offset)
      : Error("invalid UTF-8 at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class OddMarkerCount : public Error {
 public:
  explicit OddMarkerCount(std::size_t count)
      : Error("odd number of '$' markers (" + std::to_string(count) + ")"),
        count_(count) {}
  std::size_t count() const { return count_; }

 private:
  std::size_t count_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A malformed line in a TSV or list file. line_no is 1-based and counts the
// header line.
class FormatError : public Error {
 public:
  FormatError(std::string source, std::size_t line_no, std::string reason)
      : Error(source + ":" + std::to_string(line_no) + ": " + reason),
        source_(std::move(source)),
        line_no_(line_no),
        reason_(std::move(reason)) {}
  const std::string& source() const { return source_; }
  std::size_t line_no() const { return line_no_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string source_;
  std::size_t line_no_;
  std::string reason_;
};

// Raised with the offending record id.
class RecordError : public Error {
 public:
  RecordError(const std::string& kind, std::string id)
      : Error(kind + ": " + id), id_(std::move(id)) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class MissingGold : public RecordError {
 public:
  explicit MissingGold(std::string id) : RecordError("missing gold", std::move(id)) {}
};

class MissingRawOutput : public RecordError {
 public:
  explicit MissingRawOutput(std::string id)
      : RecordError("missing raw output", std::move(id)) {}
};

class DuplicateId : public RecordError {
 public:
  explicit DuplicateId(std::string id) : RecordError("duplicate id", std::move(id)) {}
};

class UnassignedId : public RecordError {
 public:
  explicit UnassignedId(std::string id)
      : RecordError("id not assigned to a split", std::move(id)) {}
};

class EmptySplit : public Error {
 public:
  explicit EmptySplit(const std::string& part)
      : Error("split part has no records: " + part) {}
};

// regex_correction was handed text that already carries markers.
class MarkedInput : public Error {
 public:
  MarkedInput() : Error("sentence already contains '$' markers") {}
};

}  // namespace bged

#endif  // BGED_ERROR_HPP_
