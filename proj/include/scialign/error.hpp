/*
 * Copyright 2026 the scialign authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace scialign {

/// Base class for all scialign errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value failed a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Appending a record whose id is already in the store.
class DuplicateId : public Error {
 public:
  explicit DuplicateId(const std::string& id)
      : Error("duplicate article id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

/// Malformed input; carries a line (or unit) number when one is known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, long line = -1)
      : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// A file referenced by a manifest or command does not exist.
class MissingFile : public Error {
 public:
  explicit MissingFile(const std::string& path)
      : Error("missing file: " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Document markup stripped down to nothing.
class EmptyDocument : public Error {
 public:
  using Error::Error;
};

/// Training text too small to build a language profile.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// detect() called on empty text.
class EmptyInput : public Error {
 public:
  using Error::Error;
};

/// Unknown bead kind passed to a cost function.
class InvalidBead : public Error {
 public:
  using Error::Error;
};

/// Document pair flagged incompatible and no override requested.
class IncompatibleStructure : public Error {
 public:
  using Error::Error;
};

/// Trilingual join inputs do not share the requested pivot language.
class PivotMismatch : public Error {
 public:
  using Error::Error;
};

/// Split ratios do not form a positive partition of 1.
class InvalidRatios : public Error {
 public:
  using Error::Error;
};

/// BLEU candidate/reference lists unusable.
class InputMismatch : public Error {
 public:
  using Error::Error;
};

/// Review sheet scored before every sampled item has a verdict.
class IncompleteReview : public Error {
 public:
  using Error::Error;
};

/// TMX export requested for an article with no stored metadata.
class MissingMetadata : public Error {
 public:
  explicit MissingMetadata(const std::string& article_id)
      : Error("no metadata for article: " + article_id), article_id_(article_id) {}
  const std::string& article_id() const { return article_id_; }

 private:
  std::string article_id_;
};

/// TMX file with a version this reader does not handle.
class UnsupportedVersion : public Error {
 public:
  using Error::Error;
};

}  // namespace scialign
