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

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "scialign/types.hpp"

namespace scialign {

/// Append-only article store: one UTF-8 JSON object per line with fields
/// scielo_id, doi, journal, subject_area, authors, license, titles, bodies.
/// Concurrent readers are fine; writers must be serialized externally.
class CorpusStore {
 public:
  /// Opens (or creates) the store at `path`, indexing existing ids.
  explicit CorpusStore(std::filesystem::path path);

  /// Appends one record and returns its scielo_id.
  /// Throws DuplicateId or ValidationError.
  std::string append(const ArticleRecord& record);

  /// Scans in append order, yielding records matching `predicate`.
  /// Throws ParseError with the offending line number on corrupt input.
  std::vector<ArticleRecord> scan(
      const std::function<bool(const ArticleRecord&)>& predicate) const;

  std::vector<ArticleRecord> scan_all() const {
    return scan([](const ArticleRecord&) { return true; });
  }

  bool contains(const std::string& scielo_id) const;
  std::size_t size() const { return ids_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::vector<std::string> ids_;
};

/// One-shot helpers over a store file.
std::string store_append(const ArticleRecord& record,
                         const std::filesystem::path& store_path);
std::vector<ArticleRecord> store_scan(
    const std::filesystem::path& store_path,
    const std::function<bool(const ArticleRecord&)>& predicate);

/// Serialization used by the store and by tests.
std::string record_to_json_line(const ArticleRecord& record);
ArticleRecord record_from_json_line(const std::string& line, long line_number = -1);

}  // namespace scialign
