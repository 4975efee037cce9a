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

#include "scialign/store.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace scialign {

using nlohmann::json;

std::string record_to_json_line(const ArticleRecord& record) {
  json j;
  j["scielo_id"] = record.metadata.scielo_id;
  if (record.metadata.doi) j["doi"] = *record.metadata.doi;
  j["journal"] = record.metadata.journal;
  j["subject_area"] = record.metadata.subject_area;
  j["authors"] = record.metadata.authors;
  j["license"] = record.metadata.license;
  json titles = json::object();
  for (const auto& [lang, title] : record.metadata.titles)
    titles[std::string(to_string(lang))] = title;
  j["titles"] = titles;
  json bodies = json::object();
  for (const auto& [lang, body] : record.bodies)
    bodies[std::string(to_string(lang))] = body;
  j["bodies"] = bodies;
  return j.dump();
}

ArticleRecord record_from_json_line(const std::string& line, long line_number) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad store record: ") + e.what(), line_number);
  }
  try {
    ArticleRecord record;
    record.metadata.scielo_id = j.at("scielo_id").get<std::string>();
    if (j.contains("doi") && !j["doi"].is_null())
      record.metadata.doi = j["doi"].get<std::string>();
    record.metadata.journal = j.value("journal", "");
    record.metadata.subject_area = j.value("subject_area", "");
    if (j.contains("authors"))
      record.metadata.authors = j["authors"].get<std::vector<std::string>>();
    record.metadata.license = j.value("license", "");
    if (j.contains("titles"))
      for (const auto& [code, title] : j["titles"].items())
        record.metadata.titles[lang_from_string(code)] = title.get<std::string>();
    for (const auto& [code, body] : j.at("bodies").items())
      record.bodies[lang_from_string(code)] = body.get<std::string>();
    return record;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad store record: ") + e.what(), line_number);
  }
}

CorpusStore::CorpusStore(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // fresh store
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ids_.push_back(record_from_json_line(line, line_number).metadata.scielo_id);
  }
}

bool CorpusStore::contains(const std::string& scielo_id) const {
  return std::find(ids_.begin(), ids_.end(), scielo_id) != ids_.end();
}

std::string CorpusStore::append(const ArticleRecord& record) {
  record.validate();
  if (contains(record.metadata.scielo_id))
    throw DuplicateId(record.metadata.scielo_id);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot open store for append: " + path_.string());
  out << record_to_json_line(record) << '\n';
  if (!out) throw IoError("write failed: " + path_.string());
  ids_.push_back(record.metadata.scielo_id);
  return record.metadata.scielo_id;
}

std::vector<ArticleRecord> CorpusStore::scan(
    const std::function<bool(const ArticleRecord&)>& predicate) const {
  std::ifstream in(path_);
  if (!in) throw MissingFile(path_.string());
  std::vector<ArticleRecord> out;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ArticleRecord record = record_from_json_line(line, line_number);
    if (predicate(record)) out.push_back(std::move(record));
  }
  return out;
}

std::string store_append(const ArticleRecord& record,
                         const std::filesystem::path& store_path) {
  CorpusStore store(store_path);
  return store.append(record);
}

std::vector<ArticleRecord> store_scan(
    const std::filesystem::path& store_path,
    const std::function<bool(const ArticleRecord&)>& predicate) {
  CorpusStore store(store_path);
  return store.scan(predicate);
}

}  // namespace scialign
