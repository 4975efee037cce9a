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
#include <string>
#include <vector>

#include "scialign/types.hpp"

namespace scialign {

/// Removes every balanced parenthesized span together with its contents,
/// innermost first, then any unmatched parenthesis characters. Runs of
/// spaces left behind are collapsed and the ends trimmed. Idempotent.
std::string strip_parentheticals(const std::string& text);

/// Replaces \n and \r with spaces, collapses whitespace runs to one space,
/// trims the ends. Idempotent.
std::string normalize_whitespace(const std::string& text);

/// Sentence splitter rules for one language: never split directly after one
/// of these strings (each includes its trailing period).
std::vector<std::string> default_abbreviations(Lang lang);

/// Loads one abbreviation per line; '#' lines and blanks ignored.
std::vector<std::string> load_abbreviations(const std::filesystem::path& path);

/// Splits a normalized paragraph into sentence texts. Splits after '.', '!'
/// or '?' followed by whitespace and an uppercase letter or digit, except
/// after a listed abbreviation or a single uppercase initial. Terminal
/// punctuation stays with its sentence; joining the outputs with single
/// spaces reproduces the input up to collapsed spaces.
std::vector<std::string> split_sentences(const std::string& paragraph, Lang lang);
std::vector<std::string> split_sentences(const std::string& paragraph,
                                         const std::vector<std::string>& abbreviations);

/// Applies the whole preprocessing chain to a document and numbers the
/// resulting sentences: strip parentheticals, normalize whitespace, split.
std::vector<Sentence> segment_document(const StructuredDocument& doc,
                                       const std::string& article_id);
std::vector<Sentence> segment_document(const StructuredDocument& doc,
                                       const std::string& article_id,
                                       const std::vector<std::string>& abbreviations);

}  // namespace scialign
