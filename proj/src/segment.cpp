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

#include "scialign/segment.hpp"

#include <cctype>
#include <fstream>

namespace scialign {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string collapse_spaces(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (c == ' ') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string strip_parentheticals(const std::string& text) {
  std::string cur = text;
  // Innermost-first: each pass removes spans with no nested parenthesis.
  bool changed = true;
  while (changed) {
    changed = false;
    std::string next;
    next.reserve(cur.size());
    std::size_t i = 0;
    while (i < cur.size()) {
      if (cur[i] == '(') {
        std::size_t close = std::string::npos;
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (cur[j] == '(') break;  // nested; handle on a later pass
          if (cur[j] == ')') {
            close = j;
            break;
          }
        }
        if (close != std::string::npos) {
          i = close + 1;
          changed = true;
          continue;
        }
      }
      next.push_back(cur[i]);
      ++i;
    }
    cur = std::move(next);
  }
  // Unmatched parenthesis characters go individually.
  std::string stripped;
  stripped.reserve(cur.size());
  for (char c : cur)
    if (c != '(' && c != ')') stripped.push_back(c);
  return collapse_spaces(stripped);
}

std::string normalize_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool pending = false;
  for (char c : text) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> default_abbreviations(Lang lang) {
  switch (lang) {
    case Lang::en:
      return {"Dr.", "Mr.", "Mrs.", "Prof.", "Fig.", "Tab.", "No.",
              "et al.", "e.g.", "i.e.", "cf.", "vs."};
    case Lang::pt:
      return {"Sr.", "Sra.", "Dr.", "Dra.", "Prof.", "Profa.",
              "Fig.", "Tab.", "pág.", "ex."};
    case Lang::es:
      return {"Sr.", "Sra.", "Dr.", "Dra.", "Prof.", "Fig.",
              "Tab.", "pág.", "núm.", "ej."};
  }
  return {};
}

std::vector<std::string> load_abbreviations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

namespace {

bool ends_with_any(const std::string& text, std::size_t end,
                   const std::vector<std::string>& abbreviations) {
  for (const std::string& a : abbreviations) {
    if (a.size() > end) continue;
    if (text.compare(end - a.size(), a.size(), a) != 0) continue;
    // The abbreviation must start at a word boundary.
    std::size_t start = end - a.size();
    if (start == 0 || is_space(text[start - 1])) return true;
  }
  return false;
}

// "J. Smith" style initials: a single uppercase letter before the period.
bool is_initial(const std::string& text, std::size_t dot) {
  if (dot == 0) return false;
  char prev = text[dot - 1];
  if (!std::isupper(static_cast<unsigned char>(prev))) return false;
  return dot < 2 || is_space(text[dot - 2]);
}

}  // namespace

std::vector<std::string> split_sentences(
    const std::string& paragraph, const std::vector<std::string>& abbreviations) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    std::size_t b = start;
    while (b < end && is_space(paragraph[b])) ++b;
    std::size_t e = end;
    while (e > b && is_space(paragraph[e - 1])) --e;
    if (e > b) sentences.push_back(paragraph.substr(b, e - b));
    start = end;
  };
  while (i < paragraph.size()) {
    char c = paragraph[i];
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i + 1;
      while (j < paragraph.size() && is_space(paragraph[j])) ++j;
      bool boundary = j > i + 1 && j < paragraph.size() &&
                      (std::isupper(static_cast<unsigned char>(paragraph[j])) ||
                       std::isdigit(static_cast<unsigned char>(paragraph[j])));
      if (boundary && c == '.') {
        if (ends_with_any(paragraph, i + 1, abbreviations) ||
            is_initial(paragraph, i))
          boundary = false;
      }
      if (boundary) {
        flush(i + 1);
        i = j;
        continue;
      }
    }
    ++i;
  }
  flush(paragraph.size());
  return sentences;
}

std::vector<std::string> split_sentences(const std::string& paragraph, Lang lang) {
  return split_sentences(paragraph, default_abbreviations(lang));
}

std::vector<Sentence> segment_document(const StructuredDocument& doc,
                                       const std::string& article_id,
                                       const std::vector<std::string>& abbreviations) {
  std::vector<Sentence> out;
  for (int s = 0; s < static_cast<int>(doc.sections.size()); ++s) {
    const Section& section = doc.sections[s];
    for (int p = 0; p < static_cast<int>(section.paragraphs.size()); ++p) {
      std::string text = normalize_whitespace(strip_parentheticals(section.paragraphs[p]));
      int index = 0;
      for (std::string& sent : split_sentences(text, abbreviations)) {
        Sentence sentence{std::move(sent), article_id, doc.lang, {s, p, index++}};
        sentence.validate();
        out.push_back(std::move(sentence));
      }
    }
  }
  return out;
}

std::vector<Sentence> segment_document(const StructuredDocument& doc,
                                       const std::string& article_id) {
  return segment_document(doc, article_id, default_abbreviations(doc.lang));
}

}  // namespace scialign
