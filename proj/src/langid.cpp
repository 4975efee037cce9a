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

#include "scialign/langid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>

#include "scialign/types.hpp"

namespace scialign {

namespace {

// Word characters: ASCII alphanumerics plus any non-ASCII byte, so accented
// UTF-8 letters stay inside tokens. Lowercasing is ASCII-only.
bool is_word_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

}  // namespace

std::unordered_map<std::string, long> count_ngrams(const std::string& text) {
  std::unordered_map<std::string, long> counts;
  std::string padded;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    padded.assign(1, ' ');
    while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) {
      padded.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
      ++i;
    }
    padded.push_back(' ');
    for (std::size_t start = 0; start < padded.size(); ++start) {
      for (std::size_t len = 1; len <= 4 && start + len <= padded.size(); ++len) {
        if (len == 1 && padded[start] == ' ') continue;
        ++counts[padded.substr(start, len)];
      }
    }
  }
  return counts;
}

std::unordered_map<std::string, int> rank_ngrams(
    const std::unordered_map<std::string, long>& counts, int k) {
  std::vector<std::pair<std::string, long>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::unordered_map<std::string, int> ranks;
  int limit = std::min<std::size_t>(k, sorted.size());
  for (int r = 0; r < limit; ++r) ranks.emplace(sorted[r].first, r + 1);
  return ranks;
}

LanguageProfile train_profile(const std::string& corpus_text, Lang lang, int k) {
  if (k <= 0) throw ValidationError("profile size must be positive");
  std::size_t chars = utf8_length(corpus_text);
  if (chars < kMinTrainingChars)
    throw InsufficientData("training corpus has " + std::to_string(chars) +
                           " characters, need " + std::to_string(kMinTrainingChars));
  LanguageProfile profile;
  profile.lang = lang;
  profile.k = k;
  profile.ngram_ranks = rank_ngrams(count_ngrams(corpus_text), k);
  return profile;
}

Detection detect(const std::string& text,
                 const std::vector<LanguageProfile>& profiles) {
  if (text.empty()) throw EmptyInput("detect: empty text");
  if (profiles.empty()) throw ValidationError("detect: no profiles");

  auto text_ranks = rank_ngrams(count_ngrams(text), kDefaultProfileSize);
  if (text_ranks.empty()) throw EmptyInput("detect: no n-grams in text");

  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  Lang best_lang = profiles.front().lang;
  for (const LanguageProfile& profile : profiles) {
    double distance = 0;
    for (const auto& [gram, rank] : text_ranks) {
      auto it = profile.ngram_ranks.find(gram);
      distance += it == profile.ngram_ranks.end()
                      ? profile.k
                      : std::abs(rank - it->second);
    }
    // Order independence: on equal distance the smaller enum value wins.
    if (distance < best ||
        (distance == best && static_cast<int>(profile.lang) <
                                 static_cast<int>(best_lang))) {
      second = best;
      best = distance;
      best_lang = profile.lang;
    } else if (distance < second) {
      second = distance;
    }
  }
  double margin = 0.0;
  if (profiles.size() > 1)
    margin = (second - best) / std::max(best, 1e-9);
  return {best_lang, margin};
}

void save_profile(const LanguageProfile& profile,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write profile: " + path.string());
  out << "lang=" << to_string(profile.lang) << " K=" << profile.k << "\n";
  std::vector<std::pair<std::string, int>> sorted(profile.ngram_ranks.begin(),
                                                  profile.ngram_ranks.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [gram, rank] : sorted) out << gram << '\t' << rank << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

LanguageProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path.string());
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty profile file", 1);
  LanguageProfile profile;
  if (header.rfind("lang=", 0) != 0) throw ParseError("bad profile header", 1);
  std::size_t space = header.find(' ');
  if (space == std::string::npos || header.compare(space + 1, 2, "K=") != 0)
    throw ParseError("bad profile header", 1);
  profile.lang = lang_from_string(header.substr(5, space - 5));
  profile.k = std::stoi(header.substr(space + 3));
  std::string line;
  long line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    // N-grams may contain spaces but never tabs; rank follows the last tab.
    std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos) throw ParseError("bad profile line", line_number);
    try {
      profile.ngram_ranks.emplace(line.substr(0, tab),
                                  std::stoi(line.substr(tab + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad profile rank", line_number);
    }
  }
  return profile;
}

}  // namespace scialign
