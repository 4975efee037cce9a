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
#include <unordered_map>
#include <vector>

#include "scialign/lang.hpp"

namespace scialign {

/// Rank-order profile of the K most frequent character 1..4-grams of one
/// language. N-grams are drawn from lowercased words padded with a single
/// space on each side; ranks are dense, 1 = most frequent, ties broken
/// lexicographically.
struct LanguageProfile {
  Lang lang = Lang::en;
  int k = 400;
  std::unordered_map<std::string, int> ngram_ranks;
};

struct Detection {
  Lang lang = Lang::en;
  double margin = 0.0;  // (second best - best) / best, >= 0
};

inline constexpr int kDefaultProfileSize = 400;
inline constexpr std::size_t kMinTrainingChars = 10000;

/// Counts padded 1..4-gram frequencies of `text` and keeps the top `k`.
/// Throws InsufficientData for corpora under kMinTrainingChars characters.
LanguageProfile train_profile(const std::string& corpus_text, Lang lang,
                              int k = kDefaultProfileSize);

/// Classifies `text` by minimal out-of-place rank distance against the
/// given profiles. Deterministic and invariant to profile order.
/// Throws EmptyInput on empty text, ValidationError on empty profiles.
Detection detect(const std::string& text,
                 const std::vector<LanguageProfile>& profiles);

/// Profile files: header "lang=<code> K=<K>" then "<ngram>\t<rank>" lines.
void save_profile(const LanguageProfile& profile, const std::filesystem::path& path);
LanguageProfile load_profile(const std::filesystem::path& path);

/// N-gram extraction shared by training and detection (exposed for tests):
/// lowercases, splits into letter/digit runs, pads each with one space and
/// counts all substrings of length 1..4 that are not all-space.
std::unordered_map<std::string, long> count_ngrams(const std::string& text);

/// Ranks counts into a dense 1..K rank map (frequency desc, ties lexicographic).
std::unordered_map<std::string, int> rank_ngrams(
    const std::unordered_map<std::string, long>& counts, int k);

}  // namespace scialign
