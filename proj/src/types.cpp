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

#include "scialign/types.hpp"

#include <algorithm>

namespace scialign {

void ArticleMetadata::validate() const {
  if (scielo_id.empty()) throw ValidationError("article id must be nonempty");
  if (license.empty())
    throw ValidationError("article " + scielo_id + ": license must be nonempty");
}

void ArticleRecord::validate() const {
  metadata.validate();
  if (bodies.empty())
    throw ValidationError("article " + metadata.scielo_id + ": no bodies");
}

std::optional<BeadKind> parse_bead_kind(std::string_view s) {
  for (BeadKind k : kAllBeadKinds)
    if (to_string(k) == s) return k;
  return std::nullopt;
}

void Sentence::validate() const {
  if (text.empty()) throw ValidationError("sentence text must be nonempty");
  if (text.find('\n') != std::string::npos || text.find('\r') != std::string::npos)
    throw ValidationError("sentence text must not contain newlines");
}

void Bead::validate() const {
  if (static_cast<int>(src.size()) != src_arity(kind) ||
      static_cast<int>(tgt.size()) != tgt_arity(kind))
    throw ValidationError("bead arity does not match its kind");
  for (const auto* side : {&src, &tgt})
    for (std::size_t i = 1; i < side->size(); ++i)
      if ((*side)[i] != (*side)[i - 1] + 1)
        throw ValidationError("bead sentence indices must be contiguous");
}

void check_bead_sequence(const std::vector<Bead>& beads, int n_src, int n_tgt) {
  int next_src = 0;
  int next_tgt = 0;
  for (const Bead& b : beads) {
    b.validate();
    for (int i : b.src) {
      if (i != next_src)
        throw ValidationError("bead sequence skips or repeats source index " +
                              std::to_string(next_src));
      ++next_src;
    }
    for (int j : b.tgt) {
      if (j != next_tgt)
        throw ValidationError("bead sequence skips or repeats target index " +
                              std::to_string(next_tgt));
      ++next_tgt;
    }
  }
  if (next_src != n_src || next_tgt != n_tgt)
    throw ValidationError("bead sequence does not cover both inputs");
}

void AlignedPair::validate() const {
  if (src_text.empty() || tgt_text.empty())
    throw ValidationError("aligned pair sides must be nonempty");
  if (article_id.empty()) throw ValidationError("aligned pair needs an article id");
}

void TrilingualUnit::validate() const {
  for (Lang lang : kAllLangs)
    if (text(lang).empty())
      throw ValidationError("trilingual unit missing text for " +
                            std::string(to_string(lang)));
}

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace scialign
