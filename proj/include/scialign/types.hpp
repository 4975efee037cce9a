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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scialign/lang.hpp"

namespace scialign {

/// Citation and licensing metadata for one source article.
struct ArticleMetadata {
  std::string scielo_id;
  std::optional<std::string> doi;
  std::string journal;
  std::string subject_area;
  std::vector<std::string> authors;
  std::string license;
  std::map<Lang, std::string> titles;

  /// Throws ValidationError when an invariant is broken.
  void validate() const;

  bool operator==(const ArticleMetadata&) const = default;
};

/// One source article: metadata plus per-language raw document bodies.
struct ArticleRecord {
  ArticleMetadata metadata;
  std::map<Lang, std::string> bodies;  // raw markup, one entry per language

  void validate() const;

  bool operator==(const ArticleRecord&) const = default;
};

/// A section of a parsed document: optional heading plus its paragraphs.
struct Section {
  std::optional<std::string> heading;
  std::vector<std::string> paragraphs;

  bool operator==(const Section&) const = default;
};

enum class DocKind { structured, flat };

/// Parsed article body for one language. kind=flat documents hold a single
/// heading-less section listing every paragraph in source order.
struct StructuredDocument {
  Lang lang = Lang::en;
  std::optional<std::string> title;
  DocKind kind = DocKind::flat;
  std::vector<Section> sections;

  std::size_t paragraph_count() const {
    std::size_t n = 0;
    for (const auto& s : sections) n += s.paragraphs.size();
    return n;
  }

  bool operator==(const StructuredDocument&) const = default;
};

/// Position of a sentence inside its owning document.
struct SentenceRef {
  int section = 0;
  int paragraph = 0;
  int sentence = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

/// One segmented sentence. Text never contains '\n' or '\r'.
struct Sentence {
  std::string text;
  std::string article_id;
  Lang lang = Lang::en;
  SentenceRef ref;

  void validate() const;

  bool operator==(const Sentence&) const = default;
};

/// Alignment unit shapes, in tie-break preference order.
enum class BeadKind : int {
  OneOne = 0,
  OneZero = 1,
  ZeroOne = 2,
  TwoOne = 3,
  OneTwo = 4,
  TwoTwo = 5,
};

inline constexpr std::array<BeadKind, 6> kAllBeadKinds = {
    BeadKind::OneOne, BeadKind::OneZero, BeadKind::ZeroOne,
    BeadKind::TwoOne, BeadKind::OneTwo,  BeadKind::TwoTwo};

constexpr int src_arity(BeadKind k) {
  switch (k) {
    case BeadKind::OneOne: return 1;
    case BeadKind::OneZero: return 1;
    case BeadKind::ZeroOne: return 0;
    case BeadKind::TwoOne: return 2;
    case BeadKind::OneTwo: return 1;
    case BeadKind::TwoTwo: return 2;
  }
  return -1;
}

constexpr int tgt_arity(BeadKind k) {
  switch (k) {
    case BeadKind::OneOne: return 1;
    case BeadKind::OneZero: return 0;
    case BeadKind::ZeroOne: return 1;
    case BeadKind::TwoOne: return 1;
    case BeadKind::OneTwo: return 2;
    case BeadKind::TwoTwo: return 2;
  }
  return -1;
}

constexpr std::string_view to_string(BeadKind k) {
  switch (k) {
    case BeadKind::OneOne: return "1-1";
    case BeadKind::OneZero: return "1-0";
    case BeadKind::ZeroOne: return "0-1";
    case BeadKind::TwoOne: return "2-1";
    case BeadKind::OneTwo: return "1-2";
    case BeadKind::TwoTwo: return "2-2";
  }
  return "?-?";
}

std::optional<BeadKind> parse_bead_kind(std::string_view s);

/// One unit of a monotone alignment: contiguous source sentence indices
/// paired with contiguous target sentence indices. Indices refer to the
/// sentence lists the bead sequence was produced from.
struct Bead {
  BeadKind kind = BeadKind::OneOne;
  std::vector<int> src;  // strictly increasing, contiguous
  std::vector<int> tgt;
  double score = 0.0;

  void validate() const;

  bool operator==(const Bead& o) const {
    return kind == o.kind && src == o.src && tgt == o.tgt;
  }
};

/// Checks that `beads` is a legal sequence over list sizes n_src x n_tgt:
/// monotone, non-overlapping, covering both sides exactly once.
/// Throws ValidationError otherwise.
void check_bead_sequence(const std::vector<Bead>& beads, int n_src, int n_tgt);

/// One aligned sentence pair, the corpus atom. Sides are the bead sides
/// merged with single spaces.
struct AlignedPair {
  Lang src_lang = Lang::en;
  Lang tgt_lang = Lang::pt;
  std::string src_text;
  std::string tgt_text;
  std::string article_id;
  double score = 0.0;
  BeadKind provenance = BeadKind::OneOne;
  std::vector<SentenceRef> src_refs;
  std::vector<SentenceRef> tgt_refs;

  void validate() const;

  bool operator==(const AlignedPair&) const = default;
};

/// One sentence aligned across all three languages.
struct TrilingualUnit {
  std::array<std::string, 3> texts;  // indexed by Lang
  std::string article_id;
  std::vector<SentenceRef> pivot_refs;

  const std::string& text(Lang lang) const { return texts[static_cast<int>(lang)]; }
  std::string& text(Lang lang) { return texts[static_cast<int>(lang)]; }

  void validate() const;

  bool operator==(const TrilingualUnit&) const = default;
};

/// Count of Unicode code points in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

}  // namespace scialign
