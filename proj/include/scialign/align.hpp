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

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scialign/docparse.hpp"
#include "scialign/types.hpp"

namespace scialign {

/// Tunables of the two-pass aligner. All numeric defaults are declared
/// engineering choices, exposed here and on the command line.
struct AlignerConfig {
  /// Prior probability of each bead kind, indexed by BeadKind. Classic
  /// length-model values with the 1-0/0-1 mass split between the two kinds
  /// so the priors stay a sub-distribution.
  std::array<double, 6> bead_priors = {0.89, 0.00495, 0.00495,
                                       0.0445, 0.0445, 0.011};
  double length_variance = 6.8;  ///< per-character variance D
  /// Target/source character ratio c; unset means estimate from the input
  /// pair (total target chars / total source chars).
  std::optional<double> char_ratio;
  double dict_weight = 0.7;    ///< w_d in the combined score
  double length_weight = 0.3;  ///< w_l; w_d + w_l must be 1
  int dict_min_count = 2;
  double dict_min_dice = 0.2;
  int chunk_limit = 5000;
  double min_pair_score = 0.3;  ///< realigned 1-1 beads under this are unlinked
  /// DP search control: exact full search up to band_threshold sentences per
  /// side, a diagonal band of this half-width beyond that.
  int band_threshold = 3000;
  int band_width = 120;
  double score_floor = 1e-6;  ///< floor inside -log(combined score)

  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

/// Induced token-translation lexicon with association scores.
class Dictionary {
 public:
  struct Entry {
    long count = 0;
    double dice = 0.0;
  };

  void insert(const std::string& src, const std::string& tgt, Entry entry);
  const Entry* find(const std::string& src, const std::string& tgt) const;
  bool contains(const std::string& src, const std::string& tgt) const {
    return find(src, tgt) != nullptr;
  }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// (src, tgt, entry) triples sorted by src then tgt.
  std::vector<std::tuple<std::string, std::string, Entry>> sorted_entries() const;

  bool operator==(const Dictionary& other) const;

  const std::unordered_map<std::string, std::unordered_map<std::string, Entry>>&
  by_src() const {
    return entries_;
  }

 private:
  std::unordered_map<std::string, std::unordered_map<std::string, Entry>> entries_;
  std::size_t size_ = 0;
};

/// External dictionary files: one "src_token\ttgt_token" pair per line.
void save_dictionary(const Dictionary& dict, const std::filesystem::path& path);
Dictionary load_dictionary(const std::filesystem::path& path,
                           const AlignerConfig& cfg = {});

/// Lowercased alphanumeric runs of at least two characters; the token unit
/// used for dictionary induction and the combined score.
std::vector<std::string> dict_tokens(std::string_view text);

/// Target/source character-count ratio of an input pair (1.0 when either
/// side is empty).
double estimate_char_ratio(std::span<const Sentence> src,
                           std::span<const Sentence> tgt);

/// Length-model cost of one bead: -log prior(kind) - log erfc(|delta|/sqrt 2)
/// with delta = (tgt_len - src_len*ratio)/sqrt(src_len*D). A zero-length
/// source side uses delta = sqrt(tgt_len/D), the insertion case. Lower is
/// better. Throws InvalidBead on an unknown kind.
double length_cost(BeadKind kind, double src_len, double tgt_len,
                   const AlignerConfig& cfg);
double length_cost_with_ratio(BeadKind kind, double src_len, double tgt_len,
                              double ratio, const AlignerConfig& cfg);

/// First pass: minimum-total-length-cost monotone bead sequence by dynamic
/// programming over the six bead kinds. Ties prefer more 1-1 beads, then
/// the lexicographically earliest kind sequence. Each bead's score field
/// holds its length cost.
std::vector<Bead> align_lengths(std::span<const Sentence> src,
                                std::span<const Sentence> tgt,
                                const AlignerConfig& cfg);

/// Induces a dictionary from the 1-1 beads of an alignment: every cross
/// pair of token types counted once per bead, kept when it reaches
/// dict_min_count and dict_min_dice (dice = 2c(s,t)/(c(s)+c(t))).
Dictionary build_dictionary(const std::vector<Bead>& beads,
                            std::span<const Sentence> src,
                            std::span<const Sentence> tgt,
                            const AlignerConfig& cfg);

/// Combined dictionary/length score in [0,1]:
///   w_d * covered-token fraction + w_l * exp(-delta^2/2).
/// Covered tokens are occurrences with at least one dictionary partner
/// present on the other side. Zero when both token lists are empty.
double combined_score(std::string_view src_text, std::string_view tgt_text,
                      const Dictionary& dict, const AlignerConfig& cfg);
double combined_score_with_ratio(std::string_view src_text,
                                 std::string_view tgt_text,
                                 const Dictionary& dict,
                                 const AlignerConfig& cfg, double ratio);

/// Second pass: same search as align_lengths but each bead costs
/// -log prior(kind) - log(max(combined score, score_floor)). Bead scores
/// hold the combined score of their merged sides.
std::vector<Bead> realign(std::span<const Sentence> src,
                          std::span<const Sentence> tgt, const Dictionary& dict,
                          const AlignerConfig& cfg);

struct TwoPassResult {
  std::vector<Bead> beads;  ///< the second-pass alignment
  Dictionary dictionary;    ///< induced after the first pass
};

/// Full two-pass run: length alignment, dictionary induction, realignment.
/// realign() with result.dictionary reproduces result.beads exactly.
TwoPassResult two_pass_align(std::span<const Sentence> src,
                             std::span<const Sentence> tgt,
                             const AlignerConfig& cfg);

/// Unlinks realigned 1-1 beads scoring under min_pair_score: each becomes
/// a 1-0 plus a 0-1 bead, keeping the sequence legal.
std::vector<Bead> apply_score_gate(const std::vector<Bead>& beads,
                                   const AlignerConfig& cfg);

/// Chunked alignment for inputs whose larger side exceeds chunk_limit:
/// a coarse length-only pass picks low-cost 1-1 anchors near every
/// chunk_limit boundary, both texts are cut there and each chunk is aligned
/// independently (two-pass, or realign when a dictionary is supplied).
/// Windows without an anchor fall back to a hard split, recorded in
/// `warnings`. Inputs within the limit delegate unchanged.
std::vector<Bead> chunk_align(std::span<const Sentence> src,
                              std::span<const Sentence> tgt,
                              const AlignerConfig& cfg,
                              const Dictionary* external_dict = nullptr,
                              std::vector<std::string>* warnings = nullptr);

/// Whole-document alignment with bookkeeping kept: sentences of both sides
/// in document order, the final bead sequence over them, the dictionary
/// used, and any chunking warnings.
struct DocumentAlignment {
  std::vector<Sentence> src_sentences;
  std::vector<Sentence> tgt_sentences;
  std::vector<Bead> beads;
  Dictionary dictionary;
  std::vector<std::string> warnings;
};

/// Aligns two parses of one article. Structured/flat verdicts with equal
/// paragraph counts align paragraph pairs independently (dictionary pooled
/// over the document); otherwise everything is aligned in one pass.
/// Incompatible verdicts throw IncompatibleStructure unless
/// `document_level_override` asks for the one-pass fallback. A supplied
/// dictionary skips the first pass entirely.
DocumentAlignment align_document_beads(
    const StructuredDocument& doc_a, const StructuredDocument& doc_b,
    const CompatibilityVerdict& verdict, const AlignerConfig& cfg,
    const std::string& article_id, const Dictionary* external_dict = nullptr,
    bool document_level_override = false);

/// align_document_beads plus the score gate and conversion to AlignedPair:
/// 1-0/0-1 beads are dropped, bead sides merged with single spaces.
std::vector<AlignedPair> align_document(
    const StructuredDocument& doc_a, const StructuredDocument& doc_b,
    const CompatibilityVerdict& verdict, const AlignerConfig& cfg,
    const std::string& article_id, const Dictionary* external_dict = nullptr,
    bool document_level_override = false);

/// Bead-to-pair conversion shared by align_document and the filter stage.
std::vector<AlignedPair> beads_to_pairs(const std::vector<Bead>& beads,
                                        std::span<const Sentence> src,
                                        std::span<const Sentence> tgt);

}  // namespace scialign
