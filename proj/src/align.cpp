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

#include "scialign/align.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "scialign/segment.hpp"

namespace scialign {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Step {
  int di;
  int dj;
};

constexpr std::array<Step, 6> kSteps = {{{1, 1}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}}};

}  // namespace

void AlignerConfig::validate() const {
  double sum = 0;
  for (double p : bead_priors) {
    if (!(p > 0)) throw ValidationError("bead priors must be positive");
    sum += p;
  }
  if (sum > 1.0 + 1e-12) throw ValidationError("bead priors must sum to at most 1");
  if (!(length_variance > 0)) throw ValidationError("length variance must be positive");
  if (std::abs(dict_weight + length_weight - 1.0) > 1e-9)
    throw ValidationError("dict_weight + length_weight must equal 1");
  if (dict_weight < 0 || length_weight < 0)
    throw ValidationError("score weights must be nonnegative");
  if (chunk_limit < 100) throw ValidationError("chunk_limit must be at least 100");
  if (dict_min_count < 1) throw ValidationError("dict_min_count must be at least 1");
  if (!(dict_min_dice >= 0 && dict_min_dice <= 1))
    throw ValidationError("dict_min_dice must be in [0,1]");
  if (!(min_pair_score >= 0 && min_pair_score <= 1))
    throw ValidationError("min_pair_score must be in [0,1]");
  if (band_width < 2) throw ValidationError("band_width must be at least 2");
  if (!(score_floor > 0)) throw ValidationError("score_floor must be positive");
  if (char_ratio && !(*char_ratio > 0))
    throw ValidationError("char_ratio must be positive");
}

void Dictionary::insert(const std::string& src, const std::string& tgt,
                        Entry entry) {
  auto& row = entries_[src];
  auto [it, inserted] = row.insert_or_assign(tgt, entry);
  if (inserted) {
    ++size_;
    by_tgt_[tgt].push_back(src);
  }
}

const Dictionary::Entry* Dictionary::find(const std::string& src,
                                          const std::string& tgt) const {
  auto row = entries_.find(src);
  if (row == entries_.end()) return nullptr;
  auto it = row->second.find(tgt);
  return it == row->second.end() ? nullptr : &it->second;
}

std::vector<std::tuple<std::string, std::string, Dictionary::Entry>>
Dictionary::sorted_entries() const {
  std::vector<std::tuple<std::string, std::string, Entry>> out;
  out.reserve(size_);
  for (const auto& [src, row] : entries_)
    for (const auto& [tgt, entry] : row) out.emplace_back(src, tgt, entry);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  return out;
}

bool Dictionary::operator==(const Dictionary& other) const {
  if (size_ != other.size_) return false;
  for (const auto& [src, row] : entries_) {
    for (const auto& [tgt, entry] : row) {
      const Entry* theirs = other.find(src, tgt);
      if (!theirs || theirs->count != entry.count || theirs->dice != entry.dice)
        return false;
    }
  }
  return true;
}

void save_dictionary(const Dictionary& dict, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write dictionary: " + path.string());
  for (const auto& [src, tgt, entry] : dict.sorted_entries())
    out << src << '\t' << tgt << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

Dictionary load_dictionary(const std::filesystem::path& path,
                           const AlignerConfig& cfg) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile(path.string());
  Dictionary dict;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw ParseError("dictionary line needs src<TAB>tgt", line_number);
    // Supplied entries count as established translations.
    dict.insert(line.substr(0, tab), line.substr(tab + 1),
                {std::max(1, cfg.dict_min_count), 1.0});
  }
  return dict;
}

std::vector<std::string> dict_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty() && utf8_length(cur) >= 2) tokens.push_back(cur);
    cur.clear();
  };
  for (unsigned char c : text) {
    if (std::isalnum(c) || c >= 0x80)
      cur.push_back(static_cast<char>(std::tolower(c)));
    else
      flush();
  }
  flush();
  return tokens;
}

double estimate_char_ratio(std::span<const Sentence> src,
                           std::span<const Sentence> tgt) {
  double src_total = 0;
  double tgt_total = 0;
  for (const Sentence& s : src) src_total += utf8_length(s.text);
  for (const Sentence& s : tgt) tgt_total += utf8_length(s.text);
  if (src_total <= 0 || tgt_total <= 0) return 1.0;
  return tgt_total / src_total;
}

namespace {

double resolved_ratio(const AlignerConfig& cfg, std::span<const Sentence> src,
                      std::span<const Sentence> tgt) {
  return cfg.char_ratio ? *cfg.char_ratio : estimate_char_ratio(src, tgt);
}

double length_delta(double src_len, double tgt_len, double ratio, double variance) {
  if (src_len <= 0 && tgt_len <= 0) return 0.0;
  if (src_len <= 0) return std::sqrt(tgt_len / variance);
  return (tgt_len - src_len * ratio) / std::sqrt(src_len * variance);
}

// -log(2*(1 - Phi(|delta|))) computed as -log erfc(|delta|/sqrt 2),
// clamped so extreme deviations stay finite.
double length_penalty(double delta) {
  double p = std::erfc(std::abs(delta) / std::sqrt(2.0));
  return -std::log(std::max(p, 1e-300));
}

int kind_index(BeadKind kind) {
  int k = static_cast<int>(kind);
  if (k < 0 || k > 5) throw InvalidBead("unknown bead kind");
  return k;
}

}  // namespace

double length_cost_with_ratio(BeadKind kind, double src_len, double tgt_len,
                              double ratio, const AlignerConfig& cfg) {
  int k = kind_index(kind);
  double delta = length_delta(src_len, tgt_len, ratio, cfg.length_variance);
  return -std::log(cfg.bead_priors[k]) + length_penalty(delta);
}

double length_cost(BeadKind kind, double src_len, double tgt_len,
                   const AlignerConfig& cfg) {
  return length_cost_with_ratio(kind, src_len, tgt_len,
                                cfg.char_ratio.value_or(1.0), cfg);
}

namespace {

// ---------------------------------------------------------------------------
// Shared DP engine.
//
// Searches monotone bead sequences over an (n+1) x (m+1) state lattice,
// minimizing total cost with ties broken by (more 1-1 beads, then the
// lexicographically earliest kind sequence). Small inputs get the full
// lattice; large ones a diagonal band wide enough for legal paths to exist.
// ---------------------------------------------------------------------------

struct Band {
  std::vector<int> lo;
  std::vector<int> hi;
};

Band make_band(int n, int m, const AlignerConfig& cfg) {
  Band band;
  band.lo.assign(n + 1, 0);
  band.hi.assign(n + 1, m);
  if (std::max(n, m) <= cfg.band_threshold || n == 0) return band;
  long width = cfg.band_width;
  width = std::max(width, static_cast<long>((m + n - 1) / n) + 2);
  for (int i = 0; i <= n; ++i) {
    long center = static_cast<long>(i) * m / n;
    band.lo[i] = static_cast<int>(std::max<long>(0, center - width));
    band.hi[i] = static_cast<int>(std::min<long>(m, center + width));
  }
  return band;
}

struct Cell {
  double cost = kInf;
  int count11 = 0;
};

class BeadDp {
 public:
  template <class CostFn>
  std::vector<Bead> run(int n, int m, const Band& band, CostFn&& bead_cost) {
    back_.assign(n + 1, {});
    for (int i = 0; i <= n; ++i)
      back_[i].assign(band.hi[i] - band.lo[i] + 1, int8_t{-1});
    std::array<std::vector<Cell>, 3> rows;
    std::array<int, 3> row_index = {-1, -1, -1};

    auto cell_at = [&](int i, int j) -> const Cell* {
      if (i < 0 || j < 0) return nullptr;
      if (j < band.lo[i] || j > band.hi[i]) return nullptr;
      if (row_index[i % 3] != i) return nullptr;
      return &rows[i % 3][j - band.lo[i]];
    };

    for (int i = 0; i <= n; ++i) {
      rows[i % 3].assign(band.hi[i] - band.lo[i] + 1, Cell{});
      row_index[i % 3] = i;
      for (int j = band.lo[i]; j <= band.hi[i]; ++j) {
        if (i == 0 && j == 0) {
          rows[0][0] = Cell{0.0, 0};
          continue;
        }
        Cell best;
        int best_kind = -1;
        for (int k = 0; k < 6; ++k) {
          int pi = i - kSteps[k].di;
          int pj = j - kSteps[k].dj;
          const Cell* pred = cell_at(pi, pj);
          if (!pred || pred->cost == kInf) continue;
          double cost = pred->cost + bead_cost(i, j, static_cast<BeadKind>(k));
          int count11 = pred->count11 + (k == 0 ? 1 : 0);
          bool better;
          if (best_kind < 0) {
            better = true;
          } else if (cost != best.cost) {
            better = cost < best.cost;
          } else if (count11 != best.count11) {
            better = count11 > best.count11;
          } else {
            better = lex_before(pi, pj, k, i, j, best_kind, band);
          }
          if (better) {
            best = Cell{cost, count11};
            best_kind = k;
          }
        }
        if (best_kind >= 0) {
          rows[i % 3][j - band.lo[i]] = best;
          back_[i][j - band.lo[i]] = static_cast<int8_t>(best_kind);
        }
      }
    }

    std::vector<Bead> beads;
    if (n == 0 && m == 0) return beads;
    if (back_[n][m - band.lo[n]] < 0)
      throw Error("alignment search found no path; band too narrow");
    int i = n;
    int j = m;
    while (i != 0 || j != 0) {
      int k = back_[i][j - band.lo[i]];
      Bead bead;
      bead.kind = static_cast<BeadKind>(k);
      for (int s = i - kSteps[k].di; s < i; ++s) bead.src.push_back(s);
      for (int t = j - kSteps[k].dj; t < j; ++t) bead.tgt.push_back(t);
      beads.push_back(std::move(bead));
      i -= kSteps[k].di;
      j -= kSteps[k].dj;
    }
    std::reverse(beads.begin(), beads.end());
    return beads;
  }

 private:
  // True when path(pi,pj)+[k] orders lexicographically before
  // path(qi,qj)+[q] (candidate vs current best, both ending at one state).
  bool lex_before(int pi, int pj, int k, int i, int j, int best_kind,
                  const Band& band) {
    int qi = i - kSteps[best_kind].di;
    int qj = j - kSteps[best_kind].dj;
    reconstruct(pi, pj, band, scratch_a_);
    scratch_a_.push_back(static_cast<int8_t>(k));
    reconstruct(qi, qj, band, scratch_b_);
    scratch_b_.push_back(static_cast<int8_t>(best_kind));
    return std::lexicographical_compare(scratch_a_.begin(), scratch_a_.end(),
                                        scratch_b_.begin(), scratch_b_.end());
  }

  void reconstruct(int i, int j, const Band& band, std::vector<int8_t>& out) {
    out.clear();
    while (i != 0 || j != 0) {
      int k = back_[i][j - band.lo[i]];
      out.push_back(static_cast<int8_t>(k));
      i -= kSteps[k].di;
      j -= kSteps[k].dj;
    }
    std::reverse(out.begin(), out.end());
  }

  std::vector<std::vector<int8_t>> back_;
  std::vector<int8_t> scratch_a_;
  std::vector<int8_t> scratch_b_;
};

// Character length of a bead side: sentence lengths plus joining spaces,
// identical to the merged text's length.
double span_chars(const std::vector<double>& prefix, int end, int count) {
  if (count == 0) return 0.0;
  return prefix[end] - prefix[end - count] + (count - 1);
}

std::vector<double> length_prefix(std::span<const Sentence> sentences) {
  std::vector<double> prefix(sentences.size() + 1, 0.0);
  for (std::size_t i = 0; i < sentences.size(); ++i)
    prefix[i + 1] = prefix[i] + static_cast<double>(utf8_length(sentences[i].text));
  return prefix;
}

}  // namespace

std::vector<Bead> align_lengths(std::span<const Sentence> src,
                                std::span<const Sentence> tgt,
                                const AlignerConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(tgt.size());
  const double ratio = resolved_ratio(cfg, src, tgt);
  const auto src_prefix = length_prefix(src);
  const auto tgt_prefix = length_prefix(tgt);
  std::array<double, 6> prior_cost;
  for (int k = 0; k < 6; ++k) prior_cost[k] = -std::log(cfg.bead_priors[k]);

  auto bead_cost = [&](int i, int j, BeadKind kind) {
    int k = static_cast<int>(kind);
    double sl = span_chars(src_prefix, i, kSteps[k].di);
    double tl = span_chars(tgt_prefix, j, kSteps[k].dj);
    return prior_cost[k] +
           length_penalty(length_delta(sl, tl, ratio, cfg.length_variance));
  };

  Band band = make_band(n, m, cfg);
  BeadDp dp;
  std::vector<Bead> beads = dp.run(n, m, band, bead_cost);
  for (Bead& b : beads) {
    double sl = span_chars(src_prefix, b.src.empty() ? 0 : b.src.back() + 1,
                           static_cast<int>(b.src.size()));
    double tl = span_chars(tgt_prefix, b.tgt.empty() ? 0 : b.tgt.back() + 1,
                           static_cast<int>(b.tgt.size()));
    b.score = length_cost_with_ratio(b.kind, sl, tl, ratio, cfg);
  }
  return beads;
}

Dictionary build_dictionary(const std::vector<Bead>& beads,
                            std::span<const Sentence> src,
                            std::span<const Sentence> tgt,
                            const AlignerConfig& cfg) {
  cfg.validate();
  std::unordered_map<std::string, long> src_count;
  std::unordered_map<std::string, long> tgt_count;
  std::unordered_map<std::string, std::unordered_map<std::string, long>> pair_count;

  auto types_of = [](const std::string& text) {
    std::vector<std::string> toks = dict_tokens(text);
    std::sort(toks.begin(), toks.end());
    toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
    return toks;
  };

  for (const Bead& bead : beads) {
    if (bead.kind != BeadKind::OneOne) continue;
    auto src_types = types_of(src[bead.src[0]].text);
    auto tgt_types = types_of(tgt[bead.tgt[0]].text);
    for (const auto& s : src_types) ++src_count[s];
    for (const auto& t : tgt_types) ++tgt_count[t];
    for (const auto& s : src_types) {
      auto& row = pair_count[s];
      for (const auto& t : tgt_types) ++row[t];
    }
  }

  Dictionary dict;
  for (const auto& [s, row] : pair_count) {
    for (const auto& [t, count] : row) {
      if (count < cfg.dict_min_count) continue;
      double dice = 2.0 * count / (src_count[s] + tgt_count[t]);
      if (dice < cfg.dict_min_dice) continue;
      dict.insert(s, t, {count, dice});
    }
  }
  return dict;
}

double combined_score_with_ratio(std::string_view src_text,
                                 std::string_view tgt_text,
                                 const Dictionary& dict,
                                 const AlignerConfig& cfg, double ratio) {
  std::vector<std::string> src_toks = dict_tokens(src_text);
  std::vector<std::string> tgt_toks = dict_tokens(tgt_text);
  if (src_toks.empty() && tgt_toks.empty()) return 0.0;

  std::unordered_set<std::string> src_set(src_toks.begin(), src_toks.end());
  std::unordered_set<std::string> tgt_set(tgt_toks.begin(), tgt_toks.end());

  long covered = 0;
  for (const std::string& s : src_toks) {
    auto row = dict.by_src().find(s);
    if (row == dict.by_src().end()) continue;
    for (const auto& [t, entry] : row->second) {
      if (tgt_set.count(t)) {
        ++covered;
        break;
      }
    }
  }
  for (const std::string& t : tgt_toks) {
    bool hit = false;
    for (const std::string& s : src_set) {
      if (dict.contains(s, t)) {
        hit = true;
        break;
      }
    }
    if (hit) ++covered;
  }
  double dict_component =
      static_cast<double>(covered) /
      static_cast<double>(src_toks.size() + tgt_toks.size());
  double delta = length_delta(static_cast<double>(utf8_length(src_text)),
                              static_cast<double>(utf8_length(tgt_text)), ratio,
                              cfg.length_variance);
  double length_component = std::exp(-delta * delta / 2.0);
  return cfg.dict_weight * dict_component + cfg.length_weight * length_component;
}

double combined_score(std::string_view src_text, std::string_view tgt_text,
                      const Dictionary& dict, const AlignerConfig& cfg) {
  return combined_score_with_ratio(src_text, tgt_text, dict, cfg,
                                   cfg.char_ratio.value_or(1.0));
}

namespace {

// Token-id view of one input side plus dictionary partner lists, for the
// realign inner loop. Mirrors combined_score_with_ratio exactly.
struct ScoringIndex {
  std::vector<std::vector<int>> sent_tokens;  // per sentence, token ids
  std::vector<double> char_prefix;
  std::vector<std::vector<int>> partners;  // per own-token id, other-side ids
  std::vector<int> stamp;                  // presence marks, epoch-based
};

class PairScorer {
 public:
  PairScorer(std::span<const Sentence> src, std::span<const Sentence> tgt,
             const Dictionary& dict, const AlignerConfig& cfg, double ratio)
      : cfg_(cfg), ratio_(ratio) {
    build_side(src_, src);
    build_side(tgt_, tgt);
    // id-space partner lists in both directions
    src_.partners.assign(src_vocab_.size(), {});
    tgt_.partners.assign(tgt_vocab_.size(), {});
    for (const auto& [s, row] : dict.by_src()) {
      auto sit = src_vocab_.find(s);
      if (sit == src_vocab_.end()) continue;
      for (const auto& [t, entry] : row) {
        auto tit = tgt_vocab_.find(t);
        if (tit == tgt_vocab_.end()) continue;
        src_.partners[sit->second].push_back(tit->second);
        tgt_.partners[tit->second].push_back(sit->second);
      }
    }
    src_.stamp.assign(src_vocab_.size(), 0);
    tgt_.stamp.assign(tgt_vocab_.size(), 0);
  }

  // Combined score of src sentences [i-di, i) against tgt [j-dj, j).
  double score(int i, int di, int j, int dj) {
    ++epoch_;
    long n_src = 0;
    long n_tgt = 0;
    for (int s = i - di; s < i; ++s)
      for (int id : src_.sent_tokens[s]) {
        src_.stamp[id] = epoch_;
        ++n_src;
      }
    for (int t = j - dj; t < j; ++t)
      for (int id : tgt_.sent_tokens[t]) {
        tgt_.stamp[id] = epoch_;
        ++n_tgt;
      }
    if (n_src + n_tgt == 0) return 0.0;

    long covered = 0;
    for (int s = i - di; s < i; ++s)
      for (int id : src_.sent_tokens[s])
        for (int partner : src_.partners[id])
          if (tgt_.stamp[partner] == epoch_) {
            ++covered;
            break;
          }
    for (int t = j - dj; t < j; ++t)
      for (int id : tgt_.sent_tokens[t])
        for (int partner : tgt_.partners[id])
          if (src_.stamp[partner] == epoch_) {
            ++covered;
            break;
          }
    double dict_component =
        static_cast<double>(covered) / static_cast<double>(n_src + n_tgt);
    double sl = span_chars(src_.char_prefix, i, di);
    double tl = span_chars(tgt_.char_prefix, j, dj);
    double delta = length_delta(sl, tl, ratio_, cfg_.length_variance);
    double length_component = std::exp(-delta * delta / 2.0);
    return cfg_.dict_weight * dict_component +
           cfg_.length_weight * length_component;
  }

 private:
  void build_side(ScoringIndex& side, std::span<const Sentence> sentences) {
    auto& vocab = (&side == &src_) ? src_vocab_ : tgt_vocab_;
    side.sent_tokens.reserve(sentences.size());
    for (const Sentence& s : sentences) {
      std::vector<int> ids;
      for (const std::string& tok : dict_tokens(s.text)) {
        auto [it, _] = vocab.emplace(tok, static_cast<int>(vocab.size()));
        ids.push_back(it->second);
      }
      side.sent_tokens.push_back(std::move(ids));
    }
    side.char_prefix = length_prefix(sentences);
  }

  const AlignerConfig& cfg_;
  double ratio_;
  ScoringIndex src_;
  ScoringIndex tgt_;
  std::unordered_map<std::string, int> src_vocab_;
  std::unordered_map<std::string, int> tgt_vocab_;
  int epoch_ = 0;
};

}  // namespace

std::vector<Bead> realign(std::span<const Sentence> src,
                          std::span<const Sentence> tgt, const Dictionary& dict,
                          const AlignerConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(tgt.size());
  const double ratio = resolved_ratio(cfg, src, tgt);
  PairScorer scorer(src, tgt, dict, cfg, ratio);
  std::array<double, 6> prior_cost;
  for (int k = 0; k < 6; ++k) prior_cost[k] = -std::log(cfg.bead_priors[k]);

  auto bead_cost = [&](int i, int j, BeadKind kind) {
    int k = static_cast<int>(kind);
    double s = scorer.score(i, kSteps[k].di, j, kSteps[k].dj);
    return prior_cost[k] - std::log(std::max(s, cfg.score_floor));
  };

  Band band = make_band(n, m, cfg);
  BeadDp dp;
  std::vector<Bead> beads = dp.run(n, m, band, bead_cost);
  for (Bead& b : beads) {
    int i = b.src.empty() ? 0 : b.src.back() + 1;
    int j = b.tgt.empty() ? 0 : b.tgt.back() + 1;
    b.score = scorer.score(i, static_cast<int>(b.src.size()), j,
                           static_cast<int>(b.tgt.size()));
  }
  return beads;
}

TwoPassResult two_pass_align(std::span<const Sentence> src,
                             std::span<const Sentence> tgt,
                             const AlignerConfig& cfg) {
  TwoPassResult result;
  std::vector<Bead> first = align_lengths(src, tgt, cfg);
  result.dictionary = build_dictionary(first, src, tgt, cfg);
  result.beads = realign(src, tgt, result.dictionary, cfg);
  return result;
}

std::vector<Bead> apply_score_gate(const std::vector<Bead>& beads,
                                   const AlignerConfig& cfg) {
  std::vector<Bead> out;
  out.reserve(beads.size());
  for (const Bead& bead : beads) {
    if (bead.kind == BeadKind::OneOne && bead.score < cfg.min_pair_score) {
      Bead drop_src{BeadKind::OneZero, bead.src, {}, bead.score};
      Bead drop_tgt{BeadKind::ZeroOne, {}, bead.tgt, bead.score};
      out.push_back(std::move(drop_src));
      out.push_back(std::move(drop_tgt));
    } else {
      out.push_back(bead);
    }
  }
  return out;
}

namespace {

std::vector<Bead> shift_beads(std::vector<Bead> beads, int src_off, int tgt_off) {
  for (Bead& b : beads) {
    for (int& i : b.src) i += src_off;
    for (int& j : b.tgt) j += tgt_off;
  }
  return beads;
}

}  // namespace

std::vector<Bead> chunk_align(std::span<const Sentence> src,
                              std::span<const Sentence> tgt,
                              const AlignerConfig& cfg,
                              const Dictionary* external_dict,
                              std::vector<std::string>* warnings) {
  cfg.validate();
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(tgt.size());
  if (std::max(n, m) <= cfg.chunk_limit) {
    if (external_dict) return realign(src, tgt, *external_dict, cfg);
    return two_pass_align(src, tgt, cfg).beads;
  }

  std::vector<Bead> coarse = align_lengths(src, tgt, cfg);
  std::vector<std::pair<int, int>> ends(coarse.size());
  {
    int se = 0;
    int te = 0;
    for (std::size_t b = 0; b < coarse.size(); ++b) {
      se += static_cast<int>(coarse[b].src.size());
      te += static_cast<int>(coarse[b].tgt.size());
      ends[b] = {se, te};
    }
  }

  const int window = std::max(50, cfg.chunk_limit / 10);
  std::vector<std::pair<int, int>> cuts;  // (src_end, tgt_end) of each chunk
  std::size_t search_from = 0;
  for (long boundary = cfg.chunk_limit; boundary < n; boundary += cfg.chunk_limit) {
    long best = -1;
    double best_cost = kInf;
    long best_dist = 0;
    for (std::size_t b = search_from; b < coarse.size(); ++b) {
      long se = ends[b].first;
      if (se < boundary - window) continue;
      if (se > boundary + window) break;
      if (coarse[b].kind != BeadKind::OneOne) continue;
      long dist = std::abs(se - boundary);
      if (coarse[b].score < best_cost ||
          (coarse[b].score == best_cost && dist < best_dist)) {
        best = static_cast<long>(b);
        best_cost = coarse[b].score;
        best_dist = dist;
      }
    }
    if (best < 0) {
      // No usable anchor: cut after the first bead reaching the boundary.
      std::size_t b = search_from;
      while (b < coarse.size() && ends[b].first < boundary) ++b;
      if (b >= coarse.size()) break;
      if (warnings)
        warnings->push_back("no 1-1 anchor near source index " +
                            std::to_string(boundary) + "; hard split");
      best = static_cast<long>(b);
    }
    cuts.push_back(ends[best]);
    search_from = static_cast<std::size_t>(best) + 1;
  }
  cuts.emplace_back(n, m);

  std::vector<Bead> out;
  int src_begin = 0;
  int tgt_begin = 0;
  for (const auto& [src_end, tgt_end] : cuts) {
    if (src_end < src_begin || tgt_end < tgt_begin) continue;
    auto src_chunk = src.subspan(src_begin, src_end - src_begin);
    auto tgt_chunk = tgt.subspan(tgt_begin, tgt_end - tgt_begin);
    std::vector<Bead> chunk_beads =
        external_dict ? realign(src_chunk, tgt_chunk, *external_dict, cfg)
                      : two_pass_align(src_chunk, tgt_chunk, cfg).beads;
    auto shifted = shift_beads(std::move(chunk_beads), src_begin, tgt_begin);
    out.insert(out.end(), std::make_move_iterator(shifted.begin()),
               std::make_move_iterator(shifted.end()));
    src_begin = src_end;
    tgt_begin = tgt_end;
  }
  check_bead_sequence(out, n, m);
  return out;
}

namespace {

// Paragraph ranges of a segmented document, in document order; empty
// paragraphs keep their slot so both sides stay in step.
std::vector<std::pair<int, int>> paragraph_ranges(
    const StructuredDocument& doc, const std::vector<Sentence>& sentences) {
  std::vector<std::pair<int, int>> ranges;
  std::size_t cursor = 0;
  for (int s = 0; s < static_cast<int>(doc.sections.size()); ++s) {
    for (int p = 0; p < static_cast<int>(doc.sections[s].paragraphs.size()); ++p) {
      int begin = static_cast<int>(cursor);
      while (cursor < sentences.size() && sentences[cursor].ref.section == s &&
             sentences[cursor].ref.paragraph == p)
        ++cursor;
      ranges.emplace_back(begin, static_cast<int>(cursor));
    }
  }
  return ranges;
}

}  // namespace

DocumentAlignment align_document_beads(const StructuredDocument& doc_a,
                                       const StructuredDocument& doc_b,
                                       const CompatibilityVerdict& verdict,
                                       const AlignerConfig& cfg,
                                       const std::string& article_id,
                                       const Dictionary* external_dict,
                                       bool document_level_override) {
  cfg.validate();
  if (verdict.mode == CompatMode::incompatible && !document_level_override)
    throw IncompatibleStructure("article " + article_id +
                                ": incompatible document structures");

  DocumentAlignment out;
  out.src_sentences = segment_document(doc_a, article_id);
  out.tgt_sentences = segment_document(doc_b, article_id);
  std::span<const Sentence> src(out.src_sentences);
  std::span<const Sentence> tgt(out.tgt_sentences);
  const int n = static_cast<int>(src.size());
  const int m = static_cast<int>(tgt.size());

  if (verdict.mode == CompatMode::incompatible) {
    // Document-level fallback: everything in one pass.
    out.beads = chunk_align(src, tgt, cfg, external_dict, &out.warnings);
    if (external_dict) out.dictionary = *external_dict;
    return out;
  }

  auto ranges_a = paragraph_ranges(doc_a, out.src_sentences);
  auto ranges_b = paragraph_ranges(doc_b, out.tgt_sentences);
  if (ranges_a.size() != ranges_b.size())
    throw IncompatibleStructure("paragraph counts diverged after parsing");

  if (!external_dict) {
    // First pass per paragraph pair; dictionary pooled over the document.
    std::vector<Bead> first_pass;
    for (std::size_t g = 0; g < ranges_a.size(); ++g) {
      auto [sb, se] = ranges_a[g];
      auto [tb, te] = ranges_b[g];
      auto beads = align_lengths(src.subspan(sb, se - sb), tgt.subspan(tb, te - tb), cfg);
      auto shifted = shift_beads(std::move(beads), sb, tb);
      first_pass.insert(first_pass.end(), shifted.begin(), shifted.end());
    }
    out.dictionary = build_dictionary(first_pass, src, tgt, cfg);
  } else {
    out.dictionary = *external_dict;
  }

  for (std::size_t g = 0; g < ranges_a.size(); ++g) {
    auto [sb, se] = ranges_a[g];
    auto [tb, te] = ranges_b[g];
    auto beads = realign(src.subspan(sb, se - sb), tgt.subspan(tb, te - tb),
                         out.dictionary, cfg);
    auto shifted = shift_beads(std::move(beads), sb, tb);
    out.beads.insert(out.beads.end(), shifted.begin(), shifted.end());
  }
  check_bead_sequence(out.beads, n, m);
  return out;
}

std::vector<AlignedPair> beads_to_pairs(const std::vector<Bead>& beads,
                                        std::span<const Sentence> src,
                                        std::span<const Sentence> tgt) {
  std::vector<AlignedPair> pairs;
  for (const Bead& bead : beads) {
    if (bead.kind == BeadKind::OneZero || bead.kind == BeadKind::ZeroOne)
      continue;
    AlignedPair pair;
    pair.provenance = bead.kind;
    pair.score = bead.score;
    for (int i : bead.src) {
      if (!pair.src_text.empty()) pair.src_text += ' ';
      pair.src_text += src[i].text;
      pair.src_refs.push_back(src[i].ref);
    }
    for (int j : bead.tgt) {
      if (!pair.tgt_text.empty()) pair.tgt_text += ' ';
      pair.tgt_text += tgt[j].text;
      pair.tgt_refs.push_back(tgt[j].ref);
    }
    pair.src_lang = src[bead.src.front()].lang;
    pair.tgt_lang = tgt[bead.tgt.front()].lang;
    pair.article_id = src[bead.src.front()].article_id;
    pair.validate();
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<AlignedPair> align_document(const StructuredDocument& doc_a,
                                        const StructuredDocument& doc_b,
                                        const CompatibilityVerdict& verdict,
                                        const AlignerConfig& cfg,
                                        const std::string& article_id,
                                        const Dictionary* external_dict,
                                        bool document_level_override) {
  DocumentAlignment doc = align_document_beads(
      doc_a, doc_b, verdict, cfg, article_id, external_dict, document_level_override);
  std::vector<Bead> gated = apply_score_gate(doc.beads, cfg);
  return beads_to_pairs(gated, doc.src_sentences, doc.tgt_sentences);
}

}  // namespace scialign
