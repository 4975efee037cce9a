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
#include <optional>
#include <string>
#include <string_view>

#include "scialign/error.hpp"

namespace scialign {

/// The three corpus languages. Only these codes are constructible.
enum class Lang : int { en = 0, pt = 1, es = 2 };

inline constexpr std::array<Lang, 3> kAllLangs = {Lang::en, Lang::pt, Lang::es};

constexpr std::string_view to_string(Lang lang) {
  switch (lang) {
    case Lang::en: return "en";
    case Lang::pt: return "pt";
    case Lang::es: return "es";
  }
  return "??";
}

inline std::optional<Lang> parse_lang(std::string_view code) {
  if (code == "en") return Lang::en;
  if (code == "pt") return Lang::pt;
  if (code == "es") return Lang::es;
  return std::nullopt;
}

/// Parse or throw; for inputs that must already be valid.
inline Lang lang_from_string(std::string_view code) {
  auto lang = parse_lang(code);
  if (!lang) throw ValidationError("unknown language code: " + std::string(code));
  return *lang;
}

/// Canonical "xx-yy" label, e.g. "en-pt".
inline std::string pair_label(Lang a, Lang b) {
  return std::string(to_string(a)) + "-" + std::string(to_string(b));
}

}  // namespace scialign
