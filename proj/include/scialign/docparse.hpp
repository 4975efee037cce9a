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

#include <string>
#include <vector>

#include "scialign/types.hpp"

namespace scialign {

enum class CompatMode { structured, flat, incompatible };

/// Verdict of the cross-language structure check, with the per-section
/// paragraph counts that produced it.
struct CompatibilityVerdict {
  CompatMode mode = CompatMode::incompatible;
  std::vector<std::size_t> shape_a;  // paragraphs per section, document A
  std::vector<std::size_t> shape_b;
};

/// Parses article markup into a StructuredDocument.
///
/// Recognized structure: h1-h6 (or any element whose class contains "sec"
/// or "title") opens a section; <p> fills it; any other block element
/// contributes a plain paragraph. Images, tables, figures, scripts,
/// reference lists and footnotes (class containing "ref"/"footnote") are
/// dropped with their contents, as are superscripts, numeric citation
/// anchors and bracketed citations like "[3]". Entities are decoded and
/// whitespace collapsed. When no heading/paragraph pair is recognized the
/// result is a flat document: one heading-less section listing every block.
///
/// Throws EmptyDocument when nothing textual survives.
StructuredDocument parse_html(const std::string& markup, Lang lang);

/// Decides whether two parses of the same article can be aligned
/// paragraph-by-paragraph (structured), only in document order (flat,
/// equal totals), or not at all.
CompatibilityVerdict check_compatibility(const StructuredDocument& a,
                                         const StructuredDocument& b);

}  // namespace scialign
