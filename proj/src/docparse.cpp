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

#include "scialign/docparse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "scialign/segment.hpp"

namespace scialign {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Tag {
  std::string name;  // lowercased
  std::map<std::string, std::string> attrs;
  bool closing = false;
  bool self_closing = false;
};

// Parses the inside of "<...>" (without the angle brackets).
Tag parse_tag(std::string_view body) {
  Tag tag;
  std::size_t i = 0;
  if (i < body.size() && body[i] == '/') {
    tag.closing = true;
    ++i;
  }
  std::size_t name_start = i;
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) &&
         body[i] != '/')
    ++i;
  tag.name = to_lower(std::string(body.substr(name_start, i - name_start)));
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i >= body.size()) break;
    if (body[i] == '/') {
      tag.self_closing = true;
      ++i;
      continue;
    }
    std::size_t key_start = i;
    while (i < body.size() && body[i] != '=' && body[i] != '/' &&
           !std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    std::string key = to_lower(std::string(body.substr(key_start, i - key_start)));
    std::string value;
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i < body.size() && body[i] == '=') {
      ++i;
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
        char quote = body[i++];
        std::size_t val_start = i;
        while (i < body.size() && body[i] != quote) ++i;
        value = std::string(body.substr(val_start, i - val_start));
        if (i < body.size()) ++i;
      } else {
        std::size_t val_start = i;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) &&
               body[i] != '/')
          ++i;
        value = std::string(body.substr(val_start, i - val_start));
      }
    }
    if (!key.empty()) tag.attrs[key] = value;
  }
  return tag;
}

const std::set<std::string>& block_tags() {
  static const std::set<std::string> tags = {
      "p",       "div",    "section", "article", "li",     "ul",   "ol",
      "blockquote", "pre", "br",      "hr",      "td",     "th",   "tr",
      "header",  "footer", "aside",   "main",    "h1",     "h2",   "h3",
      "h4",      "h5",     "h6",      "caption", "dt",     "dd",   "body"};
  return tags;
}

const std::set<std::string>& void_tags() {
  static const std::set<std::string> tags = {"img", "br", "hr", "meta",
                                             "link", "input", "area", "col"};
  return tags;
}

// Whole subtrees to discard: non-textual elements and boilerplate.
bool strips_subtree(const Tag& tag) {
  static const std::set<std::string> drop = {"table", "figure", "script",
                                             "style", "sup"};
  if (drop.count(tag.name)) return true;
  auto it = tag.attrs.find("class");
  if (it != tag.attrs.end()) {
    std::string cls = to_lower(it->second);
    if (cls.find("ref") != std::string::npos ||
        cls.find("footnote") != std::string::npos)
      return true;
  }
  return false;
}

bool is_heading(const Tag& tag) {
  if (tag.name.size() == 2 && tag.name[0] == 'h' && tag.name[1] >= '1' &&
      tag.name[1] <= '6')
    return true;
  auto it = tag.attrs.find("class");
  if (it != tag.attrs.end()) {
    std::string cls = to_lower(it->second);
    if (cls.find("sec") != std::string::npos ||
        cls.find("title") != std::string::npos)
      return true;
  }
  return false;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0x10FFFF) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string decode_entities(const std::string& text) {
  static const std::map<std::string, std::string> named = {
      {"amp", "&"},   {"lt", "<"},    {"gt", ">"},     {"quot", "\""},
      {"apos", "'"},  {"nbsp", " "},  {"ndash", "–"}, {"mdash", "—"},
      {"sect", "§"}, {"deg", "°"}, {"plusmn", "±"},
      {"times", "×"}, {"middot", "·"}, {"laquo", "«"},
      {"raquo", "»"}, {"ouml", "ö"}, {"auml", "ä"},
      {"eacute", "é"}, {"aacute", "á"}, {"iacute", "í"},
      {"oacute", "ó"}, {"uacute", "ú"}, {"atilde", "ã"},
      {"otilde", "õ"}, {"ccedil", "ç"}, {"ntilde", "ñ"},
      {"agrave", "à"}, {"ecirc", "ê"}, {"ocirc", "ô"},
      {"acirc", "â"}, {"uuml", "ü"}};
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t semi = text.find(';', i + 1);
    if (semi == std::string::npos || semi - i > 10) {
      out.push_back(text[i++]);
      continue;
    }
    std::string body = text.substr(i + 1, semi - i - 1);
    if (!body.empty() && body[0] == '#') {
      unsigned long cp = 0;
      bool ok = body.size() > 1;
      try {
        cp = (body[1] == 'x' || body[1] == 'X')
                 ? std::stoul(body.substr(2), nullptr, 16)
                 : std::stoul(body.substr(1), nullptr, 10);
      } catch (...) {
        ok = false;
      }
      if (ok) {
        append_utf8(out, cp);
        i = semi + 1;
        continue;
      }
    } else if (auto it = named.find(body); it != named.end()) {
      out += it->second;
      i = semi + 1;
      continue;
    }
    out.push_back(text[i++]);  // unknown entity, keep literal
  }
  return out;
}

// Removes "[3]", "[1,2]", "[3-7]" style citation markers.
std::string strip_bracket_citations(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '[') {
      std::size_t j = i + 1;
      bool has_digit = false;
      bool citation = true;
      while (j < text.size() && text[j] != ']') {
        unsigned char c = text[j];
        if (std::isdigit(c)) {
          has_digit = true;
        } else if (c != ',' && c != ';' && c != '-' && c != ' ' &&
                   c != 0xE2 && c != 0x80 && c != 0x93) {  // allow "–"
          citation = false;
          break;
        }
        ++j;
      }
      if (citation && has_digit && j < text.size() && text[j] == ']') {
        i = j + 1;
        continue;
      }
    }
    out.push_back(text[i++]);
  }
  return out;
}

// Anchor text that is only digits/brackets/range punctuation is a citation
// marker and is dropped together with its element.
bool citation_anchor_text(const std::string& text) {
  bool has_digit = false;
  for (unsigned char c : text) {
    if (std::isdigit(c)) {
      has_digit = true;
    } else if (c != '[' && c != ']' && c != ',' && c != ';' && c != '-' &&
               !std::isspace(c)) {
      return false;
    }
  }
  return has_digit;
}

struct Block {
  enum Type { heading, paragraph, plain } type = plain;
  std::string text;
};

}  // namespace

StructuredDocument parse_html(const std::string& markup, Lang lang) {
  std::vector<Block> blocks;
  std::string title;

  std::string current;
  Block::Type current_type = Block::plain;
  int strip_depth = 0;
  std::string strip_tag;       // tag whose close ends the stripped subtree
  bool in_title = false;
  bool in_anchor = false;
  std::string anchor_text;

  auto emit = [&](std::string& sink, const std::string& text) {
    sink += text;
  };

  auto flush = [&]() {
    std::string text =
        normalize_whitespace(strip_bracket_citations(decode_entities(current)));
    if (!text.empty()) blocks.push_back({current_type, std::move(text)});
    current.clear();
  };

  auto end_anchor = [&]() {
    if (!in_anchor) return;
    in_anchor = false;
    if (!citation_anchor_text(normalize_whitespace(decode_entities(anchor_text))))
      current += anchor_text;
    anchor_text.clear();
  };

  std::size_t i = 0;
  const std::size_t n = markup.size();
  while (i < n) {
    char c = markup[i];
    if (c != '<') {
      if (strip_depth == 0)
        emit(in_title ? title : (in_anchor ? anchor_text : current),
             std::string(1, c));
      ++i;
      continue;
    }
    // Comments and declarations.
    if (markup.compare(i, 4, "<!--") == 0) {
      std::size_t end = markup.find("-->", i + 4);
      i = end == std::string::npos ? n : end + 3;
      continue;
    }
    if (i + 1 < n && (markup[i + 1] == '!' || markup[i + 1] == '?')) {
      std::size_t end = markup.find('>', i + 1);
      i = end == std::string::npos ? n : end + 1;
      continue;
    }
    // A '<' not opening a tag is literal text (e.g. "p<0.05").
    if (i + 1 >= n ||
        (!std::isalpha(static_cast<unsigned char>(markup[i + 1])) &&
         markup[i + 1] != '/')) {
      if (strip_depth == 0)
        emit(in_title ? title : (in_anchor ? anchor_text : current), "<");
      ++i;
      continue;
    }
    std::size_t close = markup.find('>', i + 1);
    if (close == std::string::npos) break;  // truncated tag, drop the tail
    Tag tag = parse_tag(std::string_view(markup).substr(i + 1, close - i - 1));
    i = close + 1;

    if (strip_depth > 0) {
      if (tag.name == strip_tag && !tag.self_closing && !void_tags().count(tag.name))
        strip_depth += tag.closing ? -1 : 1;
      continue;
    }

    if (tag.name == "title") {
      in_title = !tag.closing;
      continue;
    }
    if (tag.name == "img") continue;  // void, dropped

    if (!tag.closing && strips_subtree(tag)) {
      end_anchor();
      if (is_heading(tag) || block_tags().count(tag.name)) flush();
      if (!tag.self_closing && !void_tags().count(tag.name)) {
        strip_depth = 1;
        strip_tag = tag.name;
      }
      continue;
    }

    if (tag.name == "a") {
      if (tag.closing) {
        end_anchor();
      } else {
        end_anchor();  // ill-formed nesting: settle the previous anchor first
        in_anchor = true;
      }
      continue;
    }

    bool heading = !tag.closing && is_heading(tag);
    if (heading || block_tags().count(tag.name)) {
      end_anchor();
      flush();
      if (tag.closing) {
        current_type = Block::plain;
      } else if (heading) {
        current_type = Block::heading;
      } else if (tag.name == "p") {
        current_type = Block::paragraph;
      } else if (tag.name != "br") {
        current_type = Block::plain;
      }
      continue;
    }
    // Inline tag: text flows through.
  }
  end_anchor();
  flush();

  StructuredDocument doc;
  doc.lang = lang;
  std::string doc_title = normalize_whitespace(decode_entities(title));
  if (!doc_title.empty()) doc.title = doc_title;

  bool has_heading = false;
  bool has_paragraph = false;
  for (const Block& b : blocks) {
    has_heading = has_heading || b.type == Block::heading;
    has_paragraph = has_paragraph || b.type != Block::heading;
  }

  if (has_heading && has_paragraph) {
    doc.kind = DocKind::structured;
    for (const Block& b : blocks) {
      if (b.type == Block::heading) {
        doc.sections.push_back(Section{b.text, {}});
      } else {
        if (doc.sections.empty()) doc.sections.push_back(Section{std::nullopt, {}});
        doc.sections.back().paragraphs.push_back(b.text);
      }
    }
  } else {
    doc.kind = DocKind::flat;
    Section flat;
    for (const Block& b : blocks) flat.paragraphs.push_back(b.text);
    if (!flat.paragraphs.empty()) doc.sections.push_back(std::move(flat));
  }

  if (doc.paragraph_count() == 0)
    throw EmptyDocument("no textual content after stripping");
  return doc;
}

CompatibilityVerdict check_compatibility(const StructuredDocument& a,
                                         const StructuredDocument& b) {
  CompatibilityVerdict verdict;
  for (const Section& s : a.sections) verdict.shape_a.push_back(s.paragraphs.size());
  for (const Section& s : b.sections) verdict.shape_b.push_back(s.paragraphs.size());

  if (a.kind == DocKind::structured && b.kind == DocKind::structured &&
      verdict.shape_a == verdict.shape_b) {
    verdict.mode = CompatMode::structured;
    return verdict;
  }
  if (a.paragraph_count() == b.paragraph_count() && a.paragraph_count() > 0) {
    verdict.mode = CompatMode::flat;
    return verdict;
  }
  verdict.mode = CompatMode::incompatible;
  return verdict;
}

}  // namespace scialign
