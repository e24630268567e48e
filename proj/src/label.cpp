// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rigidmp/label.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <stdexcept>

namespace rigidmp {

Label::Label(const char* text) { *this = parse_label(text); }

Label primed(const Label& l) { return {l.name, Decoration::kPrime, l.copy}; }

Label double_primed(const Label& l) {
  return {l.name, Decoration::kDoublePrime, l.copy};
}

Label undecorated(const Label& l) {
  return {l.name, Decoration::kPlain, l.copy};
}

Label with_copy(const Label& l, std::uint32_t copy) {
  return {l.name, l.decoration, copy};
}

Label tilde(const Label& l) { return with_copy(l, l.copy + 1); }

std::string to_string(const Label& l) {
  std::string s = l.name;
  s.append(l.copy, '~');
  if (l.decoration == Decoration::kPrime) s += '\'';
  if (l.decoration == Decoration::kDoublePrime) s += '"';
  return s;
}

Label parse_label(std::string_view text) {
  Label l;
  if (!text.empty() && text.back() == '"') {
    l.decoration = Decoration::kDoublePrime;
    text.remove_suffix(1);
  } else if (!text.empty() && text.back() == '\'') {
    l.decoration = Decoration::kPrime;
    text.remove_suffix(1);
  }
  while (!text.empty() && text.back() == '~') {
    ++l.copy;
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty label");
  for (char c : text) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                    c == '.' || c == '-' || c == '[' || c == ']';
    if (!ok) {
      throw std::invalid_argument("bad character in label '" +
                                  std::string(text) + "'");
    }
  }
  l.name = std::string(text);
  return l;
}

std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << to_string(l);
}

LabelSet make_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

LabelSet set_intersection(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const LabelSet& s, const Label& l) {
  return std::binary_search(s.begin(), s.end(), l);
}

bool disjoint(const LabelSet& a, const LabelSet& b) {
  return set_intersection(a, b).empty();
}

LabelSet primed(const LabelSet& s) {
  LabelSet out;
  for (const auto& l : s) out.push_back(primed(l));
  return make_set(std::move(out));
}

LabelSet double_primed(const LabelSet& s) {
  LabelSet out;
  for (const auto& l : s) out.push_back(double_primed(l));
  return make_set(std::move(out));
}

std::vector<std::string> to_strings(const LabelSet& s) {
  std::vector<std::string> out;
  for (const auto& l : s) out.push_back(to_string(l));
  return out;
}

}  // namespace rigidmp
