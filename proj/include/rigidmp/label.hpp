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

#ifndef RIGIDMP_LABEL_HPP_
#define RIGIDMP_LABEL_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rigidmp {

enum class Decoration : std::uint8_t { kPlain = 0, kPrime = 1, kDoublePrime = 2 };

// A column name. `copy` distinguishes positional copies (S, S~, S~~ ...)
// independently of the voltage/current decoration.
struct Label {
  std::string name;
  Decoration decoration = Decoration::kPlain;
  std::uint32_t copy = 0;

  Label() = default;
  Label(std::string n, Decoration d = Decoration::kPlain, std::uint32_t c = 0)
      : name(std::move(n)), decoration(d), copy(c) {}
  // Parses decorations: "p'" is primed, "p~\"" a double-primed copy.
  Label(const char* text);  // NOLINT: implicit for literals

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

Label primed(const Label& l);
Label double_primed(const Label& l);
Label undecorated(const Label& l);
Label with_copy(const Label& l, std::uint32_t copy);
Label tilde(const Label& l);

// name, then one '~' per copy, then ' or ".
std::string to_string(const Label& l);
Label parse_label(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Label& l);

// Sorted, duplicate-free.
using LabelSet = std::vector<Label>;

LabelSet make_set(std::vector<Label> labels);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_intersection(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);
bool is_subset(const LabelSet& a, const LabelSet& b);
bool contains(const LabelSet& s, const Label& l);
bool disjoint(const LabelSet& a, const LabelSet& b);

LabelSet primed(const LabelSet& s);
LabelSet double_primed(const LabelSet& s);
std::vector<std::string> to_strings(const LabelSet& s);

}  // namespace rigidmp

#endif  // RIGIDMP_LABEL_HPP_
