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

#ifndef RIGIDMP_NETLIST_HPP_
#define RIGIDMP_NETLIST_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigidmp/multiport.hpp"

namespace rigidmp {

// One affine row of a coupling section: sum coef * column = rhs.
struct CouplingRow {
  std::vector<std::pair<Rational, Label>> terms;
  Rational rhs;
  friend bool operator==(const CouplingRow&, const CouplingRow&) = default;
};

struct Netlist {
  Multiport network;
  std::vector<CouplingRow> coupling;
  // Controlled sources whose parameter was not given and was set to a
  // fresh prime.
  LabelSet defaulted;
};

class NetlistError : public std::runtime_error {
 public:
  NetlistError(std::string source, std::size_t line, std::size_t column,
               const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Line format:
//   edge <label> <tail> <head>
//   R|V|I <edge> <value>
//   CCVS|VCCS|CCCS|VCVS <output edge> <control edge> [<value>]
//   port <label> ...
//   couple <coef> <column> ... = <value>
// '#' starts a comment. Values are integers or p/q.
Netlist parse_netlist(std::string_view text, const std::string& source = "<input>");
Netlist read_netlist(const std::string& path);

// Canonical text; parse_netlist(emit_netlist(n)) reproduces n.
std::string emit_netlist(const Netlist& n);

// Solution set of the coupling rows on the columns they mention.
AffineSpace coupling_space(const Netlist& n);

}  // namespace rigidmp

#endif  // RIGIDMP_NETLIST_HPP_
