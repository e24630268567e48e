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

#ifndef RIGIDMP_REPORT_HPP_
#define RIGIDMP_REPORT_HPP_

#include <json.hpp>
#include <string>

#include "rigidmp/netlist.hpp"
#include "rigidmp/portxform.hpp"

namespace rigidmp {

using Json = nlohmann::json;

// JSON reports for the command line tool. Numbers are "p/q" strings and
// every list is in label order, so equal inputs give equal text.
Json rigidity_report(const Netlist& n);
Json hybrid_report(const Netlist& n);
Json solve_report(const Netlist& n, const PortAssignment& assignment);
Json behaviour_report(const Netlist& n);
Json minports_report(const Netlist& n);
Json independence_report(const Netlist& n, const LabelSet& p1);
Json matroid_union_report(const Netlist& n);
// Joins `a` and `b` through the coupling section of `a`.
Json connect_report(const Netlist& a, const Netlist& b);

std::string render(const Json& j);

// "p'=3", "p\"=1/2", "v(p)=3" or "i(p)=3".
std::pair<Label, Rational> parse_port_value(const std::string& text);

}  // namespace rigidmp

#endif  // RIGIDMP_REPORT_HPP_
