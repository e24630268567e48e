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

#include "rigidmp/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "rigidmp/report.hpp"

namespace rigidmp {

namespace {

LabelSet port_list(const std::vector<std::string>& items) {
  std::vector<Label> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(parse_label(part));
    }
  }
  return make_set(out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out_stream,
            std::ostream& err) {
  CLI::App app{"Rigidity analysis of linear multiports"};
  app.name("rigidmp");
  app.require_subcommand(1);

  std::string file, second;
  std::vector<std::string> port_values, ports;

  auto* rigidity = app.add_subcommand("rigidity", "Rigidity verdict with witnesses");
  auto* hybrid = app.add_subcommand("hybrid", "Hybrid representation of the port behaviour");
  auto* solve = app.add_subcommand("solve", "Solve with port conditions");
  auto* behaviour = app.add_subcommand("behaviour", "Port behaviour as an affine space");
  auto* minports = app.add_subcommand("minports", "Minimize the number of ports");
  auto* independence = app.add_subcommand("independence", "Independence of port columns");
  auto* munion = app.add_subcommand("matroid-union", "Matroid unions of the netlist");
  auto* connect = app.add_subcommand("connect", "Connect two multiports");

  for (auto* sub : {rigidity, hybrid, solve, behaviour, minports, independence, munion, connect}) {
    sub->add_option("file", file, "Netlist")->required();
  }
  solve->add_option("--port", port_values, "Port condition p'=v, p\"=v, v(p)=x or i(p)=x");
  independence->add_option("--ports", ports, "Port subset (comma or space separated)")
      ->required();
  connect->add_option("second", second, "Second netlist")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out_stream, err);
  }

  try {
    const Netlist n = read_netlist(file);
    Json out;
    if (*rigidity) {
      out = rigidity_report(n);
    } else if (*hybrid) {
      out = hybrid_report(n);
    } else if (*solve) {
      PortAssignment a;
      for (const auto& pv : port_values) {
        const auto [l, q] = parse_port_value(pv);
        a[l] = q;
      }
      out = solve_report(n, a);
    } else if (*behaviour) {
      out = behaviour_report(n);
    } else if (*minports) {
      out = minports_report(n);
    } else if (*independence) {
      out = independence_report(n, port_list(ports));
    } else if (*munion) {
      out = matroid_union_report(n);
    } else {
      out = connect_report(n, read_netlist(second));
    }
    out_stream << render(out);
  } catch (const NetlistError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace rigidmp
