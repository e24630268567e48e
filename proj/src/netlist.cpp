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

#include "rigidmp/netlist.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace rigidmp {

NetlistError::NetlistError(std::string source, std::size_t line, std::size_t column,
                           const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Where {
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    Token t;
    t.column = i + 1;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      t.text += line[i++];
    }
    out.push_back(std::move(t));
  }
  return out;
}

const std::map<std::string, DeviceKind>& kinds() {
  static const std::map<std::string, DeviceKind> k = {
      {"R", DeviceKind::kResistor}, {"V", DeviceKind::kVSource}, {"I", DeviceKind::kISource},
      {"CCVS", DeviceKind::kCCVS},  {"VCCS", DeviceKind::kVCCS}, {"CCCS", DeviceKind::kCCCS},
      {"VCVS", DeviceKind::kVCVS}};
  return k;
}

std::string keyword(DeviceKind k) {
  for (const auto& [name, kind] : kinds()) {
    if (kind == k) return name;
  }
  return "?";
}

struct PendingDevice {
  Device device;
  bool has_value = false;
  Where where, edge_at, control_at;
};

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  Netlist run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      statement(text.substr(start, end - start), line_no);
      start = end + 1;
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(Where w, const std::string& msg) const {
    throw NetlistError(source_, w.line, w.column, msg);
  }

  Label plain_label(const Token& t, std::size_t line) const {
    Label l;
    try {
      l = parse_label(t.text);
    } catch (const std::invalid_argument& e) {
      fail({line, t.column}, e.what());
    }
    if (l.decoration != Decoration::kPlain || l.copy != 0) {
      fail({line, t.column}, "edge label '" + t.text + "' must be undecorated");
    }
    return l;
  }

  Rational value(const Token& t, std::size_t line) const {
    try {
      return parse_rational(t.text);
    } catch (const std::invalid_argument&) {
      fail({line, t.column}, "expected an integer or p/q, got '" + t.text + "'");
    }
  }

  void arity(const std::vector<Token>& tok, std::size_t lo, std::size_t hi,
             std::size_t line, const std::string& usage) const {
    if (tok.size() < lo || tok.size() > hi) {
      const std::size_t col = tok.size() < lo ? tok.back().column : tok[hi].column;
      fail({line, col}, "syntax: expected '" + usage + "'");
    }
  }

  void statement(std::string_view text, std::size_t line) {
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    const auto tok = tokenize(text);
    if (tok.empty()) return;
    const std::string& kw = tok[0].text;
    if (kw == "edge") {
      arity(tok, 4, 4, line, "edge <label> <tail> <head>");
      const Label l = plain_label(tok[1], line);
      if (edges_.count(l)) {
        fail({line, tok[1].column}, "duplicate edge '" + tok[1].text + "' (first at line " +
                                        std::to_string(edges_[l].line) + ")");
      }
      edges_[l] = {line, tok[1].column};
      graph_.add_edge(l, tok[2].text, tok[3].text);
    } else if (kw == "port") {
      arity(tok, 2, static_cast<std::size_t>(-1) - 1, line, "port <label> ...");
      for (std::size_t k = 1; k < tok.size(); ++k) {
        const Label l = plain_label(tok[k], line);
        if (ports_.count(l)) fail({line, tok[k].column}, "duplicate port '" + tok[k].text + "'");
        ports_[l] = {line, tok[k].column};
      }
    } else if (kw == "couple") {
      coupling(tok, line);
    } else if (auto it = kinds().find(kw); it != kinds().end()) {
      PendingDevice d;
      d.device.kind = it->second;
      d.where = {line, tok[0].column};
      if (is_controlled(it->second)) {
        arity(tok, 3, 4, line, kw + " <output> <control> [<value>]");
        d.device.control = plain_label(tok[2], line);
        d.control_at = {line, tok[2].column};
        if (tok.size() == 4) {
          d.device.value = value(tok[3], line);
          d.has_value = true;
        }
      } else {
        arity(tok, 3, 3, line, kw + " <edge> <value>");
        d.device.value = value(tok[2], line);
        d.has_value = true;
      }
      d.device.edge = plain_label(tok[1], line);
      d.device.name = tok[1].text;
      d.edge_at = {line, tok[1].column};
      if (d.device.control && *d.device.control == d.device.edge) {
        fail(d.control_at, "control edge equals output edge");
      }
      devices_.push_back(std::move(d));
    } else {
      fail({line, tok[0].column}, "unknown device kind '" + kw + "'");
    }
  }

  void coupling(const std::vector<Token>& tok, std::size_t line) {
    CouplingRow row;
    std::size_t k = 1;
    while (k < tok.size() && tok[k].text != "=") {
      if (k + 1 >= tok.size() || tok[k + 1].text == "=") {
        fail({line, tok[k].column}, "syntax: expected '<coef> <column>' pair");
      }
      const Rational c = value(tok[k], line);
      Label col;
      try {
        col = parse_label(tok[k + 1].text);
      } catch (const std::invalid_argument& e) {
        fail({line, tok[k + 1].column}, e.what());
      }
      if (col.decoration == Decoration::kPlain) {
        fail({line, tok[k + 1].column}, "coupling column '" + tok[k + 1].text +
                                            "' must be a voltage (') or current (\") column");
      }
      row.terms.emplace_back(c, col);
      k += 2;
    }
    if (row.terms.empty() || k + 2 != tok.size()) {
      fail({line, tok.back().column}, "syntax: expected 'couple <coef> <column> ... = <value>'");
    }
    row.rhs = value(tok[k + 1], line);
    coupling_.push_back(std::move(row));
  }

  Netlist finish() {
    Netlist out;
    std::map<Label, Where> owner;
    for (const auto& d : devices_) {
      const auto claim = [&](const Label& l, Where at) {
        if (!edges_.count(l)) fail(at, "undeclared edge '" + to_string(l) + "'");
        if (ports_.count(l)) fail(at, "edge '" + to_string(l) + "' is a port and cannot carry a device");
        if (auto it = owner.find(l); it != owner.end()) {
          fail(at, "edge '" + to_string(l) + "' already has a device (line " +
                       std::to_string(it->second.line) + ")");
        }
        owner[l] = at;
      };
      claim(d.device.edge, d.edge_at);
      if (d.device.control) claim(*d.device.control, d.control_at);
    }
    for (const auto& [l, at] : ports_) {
      if (!edges_.count(l)) fail(at, "undeclared port edge '" + to_string(l) + "'");
    }
    for (const auto& [l, at] : edges_) {
      if (!owner.count(l) && !ports_.count(l)) {
        fail(at, "edge '" + to_string(l) + "' has no device and is not a port");
      }
    }

    // Fresh primes for unspecified controlled parameters.
    std::set<Rational> used;
    for (const auto& d : devices_) {
      if (d.has_value) used.insert(abs(d.device.value));
    }
    long next = 2;
    const auto fresh = [&]() {
      for (;; ++next) {
        bool prime = true;
        for (long q = 2; q * q <= next; ++q) prime = prime && next % q != 0;
        if (prime && !used.count(Rational(next))) return Rational(next++);
      }
    };
    std::vector<Label> defaulted;
    for (auto d : devices_) {
      if (!d.has_value) {
        d.device.value = fresh();
        defaulted.push_back(d.device.edge);
      }
      out.network.devices.push_back(d.device);
    }
    out.defaulted = make_set(defaulted);
    out.network.graph = graph_;
    std::vector<Label> ports;
    for (const auto& [l, at] : ports_) ports.push_back(l);
    out.network.ports = make_set(ports);
    out.coupling = coupling_;
    validate(out.network);
    return out;
  }

  std::string source_;
  Graph graph_;
  std::map<Label, Where> edges_;
  std::map<Label, Where> ports_;
  std::vector<PendingDevice> devices_;
  std::vector<CouplingRow> coupling_;
};

}  // namespace

Netlist parse_netlist(std::string_view text, const std::string& source) {
  return Parser(source).run(text);
}

Netlist read_netlist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetlistError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_netlist(ss.str(), path);
}

std::string emit_netlist(const Netlist& n) {
  std::ostringstream os;
  for (const auto& e : n.network.graph.edges()) {
    os << "edge " << to_string(e.label) << ' ' << e.tail << ' ' << e.head << '\n';
  }
  for (const auto& d : n.network.devices) {
    os << keyword(d.kind) << ' ' << to_string(d.edge);
    if (d.control) os << ' ' << to_string(*d.control);
    if (!contains(n.defaulted, d.edge)) os << ' ' << to_string(d.value);
    os << '\n';
  }
  if (!n.network.ports.empty()) {
    os << "port";
    for (const auto& p : n.network.ports) os << ' ' << to_string(p);
    os << '\n';
  }
  for (const auto& r : n.coupling) {
    os << "couple";
    for (const auto& [c, l] : r.terms) os << ' ' << to_string(c) << ' ' << to_string(l);
    os << " = " << to_string(r.rhs) << '\n';
  }
  return os.str();
}

AffineSpace coupling_space(const Netlist& n) {
  std::vector<Label> cols;
  for (const auto& r : n.coupling) {
    for (const auto& t : r.terms) cols.push_back(t.second);
  }
  const LabelSet set = make_set(cols);
  Matrix c;
  RowVector d;
  for (const auto& r : n.coupling) {
    RowVector row(set.size(), Rational(0));
    for (const auto& [coef, l] : r.terms) {
      std::size_t j = 0;
      while (set[j] != l) ++j;
      row[j] += coef;
    }
    c.push_back(std::move(row));
    d.push_back(r.rhs);
  }
  auto a = solution_set(std::vector<Label>(set.begin(), set.end()), c, d);
  if (!a) throw std::invalid_argument("coupling rows are inconsistent");
  return *a;
}

}  // namespace rigidmp
