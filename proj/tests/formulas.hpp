// Copyright 2026 The graphcumulants Authors
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

// Reference cumulant formulas in moments, transcribed by hand as published
// (including their known inconsistencies), and a checker that compares them
// term by term with the partition expansion.

#ifndef GRAPHCUMULANTS_TESTS_FORMULAS_HPP_
#define GRAPHCUMULANTS_TESTS_FORMULAS_HPP_

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "graphcumulants/cumulants.hpp"
#include "graphcumulants/universe.hpp"

namespace gc::formulas {

using Edges = std::vector<std::pair<int, int>>;

struct Symbol {
  int n;
  Edges edges;
  std::vector<uint8_t> colors;
};

struct Table {
  std::string name;
  UniverseSpec spec;
  bool directed = false;
  std::map<std::string, Symbol> symbols;
  // "target = expression" lines; expressions use +, -, *, ^ and integers.
  std::vector<std::pair<std::string, std::string>> cumulants;
  // Normalizations #_g as functions of the color sizes.
  std::vector<std::pair<std::string, Rational (*)(const std::vector<int64_t>&)>> normalizations;
};

inline Rational C(int64_t n, int64_t k) { return Rational(Binomial(n, k)); }

inline Table Simple() {
  Table t;
  t.name = "simple";
  t.spec.order = 6;
  t.symbols = {
      {"E", {2, {{0, 1}}, {}}},
      {"W", {3, {{0, 1}, {1, 2}}, {}}},
      {"P2", {4, {{0, 1}, {2, 3}}, {}}},
      {"T", {3, {{0, 1}, {1, 2}, {0, 2}}, {}}},
      {"C", {4, {{0, 1}, {0, 2}, {0, 3}}, {}}},
      {"L", {4, {{0, 1}, {1, 2}, {2, 3}}, {}}},
      {"WE", {5, {{0, 1}, {1, 2}, {3, 4}}, {}}},
      {"P3", {6, {{0, 1}, {2, 3}, {4, 5}}, {}}},
      {"TE", {4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, {}}},
      {"SQ", {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}}},
      {"D", {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, {}}},
      {"K4", {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {}}},
  };
  t.cumulants = {
      {"E", "E"},
      {"W", "W - E^2"},
      {"P2", "P2 - E^2"},
      {"T", "T - 3 W*E + 2 E^3"},
      {"C", "C - 3 W*E + 2 E^3"},
      {"L", "L - 2 W*E - P2*E + 2 E^3"},
      {"WE", "WE - W*E - 2 P2*E + 2 E^3"},
      {"P3", "P3 - 3 P2*E + 2 E^3"},
      {"TE", "TE - T*E - C*E - 2 L*E - 2 W^2 - W*P2 + 10 W*E^2 + 2 P2*E^2 - 6 E^4"},
      {"SQ", "SQ - 4 L*E - 2 W^2 - P2^2 + 8 W*E^2 + 4 P2*E^2 - 6 E^4"},
      {"D", "D - 4 TE*E - SQ*E - 2 T*W - 2 C*W - 4 L*W - 2 L*P2"
            " + 4 T*E^2 + 4 C*E^2 + 8 L*E^2 + 4 L*E^2"
            " + 20 W^2*E + 8 W*P2*E + 2 P2^2*E"
            " - 48 W*E^3 - 12 P2*E^3 + 24 E^5"},
      {"K4", "K4 - 6 D*E - 12 TE*W - 3 SQ*P2 + 24 TE*E^2 + 6 SQ*E^2"
             " - 4 T*C - 6 L^2"
             " + 24 T*W*E + 24 C*W*E + 48 L*W*E + 24 L*P2*E"
             " - 24 T*E^3 - 24 C*E^3 - 72 L*E^3"
             " + 12 W^3 + 15 W^2*P2 + 3 P2^3"
             " - 153 W^2*E^2 - 90 W*P2*E^2 - 27 P2^2*E^2"
             " + 288 W*E^4 + 72 P2*E^4 - 120 E^6"},
  };
  using S = std::vector<int64_t>;
  t.normalizations = {
      {"E", [](const S& s) { return C(s[0], 2); }},
      {"W", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"P2", [](const S& s) { return Rational(3 * C(s[0], 4)); }},
      {"T", [](const S& s) { return C(s[0], 3); }},
      {"C", [](const S& s) { return Rational(4 * C(s[0], 4)); }},
      {"L", [](const S& s) { return Rational(12 * C(s[0], 4)); }},
      {"WE", [](const S& s) { return Rational(30 * C(s[0], 5)); }},
      {"P3", [](const S& s) { return Rational(15 * C(s[0], 6)); }},
      {"TE", [](const S& s) { return Rational(12 * C(s[0], 4)); }},
      {"SQ", [](const S& s) { return Rational(3 * C(s[0], 4)); }},
      {"D", [](const S& s) { return Rational(6 * C(s[0], 4)); }},
      {"K4", [](const S& s) { return C(s[0], 4); }},
  };
  return t;
}

inline Table Directed() {
  Table t;
  t.name = "directed";
  t.directed = true;
  t.spec.mode = Mode::kDirected;
  t.spec.directed = true;
  t.spec.order = 6;
  t.symbols = {
      {"E", {2, {{0, 1}}, {}}},
      {"ii", {3, {{0, 1}, {2, 1}}, {}}},
      {"oo", {3, {{1, 0}, {1, 2}}, {}}},
      {"io", {3, {{0, 1}, {1, 2}}, {}}},
      {"R", {2, {{0, 1}, {1, 0}}, {}}},
      {"RWi", {3, {{0, 1}, {1, 0}, {2, 1}}, {}}},
      {"RWo", {3, {{0, 1}, {1, 0}, {1, 2}}, {}}},
      {"TL", {3, {{0, 1}, {1, 2}, {0, 2}}, {}}},
      {"TC", {3, {{0, 1}, {1, 2}, {2, 0}}, {}}},
      {"Qii", {3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, {}}},
      {"Qoo", {3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}}, {}}},
      {"Qio", {3, {{0, 1}, {1, 0}, {0, 2}, {2, 1}}, {}}},
      {"RR", {3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}, {}}},
      {"F", {3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}}, {}}},
      {"S", {3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}}, {}}},
  };
  t.cumulants = {
      {"E", "E"},
      {"ii", "ii - E^2"},
      {"oo", "oo - E^2"},
      {"io", "io - E^2"},
      {"R", "R - E^2"},
      {"RWi", "RWi - ii*E - io*E - R*E + 2 E^3"},
      {"RWo", "RWo - oo*E - io*E - R*E + 2 E^3"},
      {"TL", "TL - ii*E - oo*E - io*E + 2 E^3"},
      {"TC", "TC - 3 io*E + 2 E^3"},
      {"Qii", "Qii - 2 RWo*E - 2 TL*E - oo^2 - io^2 - ii*R"
              " + 2 ii*E^2 + 4 oo*E^2 + 4 io*E^2 + 2 R*E^2 - 6 E^4"},
      {"Qoo", "Qoo - 2 RWi*E - 2 TL*E - ii^2 - io^2 - oo*R"
              " + 4 ii*E^2 + 2 oo*E^2 + 4 io*E^2 + 2 R*E^2 - 6 E^4"},
      {"Qio", "Qio - RWi*E - RWo*E - TL*E - TC*E - ii*io - oo*io - io*R"
              " + 2 ii*E^2 + 2 oo*E^2 + 6 io*E^2 + 2 R*E^2 - 6 E^4"},
      {"RR", "RR - 2 RWi*E - 2 RWo*E - ii*oo - io^2 - R^2"
             " + 2 ii*E^2 + 2 oo*E^2 + 4 io*E^2 + 4 R*E^2 - 6 E^4"},
      // A line break splits "- -"; read as a single minus.
      {"F", "F - Qii*E - Qoo*E - 2 Qio*E - RR*E"
            " - RWi*ii - RWi*io - RWi*R - RWo*oo - RWo*io"
            " - RWo*R - TL*ii - TL*oo - TL*io - TC*io"
            " + 6 RWi*E^2 + 6 RWo*E^2 + 9 TL*E^2 + 2 TC*E^2"
            " + 2 ii^2 + 2 oo^2 + 6 io^2 + 2 R^2 + 2 ii*oo"
            " + 4 ii*io + 4 oo*io + 2 ii*R + 2 oo*R + 4 io*R"
            " - 12 ii*E^3 - 12 oo*E^3 - 24 io*E^3 - 12 R*E^3 + 24 E^5"},
      {"S", "S - 6 F*E - 3 Qii*oo - 3 Qoo*ii - 6 Qio*io - 3 RR*R"
            " + 6 Qii*E^2 + 6 Qoo*E^2 + 12 Qio*E^2 + 6 RR*E^2"
            " - 3 RWi^2 - 3 RWo^2 - 3 TL^2 - TC^2"
            " + 12 RWi*ii*E + 12 RWi*io*E + 12 RWi*R*E + 12 RWo*oo*E + 12 RWo*io*E"
            " + 12 RWo*R*E + 12 TL*ii*E + 12 TL*oo*E + 12 TL*io*E + 12 TC*io*E"
            " - 36 RWi*E^3 - 36 RWo*E^3 - 36 TL*E^3 - 12 TC*E^3"
            " + 2 ii^3 + 6 ii*oo*R + 6 ii*io^2 + 2 oo^3 + 6 oo*io^2 + 6 io^2*R + 2 R^3"
            " - 18 ii^2*E^2 - 18 ii*oo*E^2 - 36 ii*io*E^2 - 18 ii*R*E^2 - 18 oo^2*E^2"
            " - 36 oo*io*E^2 - 18 oo*R*E^2 - 54 io^2*E^2 - 36 io*R*E^2 - 18 R^2*E^2"
            " + 60 ii*E^4 + 60 oo*E^4 + 120 io*E^4 + 60 R*E^4 - 120 E^6"},
  };
  using S = std::vector<int64_t>;
  t.normalizations = {
      {"E", [](const S& s) { return Rational(2 * C(s[0], 2)); }},
      {"ii", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"oo", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"io", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"R", [](const S& s) { return C(s[0], 2); }},
      {"RWi", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"RWo", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"TL", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"TC", [](const S& s) { return Rational(2 * C(s[0], 3)); }},
      {"Qii", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"Qoo", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"Qio", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"RR", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"F", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
      {"S", [](const S& s) { return C(s[0], 3); }},
  };
  return t;
}

// Two colors: index 0 is green (G), index 1 is purple (P). Wedge symbols
// list end, center, end; claw symbols list the center's color first.
inline Table Attributed() {
  Table t;
  t.name = "attributed";
  t.spec.mode = Mode::kAttributed;
  t.spec.palette = {"green", "purple"};
  t.spec.order = 3;
  const uint8_t G = 0, P = 1;
  const Edges wedge{{0, 1}, {1, 2}}, tri{{0, 1}, {1, 2}, {0, 2}}, claw{{0, 1}, {0, 2}, {0, 3}};
  t.symbols = {
      {"PP", {2, {{0, 1}}, {P, P}}},
      {"PG", {2, {{0, 1}}, {P, G}}},
      {"wPPP", {3, wedge, {P, P, P}}},
      {"wPPG", {3, wedge, {P, P, G}}},
      {"wGPG", {3, wedge, {G, P, G}}},
      {"wPGP", {3, wedge, {P, G, P}}},
      {"tPPP", {3, tri, {P, P, P}}},
      {"tPPG", {3, tri, {P, P, G}}},
      {"cPPPP", {4, claw, {P, P, P, P}}},
      {"cPPPG", {4, claw, {P, P, P, G}}},
      {"cPPGG", {4, claw, {P, P, G, G}}},
      {"cPGGG", {4, claw, {P, G, G, G}}},
  };
  t.cumulants = {
      {"PP", "PP"},
      {"PG", "PG"},
      {"wPPP", "wPPP - PP^2"},
      {"wPPG", "wPPG - PP*PG"},
      {"wGPG", "wGPG - PG^2"},
      {"tPPP", "tPPP - 3 wPPP*PP + 2 PP^3"},
      {"tPPG", "tPPG - 2 wPPG*PG - wPGP*PP + 2 PP*PG^2"},
      {"cPPPP", "cPPPP - 3 wPPP*PP + 2 PP^3"},
      {"cPPPG", "cPPPG - 2 wPPG*PP - wPPP*PG + 2 PP^2*PG"},
      {"cPPGG", "cPPGG - 2 wPPG*PG - wGPG*PP + 2 PP*PG^2"},
      {"cPGGG", "cPGGG - 3 wGPG*PG + 2 PG^3"},
  };
  using S = std::vector<int64_t>;
  // s[0] = n_green, s[1] = n_purple.
  t.normalizations = {
      {"PP", [](const S& s) { return C(s[1], 2); }},
      {"PG", [](const S& s) { return Rational(Integer(s[1] * s[0])); }},
      {"wPPP", [](const S& s) { return Rational(3 * C(s[1], 3)); }},
      {"wPPG", [](const S& s) { return Rational(2 * C(s[1], 2) * s[0]); }},
      {"wGPG", [](const S& s) { return Rational(s[1] * C(s[0], 2)); }},
      {"tPPP", [](const S& s) { return C(s[1], 3); }},
      {"tPPG", [](const S& s) { return Rational(C(s[1], 2) * s[0]); }},
      {"cPPPP", [](const S& s) { return Rational(4 * C(s[1], 4)); }},
      {"cPPPG", [](const S& s) { return Rational(3 * C(s[1], 3) * s[0]); }},
      {"cPPGG", [](const S& s) { return Rational(2 * C(s[1], 2) * C(s[0], 2)); }},
      {"cPGGG", [](const S& s) { return Rational(s[1] * C(s[0], 3)); }},
  };
  return t;
}

inline Table Weighted() {
  Table t;
  t.name = "weighted";
  t.spec.mode = Mode::kWeighted;
  t.spec.multi = true;
  t.spec.order = 3;
  t.symbols = {
      {"E", {2, {{0, 1}}, {}}},
      {"R", {2, {{0, 1}, {0, 1}}, {}}},
      {"W", {3, {{0, 1}, {1, 2}}, {}}},
      {"P2", {4, {{0, 1}, {2, 3}}, {}}},
      {"R3", {2, {{0, 1}, {0, 1}, {0, 1}}, {}}},
      {"RW", {3, {{0, 1}, {0, 1}, {1, 2}}, {}}},
  };
  t.cumulants = {
      {"E", "E"},
      {"R", "R - E^2"},
      {"W", "W - E^2"},
      {"P2", "P2 - E^2"},
      {"R3", "R3 - 3 R*E + 2 E^3"},
      {"RW", "R3 - 2 W*E - R*E + 2 E^3"},
  };
  using S = std::vector<int64_t>;
  t.normalizations = {
      {"E", [](const S& s) { return C(s[0], 2); }},
      {"R", [](const S& s) { return C(s[0], 2); }},
      {"W", [](const S& s) { return Rational(3 * C(s[0], 3)); }},
      {"P2", [](const S& s) { return Rational(3 * C(s[0], 4)); }},
      {"R3", [](const S& s) { return C(s[0], 2); }},
      {"RW", [](const S& s) { return Rational(6 * C(s[0], 3)); }},
  };
  return t;
}

using Polynomial = std::map<std::vector<int>, Integer>;

inline int ClassOf(const Table& t, const ClassUniverse& u, const std::string& name) {
  const Symbol& s = t.symbols.at(name);
  return u.classify(Pattern::FromEdges(s.n, t.directed, s.edges, s.colors));
}

// Parses "c1 A*B^2 - c2 C ..." into monomials over class indices.
inline Polynomial Parse(const Table& t, const ClassUniverse& u, const std::string& text) {
  Polynomial out;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Integer coef = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coef = Integer(text.substr(i, j - i));
      i = j;
      skip();
    }
    std::vector<int> parts;
    while (true) {
      size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      const int cls = ClassOf(t, u, text.substr(i, j - i));
      i = j;
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        power = text[i++] - '0';
      }
      for (int p = 0; p < power; ++p) parts.push_back(cls);
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    std::sort(parts.begin(), parts.end());
    out[parts] += sign * coef;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Polynomial Expansion(const ClassUniverse& u, int cls) {
  Polynomial out;
  for (const ExpansionTerm& term : CumulantInMoments(u, cls)) {
    std::vector<int> parts = term.parts;
    std::sort(parts.begin(), parts.end());
    out[parts] += term.coefficient;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

struct Mismatch {
  std::string table, target, detail;
};

inline std::string Show(const ClassUniverse& u, const Polynomial& p) {
  std::string s;
  for (const auto& [parts, c] : p) {
    s += " " + c.get_str() + "*";
    for (int x : parts) s += "[" + u[x].id.alias() + "]";
  }
  return s;
}

// Empty when every formula and normalization in the table matches.
inline std::vector<Mismatch> Check(const Table& t) {
  std::vector<Mismatch> bad;
  const auto u = GetUniverse(t.spec);
  for (const auto& [target, expr] : t.cumulants) {
    const int cls = ClassOf(t, *u, target);
    const Polynomial want = Parse(t, *u, expr), got = Expansion(*u, cls);
    if (want != got) {
      Polynomial diff = want;
      for (const auto& [parts, c] : got) diff[parts] -= c;
      for (auto it = diff.begin(); it != diff.end();)
        it = it->second == 0 ? diff.erase(it) : std::next(it);
      bad.push_back({t.name, target, "formula minus expansion:" + Show(*u, diff)});
    }
  }
  // Normalizations are polynomials of degree <= 6 per color; agreement on a
  // grid wider than the degree is an identity.
  for (const auto& [target, norm] : t.normalizations) {
    const int cls = ClassOf(t, *u, target);
    const int colors = t.spec.palette_size();
    for (int64_t a = 0; a <= 9; ++a)
      for (int64_t b = 0; b <= (colors > 1 ? 9 : 0); ++b) {
        const std::vector<int64_t> sizes = colors > 1 ? std::vector<int64_t>{a, b}
                                                      : std::vector<int64_t>{a};
        if (Normalization(*u, cls, sizes) != norm(sizes))
          bad.push_back({t.name, target, "normalization at sizes " + std::to_string(a) +
                                             "," + std::to_string(b)});
      }
  }
  return bad;
}

inline std::vector<Table> AllTables() {
  return {Simple(), Directed(), Attributed(), Weighted()};
}

}  // namespace gc::formulas

#endif  // GRAPHCUMULANTS_TESTS_FORMULAS_HPP_
