#pragma once

// Independent reference implementations used to check the library. They
// share no code with it beyond the value types they inspect.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulermerge/dual_graph.hpp"
#include "eulermerge/geometry.hpp"
#include "eulermerge/set_system.hpp"

namespace oracle {

namespace em = eulermerge;

using Labels = std::set<std::string>;
using Edge = std::pair<std::size_t, std::size_t>;

inline Labels as_labels(const em::LabelSet& s) { return {s.begin(), s.end()}; }

// --- random instances ------------------------------------------------------

// Random family of up to `max_sets` nonempty sets over up to `max_elements`
// elements. Each element joins each set independently.
inline em::SetSystem random_system(std::mt19937_64& rng, int max_sets, int max_elements,
                                   double density = 0.35) {
  std::uniform_int_distribution<int> set_count(1, max_sets);
  std::uniform_int_distribution<int> element_count(1, max_elements);
  std::bernoulli_distribution member(density);
  int m = set_count(rng);
  int n = element_count(rng);
  em::SetMap sets;
  for (int s = 0; s < m; ++s) {
    std::string label(1, static_cast<char>('a' + s));
    auto& elements = sets[label];
    for (int e = 0; e < n; ++e)
      if (member(rng)) elements.insert("u" + std::to_string(e));
    if (elements.empty())
      elements.insert("u" + std::to_string(std::uniform_int_distribution<int>(0, n - 1)(rng)));
  }
  return em::SetSystem::from_sets(std::move(sets));
}

inline std::vector<Edge> random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (keep(rng)) edges.emplace_back(a, b);
  return edges;
}

// --- set systems -----------------------------------------------------------

// Zone labels by grouping elements on their directly scanned cover; the
// outer zone (empty label) included.
inline std::set<Labels> zone_labels_by_cover(const em::SetSystem& system) {
  std::map<std::string, Labels> cover;
  for (const auto& [label, elements] : system.sets())
    for (const auto& e : elements) cover[e].insert(label);
  std::set<Labels> zones{{}};
  for (const auto& [e, labels] : cover) zones.insert(labels);
  return zones;
}

inline std::set<Labels> zone_labels(const em::DualGraph& graph) {
  std::set<Labels> out;
  for (const auto& z : graph.zones()) out.insert(as_labels(z.label));
  return out;
}

// The set system with every group of labels unioned under its first label.
inline em::SetSystem union_groups(const em::SetSystem& system, const em::Provenance& groups) {
  em::SetMap sets;
  for (const auto& [kept, members] : groups) {
    auto& target = sets[kept];
    for (const auto& original : members) {
      const auto& elements = system.elements(original);
      target.insert(elements.begin(), elements.end());
    }
  }
  return em::SetSystem::from_sets(std::move(sets));
}

// --- graphs ----------------------------------------------------------------

inline std::size_t component_count(std::size_t n, const std::vector<Edge>& edges,
                                   const std::vector<bool>& keep) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [a, b] : edges)
    if (keep[a] && keep[b]) parent[find(a)] = find(b);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v] && find(v) == v) ++count;
  return count;
}

// Nonplanarity by exhaustive search for a K5 or K3,3 minor (equivalent to
// containing a K5 or K3,3 subdivision). Vertices are assigned to branch
// sets in restricted-growth order, so each partition is visited once.
// Intended for graphs of at most ~10 vertices.
inline bool has_kuratowski_minor(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 5) return false;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;

  std::vector<int> block(n, -1);  // -1: unused
  auto blocks_connected = [&](int k) {
    for (int i = 0; i < k; ++i) {
      std::vector<std::size_t> members;
      for (std::size_t v = 0; v < n; ++v)
        if (block[v] == i) members.push_back(v);
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{members.front()};
      seen[members.front()] = true;
      std::size_t reached = 0;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        ++reached;
        for (std::size_t w = 0; w < n; ++w)
          if (adj[v][w] && !seen[w] && block[w] == i) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      if (reached != members.size()) return false;
    }
    return true;
  };
  auto touching = [&](int k) {
    std::vector<std::vector<bool>> t(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (adj[a][b] && block[a] >= 0 && block[b] >= 0 && block[a] != block[b])
          t[block[a]][block[b]] = true;
    return t;
  };
  auto is_model = [&](int k) {
    if (k != 5 && k != 6) return false;
    auto t = touching(k);
    if (k == 5) {
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (!t[i][j]) return false;
      return blocks_connected(k);
    }
    for (int mask = 0; mask < 64; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i)
        for (int j = 0; j < 6 && ok; ++j)
          if ((mask >> i & 1) && !(mask >> j & 1) && !t[i][j]) ok = false;
      if (ok) return blocks_connected(k);
    }
    return false;
  };
  std::function<bool(std::size_t, int)> assign = [&](std::size_t v, int used) -> bool {
    if (v == n) return is_model(used);
    for (int b = -1; b <= std::min(used, 5); ++b) {
      block[v] = b;
      if (assign(v + 1, b == used ? used + 1 : used)) return true;
    }
    block[v] = -1;
    return false;
  };
  return assign(0, 0);
}

// --- geometry --------------------------------------------------------------

inline double side(em::Point a, em::Point b, em::Point p) {
  return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

// Number of times the closed polyline `ring` passes through the open segment
// ab, found by walking the ring's signs relative to the line ab. Points on the
// line are skipped; a sign change counts if the place where the ring meets
// the line lies strictly inside the segment. Touching the segment without
// changing sides counts twice, so it never passes as a single crossing.
inline std::size_t crossings(const std::vector<em::Point>& ring, em::Point a, em::Point b) {
  const std::size_t n = ring.size();
  double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  double scale = std::sqrt(len2);
  auto sign = [&](em::Point p) {
    double s = side(a, b, p) / scale;
    return std::abs(s) < 1e-9 ? 0 : (s > 0 ? 1 : -1);
  };
  auto within = [&](em::Point p) {
    double t = ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) / len2;
    return t > 1e-9 && t < 1 - 1e-9;
  };
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (sign(ring[i]) != 0) {
      start = i;
      break;
    }
  if (start == n) return 0;
  std::size_t count = 0;
  std::size_t i = start;
  for (std::size_t walked = 0; walked < n;) {
    std::size_t j = (i + 1) % n;
    ++walked;
    std::vector<em::Point> on_line;
    while (sign(ring[j]) == 0) {
      on_line.push_back(ring[j]);
      j = (j + 1) % n;
      ++walked;
    }
    int si = sign(ring[i]);
    int sj = sign(ring[j]);
    bool hit = false;
    if (!on_line.empty()) {
      hit = std::any_of(on_line.begin(), on_line.end(), within);
    } else if (si != sj) {
      double da = side(a, b, ring[i]);
      double db = side(a, b, ring[j]);
      em::Point p = ring[i] + (ring[j] - ring[i]) * (da / (da - db));
      hit = within(p);
    }
    if (hit) count += si != sj ? 1 : 2;
    i = j;
  }
  return count;
}

// Ray casting to +x; even-odd over all rings.
inline bool inside(em::Point p, const std::vector<std::vector<em::Point>>& rings) {
  bool in = false;
  for (const auto& ring : rings)
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
      const auto& u = ring[i];
      const auto& v = ring[j];
      if ((u.y > p.y) != (v.y > p.y) && p.x < (v.x - u.x) * (p.y - u.y) / (v.y - u.y) + u.x)
        in = !in;
    }
  return in;
}

inline bool proper_cross(em::Point a, em::Point b, em::Point c, em::Point d) {
  double d1 = side(a, b, c), d2 = side(a, b, d), d3 = side(c, d, a), d4 = side(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Pairs of straight edges that cross or where an edge passes through a
// vertex it is not incident to.
inline std::size_t drawing_conflicts(const std::vector<em::Point>& pos, const std::vector<Edge>& edges) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (proper_cross(pos[a], pos[b], pos[c], pos[d])) ++count;
    }
  for (auto [a, b] : edges)
    for (std::size_t v = 0; v < pos.size(); ++v) {
      if (v == a || v == b) continue;
      double len = std::hypot(pos[b].x - pos[a].x, pos[b].y - pos[a].y);
      if (std::abs(side(pos[a], pos[b], pos[v])) / len > 1e-9) continue;
      double t = ((pos[v].x - pos[a].x) * (pos[b].x - pos[a].x) + (pos[v].y - pos[a].y) * (pos[b].y - pos[a].y)) /
                 (len * len);
      if (t > 0 && t < 1) ++count;
    }
  return count;
}

// --- documents -------------------------------------------------------------

// Minimal XML well-formedness check: balanced and properly nested tags,
// quoted attributes, known entities, a single root element. Returns "" or
// the first problem found.
inline std::string xml_problem(const std::string& doc) {
  std::vector<std::string> open;
  std::size_t roots = 0;
  std::size_t i = 0;
  auto name_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':' || c == '.'; };
  auto check_text = [&](std::size_t from, std::size_t to) -> std::string {
    for (std::size_t k = from; k < to; ++k) {
      if (doc[k] == '<' || doc[k] == '>') return "stray angle bracket";
      if (doc[k] != '&') continue;
      auto semi = doc.find(';', k);
      if (semi == std::string::npos || semi > to) return "unterminated entity";
      auto entity = doc.substr(k + 1, semi - k - 1);
      if (entity != "amp" && entity != "lt" && entity != "gt" && entity != "quot" && entity != "apos")
        return "unknown entity &" + entity + ";";
    }
    return "";
  };
  if (doc.rfind("<?xml", 0) == 0) {
    i = doc.find("?>");
    if (i == std::string::npos) return "unterminated declaration";
    i += 2;
  }
  while (i < doc.size()) {
    auto lt = doc.find('<', i);
    std::string text_problem = check_text(i, lt == std::string::npos ? doc.size() : lt);
    if (!text_problem.empty()) return text_problem;
    if (lt == std::string::npos) {
      if (open.empty() && doc.find_first_not_of(" \t\r\n", i) != std::string::npos) return "text after root";
      break;
    }
    if (open.empty() && roots > 0) return "second root element";
    auto gt = doc.find('>', lt);
    if (gt == std::string::npos) return "unterminated tag";
    std::string tag = doc.substr(lt + 1, gt - lt - 1);
    if (!tag.empty() && tag[0] == '/') {
      std::string name = tag.substr(1);
      if (open.empty() || open.back() != name) return "mismatched </" + name + ">";
      open.pop_back();
    } else {
      bool self_closing = !tag.empty() && tag.back() == '/';
      if (self_closing) tag.pop_back();
      std::size_t k = 0;
      while (k < tag.size() && name_char(tag[k])) ++k;
      if (k == 0) return "missing tag name";
      std::string name = tag.substr(0, k);
      std::set<std::string> seen;
      while (true) {
        while (k < tag.size() && std::isspace(static_cast<unsigned char>(tag[k]))) ++k;
        if (k == tag.size()) break;
        std::size_t start = k;
        while (k < tag.size() && name_char(tag[k])) ++k;
        if (k == start) return "bad attribute in <" + name + ">";
        std::string attr = tag.substr(start, k - start);
        if (!seen.insert(attr).second) return "duplicate attribute " + attr;
        if (k >= tag.size() || tag[k] != '=') return "attribute without value: " + attr;
        ++k;
        if (k >= tag.size() || tag[k] != '"') return "unquoted attribute: " + attr;
        auto close = tag.find('"', k + 1);
        if (close == std::string::npos) return "unterminated attribute: " + attr;
        std::string value_problem = check_text(lt + 1 + k + 1, lt + 1 + close);
        if (!value_problem.empty()) return value_problem;
        k = close + 1;
      }
      if (open.empty()) ++roots;
      if (!self_closing) open.push_back(name);
    }
    i = gt + 1;
  }
  if (!open.empty()) return "unclosed <" + open.back() + ">";
  if (roots != 1) return "no root element";
  return "";
}

// The d attributes of every <path> element.
inline std::vector<std::string> path_data(const std::string& doc) {
  std::vector<std::string> out;
  for (auto at = doc.find("<path"); at != std::string::npos; at = doc.find("<path", at + 1)) {
    auto end = doc.find('>', at);
    auto d = doc.find(" d=\"", at);
    if (d == std::string::npos || d > end) {
      out.emplace_back();
      continue;
    }
    auto close = doc.find('"', d + 4);
    out.push_back(doc.substr(d + 4, close - d - 4));
  }
  return out;
}

// Every subpath of the path data ends with a close-path command.
inline bool subpaths_closed(const std::string& d) {
  if (d.empty()) return false;
  bool open = false;
  for (char c : d) {
    if (c == 'M' || c == 'm') {
      if (open) return false;
      open = true;
    } else if (c == 'Z' || c == 'z') {
      open = false;
    }
  }
  auto last = d.find_last_not_of(' ');
  return !open && (d[last] == 'Z' || d[last] == 'z');
}

inline std::size_t occurrences(const std::string& doc, const std::string& needle) {
  std::size_t count = 0;
  for (auto at = doc.find(needle); at != std::string::npos; at = doc.find(needle, at + 1)) ++count;
  return count;
}

}  // namespace oracle
