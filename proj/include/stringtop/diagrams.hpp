// Generalized chord diagrams: directed circles with marked sites partitioned
// into cyclically ordered parts, the associated cyclic graph and ribbon
// surface bookkeeping, output surgery, operator degree, and duality.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace stringtop {

struct ChordDiagram {
  // Site identifiers in circular (traversal) order, one list per circle.
  std::vector<std::vector<int>> circles;
  // Each part: cyclic order on its sites (a list up to rotation), size >= 2.
  std::vector<std::vector<int>> parts;

  int site_count() const {
    int n = 0;
    for (const auto& c : circles) n += static_cast<int>(c.size());
    return n;
  }
  int input_count() const { return static_cast<int>(circles.size()); }
};

// Accepts iff the parts partition the sites exactly and each part has
// cardinality at least two.
inline ChordDiagram validate_diagram(std::vector<std::vector<int>> circles,
                                     std::vector<std::vector<int>> parts) {
  std::set<int> sites;
  for (const auto& c : circles)
    for (int s : c)
      if (!sites.insert(s).second)
        throw invalid_diagram("site " + std::to_string(s) + " appears twice on the circles");
  std::set<int> covered;
  for (const auto& p : parts) {
    if (p.size() < 2)
      throw invalid_diagram("part of cardinality " + std::to_string(p.size()) +
                            " (parts need at least two sites)");
    for (int s : p) {
      if (!sites.count(s))
        throw invalid_diagram("part mentions unknown site " + std::to_string(s));
      if (!covered.insert(s).second)
        throw invalid_diagram("site " + std::to_string(s) + " covered twice by the partition");
    }
  }
  if (covered.size() != sites.size())
    throw invalid_diagram("partition misses " + std::to_string(sites.size() - covered.size()) +
                          " site(s)");
  return ChordDiagram{std::move(circles), std::move(parts)};
}

// The cyclic graph of a diagram: one vertex per part (ribbon order from the
// part's cyclic order), one edge per circle arc between consecutive sites;
// a siteless circle contributes one free loop edge. The Euler characteristic
// counts the site-bearing structure (a free loop is a circle, chi 0).
struct RibbonGraph {
  int vertex_count = 0;
  int arc_count = 0;       // arcs between consecutive sites, equals |F|
  int free_loop_count = 0; // siteless circles
  int euler_char = 0;      // vertex_count - arc_count
  std::vector<std::vector<int>> vertex_ribbon;  // per part, its cyclic order
};

inline RibbonGraph gamma_graph(const ChordDiagram& d) {
  RibbonGraph g;
  g.vertex_count = static_cast<int>(d.parts.size());
  g.arc_count = d.site_count();
  for (const auto& c : d.circles)
    if (c.empty()) ++g.free_loop_count;
  g.euler_char = g.vertex_count - g.arc_count;
  g.vertex_ribbon = d.parts;
  return g;
}

struct SurgeryResult {
  // Output circles as cyclic sequences of arc ids; arcs are numbered circle
  // by circle, arc k of a circle departing its k-th site.
  std::vector<std::vector<int>> output_cycles;
  std::vector<int> passthrough_circles;  // indices of siteless circles
  int input_count = 0;
  int output_count = 0;
  int euler_char = 0;
  int genus = 0;

  // arc id -> site where the arc ends (arrival site).
  std::vector<int> arc_to;
  std::vector<int> arc_from;
};

// Cuts and reconnects: an arc arriving at site f continues from the arc
// departing at the successor of f in its part's cyclic order. Genus comes
// from 2c - 2g - (inputs + outputs) = chi, summed per connected component.
inline SurgeryResult surgery_outputs(const ChordDiagram& d) {
  SurgeryResult r;
  r.input_count = d.input_count();
  r.euler_char = static_cast<int>(d.parts.size()) - d.site_count();

  std::map<int, int> arc_departing;  // site -> arc id leaving it
  std::map<int, int> site_circle;    // site -> circle index
  for (size_t ci = 0; ci < d.circles.size(); ++ci) {
    const auto& c = d.circles[ci];
    if (c.empty()) {
      r.passthrough_circles.push_back(static_cast<int>(ci));
      continue;
    }
    for (size_t k = 0; k < c.size(); ++k) {
      int id = static_cast<int>(r.arc_from.size());
      arc_departing[c[k]] = id;
      site_circle[c[k]] = static_cast<int>(ci);
      r.arc_from.push_back(c[k]);
      r.arc_to.push_back(c[(k + 1) % c.size()]);
    }
  }

  std::map<int, int> part_successor;  // site -> next site in its part
  for (const auto& p : d.parts)
    for (size_t k = 0; k < p.size(); ++k) part_successor[p[k]] = p[(k + 1) % p.size()];

  std::vector<bool> used(r.arc_from.size(), false);
  for (size_t start = 0; start < r.arc_from.size(); ++start) {
    if (used[start]) continue;
    std::vector<int> cycle;
    int arc = static_cast<int>(start);
    do {
      used[arc] = true;
      cycle.push_back(arc);
      arc = arc_departing.at(part_successor.at(r.arc_to[arc]));
    } while (arc != static_cast<int>(start));
    r.output_cycles.push_back(std::move(cycle));
  }
  r.output_count =
      static_cast<int>(r.output_cycles.size() + r.passthrough_circles.size());

  // Connected components over circles and parts.
  int n_circ = static_cast<int>(d.circles.size());
  int n_part = static_cast<int>(d.parts.size());
  std::vector<int> comp(n_circ + n_part);
  std::iota(comp.begin(), comp.end(), 0);
  auto root = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  std::map<int, int> site_part;
  for (int pi = 0; pi < n_part; ++pi)
    for (int s : d.parts[pi]) site_part[s] = pi;
  for (const auto& [site, ci] : site_circle) comp[root(ci)] = root(n_circ + site_part.at(site));

  struct CompData {
    int chi = 0, inputs = 0, outputs = 0;
  };
  std::map<int, CompData> data;
  for (int ci = 0; ci < n_circ; ++ci) {
    auto& cd = data[root(ci)];
    ++cd.inputs;
    cd.chi -= static_cast<int>(d.circles[ci].size());
  }
  for (int pi = 0; pi < n_part; ++pi) ++data[root(n_circ + pi)].chi;
  for (int ci : r.passthrough_circles) ++data[root(ci)].outputs;
  for (const auto& cycle : r.output_cycles)
    ++data[root(site_circle.at(r.arc_from[cycle.front()]))].outputs;

  for (const auto& [rt, cd] : data) {
    int twice_genus = 2 - (cd.inputs + cd.outputs) - cd.chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      throw invalid_diagram("inconsistent surface bookkeeping");
    r.genus += twice_genus / 2;
  }
  return r;
}

// degree = |F| - sum over parts of (|P| - 1) * d
inline int operator_degree(const ChordDiagram& diag, int d) {
  if (d < 1) throw invalid_diagram("manifold dimension must be >= 1");
  int deg = diag.site_count();
  for (const auto& p : diag.parts) deg -= static_cast<int>(p.size() - 1) * d;
  return deg;
}

// The diagram whose input circles are the outputs of d, roles interchanged:
// each junction of an output cycle is labeled by its arrival site and the
// output circle is taken with reversed orientation; parts are unchanged.
inline ChordDiagram dual(const ChordDiagram& d) {
  SurgeryResult s = surgery_outputs(d);
  std::vector<std::vector<int>> circles;
  for (const auto& cycle : s.output_cycles) {
    std::vector<int> sites;
    for (int arc : cycle) sites.push_back(s.arc_to[arc]);
    std::reverse(sites.begin(), sites.end());
    circles.push_back(std::move(sites));
  }
  for (size_t i = 0; i < s.passthrough_circles.size(); ++i) circles.push_back({});
  return validate_diagram(std::move(circles), d.parts);
}

// Listing/rotation normal form used to compare diagrams with equal site ids.
inline ChordDiagram normalized(const ChordDiagram& d) {
  auto min_rotation = [](std::vector<int> v) {
    if (v.empty()) return v;
    std::vector<int> best = v;
    for (size_t k = 1; k < v.size(); ++k) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      if (v < best) best = v;
    }
    return best;
  };
  ChordDiagram out;
  for (const auto& c : d.circles) out.circles.push_back(min_rotation(c));
  std::sort(out.circles.begin(), out.circles.end());
  for (const auto& p : d.parts) out.parts.push_back(min_rotation(p));
  std::sort(out.parts.begin(), out.parts.end());
  return out;
}

inline bool same_diagram(const ChordDiagram& a, const ChordDiagram& b) {
  ChordDiagram na = normalized(a), nb = normalized(b);
  return na.circles == nb.circles && na.parts == nb.parts;
}

// Presets. II(n) takes the reversed circular order for its single part (the
// prong disk is seen from the other side of the annulus), which is what
// makes its surgery produce n outputs.
inline ChordDiagram diagram_I(int n) {
  if (n < 2) throw invalid_diagram("diagram I needs n >= 2");
  std::vector<std::vector<int>> circles;
  std::vector<int> part;
  for (int i = 1; i <= n; ++i) {
    circles.push_back({i});
    part.push_back(i);
  }
  return validate_diagram(std::move(circles), {part});
}

inline ChordDiagram diagram_II(int n) {
  if (n < 2) throw invalid_diagram("diagram II needs n >= 2");
  std::vector<int> circle, part;
  for (int i = 1; i <= n; ++i) circle.push_back(i);
  for (int i = n; i >= 1; --i) part.push_back(i);
  return validate_diagram({circle}, {part});
}

inline ChordDiagram diagram_preset(const std::string& name, int n = 2) {
  if (name == "I") return diagram_I(n);
  if (name == "II") return diagram_II(n);
  if (name == "III") return validate_diagram({{1}, {2, 3}, {4}}, {{1, 2}, {3, 4}});
  if (name == "IV") return validate_diagram({{1, 2, 3, 4}}, {{1, 4}, {2, 3}});
  if (name == "V") return validate_diagram({{1}, {2, 3, 4}}, {{1, 2}, {3, 4}});
  if (name == "VI") return validate_diagram({{1, 2}, {3, 4}}, {{1, 3}, {2, 4}});
  if (name == "VII") return validate_diagram({{1, 2, 3, 4}}, {{1, 3}, {2, 4}});
  throw parse_error("unknown diagram preset '" + name + "' (expected I..VII)");
}

// JSON file format:
//   {"circles": [[1], [2, 3]], "parts": [{"sites": [1, 2], "order": [1, 2]}]}
// "order" is optional and defaults to the listing order of "sites".
inline ChordDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<int>> circles = j.at("circles").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<int>> parts;
    for (const auto& pj : j.at("parts")) {
      std::vector<int> sites = pj.at("sites").get<std::vector<int>>();
      std::vector<int> order = pj.contains("order") ? pj["order"].get<std::vector<int>>() : sites;
      std::multiset<int> a(sites.begin(), sites.end()), b(order.begin(), order.end());
      if (a != b) throw invalid_diagram("part 'order' is not a permutation of 'sites'");
      parts.push_back(std::move(order));
    }
    return validate_diagram(std::move(circles), std::move(parts));
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad diagram JSON: ") + e.what());
  }
}

inline nlohmann::json diagram_to_json(const ChordDiagram& d) {
  nlohmann::json j;
  j["circles"] = d.circles;
  j["parts"] = nlohmann::json::array();
  for (const auto& p : d.parts) {
    std::vector<int> sites = p;
    std::sort(sites.begin(), sites.end());
    j["parts"].push_back({{"sites", sites}, {"order", p}});
  }
  return j;
}

}  // namespace stringtop
