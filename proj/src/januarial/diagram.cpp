#include "januarial/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "januarial/error.hpp"
#include "json.hpp"

namespace januarial {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  std::size_t count() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t count_singletons(const std::vector<Cycle>& cycles) {
  return static_cast<std::size_t>(std::count_if(cycles.begin(), cycles.end(), [](const Cycle& c) { return c.size() == 1; }));
}

std::string describe_orbit_sizes(const std::vector<Cycle>& orbits) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::ostringstream out;
  out << orbits.size() << (orbits.size() == 1 ? " orbit" : " orbits");
  if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end()) {
    out << " of size " << sizes.front();
  } else {
    out << " of sizes ";
    for (std::size_t i = 0; i < sizes.size(); ++i) out << (i ? ", " : "") << sizes[i];
  }
  return out.str();
}

std::string format_matrix(const Matrix2& m) {
  std::ostringstream out;
  out << "[[" << m.a11.value() << ", " << m.a12.value() << "], [" << m.a21.value() << ", " << m.a22.value() << "]]";
  return out.str();
}

}  // namespace

CosetDiagram build_diagram(const GeneratorPair& pair) {
  const std::uint64_t p = pair.p.value();
  CosetDiagram d;
  d.p = p;
  d.ell = pair.ell;
  d.k = pair.xy_order;
  d.theta = pair.theta.value();

  d.y_cycles = pair.yperm.cycles();
  d.xy_orbits = pair.xyperm.cycles();
  for (std::size_t i = 0; i <= p; ++i) {
    const std::size_t j = pair.xperm(i);
    if (j == i) {
      d.x_fixed.push_back(i);
    } else if (i < j) {
      d.x_edges.emplace_back(i, j);
    }
  }
  d.eta_x = d.x_fixed.size();
  d.eta_y = count_singletons(d.y_cycles);
  d.eta_xy = count_singletons(d.xy_orbits);

  DisjointSets sets(p + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    sets.unite(i, pair.xperm(i));
    sets.unite(i, pair.yperm(i));
  }
  d.component_count = sets.count();
  d.connected = d.component_count == 1;
  return d;
}

bool is_januarial(const CosetDiagram& d) {
  const std::size_t half = (d.p + 1) / 2;
  return d.xy_orbits.size() == 2 && d.xy_orbits[0].size() == half && d.xy_orbits[1].size() == half;
}

std::int64_t genus_higman(std::int64_t v, std::int64_t e, std::int64_t f) {
  const std::int64_t chi = v - e + f;
  if (chi % 2 != 0) throw Error(ErrorCode::kParity, "v - e + f is odd");
  return (2 - chi) / 2;
}

std::int64_t genus_fixedpoint(std::int64_t p, std::int64_t k, std::int64_t ell, std::int64_t eta_x,
                              std::int64_t eta_y, std::int64_t eta_xy) {
  if (k < 2 || ell < 2) throw Error(ErrorCode::kDomain, "genus_fixedpoint needs k, l >= 2");
  const std::int64_t denominator = 4 * k * ell;
  const std::int64_t bracket = (2 * (k + ell) - k * ell) * (p + 1) + k * ell * (2 * (eta_y + eta_xy) + eta_x) -
                               2 * (k * eta_y + ell * eta_xy);
  const std::int64_t numerator = denominator - bracket;
  if (numerator % denominator != 0) {
    throw Error(ErrorCode::kNonIntegralGenus, "fixed-point genus " + std::to_string(numerator) + "/" +
                                                  std::to_string(denominator) + " is not an integer");
  }
  return numerator / denominator;
}

std::int64_t genus_januarial(std::int64_t p, std::int64_t ell, std::int64_t eta_x, std::int64_t eta_y) {
  if (ell < 2) throw Error(ErrorCode::kDomain, "genus_januarial needs l >= 2");
  const std::int64_t denominator = 4 * ell;
  const std::int64_t numerator = -2 * (p + 1 - eta_y) + ell * (p + 1 - 2 * eta_y - eta_x);
  if (numerator % denominator != 0) {
    throw Error(ErrorCode::kNonIntegralGenus, "januarial genus " + std::to_string(numerator) + "/" +
                                                  std::to_string(denominator) + " is not an integer");
  }
  return numerator / denominator;
}

GenusBreakdown genus_breakdown(const CosetDiagram& d) {
  if (!d.connected) {
    throw Error(ErrorCode::kDisconnected,
                "diagram has " + std::to_string(d.component_count) + " components; genus is undefined");
  }
  GenusBreakdown g;
  g.v = static_cast<std::int64_t>(d.y_cycles.size());
  g.e = static_cast<std::int64_t>(d.x_edges.size());
  g.f = static_cast<std::int64_t>(d.xy_orbits.size());
  const auto p = static_cast<std::int64_t>(d.p);
  const auto ell = static_cast<std::int64_t>(d.ell);
  const auto eta_x = static_cast<std::int64_t>(d.eta_x);
  const auto eta_y = static_cast<std::int64_t>(d.eta_y);
  g.higman = genus_higman(g.v, g.e, g.f);
  g.fixedpoint =
      genus_fixedpoint(p, static_cast<std::int64_t>(d.k), ell, eta_x, eta_y, static_cast<std::int64_t>(d.eta_xy));
  if (is_januarial(d)) g.januarial = genus_januarial(p, ell, eta_x, eta_y);
  return g;
}

std::string export_dot(const CosetDiagram& d) {
  const std::size_t n = d.point_count();
  auto node = [&](std::size_t i) { return "v" + point_label(i, d.p); };

  std::vector<int> orbit(n, -1);
  if (is_januarial(d)) {
    // Orbits come out of cycles() ordered by smallest member already.
    for (int o = 0; o < 2; ++o) {
      for (std::size_t i : d.xy_orbits[static_cast<std::size_t>(o)]) orbit[i] = o;
    }
  }
  std::vector<bool> xfix(n, false), yfix(n, false);
  for (std::size_t i : d.x_fixed) xfix[i] = true;

  // (source, target, rel) with rel 0 = x, 1 = y.
  std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
  for (const auto& cycle : d.y_cycles) {
    if (cycle.size() == 1) {
      yfix[cycle.front()] = true;
      continue;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) edges.emplace_back(cycle[j], cycle[(j + 1) % cycle.size()], 1);
  }
  for (const auto& [a, b] : d.x_edges) edges.emplace_back(a, b, 0);
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph D_" << d.theta << '_' << d.p << '_' << d.ell << " {\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  " << node(i) << " [label=\"" << point_label(i, d.p) << "\", orbit=\"" << orbit[i] << '"';
    if (xfix[i]) out << ", xfix=\"1\"";
    if (yfix[i]) out << ", yfix=\"1\"";
    out << "];\n";
  }
  for (const auto& [a, b, rel] : edges) {
    out << "  " << node(a) << " -> " << node(b);
    out << (rel == 0 ? " [rel=\"x\", dir=\"none\"];\n" : " [rel=\"y\"];\n");
  }
  out << "}\n";
  return out.str();
}

std::string export_json(const CosetDiagram& d, const GeneratorPair& pair) {
  using nlohmann::ordered_json;
  auto matrix = [](const Matrix2& m) {
    const auto r = m.residues();
    return ordered_json::array({ordered_json::array({r[0], r[1]}), ordered_json::array({r[2], r[3]})});
  };

  ordered_json doc;
  doc["p"] = d.p;
  doc["l"] = d.ell;
  doc["k"] = d.k;
  doc["theta"] = d.theta;
  doc["delta"] = pair.params.delta.value();
  doc["r"] = pair.params.r.value();
  doc["X"] = matrix(pair.params.x_matrix());
  doc["Y"] = matrix(pair.params.y_matrix());
  doc["eta_x"] = d.eta_x;
  doc["eta_y"] = d.eta_y;
  doc["eta_xy"] = d.eta_xy;
  doc["xy_orbits"] = d.xy_orbits;
  if (d.connected) {
    doc["genus"] = genus_breakdown(d).higman;
  } else {
    doc["genus"] = nullptr;
  }
  doc["is_januarial"] = is_januarial(d);
  return doc.dump(2) + "\n";
}

std::string export_text(const CosetDiagram& d, const GeneratorPair& pair) {
  const ConstructionParams& q = pair.params;
  std::ostringstream out;
  out << "D(" << d.theta << "," << d.p << "," << d.ell << ")\n";
  out << "p = " << d.p << ", l = " << d.ell << ", theta = " << d.theta << ", order(xy) = " << d.k << "\n";
  out << "params: i = " << q.i.value() << ", e = " << q.e.value() << ", f = " << q.f.value() << ", b = "
      << q.b.value() << ", a = " << q.a.value() << ", c = " << q.c.value() << ", delta = " << q.delta.value()
      << ", r = " << q.r.value() << "\n";
  out << "X = " << format_matrix(q.x_matrix()) << "\n";
  out << "Y = " << format_matrix(q.y_matrix()) << "\n";
  out << "x  = " << format_cycles(pair.xperm, d.p) << "\n";
  out << "y  = " << format_cycles(pair.yperm, d.p) << "\n";
  out << "xy = " << format_cycles(pair.xyperm, d.p) << "\n";
  out << "eta_x = " << d.eta_x << ", eta_y = " << d.eta_y << ", eta_xy = " << d.eta_xy << "\n";
  out << "xy orbits: " << describe_orbit_sizes(d.xy_orbits) << "\n";
  out << "connected: " << (d.connected ? "yes" : "no");
  if (!d.connected) out << " (" << d.component_count << " components)";
  out << "\n";
  if (is_januarial(d)) {
    out << "januarial: yes\n";
  } else {
    out << "januarial: no (" << describe_orbit_sizes(d.xy_orbits) << ")\n";
  }
  if (d.connected) {
    const GenusBreakdown g = genus_breakdown(d);
    out << "v = " << g.v << ", e = " << g.e << ", f = " << g.f << "\n";
    out << "genus " << g.higman << " (higman " << g.higman << ", fixed-point " << g.fixedpoint;
    if (g.januarial) out << ", januarial " << *g.januarial;
    out << ")\n";
  } else {
    out << "genus: undefined for a disconnected diagram\n";
  }
  return out.str();
}

}  // namespace januarial
