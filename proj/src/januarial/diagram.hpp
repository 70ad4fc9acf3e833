#pragma once

// Coset diagrams of a generator pair acting on PL(F_p): y-cycles (the
// l-gons), x-edges, the orbits of xy, and the genus of the embedding.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "januarial/construct.hpp"

namespace januarial {

using Cycle = std::vector<std::size_t>;

struct CosetDiagram {
  std::uint64_t p;
  std::uint64_t ell;
  /// Order of xy in this diagram.
  std::uint64_t k;
  std::uint64_t theta;

  std::vector<Cycle> y_cycles;  // includes fixed points as 1-cycles
  std::vector<std::pair<std::size_t, std::size_t>> x_edges;  // smaller endpoint first, sorted
  std::vector<std::size_t> x_fixed;
  std::vector<Cycle> xy_orbits;  // includes fixed points as 1-cycles

  std::size_t eta_x = 0;
  std::size_t eta_y = 0;
  std::size_t eta_xy = 0;

  bool connected = false;
  std::size_t component_count = 0;

  std::size_t point_count() const { return p + 1; }
};

CosetDiagram build_diagram(const GeneratorPair& pair);

/// Exactly two xy-orbits, both of length (p + 1) / 2.
bool is_januarial(const CosetDiagram& d);

/// (2 - (v - e + f)) / 2. Throws Error(kParity) when v - e + f is odd.
std::int64_t genus_higman(std::int64_t v, std::int64_t e, std::int64_t f);

/// 1 - [(2(k+l) - kl)(p+1) + kl(2(eta_y + eta_xy) + eta_x) - 2(k eta_y + l eta_xy)] / 4kl.
/// Throws Error(kNonIntegralGenus) if the value is not an integer.
std::int64_t genus_fixedpoint(std::int64_t p, std::int64_t k, std::int64_t ell, std::int64_t eta_x,
                              std::int64_t eta_y, std::int64_t eta_xy);

/// -(p + 1 - eta_y) / 2l + (p + 1 - 2 eta_y - eta_x) / 4, for januarials.
std::int64_t genus_januarial(std::int64_t p, std::int64_t ell, std::int64_t eta_x, std::int64_t eta_y);

struct GenusBreakdown {
  std::int64_t v = 0, e = 0, f = 0;
  std::int64_t higman = 0;
  std::int64_t fixedpoint = 0;
  std::optional<std::int64_t> januarial;
};

/// Throws Error(kDisconnected) if the diagram is not connected.
GenusBreakdown genus_breakdown(const CosetDiagram& d);

/// Byte-stable Graphviz document; see README for the exact layout.
std::string export_dot(const CosetDiagram& d);

/// One JSON document with fixed key order.
std::string export_json(const CosetDiagram& d, const GeneratorPair& pair);

/// Human-readable report: matrices, permutations, counts, verdict, genus.
std::string export_text(const CosetDiagram& d, const GeneratorPair& pair);

}  // namespace januarial
