#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "oddchi/eigensolver.hpp"

namespace oddchi {

enum class LatticeKind { Triangular, Square };

std::string_view lattice_kind_name(LatticeKind kind);
// Accepts "triangular" or "square"; throws DomainError otherwise.
LatticeKind parse_lattice_kind(std::string_view name);

struct LatticeSpec {
  LatticeKind kind = LatticeKind::Triangular;
  std::int64_t radius_sq = 0;
};

// Integer coordinates in the lattice basis: (1,0), (1/2, sqrt(3)/2) for the
// triangular lattice, the unit vectors for the square one.
struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

// Squared Euclidean length of a*e1 + b*e2: a^2 + ab + b^2 (triangular) or
// a^2 + b^2 (square).
std::int64_t quadratic_form(LatticeKind kind, std::int64_t a, std::int64_t b);

// Root of q when q is a perfect square with an odd root.
std::optional<std::int64_t> odd_square_root(std::int64_t q);

// 60 degree rotation of the triangular lattice: (a, b) -> (a + b, -a).
LatticePoint rotate60(LatticePoint p);

inline constexpr std::size_t kDefaultVertexCap = 5000;

/// All points with Q(a, b) <= radius_sq, sorted lexicographically by (a, b).
/// Throws ResourceError above vertex_cap points.
std::vector<LatticePoint> generate_lattice_points(const LatticeSpec& spec,
                                                  std::size_t vertex_cap = kDefaultVertexCap);

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::int64_t length = 1;  // odd, 2k + 1
  double weight = 1.0;
};

struct OddDistanceLatticeGraph {
  LatticeKind kind = LatticeKind::Triangular;
  std::vector<LatticePoint> vertices;
  std::vector<Edge> edges;  // u < v, sorted
  // Decay base for the alpha^{-k} edge weights; unset means unit weights.
  std::optional<double> decay;

  std::size_t vertex_count() const { return vertices.size(); }
  std::vector<std::vector<std::size_t>> adjacency_lists() const;
  SymmetricMatrix adjacency_matrix() const;
};

/// Edge between two points iff their squared distance is a perfect square
/// with odd root 2k+1; weight decay^{-k} when decay is set. Points must be
/// distinct. The decay base must exceed 1 but, unlike Alpha, is not capped
/// at 2, so large bases isolate the unit-distance edges.
OddDistanceLatticeGraph build_odd_graph(std::span<const LatticePoint> points, LatticeKind kind,
                                        std::optional<double> decay = std::nullopt,
                                        std::size_t vertex_cap = kDefaultVertexCap);

struct HoffmanResult {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double bound = 1.0;
  bool degenerate = false;  // no edges: bound fixed at 1
};

/// chi >= 1 - lambda_max / lambda_min for the (weighted) adjacency matrix.
HoffmanResult hoffman_bound(const SymmetricMatrix& adjacency);
HoffmanResult hoffman_bound(const OddDistanceLatticeGraph& graph);

// Edge-list text format:
//   n m
//   a b            (n lines, vertex i on line i, 0-based)
//   u v length weight   (m lines)
void write_edge_list(std::ostream& out, const OddDistanceLatticeGraph& graph);
OddDistanceLatticeGraph read_edge_list(std::istream& in, LatticeKind kind);

}  // namespace oddchi
