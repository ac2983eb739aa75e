#include "oddchi/lattice_graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "oddchi/errors.hpp"
#include "oddchi/format.hpp"

namespace oddchi {

std::string_view lattice_kind_name(LatticeKind kind) {
  return kind == LatticeKind::Triangular ? "triangular" : "square";
}

LatticeKind parse_lattice_kind(std::string_view name) {
  if (name == "triangular") return LatticeKind::Triangular;
  if (name == "square") return LatticeKind::Square;
  throw DomainError("lattice kind must be 'triangular' or 'square'");
}

std::int64_t quadratic_form(LatticeKind kind, std::int64_t a, std::int64_t b) {
  return kind == LatticeKind::Triangular ? a * a + a * b + b * b : a * a + b * b;
}

std::optional<std::int64_t> odd_square_root(std::int64_t q) {
  if (q <= 0) return std::nullopt;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(q)));
  // Division-based comparisons keep the correction steps free of overflow.
  while (root > 0 && root > q / root) --root;
  while (root + 1 <= q / (root + 1)) ++root;
  if (root * root != q || root % 2 == 0) return std::nullopt;
  return root;
}

LatticePoint rotate60(LatticePoint p) { return LatticePoint{p.a + p.b, -p.a}; }

namespace {

// Q(a, b) >= (a^2 + b^2) / 2 for both forms bounds the search box.
std::int64_t search_extent(std::int64_t radius_sq) {
  auto extent = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(radius_sq)));
  while (extent * extent <= 2 * radius_sq) ++extent;
  return extent;
}

// Points with Q <= radius_sq, counted row by row without storing them.
std::int64_t count_lattice_points(const LatticeSpec& spec) {
  const std::int64_t extent = search_extent(spec.radius_sq);
  const double R = static_cast<double>(spec.radius_sq);
  std::int64_t total = 0;
  for (std::int64_t a = -extent; a <= extent; ++a) {
    const double ad = static_cast<double>(a);
    // Real roots in b of Q(a, b) = R, widened then trimmed exactly.
    double centre = 0.0;
    double disc = 0.0;
    if (spec.kind == LatticeKind::Triangular) {
      centre = -ad / 2;
      disc = (4 * R - 3 * ad * ad) / 4;
    } else {
      disc = R - ad * ad;
    }
    if (disc < 0) continue;
    auto lo = static_cast<std::int64_t>(std::floor(centre - std::sqrt(disc))) - 1;
    auto hi = static_cast<std::int64_t>(std::ceil(centre + std::sqrt(disc))) + 1;
    while (lo <= hi && quadratic_form(spec.kind, a, lo) > spec.radius_sq) ++lo;
    while (hi >= lo && quadratic_form(spec.kind, a, hi) > spec.radius_sq) --hi;
    if (hi >= lo) total += hi - lo + 1;
  }
  return total;
}

}  // namespace

std::vector<LatticePoint> generate_lattice_points(const LatticeSpec& spec,
                                                  std::size_t vertex_cap) {
  if (spec.radius_sq < 0) throw DomainError("radius_sq must be nonnegative");
  const std::int64_t extent = search_extent(spec.radius_sq);
  std::vector<LatticePoint> out;
  for (std::int64_t a = -extent; a <= extent; ++a) {
    for (std::int64_t b = -extent; b <= extent; ++b) {
      if (quadratic_form(spec.kind, a, b) > spec.radius_sq) continue;
      if (out.size() == vertex_cap) {
        std::ostringstream msg;
        msg << "lattice has " << count_lattice_points(spec) << " points with Q <= "
            << spec.radius_sq << ", above the vertex cap of " << vertex_cap;
        throw ResourceError(msg.str());
      }
      out.push_back({a, b});
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> OddDistanceLatticeGraph::adjacency_lists() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SymmetricMatrix OddDistanceLatticeGraph::adjacency_matrix() const {
  SymmetricMatrix m(vertices.size());
  for (const Edge& e : edges) m.set_pair(e.u, e.v, e.weight);
  return m;
}

OddDistanceLatticeGraph build_odd_graph(std::span<const LatticePoint> points, LatticeKind kind,
                                        std::optional<double> decay, std::size_t vertex_cap) {
  if (points.size() > vertex_cap) {
    std::ostringstream msg;
    msg << "graph has " << points.size() << " vertices, cap is " << vertex_cap;
    throw ResourceError(msg.str());
  }
  if (decay && !(std::isfinite(*decay) && *decay > 1.0)) {
    throw DomainError("edge weight decay base must be finite and > 1");
  }
  {
    std::set<LatticePoint> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw DomainError("lattice points must be distinct");
  }
  OddDistanceLatticeGraph g;
  g.kind = kind;
  g.vertices.assign(points.begin(), points.end());
  g.decay = decay;
  for (std::size_t u = 0; u < points.size(); ++u) {
    for (std::size_t v = u + 1; v < points.size(); ++v) {
      const auto q = quadratic_form(kind, points[v].a - points[u].a, points[v].b - points[u].b);
      const auto root = odd_square_root(q);
      if (!root) continue;
      const std::int64_t k = (*root - 1) / 2;
      const double w = decay ? std::pow(*decay, -static_cast<double>(k)) : 1.0;
      g.edges.push_back(Edge{u, v, *root, w});
    }
  }
  return g;
}

HoffmanResult hoffman_bound(const SymmetricMatrix& adjacency) {
  HoffmanResult out;
  if (adjacency.size() == 0 || adjacency.max_abs() == 0.0) {
    out.degenerate = true;
    return out;
  }
  const auto values = symmetric_eigenvalues(adjacency);
  out.lambda_min = values.front();
  out.lambda_max = values.back();
  if (!(out.lambda_min < 0.0)) {
    out.degenerate = true;
    out.bound = 1.0;
    return out;
  }
  out.bound = 1.0 - out.lambda_max / out.lambda_min;
  return out;
}

HoffmanResult hoffman_bound(const OddDistanceLatticeGraph& graph) {
  if (graph.edges.empty()) {
    HoffmanResult out;
    out.degenerate = true;
    return out;
  }
  return hoffman_bound(graph.adjacency_matrix());
}

void write_edge_list(std::ostream& out, const OddDistanceLatticeGraph& graph) {
  out << graph.vertices.size() << ' ' << graph.edges.size() << '\n';
  for (const LatticePoint& p : graph.vertices) out << p.a << ' ' << p.b << '\n';
  for (const Edge& e : graph.edges) {
    out << e.u << ' ' << e.v << ' ' << e.length << ' ' << format_double(e.weight) << '\n';
  }
}

OddDistanceLatticeGraph read_edge_list(std::istream& in, LatticeKind kind) {
  OddDistanceLatticeGraph g;
  g.kind = kind;
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw DomainError("edge list: missing 'n m' header");
  g.vertices.resize(n);
  for (auto& p : g.vertices) {
    if (!(in >> p.a >> p.b)) throw DomainError("edge list: truncated coordinate table");
  }
  g.edges.resize(m);
  for (auto& e : g.edges) {
    std::string weight;
    if (!(in >> e.u >> e.v >> e.length >> weight) || e.u >= n || e.v >= n) {
      throw DomainError("edge list: malformed edge line");
    }
    e.weight = std::stod(weight);
  }
  return g;
}

}  // namespace oddchi
