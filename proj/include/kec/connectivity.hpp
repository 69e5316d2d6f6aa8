// Copyright 2026 The kec Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kec/edge_cut.hpp"
#include "kec/errors.hpp"
#include "kec/multigraph.hpp"

namespace kec {

/// Certificate pair for one local connectivity query: the edge-disjoint
/// paths and a minimum cut of the same value.
struct FlowResult {
  std::size_t value = 0;
  std::vector<std::vector<EdgeId>> paths;
  EdgeCut cut;
};

namespace detail {

/// Integral unit-capacity flow on the directed doubling of an undirected
/// multigraph. Net flow per edge lives in {-1, 0, +1} relative to the stored
/// (u,v) orientation, which is exactly the guarantee that a flow never uses
/// both arcs of a doubled pair. Augmenting BFS scans incident edges in
/// ascending id order, so values, cuts and path sets are deterministic.
///
/// The engine keeps per-graph buffers so one instance can serve many
/// source/sink pairs on the same graph without reallocating.
class FlowEngine {
 public:
  explicit FlowEngine(const Multigraph& g) : g_(&g) {
    const auto& edges = g.edges();
    std::size_t n = g.vertex_count();
    inc_.resize(n);
    for (std::uint32_t pos = 0; pos < edges.size(); ++pos) {
      inc_[edges[pos].u].push_back(pos);
      inc_[edges[pos].v].push_back(pos);
    }
    flow_.assign(edges.size(), 0);
    parent_edge_.assign(n, -1);
    visited_.assign(n, 0);
    queue_.reserve(n);
  }

  std::size_t max_flow(VertexId s, VertexId t) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::size_t value = 0;
    while (augment(s, t)) ++value;
    return value;
  }

  /// Vertices reachable from s in the residual graph of the current flow,
  /// ascending. After max_flow(s, t) this is the canonical min-cut side.
  std::vector<VertexId> residual_reachable(VertexId s) {
    search(s, static_cast<VertexId>(-1));
    std::vector<VertexId> side;
    for (VertexId v = 0; v < g_->vertex_count(); ++v)
      if (visited_[v]) side.push_back(v);
    return side;
  }

  /// Decomposes the current flow into `value` edge-disjoint s-t paths.
  /// Flow cycles, if any, are spliced out and discarded.
  std::vector<std::vector<EdgeId>> extract_paths(VertexId s, VertexId t,
                                                 std::size_t value) {
    const auto& edges = g_->edges();
    std::vector<std::vector<std::uint32_t>> out(g_->vertex_count());
    for (std::uint32_t pos = 0; pos < edges.size(); ++pos) {
      if (flow_[pos] > 0)
        out[edges[pos].u].push_back(pos);
      else if (flow_[pos] < 0)
        out[edges[pos].v].push_back(pos);
    }
    std::vector<std::size_t> cursor(g_->vertex_count(), 0);
    std::vector<int> pos_in_path(g_->vertex_count(), -1);

    std::vector<std::vector<EdgeId>> paths;
    paths.reserve(value);
    for (std::size_t i = 0; i < value; ++i) {
      std::vector<std::uint32_t> path_edges;
      std::vector<VertexId> path_vertices{s};
      pos_in_path[s] = 0;
      VertexId current = s;
      while (current != t) {
        auto& list = out[current];
        if (cursor[current] >= list.size())
          throw Error("flow decomposition ran out of edges");
        std::uint32_t pos = list[cursor[current]++];
        const Edge& e = edges[pos];
        VertexId to = flow_[pos] > 0 ? e.v : e.u;
        if (pos_in_path[to] != -1) {
          // walked into the current path: splice the loop out
          std::size_t p = static_cast<std::size_t>(pos_in_path[to]);
          for (std::size_t j = p + 1; j < path_vertices.size(); ++j)
            pos_in_path[path_vertices[j]] = -1;
          path_edges.resize(p);
          path_vertices.resize(p + 1);
          current = to;
        } else {
          path_edges.push_back(pos);
          path_vertices.push_back(to);
          pos_in_path[to] = static_cast<int>(path_vertices.size() - 1);
          current = to;
        }
      }
      for (VertexId v : path_vertices) pos_in_path[v] = -1;
      std::vector<EdgeId> ids;
      ids.reserve(path_edges.size());
      for (std::uint32_t pos : path_edges) ids.push_back(edges[pos].id);
      paths.push_back(std::move(ids));
    }
    return paths;
  }

 private:
  // BFS over residual edges; stops early when t is reached. Returns whether
  // t was reached and leaves visited_/parent_edge_ filled.
  bool search(VertexId s, VertexId t) {
    const auto& edges = g_->edges();
    std::fill(visited_.begin(), visited_.end(), 0);
    queue_.clear();
    queue_.push_back(s);
    visited_[s] = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      VertexId w = queue_[head];
      for (std::uint32_t pos : inc_[w]) {
        const Edge& e = edges[pos];
        bool usable = (w == e.u) ? (flow_[pos] < 1) : (flow_[pos] > -1);
        if (!usable) continue;
        VertexId x = e.other(w);
        if (visited_[x]) continue;
        visited_[x] = 1;
        parent_edge_[x] = static_cast<int>(pos);
        if (x == t) return true;
        queue_.push_back(x);
      }
    }
    return false;
  }

  bool augment(VertexId s, VertexId t) {
    if (!search(s, t)) return false;
    const auto& edges = g_->edges();
    VertexId x = t;
    while (x != s) {
      std::uint32_t pos = static_cast<std::uint32_t>(parent_edge_[x]);
      const Edge& e = edges[pos];
      flow_[pos] += (x == e.v) ? 1 : -1;
      x = e.other(x);
    }
    return true;
  }

  const Multigraph* g_;
  std::vector<std::vector<std::uint32_t>> inc_;  // edge positions per vertex
  std::vector<std::int8_t> flow_;
  std::vector<int> parent_edge_;
  std::vector<char> visited_;
  std::vector<VertexId> queue_;
};

inline void check_pair(const Multigraph& g, VertexId u, VertexId v) {
  if (!g.has_vertex(u))
    throw UnknownVertex("vertex " + std::to_string(u) + " does not exist");
  if (!g.has_vertex(v))
    throw UnknownVertex("vertex " + std::to_string(v) + " does not exist");
  if (u == v)
    throw SameVertex("local connectivity needs two distinct vertices");
}

}  // namespace detail

/// λ(u,v): value of a maximum set of pairwise edge-disjoint u-v paths,
/// without the path/cut certificates. Plumbing for the batch callers.
inline std::size_t lambda_value(const Multigraph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  detail::FlowEngine engine(g);
  return engine.max_flow(u, v);
}

/// λ(u,v) with certificates: the edge-disjoint paths and a minimum u-v cut
/// of equal value whose side1 is the residual-reachable set of u.
/// Disconnected pairs yield value 0.
inline FlowResult local_edge_connectivity(const Multigraph& g, VertexId u,
                                          VertexId v) {
  detail::check_pair(g, u, v);
  detail::FlowEngine engine(g);
  FlowResult result;
  result.value = engine.max_flow(u, v);
  result.cut = cut_from_side(g, engine.residual_reachable(u));
  result.paths = engine.extract_paths(u, v, result.value);
  return result;
}

/// Minimum u-v edge cut; u on side1, v on side2, side1 canonical
/// (residual-reachable from u).
inline EdgeCut min_edge_cut(const Multigraph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  detail::FlowEngine engine(g);
  engine.max_flow(u, v);
  return cut_from_side(g, engine.residual_reachable(u));
}

/// Global min cut value: min over v != v0 of λ(v0, v); 0 when disconnected.
inline std::size_t global_edge_connectivity(const Multigraph& g) {
  if (g.vertex_count() < 2)
    throw TooFewVertices("global connectivity needs at least 2 vertices");
  detail::FlowEngine engine(g);
  std::size_t best = static_cast<std::size_t>(-1);
  for (VertexId v = 1; v < g.vertex_count(); ++v) {
    best = std::min(best, engine.max_flow(0, v));
    if (best == 0) break;
  }
  return best;
}

inline void check_k(std::size_t k) {
  if (k < 1) throw BadK("k must be at least 1");
}

/// λ(u,v) ≥ k for every pair, equivalently global connectivity ≥ k.
inline bool is_k_edge_connected(const Multigraph& g, std::size_t k) {
  check_k(k);
  if (g.vertex_count() < 2)
    throw TooFewVertices("connectivity predicates need at least 2 vertices");
  return global_edge_connectivity(g) >= k;
}

/// λ(u,v) = k for every pair u != v.
inline bool is_exactly_k_edge_connected(const Multigraph& g, std::size_t k) {
  check_k(k);
  if (g.vertex_count() < 2)
    throw TooFewVertices("connectivity predicates need at least 2 vertices");
  if (!is_k_edge_connected(g, k)) return false;
  // All degrees are ≥ k now; a pair with an endpoint of degree exactly k has
  // λ pinched to k, so only pairs of higher-degree vertices need a flow run.
  detail::FlowEngine engine(g);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) == k) continue;
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      if (g.degree(v) == k) continue;
      if (engine.max_flow(u, v) != k) return false;
    }
  }
  return true;
}

/// Maximum number of pairwise edge-disjoint paths with one endpoint in A and
/// one in B, computed by contracting each set to a single vertex.
inline std::size_t class_connectivity(const Multigraph& g,
                                      const std::vector<VertexId>& A,
                                      const std::vector<VertexId>& B) {
  if (A.empty() || B.empty())
    throw OverlappingSets("class connectivity needs two nonempty sets");
  std::vector<char> in_a(g.vertex_count(), 0);
  for (VertexId v : A) {
    if (v >= g.vertex_count())
      throw UnknownVertex("vertex " + std::to_string(v) + " does not exist");
    in_a[v] = 1;
  }
  for (VertexId v : B) {
    if (v >= g.vertex_count())
      throw UnknownVertex("vertex " + std::to_string(v) + " does not exist");
    if (in_a[v])
      throw OverlappingSets("vertex " + std::to_string(v) +
                            " is in both sets");
  }

  std::vector<std::vector<VertexId>> classes{A, B};
  std::vector<char> in_b(g.vertex_count(), 0);
  for (VertexId v : B) in_b[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_a[v] && !in_b[v]) classes.push_back({v});
  Contraction contracted = contract_vertex_sets(g, classes);
  return lambda_value(contracted.graph, 0, 1);
}

}  // namespace kec
