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
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kec/errors.hpp"

namespace kec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One edge record. Parallel edges are distinct records with distinct ids;
/// endpoints are unordered but stored as given.
struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected multigraph with dense vertex ids 0..n-1 and stable edge ids.
///
/// Edge ids grow monotonically and never get reused: removing an edge leaves
/// every other id unchanged, so references into a graph stay valid across the
/// edits the algorithms perform on value copies. Self-loops are rejected.
/// All analysis functions take the graph by const reference and never mutate
/// it; sharing between threads is safe.
class Multigraph {
 public:
  Multigraph() = default;

  explicit Multigraph(std::size_t vertex_count)
      : incident_(vertex_count) {}

  /// Convenience builder: n vertices plus one edge per listed endpoint pair.
  static Multigraph from_edges(
      std::size_t vertex_count,
      std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    Multigraph g(vertex_count);
    for (const auto& [u, v] : pairs) g.add_edge(u, v);
    return g;
  }

  std::size_t vertex_count() const { return incident_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexId add_vertex() {
    incident_.emplace_back();
    return static_cast<VertexId>(incident_.size() - 1);
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw SelfLoopRejected("self-loop (" + std::to_string(u) + "," +
                             std::to_string(v) + ") rejected");
    EdgeId id = next_edge_id_++;
    edges_.push_back(Edge{id, u, v});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
  }

  void remove_edge(EdgeId e) {
    auto it = find_edge(e);
    if (it == edges_.end())
      throw UnknownEdge("edge " + std::to_string(e) + " does not exist");
    erase_incidence(it->u, e);
    erase_incidence(it->v, e);
    edges_.erase(it);
  }

  bool has_vertex(VertexId v) const { return v < incident_.size(); }

  bool has_edge(EdgeId e) const {
    return find_edge(e) != edges_.end();
  }

  const Edge& edge(EdgeId e) const {
    auto it = find_edge(e);
    if (it == edges_.end())
      throw UnknownEdge("edge " + std::to_string(e) + " does not exist");
    return *it;
  }

  /// Incident edge records, counted with multiplicity.
  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return incident_[v].size();
  }

  /// Edge records in ascending id order.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Ids of edges incident to v, ascending.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    check_vertex(v);
    return incident_[v];
  }

  bool connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId w = stack.back();
      stack.pop_back();
      for (EdgeId e : incident_[w]) {
        VertexId x = edge(e).other(w);
        if (!seen[x]) {
          seen[x] = 1;
          ++reached;
          stack.push_back(x);
        }
      }
    }
    return reached == vertex_count();
  }

  /// Normalized endpoint pairs (min,max), sorted. Two graphs with equal
  /// vertex counts and equal pair multisets are structurally equal; edge ids
  /// do not take part in equality.
  std::vector<std::pair<VertexId, VertexId>> sorted_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_)
      pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() &&
           a.sorted_pairs() == b.sorted_pairs();
  }

 private:
  void check_vertex(VertexId v) const {
    if (v >= incident_.size())
      throw UnknownVertex("vertex " + std::to_string(v) + " does not exist");
  }

  // edges_ stays sorted by id because ids are assigned in increasing order.
  std::vector<Edge>::const_iterator find_edge(EdgeId e) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), e,
        [](const Edge& rec, EdgeId id) { return rec.id < id; });
    if (it != edges_.end() && it->id == e) return it;
    return edges_.end();
  }

  std::vector<Edge>::iterator find_edge(EdgeId e) {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), e,
        [](const Edge& rec, EdgeId id) { return rec.id < id; });
    if (it != edges_.end() && it->id == e) return it;
    return edges_.end();
  }

  void erase_incidence(VertexId v, EdgeId e) {
    auto& list = incident_[v];
    list.erase(std::find(list.begin(), list.end(), e));
  }

  EdgeId next_edge_id_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Result of replacing parallel duplicates by length-2 paths. `paths` maps
/// every original edge id to the id sequence that realizes it in the new
/// graph: a single id for edges kept direct, two ids for subdivided copies.
struct SubdivisionResult {
  Multigraph graph;
  std::map<EdgeId, std::vector<EdgeId>> paths;
};

/// Returns a simple graph: within each class of parallel edges the first copy
/// (lowest id) stays direct and every later copy is routed through a fresh
/// midpoint vertex. Path counts between original vertices are unchanged.
inline SubdivisionResult subdivide_parallel_edges(const Multigraph& g) {
  SubdivisionResult out;
  out.graph = g;
  std::map<std::pair<VertexId, VertexId>, EdgeId> first_of_pair;
  std::vector<Edge> originals = g.edges();
  for (const Edge& e : originals) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    auto [it, inserted] = first_of_pair.emplace(key, e.id);
    if (inserted) {
      out.paths[e.id] = {e.id};
      continue;
    }
    out.graph.remove_edge(e.id);
    VertexId mid = out.graph.add_vertex();
    EdgeId a = out.graph.add_edge(e.u, mid);
    EdgeId b = out.graph.add_edge(mid, e.v);
    out.paths[e.id] = {a, b};
  }
  return out;
}

/// Result of contracting vertex classes. `edge_origin[j]` is the original id
/// of the edge the contracted edge j came from.
struct Contraction {
  Multigraph graph;
  std::vector<EdgeId> edge_origin;
};

/// Contracts each class to a single vertex (one per class, in class order).
/// Keeps one edge per original edge whose endpoints lie in different classes,
/// in ascending original id order; intra-class edges are dropped.
inline Contraction contract_vertex_sets(
    const Multigraph& g, const std::vector<std::vector<VertexId>>& classes) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(g.vertex_count(), kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty())
      throw PartitionNotCover("class " + std::to_string(c) + " is empty");
    for (VertexId v : classes[c]) {
      if (v >= g.vertex_count())
        throw PartitionNotCover("class contains unknown vertex " +
                                std::to_string(v));
      if (class_of[v] != kUnassigned)
        throw PartitionNotCover("vertex " + std::to_string(v) +
                                " appears in two classes");
      class_of[v] = c;
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (class_of[v] == kUnassigned)
      throw PartitionNotCover("vertex " + std::to_string(v) +
                              " is not covered by the partition");

  Contraction out;
  out.graph = Multigraph(classes.size());
  for (const Edge& e : g.edges()) {
    std::size_t cu = class_of[e.u];
    std::size_t cv = class_of[e.v];
    if (cu == cv) continue;
    out.graph.add_edge(static_cast<VertexId>(cu), static_cast<VertexId>(cv));
    out.edge_origin.push_back(e.id);
  }
  return out;
}

}  // namespace kec
