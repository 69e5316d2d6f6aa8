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
#include <vector>

#include "kec/errors.hpp"
#include "kec/multigraph.hpp"

namespace kec {

/// An edge cut together with the bipartition it crosses. `cut_edges` holds
/// exactly the edges with one endpoint on each side, so removing them
/// disconnects every side1 vertex from every side2 vertex.
struct EdgeCut {
  std::vector<EdgeId> cut_edges;  // ascending
  std::vector<VertexId> side1;    // ascending
  std::vector<VertexId> side2;    // ascending

  std::size_t value() const { return cut_edges.size(); }
};

/// Builds the cut induced by a bipartition: side1 as given, side2 the rest,
/// cut edges all crossing edges in ascending id order.
inline EdgeCut cut_from_side(const Multigraph& g,
                             const std::vector<VertexId>& side1) {
  std::vector<char> in_side1(g.vertex_count(), 0);
  for (VertexId v : side1) {
    if (v >= g.vertex_count())
      throw UnknownVertex("vertex " + std::to_string(v) + " does not exist");
    in_side1[v] = 1;
  }
  EdgeCut cut;
  cut.side1 = side1;
  std::sort(cut.side1.begin(), cut.side1.end());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!in_side1[v]) cut.side2.push_back(v);
  for (const Edge& e : g.edges())
    if (in_side1[e.u] != in_side1[e.v]) cut.cut_edges.push_back(e.id);
  return cut;
}

/// A cut is valid for g when its sides partition the vertex set into two
/// nonempty parts and cut_edges is exactly the set of crossing edges.
inline bool is_valid_cut(const Multigraph& g, const EdgeCut& cut) {
  if (cut.side1.empty() || cut.side2.empty()) return false;
  std::vector<char> mark(g.vertex_count(), 0);
  for (VertexId v : cut.side1) {
    if (v >= g.vertex_count() || mark[v]) return false;
    mark[v] = 1;
  }
  for (VertexId v : cut.side2) {
    if (v >= g.vertex_count() || mark[v]) return false;
    mark[v] = 2;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!mark[v]) return false;

  std::vector<EdgeId> crossing;
  for (const Edge& e : g.edges())
    if (mark[e.u] != mark[e.v]) crossing.push_back(e.id);
  std::vector<EdgeId> given = cut.cut_edges;
  std::sort(given.begin(), given.end());
  return given == crossing;
}

}  // namespace kec
