#include "wdrkit/distance.hpp"

#include <algorithm>

#include "wdrkit/error.hpp"

namespace wdrkit {

std::string DistancePair::to_string() const {
  return "(" + std::to_string(forward) + "," + std::to_string(backward) + ")";
}

DistancePairMatrix DistancePairMatrix::compute(const Digraph& d) {
  DistancePairMatrix m;
  m.n_ = d.vertex_count();
  m.dist_.resize(m.n_ * m.n_);
  for (Vertex x = 0; x < m.n_; ++x) {
    const auto row = bfs_distances(d, x);
    for (Vertex y = 0; y < m.n_; ++y) {
      if (row[y] < 0) {
        throw Error(ErrorCode::kNotStronglyConnected,
                    "no path from " + std::to_string(x) + " to " + std::to_string(y));
      }
    }
    std::copy(row.begin(), row.end(), m.dist_.begin() + static_cast<std::ptrdiff_t>(x * m.n_));
  }
  return m;
}

int DistancePairMatrix::diameter() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

int girth(const Digraph& d, const DistancePairMatrix& m) {
  int best = 0;
  for (const Arc& a : d.arcs()) {
    const int len = m.distance(a.head, a.tail) + 1;
    if (best == 0 || len < best) best = len;
  }
  if (best == 0) throw Error(ErrorCode::kInvalidParameters, "digraph has no arcs, girth undefined");
  return best;
}

int girth(const Digraph& d) { return girth(d, distance_pairs(d)); }

DistancePair arc_type(const Digraph& d, const DistancePairMatrix& m, Arc arc) {
  if (!d.has_arc(arc.tail, arc.head)) {
    throw Error(ErrorCode::kNotAnArc,
                "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")");
  }
  return {1, m.distance(arc.head, arc.tail)};
}

int ArcTypeCensus::out_valency() const {
  int total = 0;
  for (const auto& [type, k] : valency) total += k;
  return total;
}

ArcTypeCensus arc_type_census(const Digraph& d, const DistancePairMatrix& m) {
  ArcTypeCensus census;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    std::map<DistancePair, int> here;
    for (Vertex v : d.out_neighbors(u)) ++here[DistancePair{1, m.distance(v, u)}];
    if (u == 0) {
      census.valency = std::move(here);
    } else if (here != census.valency) {
      throw Error(ErrorCode::kNotTypeRegular,
                  "typed out-degrees at vertex " + std::to_string(u) + " differ from vertex 0");
    }
  }
  return census;
}

std::optional<TwoArcTypes> two_arc_types(const ArcTypeCensus& census) {
  if (census.type_count() != 2) return std::nullopt;
  auto first = census.valency.begin();
  auto second = std::next(first);
  if (first->second == 1 && second->second == 2) return TwoArcTypes{first->first, second->first};
  if (first->second == 2 && second->second == 1) return TwoArcTypes{second->first, first->first};
  return std::nullopt;
}

}  // namespace wdrkit
