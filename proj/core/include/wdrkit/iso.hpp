#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wdrkit/digraph.hpp"

namespace wdrkit {

/// mapping[v] is the image of vertex v.
struct IsoCertificate {
  std::vector<Vertex> mapping;

  IsoCertificate inverse() const;
};

/// True iff the mapping is a bijection and (u,v) is an arc of d1 exactly when
/// (map(u), map(v)) is an arc of d2. Throws Error(kSizeMismatch).
bool verify_certificate(const Digraph& d1, const Digraph& d2, const IsoCertificate& c);

/// Backtracking search over vertices ordered rarest refinement cell first
/// (ties by id). Candidates must share the refined colour and reproduce the
/// two-way distances to every vertex already mapped. `pin` forces the image of
/// one vertex.
std::optional<IsoCertificate> find_isomorphism(const Digraph& d1, const Digraph& d2,
                                               std::optional<std::pair<Vertex, Vertex>> pin = std::nullopt);

inline std::optional<IsoCertificate> are_isomorphic(const Digraph& d1, const Digraph& d2) {
  return find_isomorphism(d1, d2);
}

/// Searches an automorphism 0 -> v for each v outside the orbit of 0 built so
/// far.
bool is_vertex_transitive(const Digraph& d);

}  // namespace wdrkit
