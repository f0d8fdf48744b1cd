#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdrkit/digraph.hpp"
#include "wdrkit/distance.hpp"

namespace wdrkit {

using RelationId = std::uint32_t;

/// The classes Γ_ĩ = {(x,y) : ∂̃(x,y) = ĩ}. Ids follow lexicographic order of
/// the distance pair, so id 0 is always (0,0).
class RelationPartition {
 public:
  static RelationPartition build(const DistancePairMatrix& m);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t relation_count() const noexcept { return relations_.size(); }
  const std::vector<DistancePair>& relations() const noexcept { return relations_; }
  DistancePair relation(RelationId id) const { return relations_.at(id); }

  std::optional<RelationId> find(DistancePair pair) const;
  /// Throws Error(kUnknownRelation).
  RelationId id_of(DistancePair pair) const;
  RelationId class_of(Vertex x, Vertex y) const { return class_of_[x * n_ + y]; }
  RelationId converse(RelationId id) const { return converse_.at(id); }
  /// Number of ordered pairs in the class.
  std::size_t pair_count(RelationId id) const { return pair_count_.at(id); }

 private:
  std::size_t n_ = 0;
  std::vector<DistancePair> relations_;
  std::vector<RelationId> class_of_;
  std::vector<RelationId> converse_;
  std::vector<std::size_t> pair_count_;
};

inline RelationPartition relation_partition(const DistancePairMatrix& m) {
  return RelationPartition::build(m);
}

/// |P_{i,j}(x,y)| = |{z : class(x,z) = i, class(z,y) = j}|.
std::size_t count_paths(const RelationPartition& part, RelationId i, RelationId j, Vertex x, Vertex y);

/// Intersection numbers p^h_{i,j}, stored densely over relation ids.
class IntersectionTensor {
 public:
  IntersectionTensor(std::vector<DistancePair> relations, std::vector<std::uint32_t> dense,
                     std::vector<int> valencies);

  std::size_t relation_count() const noexcept { return relations_.size(); }
  const std::vector<DistancePair>& relations() const noexcept { return relations_; }
  std::uint32_t p(RelationId h, RelationId i, RelationId j) const {
    const std::size_t r = relations_.size();
    return dense_[(h * r + i) * r + j];
  }
  int valency(RelationId i) const { return valencies_.at(i); }
  const std::vector<int>& valencies() const noexcept { return valencies_; }
  RelationId converse(RelationId i) const { return converse_.at(i); }

 private:
  std::vector<DistancePair> relations_;
  std::vector<std::uint32_t> dense_;
  std::vector<int> valencies_;
  std::vector<RelationId> converse_;
};

/// A concrete failure of weak distance-regularity: two pairs in class h whose
/// P_{i,j} counts differ.
struct WdrWitness {
  DistancePair h;
  DistancePair i;
  DistancePair j;
  Arc pair1;
  Arc pair2;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
};

struct WdrReport {
  std::string spec;
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  bool is_wdr = false;
  std::optional<WdrWitness> witness;
  bool commutative = false;
  bool thin = false;
  int girth = 0;
  /// Absent when some vertex has different typed out-degrees.
  std::optional<ArcTypeCensus> arc_types;
  std::vector<DistancePair> relations;
  std::optional<IntersectionTensor> tensor;
};

/// Decides weak distance-regularity by counting P_{i,j}(x,y) for every
/// ordered pair. Throws Error(kNotStronglyConnected).
///
/// When the digraph is not WDR, the witness comes from the first non-constant
/// class in the order (max(a,b), a, b) of its distance pair; inside that class
/// the triple whose two counts are smallest (ideally one empty P-set and a
/// singleton) is reported. pair1 is the class's first pair in row-major order
/// and pair2 the first pair whose count differs from it.
WdrReport analyze(const Digraph& d);
WdrReport analyze(const Digraph& d, const DistancePairMatrix& m, const RelationPartition& part);

/// Strict weak order used for witness selection over distance pairs.
bool witness_order_less(DistancePair a, DistancePair b);

struct IdentityCheck {
  bool ok = true;
  std::string failure;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks, over all triples:
///   k_h p^h_{ij} = k_i p^i_{h j*} = k_j p^j_{i* h},
///   k_i k_j = Σ_h k_h p^h_{ij},
///   |{h : p^h_{ij} ≠ 0}| ≤ gcd(k_i, k_j),
///   p^h_{ij} ≤ min(k_i, k_j).
IdentityCheck check_scheme_identities(const IntersectionTensor& t);

/// Row-major n x n integer matrix.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> data;

  static IntMatrix identity(std::size_t n);
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * n + c]; }
  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// 0/1 matrix of a relation class. Throws Error(kUnknownRelation).
IntMatrix relation_matrix(const RelationPartition& part, RelationId id);

/// Compares the products of the relation matrices named on each side; an
/// empty side is the identity. Throws Error(kUnknownRelation).
bool relation_matrix_identity_check(const Digraph& d, const RelationPartition& part,
                                    std::span<const RelationId> lhs, std::span<const RelationId> rhs);
bool relation_matrix_identity_check(const Digraph& d, const RelationPartition& part,
                                    std::span<const DistancePair> lhs, std::span<const DistancePair> rhs);

}  // namespace wdrkit
