#include "wdrkit/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "wdrkit/error.hpp"

namespace wdrkit {

RelationPartition RelationPartition::build(const DistancePairMatrix& m) {
  RelationPartition part;
  part.n_ = m.vertex_count();
  const std::size_t n = part.n_;

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) part.relations_.push_back(m.at(x, y));
  }
  std::sort(part.relations_.begin(), part.relations_.end());
  part.relations_.erase(std::unique(part.relations_.begin(), part.relations_.end()), part.relations_.end());

  part.class_of_.resize(n * n);
  part.pair_count_.assign(part.relations_.size(), 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const RelationId id = part.id_of(m.at(x, y));
      part.class_of_[x * n + y] = id;
      ++part.pair_count_[id];
    }
  }
  part.converse_.resize(part.relations_.size());
  for (RelationId id = 0; id < part.relations_.size(); ++id) {
    part.converse_[id] = part.id_of(part.relations_[id].converse());
  }
  return part;
}

std::optional<RelationId> RelationPartition::find(DistancePair pair) const {
  auto it = std::lower_bound(relations_.begin(), relations_.end(), pair);
  if (it == relations_.end() || *it != pair) return std::nullopt;
  return static_cast<RelationId>(it - relations_.begin());
}

RelationId RelationPartition::id_of(DistancePair pair) const {
  if (auto id = find(pair)) return *id;
  throw Error(ErrorCode::kUnknownRelation, pair.to_string());
}

std::size_t count_paths(const RelationPartition& part, RelationId i, RelationId j, Vertex x, Vertex y) {
  std::size_t count = 0;
  for (Vertex z = 0; z < part.vertex_count(); ++z) {
    if (part.class_of(x, z) == i && part.class_of(z, y) == j) ++count;
  }
  return count;
}

IntersectionTensor::IntersectionTensor(std::vector<DistancePair> relations, std::vector<std::uint32_t> dense,
                                       std::vector<int> valencies)
    : relations_(std::move(relations)), dense_(std::move(dense)), valencies_(std::move(valencies)) {
  const std::size_t r = relations_.size();
  if (dense_.size() != r * r * r || valencies_.size() != r) {
    throw Error(ErrorCode::kSizeMismatch, "tensor dimensions do not match relation count");
  }
  converse_.resize(r);
  for (RelationId id = 0; id < r; ++id) {
    auto it = std::lower_bound(relations_.begin(), relations_.end(), relations_[id].converse());
    if (it == relations_.end() || *it != relations_[id].converse()) {
      throw Error(ErrorCode::kUnknownRelation, "converse of " + relations_[id].to_string());
    }
    converse_[id] = static_cast<RelationId>(it - relations_.begin());
  }
}

bool witness_order_less(DistancePair a, DistancePair b) {
  return std::make_tuple(std::max(a.forward, a.backward), a.forward, a.backward) <
         std::make_tuple(std::max(b.forward, b.backward), b.forward, b.backward);
}

namespace {

// Dense tensors beyond this many relations would not fit comfortably in memory.
constexpr std::size_t kMaxDenseRelations = 400;

// Sparse (key = i*R + j, count) profile of a pair, sorted by key.
using Profile = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

class ProfileBuilder {
 public:
  explicit ProfileBuilder(const RelationPartition& part)
      : part_(part), r_(part.relation_count()), scratch_(r_ * r_, 0) {}

  // Fills the scratch counts for (x,y); touched() lists the nonzero keys.
  void fill(Vertex x, Vertex y) {
    clear();
    for (Vertex z = 0; z < part_.vertex_count(); ++z) {
      const std::uint64_t key = std::uint64_t{part_.class_of(x, z)} * r_ + part_.class_of(z, y);
      if (scratch_[key]++ == 0) touched_.push_back(key);
    }
  }

  Profile profile() {
    std::sort(touched_.begin(), touched_.end());
    Profile out;
    out.reserve(touched_.size());
    for (auto key : touched_) out.emplace_back(key, scratch_[key]);
    return out;
  }

  bool matches(const Profile& reference) {
    if (touched_.size() != reference.size()) return false;
    std::sort(touched_.begin(), touched_.end());
    for (std::size_t idx = 0; idx < touched_.size(); ++idx) {
      if (touched_[idx] != reference[idx].first || scratch_[touched_[idx]] != reference[idx].second) return false;
    }
    return true;
  }

  std::uint32_t count(std::uint64_t key) const { return scratch_[key]; }
  const std::vector<std::uint64_t>& touched() const { return touched_; }

 private:
  void clear() {
    for (auto key : touched_) scratch_[key] = 0;
    touched_.clear();
  }

  const RelationPartition& part_;
  std::size_t r_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::uint64_t> touched_;
};

WdrWitness find_witness(const RelationPartition& part, RelationId h, const std::vector<std::size_t>& rank) {
  const std::size_t n = part.vertex_count();
  const std::size_t r = part.relation_count();
  ProfileBuilder builder(part);

  std::optional<Arc> first_pair;
  std::unordered_map<std::uint64_t, std::uint32_t> first_counts;
  // key -> (first differing pair, its count)
  std::unordered_map<std::uint64_t, std::pair<Arc, std::uint32_t>> differing;

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (part.class_of(x, y) != h) continue;
      builder.fill(x, y);
      if (!first_pair) {
        first_pair = Arc{x, y};
        for (auto key : builder.touched()) first_counts[key] = builder.count(key);
        continue;
      }
      auto note = [&](std::uint64_t key) {
        if (differing.contains(key)) return;
        auto it = first_counts.find(key);
        const std::uint32_t reference = it == first_counts.end() ? 0 : it->second;
        if (builder.count(key) != reference) differing.emplace(key, std::make_pair(Arc{x, y}, builder.count(key)));
      };
      for (auto key : builder.touched()) note(key);
      for (const auto& [key, c] : first_counts) note(key);
    }
  }
  if (differing.empty()) throw Error(ErrorCode::kInvalidParameters, "class has no witness");

  auto score = [&](std::uint64_t key, std::uint32_t other) {
    auto it = first_counts.find(key);
    const std::uint32_t c1 = it == first_counts.end() ? 0 : it->second;
    return std::make_tuple(std::min(c1, other), std::max(c1, other), rank[key / r], rank[key % r]);
  };
  auto best = differing.begin();
  for (auto it = differing.begin(); it != differing.end(); ++it) {
    if (score(it->first, it->second.second) < score(best->first, best->second.second)) best = it;
  }
  const std::uint64_t key = best->first;
  auto c1 = first_counts.find(key);
  WdrWitness w;
  w.h = part.relation(h);
  w.i = part.relation(static_cast<RelationId>(key / r));
  w.j = part.relation(static_cast<RelationId>(key % r));
  w.pair1 = *first_pair;
  w.pair2 = best->second.first;
  w.count1 = c1 == first_counts.end() ? 0 : c1->second;
  w.count2 = best->second.second;
  return w;
}

}  // namespace

WdrReport analyze(const Digraph& d) {
  const auto m = distance_pairs(d);
  return analyze(d, m, relation_partition(m));
}

WdrReport analyze(const Digraph& d, const DistancePairMatrix& m, const RelationPartition& part) {
  WdrReport report;
  report.spec = d.spec();
  report.vertex_count = d.vertex_count();
  report.arc_count = d.arc_count();
  report.relations = part.relations();
  report.girth = d.arc_count() == 0 ? 0 : girth(d, m);
  try {
    report.arc_types = arc_type_census(d, m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotTypeRegular) throw;
  }

  const std::size_t n = d.vertex_count();
  const std::size_t r = part.relation_count();
  if (r > kMaxDenseRelations) {
    throw Error(ErrorCode::kLimitExceeded, std::to_string(r) + " relations exceed the dense tensor limit");
  }

  ProfileBuilder builder(part);
  std::vector<Profile> reference(r);
  std::vector<char> has_reference(r, 0);
  std::vector<char> failed(r, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const RelationId h = part.class_of(x, y);
      if (failed[h]) continue;
      builder.fill(x, y);
      if (!has_reference[h]) {
        reference[h] = builder.profile();
        has_reference[h] = 1;
      } else if (!builder.matches(reference[h])) {
        failed[h] = 1;
      }
    }
  }

  std::vector<RelationId> order(r);
  std::iota(order.begin(), order.end(), RelationId{0});
  std::stable_sort(order.begin(), order.end(), [&](RelationId a, RelationId b) {
    return witness_order_less(part.relation(a), part.relation(b));
  });
  std::vector<std::size_t> rank(r);
  for (std::size_t pos = 0; pos < r; ++pos) rank[order[pos]] = pos;

  for (RelationId h : order) {
    if (failed[h]) {
      report.is_wdr = false;
      report.witness = find_witness(part, h, rank);
      return report;
    }
  }

  report.is_wdr = true;
  std::vector<std::uint32_t> dense(r * r * r, 0);
  bool thin = true;
  for (RelationId h = 0; h < r; ++h) {
    for (const auto& [key, count] : reference[h]) {
      dense[h * r * r + key] = count;
      if (count > 1) thin = false;
    }
  }
  std::vector<int> valencies(r);
  for (RelationId i = 0; i < r; ++i) valencies[i] = static_cast<int>(part.pair_count(i) / n);

  IntersectionTensor tensor(part.relations(), std::move(dense), std::move(valencies));
  bool commutative = true;
  for (RelationId h = 0; h < r && commutative; ++h) {
    for (RelationId i = 0; i < r && commutative; ++i) {
      for (RelationId j = i + 1; j < r; ++j) {
        if (tensor.p(h, i, j) != tensor.p(h, j, i)) {
          commutative = false;
          break;
        }
      }
    }
  }
  report.commutative = commutative;
  report.thin = thin;
  report.tensor = std::move(tensor);
  return report;
}

IdentityCheck check_scheme_identities(const IntersectionTensor& t) {
  const std::size_t r = t.relation_count();
  auto name = [&](RelationId id) { return t.relations()[id].to_string(); };
  auto fail = [&](std::string what) { return IdentityCheck{false, std::move(what)}; };

  for (RelationId h = 0; h < r; ++h) {
    for (RelationId i = 0; i < r; ++i) {
      for (RelationId j = 0; j < r; ++j) {
        const std::int64_t p = t.p(h, i, j);
        const std::string triple = "h=" + name(h) + " i=" + name(i) + " j=" + name(j);
        if (p > std::min(t.valency(i), t.valency(j))) return fail("p exceeds min(k_i,k_j) at " + triple);
        const std::int64_t a = std::int64_t{t.valency(h)} * p;
        const std::int64_t b = std::int64_t{t.valency(i)} * t.p(i, h, t.converse(j));
        const std::int64_t c = std::int64_t{t.valency(j)} * t.p(j, t.converse(i), h);
        if (a != b || a != c) {
          return fail("k_h p^h_ij = k_i p^i_hj* = k_j p^j_i*h fails at " + triple);
        }
      }
    }
  }
  for (RelationId i = 0; i < r; ++i) {
    for (RelationId j = 0; j < r; ++j) {
      std::int64_t sum = 0;
      int support = 0;
      for (RelationId h = 0; h < r; ++h) {
        sum += std::int64_t{t.valency(h)} * t.p(h, i, j);
        if (t.p(h, i, j) != 0) ++support;
      }
      const std::string pair = "i=" + name(i) + " j=" + name(j);
      if (sum != std::int64_t{t.valency(i)} * t.valency(j)) return fail("k_i k_j = sum_h k_h p^h_ij fails at " + pair);
      if (support > std::gcd(t.valency(i), t.valency(j))) return fail("|G_i G_j| > gcd(k_i,k_j) at " + pair);
    }
  }
  return {};
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
  for (std::size_t v = 0; v < n; ++v) m.data[v * n + v] = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (n != rhs.n) throw Error(ErrorCode::kSizeMismatch, "matrix dimensions differ");
  IntMatrix out{n, std::vector<std::int64_t>(n * n, 0)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t a = data[r * n + k];
      if (a == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out.data[r * n + c] += a * rhs.data[k * n + c];
    }
  }
  return out;
}

IntMatrix relation_matrix(const RelationPartition& part, RelationId id) {
  if (id >= part.relation_count()) throw Error(ErrorCode::kUnknownRelation, "relation id " + std::to_string(id));
  const std::size_t n = part.vertex_count();
  IntMatrix m{n, std::vector<std::int64_t>(n * n, 0)};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (part.class_of(x, y) == id) m.data[x * n + y] = 1;
    }
  }
  return m;
}

namespace {

IntMatrix product(const RelationPartition& part, std::span<const RelationId> ids) {
  IntMatrix acc = IntMatrix::identity(part.vertex_count());
  for (RelationId id : ids) acc = acc * relation_matrix(part, id);
  return acc;
}

}  // namespace

bool relation_matrix_identity_check(const Digraph& d, const RelationPartition& part,
                                    std::span<const RelationId> lhs, std::span<const RelationId> rhs) {
  if (d.vertex_count() != part.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "partition does not belong to this digraph");
  }
  return product(part, lhs) == product(part, rhs);
}

bool relation_matrix_identity_check(const Digraph& d, const RelationPartition& part,
                                    std::span<const DistancePair> lhs, std::span<const DistancePair> rhs) {
  std::vector<RelationId> l, r;
  for (auto p : lhs) l.push_back(part.id_of(p));
  for (auto p : rhs) r.push_back(part.id_of(p));
  return relation_matrix_identity_check(d, part, l, r);
}

}  // namespace wdrkit
