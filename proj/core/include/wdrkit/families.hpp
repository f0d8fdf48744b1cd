#pragma once

#include <optional>
#include <span>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "wdrkit/digraph.hpp"
#include "wdrkit/distance.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/scheme.hpp"

namespace wdrkit {

using GroupElement = std::vector<int>;

/// Abelian group Z_{n1} x ... x Z_{nk} with a connection set.
struct CayleySpec {
  std::vector<int> moduli;
  std::vector<GroupElement> connection_set;

  std::size_t order() const;
  std::string to_string() const;  // "cayley:mods=4,3;set=(1,0)(0,1)(2,1)"
};

/// Row-major index of a (reduced) group element.
Vertex group_index(std::span<const int> moduli, std::span<const int> element);
GroupElement group_element(std::span<const int> moduli, Vertex index);
std::string element_label(std::span<const int> element);

/// True when the connection set generates the whole group.
bool generates(const CayleySpec& spec);

/// Arcs x -> x + s. Throws Error(kInvalidParameters) for bad moduli, malformed
/// elements, the identity in S or repeated elements, and
/// Error(kNotStronglyConnected) when S does not generate the group.
Digraph cayley(const CayleySpec& spec);

/// Cay(Z_4 x Z_g, {(1,0),(0,1),(2,1)}); vertex (a,b) has index a*g + b.
Digraph gamma_g(int g);

/// Closed form of ∂̃((0,0),(a,b)) in gamma_g(g), (a,b) != (0,0).
DistancePair gamma_g_distance(int g, int a, int b);

enum class Condition { kNone, kC1, kC2, kC3 };
std::string_view to_string(Condition c);

/// (q, s, k) with s = 2mq + p, 0 <= p < 2q.
class GammaQskParams {
 public:
  /// Requires q > 2, s > 2 and max{1, q-s+2} <= k <= q.
  static bool valid(int q, int s, int k);
  /// Throws Error(kInvalidParameters).
  static GammaQskParams make(int q, int s, int k);

  int q() const noexcept { return q_; }
  int s() const noexcept { return s_; }
  int k() const noexcept { return k_; }
  int m() const noexcept { return s_ / (2 * q_); }
  int p() const noexcept { return s_ % (2 * q_); }
  std::string spec() const;

  /// Index of the vertex (a,b), both reduced first.
  Vertex vertex(long a, long b) const;
  std::pair<int, int> coordinates(Vertex v) const { return {static_cast<int>(v) / s_, static_cast<int>(v) % s_}; }

 private:
  GammaQskParams(int q, int s, int k) : q_(q), s_(s), k_(k) {}
  int q_, s_, k_;
};

Condition classify_c123(const GammaQskParams& params);

/// Vertex set Z_q x Z_s, (a,b) at index a*s + b, with exactly three out-arcs
/// per vertex:
///   (a,b) -> (a+1,b)
///   (a,c) -> (a,c+1)       for c != s-1,  (a,s-1) -> (a-k+1,0)
///   (a,d) -> (a+1,d-1)     for d != 0,    (a,0)   -> (a+k,s-1)
Digraph gamma_qsk(const GammaQskParams& params);

/// f(a,b), g(a,b), h(a) reduced into [0,q).
struct QskResidues {
  int f = 0;
  int g = 0;
  int h = 0;
};
QskResidues qsk_residues(const GammaQskParams& params, int a, int b);

/// Closed form of ∂̃((0,0),(a,b)) in gamma_qsk(params).
DistancePair gamma_qsk_distance(const GammaQskParams& params, int a, int b);

/// Automorphism of gamma_qsk mapping (0,0) to (a,b), as a vertex permutation.
std::vector<Vertex> qsk_translation(const GammaQskParams& params, int a, int b);

/// A member of the classification list, with the labels of other parameter
/// tuples that turned out isomorphic to it.
struct FamilyMember {
  std::string label;
  std::vector<std::string> aliases;
  Digraph digraph;
};

/// Γ_g (g = 3 or g >= 5), Γ_{q,2mq,1}, Γ_{q,mq+2,q} and Γ_{q,2mq-2q+2t,q+1-t}
/// (q >= 3, m >= 1, 2 <= t <= q-1) with at most order_bound vertices, in order
/// of vertex count, deduplicated up to isomorphism.
std::vector<FamilyMember> theorem_families(int order_bound);

/// Source-to-target vertex map.
struct IsoMap {
  std::vector<Vertex> mapping;
};

/// Quantities defining the C3 target. d = d_twice / 2.
struct CayleyTargetParameters {
  int gcd_qp = 0;
  int d_twice = 0;
  int l = 0;
  int h = 0;
  int i = 0;
  int u = 0;
};

struct CayleyTarget {
  Condition condition = Condition::kNone;
  CayleySpec spec;
  IsoMap map;
  CayleyTargetParameters parameters;
};

/// Smallest u >= 0 with 2^i q | (u p - (q,p)), and the period of the
/// solutions. Only meaningful for C3 parameters.
int least_admissible_u(const GammaQskParams& params);
int admissible_u_period(const GammaQskParams& params);

/// Cayley digraph isomorphic to a WDR Γ_{q,s,k} and the explicit vertex map.
/// C1: Z_q x Z_2mq with the identity reshaping; C2: Z_sq with
/// σ(a,b) = a s + b; C3: Z_{2^i q} x Z_{s/2^i} with
/// σ(a,b) = (2^i a + 2^i u d b, i h a + b). `u` overrides the least admissible
/// value and must satisfy the divisibility.
/// Throws Error(kConditionMismatch) when no condition holds.
CayleyTarget cayley_iso_target(const GammaQskParams& params, std::optional<int> u = std::nullopt);

/// Both checks for a WDR Γ_{q,s,k}: the explicit map as a certificate and an
/// independent isomorphism search between the same two digraphs.
struct VerifyIsoResult {
  CayleyTarget target;
  bool explicit_map_ok = false;
  std::optional<IsoCertificate> search;
  bool search_ok = false;

  bool ok() const noexcept { return explicit_map_ok && search_ok; }
};

VerifyIsoResult verify_iso(const GammaQskParams& params, std::optional<int> u = std::nullopt);

/// Vertices x, y with ∂̃(e,x) = ∂̃(e,y) and a probe z in P_{(1,q),∂̃(z,x)}(e,x)
/// while P_{(1,q),∂̃(z,x)}(e,y) is empty, following the four cases for
/// non-WDR parameters.
struct CounterexampleProbe {
  int case_number = 0;
  std::pair<int, int> x;
  std::pair<int, int> y;
  std::pair<int, int> probe;
};

/// Throws Error(kConditionMismatch) when params satisfy C1, C2 or C3.
CounterexampleProbe counterexample_probe(const GammaQskParams& params);

struct ProbeCheck {
  DistancePair to_x;
  DistancePair to_y;
  DistancePair i;
  DistancePair j;
  std::size_t count_x = 0;
  std::size_t count_y = 0;
  bool ok = false;
};

/// Evaluates the probe on the built digraph.
ProbeCheck check_probe(const GammaQskParams& params, const CounterexampleProbe& probe,
                       const RelationPartition& part);

}  // namespace wdrkit
