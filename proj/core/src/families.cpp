#include "wdrkit/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wdrkit/error.hpp"
#include "wdrkit/iso.hpp"

namespace wdrkit {
namespace {

int mod(long value, long modulus) {
  const long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

int pow2(int e) { return 1 << e; }

}  // namespace

std::size_t CayleySpec::order() const {
  std::size_t n = 1;
  for (int m : moduli) n *= static_cast<std::size_t>(m);
  return n;
}

std::string CayleySpec::to_string() const {
  std::ostringstream os;
  os << "cayley:mods=";
  for (std::size_t idx = 0; idx < moduli.size(); ++idx) os << (idx ? "," : "") << moduli[idx];
  os << ";set=";
  for (const auto& e : connection_set) os << element_label(e);
  return os.str();
}

Vertex group_index(std::span<const int> moduli, std::span<const int> element) {
  std::size_t index = 0;
  for (std::size_t c = 0; c < moduli.size(); ++c) index = index * moduli[c] + mod(element[c], moduli[c]);
  return static_cast<Vertex>(index);
}

GroupElement group_element(std::span<const int> moduli, Vertex index) {
  GroupElement e(moduli.size());
  std::size_t rest = index;
  for (std::size_t c = moduli.size(); c-- > 0;) {
    e[c] = static_cast<int>(rest % moduli[c]);
    rest /= moduli[c];
  }
  return e;
}

std::string element_label(std::span<const int> element) {
  std::string out = "(";
  for (std::size_t c = 0; c < element.size(); ++c) out += (c ? "," : "") + std::to_string(element[c]);
  return out + ")";
}

namespace {

void validate(const CayleySpec& spec) {
  if (spec.moduli.empty()) throw Error(ErrorCode::kInvalidParameters, "no moduli");
  for (int m : spec.moduli) {
    if (m < 1) throw Error(ErrorCode::kInvalidParameters, "modulus " + std::to_string(m) + " < 1");
  }
  std::vector<Vertex> seen;
  for (const auto& e : spec.connection_set) {
    if (e.size() != spec.moduli.size()) {
      throw Error(ErrorCode::kInvalidParameters, "element " + element_label(e) + " has the wrong arity");
    }
    const Vertex idx = group_index(spec.moduli, e);
    if (idx == 0) throw Error(ErrorCode::kInvalidParameters, "identity element in connection set");
    if (std::find(seen.begin(), seen.end(), idx) != seen.end()) {
      throw Error(ErrorCode::kInvalidParameters, "repeated element " + element_label(e));
    }
    seen.push_back(idx);
  }
}

// Index of x + s for all x, computed coordinate-wise.
std::vector<Vertex> translate_all(const std::vector<int>& moduli, std::span<const int> s) {
  const std::size_t n = std::accumulate(moduli.begin(), moduli.end(), std::size_t{1}, std::multiplies<>());
  std::vector<Vertex> out(n);
  GroupElement e(moduli.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t target = 0;
    for (std::size_t c = 0; c < moduli.size(); ++c) target = target * moduli[c] + mod(e[c] + s[c], moduli[c]);
    out[idx] = static_cast<Vertex>(target);
    for (std::size_t c = moduli.size(); c-- > 0;) {
      if (++e[c] < moduli[c]) break;
      e[c] = 0;
    }
  }
  return out;
}

}  // namespace

bool generates(const CayleySpec& spec) {
  const std::size_t n = spec.order();
  std::vector<std::vector<Vertex>> shifts;
  for (const auto& s : spec.connection_set) shifts.push_back(translate_all(spec.moduli, s));
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const auto& shift : shifts) {
      if (!seen[shift[x]]) {
        seen[shift[x]] = 1;
        ++count;
        stack.push_back(shift[x]);
      }
    }
  }
  return count == n;
}

Digraph cayley(const CayleySpec& spec) {
  validate(spec);
  if (!generates(spec)) {
    throw Error(ErrorCode::kNotStronglyConnected,
                "connection set does not generate the group (" + spec.to_string() + ")");
  }
  const std::size_t n = spec.order();
  std::vector<Arc> arcs;
  arcs.reserve(n * spec.connection_set.size());
  for (const auto& s : spec.connection_set) {
    const auto shift = translate_all(spec.moduli, s);
    for (Vertex x = 0; x < n; ++x) arcs.push_back({x, shift[x]});
  }
  std::vector<std::string> labels(n);
  for (Vertex x = 0; x < n; ++x) labels[x] = element_label(group_element(spec.moduli, x));
  return Digraph::from_arcs(n, arcs).with_metadata(std::move(labels), spec.to_string());
}

Digraph gamma_g(int g) {
  if (g < 3) throw Error(ErrorCode::kInvalidParameters, "gamma-g needs g >= 3, got " + std::to_string(g));
  CayleySpec spec{{4, g}, {{1, 0}, {0, 1}, {2, 1}}};
  auto d = cayley(spec);
  auto labels = d.labels();
  return std::move(d).with_metadata(std::move(labels), "gamma-g:g=" + std::to_string(g));
}

DistancePair gamma_g_distance(int g, int a, int b) {
  a = mod(a, 4);
  b = mod(b, g);
  if (a == 0 && b == 0) throw Error(ErrorCode::kInvalidParameters, "(0,0) has no closed-form distance pair");
  if (b == 0) return {a, 4 - a};
  const int beta = a % 2;  // (1 + (-1)^{a+1}) / 2
  return {b + beta, g - b + beta};
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::kC1: return "C1";
    case Condition::kC2: return "C2";
    case Condition::kC3: return "C3";
    case Condition::kNone: break;
  }
  return "None";
}

bool GammaQskParams::valid(int q, int s, int k) {
  return q > 2 && s > 2 && k >= std::max(1, q - s + 2) && k <= q;
}

GammaQskParams GammaQskParams::make(int q, int s, int k) {
  if (!valid(q, s, k)) {
    throw Error(ErrorCode::kInvalidParameters, "gamma-qsk needs q > 2, s > 2, max{1,q-s+2} <= k <= q; got q=" +
                                                   std::to_string(q) + " s=" + std::to_string(s) +
                                                   " k=" + std::to_string(k));
  }
  return GammaQskParams(q, s, k);
}

std::string GammaQskParams::spec() const {
  return "gamma-qsk:q=" + std::to_string(q_) + ",s=" + std::to_string(s_) + ",k=" + std::to_string(k_);
}

Vertex GammaQskParams::vertex(long a, long b) const {
  return static_cast<Vertex>(mod(a, q_) * s_ + mod(b, s_));
}

Condition classify_c123(const GammaQskParams& params) {
  const int q = params.q(), k = params.k(), p = params.p();
  if (p == 0 && k == 1) return Condition::kC1;
  if ((p == q + 2 || p == 2) && k == q) return Condition::kC2;
  if (p >= 4 && p <= 2 * q - 2 && p % 2 == 0 && k == q + 1 - p / 2) return Condition::kC3;
  return Condition::kNone;
}

Digraph gamma_qsk(const GammaQskParams& params) {
  const int q = params.q(), s = params.s(), k = params.k();
  const std::size_t n = static_cast<std::size_t>(q) * s;
  std::vector<Arc> arcs;
  arcs.reserve(3 * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < s; ++b) {
      const Vertex v = params.vertex(a, b);
      labels[v] = element_label(std::vector<int>{a, b});
      const Vertex outs[3] = {
          params.vertex(a + 1, b),
          b != s - 1 ? params.vertex(a, b + 1) : params.vertex(a - k + 1, 0),
          b != 0 ? params.vertex(a + 1, b - 1) : params.vertex(a + k, s - 1),
      };
      for (Vertex w : outs) arcs.push_back({v, w});
    }
  }
  auto d = Digraph::from_arcs(n, arcs).with_metadata(std::move(labels), params.spec());
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != 3) {
      throw Error(ErrorCode::kInvalidParameters, params.spec() + ": vertex " + std::to_string(v) +
                                                     " does not have three distinct out-neighbours");
    }
  }
  return d;
}

QskResidues qsk_residues(const GammaQskParams& params, int a, int b) {
  const int q = params.q();
  a = mod(a, q);
  b = mod(b, params.s());
  return {mod(a + b - params.k() - params.p() + 1, q), mod(q - a - b, q), mod(params.k() - a - 1, q)};
}

DistancePair gamma_qsk_distance(const GammaQskParams& params, int a, int b) {
  const int s = params.s();
  a = mod(a, params.q());
  b = mod(b, s);
  if (a == 0 && b == 0) return {0, 0};
  const auto r = qsk_residues(params, a, b);
  return {std::min(a + b, s - b + r.f), std::min(b + r.g, s - b + r.h)};
}

std::vector<Vertex> qsk_translation(const GammaQskParams& params, int a, int b) {
  const int q = params.q(), s = params.s(), k = params.k();
  a = mod(a, q);
  b = mod(b, s);
  std::vector<Vertex> perm(static_cast<std::size_t>(q) * s);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < s; ++y) {
      perm[params.vertex(x, y)] = y <= s - 1 - b ? params.vertex(x + a, y + b) : params.vertex(x + a - k + 1, y + b);
    }
  }
  return perm;
}

std::vector<FamilyMember> theorem_families(int order_bound) {
  struct Candidate {
    std::size_t order;
    std::string label;
    Digraph digraph;
  };
  std::vector<Candidate> candidates;
  for (int g = 3; 4 * g <= order_bound; ++g) {
    if (g != 4) candidates.push_back({static_cast<std::size_t>(4 * g), "gamma-g:g=" + std::to_string(g), gamma_g(g)});
  }
  auto add_qsk = [&](int q, int s, int k) {
    if (static_cast<long>(q) * s > order_bound) return;
    const auto params = GammaQskParams::make(q, s, k);
    candidates.push_back({static_cast<std::size_t>(q) * s, params.spec(), gamma_qsk(params)});
  };
  // The smallest member for a given q is Γ_{q,4,q-1} with 4q vertices.
  for (int q = 3; 4 * q <= order_bound; ++q) {
    for (int m = 1; q * (m * q + 2) <= order_bound || q * (2 * (m - 1) * q + 4) <= order_bound; ++m) {
      add_qsk(q, 2 * m * q, 1);
      add_qsk(q, m * q + 2, q);
      for (int t = 2; t <= q - 1; ++t) add_qsk(q, 2 * m * q - 2 * q + 2 * t, q + 1 - t);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.order < b.order; });

  std::vector<FamilyMember> members;
  for (auto& c : candidates) {
    bool duplicate = false;
    for (auto& member : members) {
      if (member.digraph.vertex_count() != c.order) continue;
      if (member.label == c.label) {
        duplicate = true;
        break;
      }
      if (are_isomorphic(member.digraph, c.digraph)) {
        member.aliases.push_back(c.label);
        duplicate = true;
        break;
      }
    }
    if (!duplicate) members.push_back({c.label, {}, std::move(c.digraph)});
  }
  return members;
}

namespace {

CayleyTargetParameters c3_parameters(const GammaQskParams& params) {
  const int q = params.q(), p = params.p(), s = params.s();
  CayleyTargetParameters t;
  t.gcd_qp = std::gcd(q, p);
  t.d_twice = p / t.gcd_qp;
  while (t.gcd_qp % pow2(t.l + 1) == 0) ++t.l;
  t.h = s / pow2(t.l);
  t.i = t.d_twice % 2;  // 2 * fractional part of d
  return t;
}

}  // namespace

int least_admissible_u(const GammaQskParams& params) {
  const auto t = c3_parameters(params);
  const int modulus = pow2(t.i) * params.q();
  for (int u = 0; u < modulus; ++u) {
    if (mod(static_cast<long>(u) * params.p() - t.gcd_qp, modulus) == 0) return u;
  }
  throw Error(ErrorCode::kInvalidParameters, params.spec() + ": no admissible u");
}

int admissible_u_period(const GammaQskParams& params) {
  const auto t = c3_parameters(params);
  return pow2(t.i) * params.q() / std::gcd(pow2(t.i) * params.q(), params.p());
}

CayleyTarget cayley_iso_target(const GammaQskParams& params, std::optional<int> u) {
  const int q = params.q(), s = params.s();
  CayleyTarget target;
  target.condition = classify_c123(params);
  std::vector<std::pair<int, int>> images;  // source vertex -> coordinates
  images.reserve(static_cast<std::size_t>(q) * s);

  switch (target.condition) {
    case Condition::kNone:
      throw Error(ErrorCode::kConditionMismatch, params.spec() + " satisfies none of C1, C2, C3");
    case Condition::kC1:
      target.spec = {{q, s}, {{1, 0}, {0, 1}, {1, s - 1}}};
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < s; ++b) images.emplace_back(a, b);
      }
      break;
    case Condition::kC2:
      target.spec = {{q * s}, {{1}, {s}, {s - 1}}};
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < s; ++b) images.emplace_back(a * s + b, 0);
      }
      break;
    case Condition::kC3: {
      auto t = c3_parameters(params);
      const int modulus = pow2(t.i) * q;
      t.u = u.value_or(least_admissible_u(params));
      if (mod(static_cast<long>(t.u) * params.p() - t.gcd_qp, modulus) != 0) {
        throw Error(ErrorCode::kInvalidParameters, "u=" + std::to_string(t.u) + " is not admissible for " +
                                                       params.spec());
      }
      // 2^i u d, an integer because 2^i d is.
      const int scaled = t.u * (pow2(t.i) * t.d_twice / 2);
      const int second = s / pow2(t.i);
      target.spec = {{modulus, second},
                     {{mod(pow2(t.i), modulus), mod(t.i * t.h, second)},
                      {mod(scaled, modulus), mod(1, second)},
                      {mod(pow2(t.i) - scaled, modulus), mod(t.i * t.h - 1, second)}}};
      for (int a = 0; a < q; ++a) {
        for (int b = 0; b < s; ++b) {
          images.emplace_back(mod(static_cast<long>(pow2(t.i)) * a + static_cast<long>(scaled) * b, modulus),
                              mod(static_cast<long>(t.i) * t.h * a + b, second));
        }
      }
      target.parameters = t;
      break;
    }
  }

  target.map.mapping.reserve(images.size());
  for (const auto& [x, y] : images) {
    if (target.spec.moduli.size() == 1) {
      target.map.mapping.push_back(group_index(target.spec.moduli, std::vector<int>{x}));
    } else {
      target.map.mapping.push_back(group_index(target.spec.moduli, std::vector<int>{x, y}));
    }
  }
  return target;
}

CounterexampleProbe counterexample_probe(const GammaQskParams& params) {
  if (classify_c123(params) != Condition::kNone) {
    throw Error(ErrorCode::kConditionMismatch, params.spec() + " satisfies " +
                                                   std::string(to_string(classify_c123(params))));
  }
  const int q = params.q(), s = params.s(), k = params.k(), m = params.m(), p = params.p();
  const int t = p / q;
  // Doubled alpha(v) = (3 + (-1)^v) / 2: 2 for even v, 1 for odd v.
  auto alpha2 = [](int v) { return v % 2 == 0 ? 2 : 1; };
  const int sign = t % 2 == 0 ? 1 : -1;
  const int x2 = 2 * k + p;
  const int lower = sign * alpha2(p) + 2 + q * t;
  const int upper = 2 * q - alpha2(p) + 2;

  CounterexampleProbe probe;
  if (k != q && lower < x2 && x2 <= upper) {
    probe.case_number = 1;
    probe.x = {0, (alpha2(s) + s) / 2};
    probe.y = {(2 * q + alpha2(p) + 2 - 2 * k - p) / 2, (m - 1) * q + p + k - 1};
    probe.probe = {0, 1};
  } else if (k != q && (x2 <= lower || 2 * q - alpha2(p) + 4 <= x2)) {
    probe.case_number = 2;
    probe.x = {k, (alpha2(s) - 2 + s) / 2};
    probe.y = {k, (alpha2(s) + s) / 2};
    probe.probe = {k, s - 1};
  } else if (k == q && 3 <= p && p <= q + 1) {
    probe.case_number = 3;
    probe.x = {q - 2, m * q + 2};
    probe.y = {q - 2, m * q + 1};
    probe.probe = {0, 1};
  } else if (k == q && (p <= 1 || q + 3 <= p)) {
    probe.case_number = 4;
    probe.x = {q - 1, m * q - t * q + p};
    probe.y = {0, m * q + t * q};
    probe.probe = {0, 1};
  } else {
    throw Error(ErrorCode::kConditionMismatch, params.spec() + " falls in no probe case");
  }
  auto reduce = [&](std::pair<int, int> v) { return std::pair<int, int>{mod(v.first, q), mod(v.second, s)}; };
  probe.x = reduce(probe.x);
  probe.y = reduce(probe.y);
  probe.probe = reduce(probe.probe);
  return probe;
}

ProbeCheck check_probe(const GammaQskParams& params, const CounterexampleProbe& probe,
                       const RelationPartition& part) {
  const Vertex e = 0;
  const Vertex x = params.vertex(probe.x.first, probe.x.second);
  const Vertex y = params.vertex(probe.y.first, probe.y.second);
  const Vertex z = params.vertex(probe.probe.first, probe.probe.second);
  ProbeCheck check;
  check.to_x = part.relation(part.class_of(e, x));
  check.to_y = part.relation(part.class_of(e, y));
  const RelationId i = part.class_of(e, z);
  const RelationId j = part.class_of(z, x);
  check.i = part.relation(i);
  check.j = part.relation(j);
  check.count_x = count_paths(part, i, j, e, x);
  check.count_y = count_paths(part, i, j, e, y);
  check.ok = check.to_x == check.to_y && check.count_x != check.count_y;
  return check;
}

VerifyIsoResult verify_iso(const GammaQskParams& params, std::optional<int> u) {
  VerifyIsoResult result;
  result.target = cayley_iso_target(params, u);
  const Digraph source = gamma_qsk(params);
  const Digraph target = cayley(result.target.spec);
  result.explicit_map_ok = verify_certificate(source, target, IsoCertificate{result.target.map.mapping});
  result.search = are_isomorphic(source, target);
  result.search_ok = result.search.has_value() && verify_certificate(source, target, *result.search);
  return result;
}

}  // namespace wdrkit
