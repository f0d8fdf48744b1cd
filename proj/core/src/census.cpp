#include "wdrkit/census.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "wdrkit/distance.hpp"
#include "wdrkit/error.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/parallel.hpp"
#include "wdrkit/scheme.hpp"

namespace wdrkit {
namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of e into non-increasing parts.
std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  rec(e, e);
  return out;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

struct RawHit {
  CayleySpec spec;
  Digraph digraph;
  ArcTypeCensus arc_types;
  std::size_t relation_count = 0;
  std::vector<std::uint32_t> valencies;
};

struct GroupJob {
  std::vector<int> moduli;
  CensusCounts counts;
  std::vector<RawHit> hits;
};

void scan_group(GroupJob& job) {
  const Vertex n = static_cast<Vertex>(std::accumulate(job.moduli.begin(), job.moduli.end(), 1, std::multiplies<>()));
  std::vector<GroupElement> elements;
  for (Vertex v = 1; v < n; ++v) elements.push_back(group_element(job.moduli, v));
  const std::size_t e = elements.size();
  for (std::size_t a = 0; a < e; ++a) {
    for (std::size_t b = a + 1; b < e; ++b) {
      for (std::size_t c = b + 1; c < e; ++c) {
        ++job.counts.subsets;
        CayleySpec spec{job.moduli, {elements[a], elements[b], elements[c]}};
        if (!generates(spec)) {
          ++job.counts.not_strongly_connected;
          continue;
        }
        Digraph d = cayley(spec);
        const auto m = DistancePairMatrix::compute(d);
        if (girth(d, m) <= 2) {
          ++job.counts.girth_two;
          continue;
        }
        auto types = arc_type_census(d, m);
        if (types.type_count() != 2) {
          ++job.counts.wrong_arc_types;
          continue;
        }
        const auto part = RelationPartition::build(m);
        const auto report = analyze(d, m, part);
        if (!report.is_wdr) {
          ++job.counts.not_wdr;
          continue;
        }
        ++job.counts.raw_hits;
        std::vector<std::uint32_t> valencies;
        for (RelationId id = 0; id < part.relation_count(); ++id) valencies.push_back(report.tensor->valency(id));
        std::sort(valencies.begin(), valencies.end());
        job.hits.push_back({std::move(spec), std::move(d), std::move(types), part.relation_count(), std::move(valencies)});
      }
    }
  }
}

void add_counts(CensusCounts& into, const CensusCounts& from) {
  into.groups += from.groups;
  into.subsets += from.subsets;
  into.not_strongly_connected += from.not_strongly_connected;
  into.girth_two += from.girth_two;
  into.wrong_arc_types += from.wrong_arc_types;
  into.not_wdr += from.not_wdr;
  into.raw_hits += from.raw_hits;
}

}  // namespace

std::vector<std::vector<int>> abelian_group_shapes(int order) {
  if (order < 1) throw Error(ErrorCode::kInvalidParameters, "group order must be positive");
  std::vector<std::vector<int>> shapes{{}};
  for (auto [p, e] : factorize(order)) {
    std::vector<std::vector<int>> next;
    for (const auto& shape : shapes) {
      for (const auto& lambda : partitions(e)) {
        // shape holds factors largest first; the j-th largest factor absorbs p^lambda_j
        std::vector<int> merged = shape;
        if (merged.size() < lambda.size()) merged.resize(lambda.size(), 1);
        for (std::size_t j = 0; j < lambda.size(); ++j) merged[j] *= ipow(p, lambda[j]);
        next.push_back(std::move(merged));
      }
    }
    shapes = std::move(next);
  }
  for (auto& shape : shapes) std::reverse(shape.begin(), shape.end());
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

std::size_t CensusResult::unmatched() const {
  return static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(), [](const CensusHit& h) { return h.matched.empty(); }));
}

CensusResult run_census(const CensusSpec& spec) {
  if (spec.max_order > spec.cap) {
    throw Error(ErrorCode::kLimitExceeded,
                "max order " + std::to_string(spec.max_order) + " exceeds census cap " + std::to_string(spec.cap));
  }
  if (spec.max_order < 1) throw Error(ErrorCode::kInvalidParameters, "max order must be positive");

  std::vector<GroupJob> jobs;
  // Three distinct nonidentity elements need at least four group elements.
  for (int order = 4; order <= spec.max_order; ++order) {
    for (auto& shape : abelian_group_shapes(order)) jobs.push_back({shape, {}, {}});
  }
  // Larger groups first keeps the work queue balanced; results are merged by
  // job index afterwards, so the order of the output does not change.
  std::vector<std::size_t> schedule(jobs.size());
  std::iota(schedule.begin(), schedule.end(), 0);
  std::reverse(schedule.begin(), schedule.end());
  parallel_for(jobs.size(), spec.jobs, [&](std::size_t idx) { scan_group(jobs[schedule[idx]]); });

  CensusResult result;
  result.max_order = spec.max_order;
  using Key = std::tuple<Vertex, std::map<DistancePair, int>, std::size_t, std::vector<std::uint32_t>>;
  std::map<Key, std::vector<std::size_t>> buckets;
  std::vector<RawHit> representatives;
  for (auto& job : jobs) {
    ++job.counts.groups;
    add_counts(result.counts, job.counts);
    for (auto& hit : job.hits) {
      Key key{hit.digraph.vertex_count(), hit.arc_types.valency, hit.relation_count, hit.valencies};
      auto& bucket = buckets[key];
      bool folded = false;
      for (std::size_t rep : bucket) {
        if (are_isomorphic(representatives[rep].digraph, hit.digraph)) {
          ++result.hits[rep].multiplicity;
          folded = true;
          break;
        }
      }
      if (folded) continue;
      bucket.push_back(representatives.size());
      CensusHit out;
      out.spec = hit.spec;
      out.order = static_cast<int>(hit.digraph.vertex_count());
      out.digraph = hit.digraph;
      result.hits.push_back(std::move(out));
      representatives.push_back(std::move(hit));
    }
  }

  const auto members = theorem_families(spec.max_order);
  for (auto& hit : result.hits) {
    for (const auto& member : members) {
      if (static_cast<int>(member.digraph.vertex_count()) != hit.order) continue;
      if (are_isomorphic(hit.digraph, member.digraph)) {
        hit.matched = member.label;
        break;
      }
    }
  }
  std::stable_sort(result.hits.begin(), result.hits.end(),
                   [](const CensusHit& a, const CensusHit& b) { return a.order < b.order; });
  return result;
}

}  // namespace wdrkit
