#include "cytk/hypersurface.hpp"

#include <algorithm>
#include <array>

namespace cytk {

namespace {

bool pair_partitions(const WeightSystem& ws, std::size_t a, std::size_t b, Integer target) {
  const std::array<Integer, 2> parts{ws.weight(a), ws.weight(b)};
  return is_partitionable(target, parts);
}

void require_quasismooth(const WeightSystem& ws) {
  if (!is_quasismooth(ws)) throw PreconditionError(ws.to_string() + " is not quasismooth");
}

}  // namespace

bool is_quasismooth(const WeightSystem& ws) {
  const Integer d = ws.degree();
  constexpr std::size_t n = kNumWeights;

  // k = 1: some monomial x_i^a x_j, j possibly equal to i.
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      const Integer rest = d - ws.weight(j);
      found = rest >= 0 && rest % ws.weight(i) == 0;
    }
    if (!found) return false;
  }

  // k = 2: two distinct j with {w_i1, w_i2} partitioning d - w_j.
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      int hits = 0;
      for (std::size_t j = 0; j < n && hits < 2; ++j)
        if (pair_partitions(ws, i1, i2, d - ws.weight(j))) ++hits;
      if (hits < 2) return false;
    }

  // k >= 3: every subset of at least three weights partitions d. Supersets
  // of a partitioning subset partition too, so triples suffice.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const std::array<Integer, 3> parts{ws.weight(a), ws.weight(b), ws.weight(c)};
        if (!is_partitionable(d, parts)) return false;
      }
  return true;
}

bool is_calabi_yau_degree(const WeightSystem& ws) { return ws.degree() == ws.weight_sum(); }

std::vector<ContainedEdge> contained_edges(const WeightSystem& ws) {
  std::vector<ContainedEdge> out;
  for (const auto& s : all_strata()) {
    if (s.kind() != StratumKind::Edge) continue;
    const auto f = s.free();
    if (pair_partitions(ws, f[0], f[1], ws.degree())) continue;
    out.push_back({s, gcd(ws.weight(f[0]), ws.weight(f[1]))});
  }
  return out;
}

SingularLocusReport singular_locus(const WeightSystem& ws) {
  require_quasismooth(ws);
  SingularLocusReport report;
  report.contained_edges = contained_edges(ws);

  for (const auto& sing : singular_strata(ws)) {
    switch (sing.stratum.kind()) {
      case StratumKind::TwoFace:
        report.singular_curves.push_back({sing.stratum, *sing.transverse});
        break;
      case StratumKind::Edge: {
        bool contained = false;
        for (const auto& e : report.contained_edges) contained = contained || e.edge == sing.stratum;
        if (!contained) report.edge_point_loci.push_back(sing);
        break;
      }
      case StratumKind::Vertex: {
        const std::size_t i = sing.stratum.free().front();
        if (ws.degree() % ws.weight(i) != 0) report.singular_vertices.push_back(i);
        break;
      }
    }
  }
  std::sort(report.singular_vertices.begin(), report.singular_vertices.end());
  return report;
}

bool is_smooth_in_codim2(const SingularLocusReport& report) {
  if (!report.singular_curves.empty()) return false;
  for (const auto& e : report.contained_edges)
    if (e.singular()) return false;
  return true;
}

bool is_smooth_in_codim2(const WeightSystem& ws) { return is_smooth_in_codim2(singular_locus(ws)); }

bool contains_no_edge(const WeightSystem& ws) {
  require_quasismooth(ws);
  return contained_edges(ws).empty();
}

C2BoundReport c2_lower_bound(const WeightSystem& ws) {
  if (!is_calabi_yau_degree(ws))
    throw PreconditionError(ws.to_string() + " does not have degree equal to the weight sum");
  const BigInt d = ws.degree();
  const BigInt numerator = d * (4 * ws.square_sum() - 2 * ws.pair_sum());
  const BigInt denominator = 10 * ws.weight_product();
  C2BoundReport out;
  out.lower_bound = Rational(numerator, denominator);
  out.positive = out.lower_bound > 0;
  return out;
}

}  // namespace cytk
