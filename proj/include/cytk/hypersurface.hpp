#pragma once

// The general degree-d hypersurface X in P(w0,...,w4).

#include <stdexcept>
#include <vector>

#include "cytk/wps.hpp"

namespace cytk {

/// Raised when an operation needs a quasismooth (or Calabi-Yau degree)
/// hypersurface and the weight system does not define one.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ContainedEdge {
  Stratum edge;
  /// gcd of the two free weights; > 1 means the edge lies in P_sing.
  Integer order = 1;
  bool singular() const { return order > 1; }
};

struct SingularCurve {
  Stratum face;
  CyclicQuotientType type;
};

struct SingularLocusReport {
  /// Vertices i with wi > 1 and wi not dividing d.
  std::vector<std::size_t> singular_vertices;
  std::vector<ContainedEdge> contained_edges;
  /// Singular edges of P not contained in X; each meets X in finitely many
  /// singular points (count not computed).
  std::vector<StratumSingularity> edge_point_loci;
  std::vector<SingularCurve> singular_curves;
};

struct C2BoundReport {
  /// d (4q - 2s) / (10 N)
  Rational lower_bound;
  bool positive = false;
};

bool is_quasismooth(const WeightSystem& ws);
bool is_calabi_yau_degree(const WeightSystem& ws);

/// Edges of P whose two free weights do not partition d, in stratum order.
std::vector<ContainedEdge> contained_edges(const WeightSystem& ws);

/// Throws PreconditionError unless is_quasismooth(ws).
SingularLocusReport singular_locus(const WeightSystem& ws);

bool is_smooth_in_codim2(const WeightSystem& ws);
bool is_smooth_in_codim2(const SingularLocusReport& report);

bool contains_no_edge(const WeightSystem& ws);

/// Throws PreconditionError unless is_calabi_yau_degree(ws).
C2BoundReport c2_lower_bound(const WeightSystem& ws);

}  // namespace cytk
