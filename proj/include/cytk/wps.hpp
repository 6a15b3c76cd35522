#pragma once

// Weighted projective 4-space P(w0,...,w4) and its coordinate strata.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cytk/arith.hpp"

namespace cytk {

inline constexpr std::size_t kNumWeights = 5;

/// Degree d together with five positive weights, stored in the given order.
/// Construction enforces gcd(w) = 1 and d >= max(w); violations throw
/// std::invalid_argument.
class WeightSystem {
 public:
  WeightSystem(Integer degree, std::array<Integer, kNumWeights> weights);

  Integer degree() const { return degree_; }
  const std::array<Integer, kNumWeights>& weights() const { return weights_; }
  Integer weight(std::size_t i) const { return weights_[i]; }

  Integer weight_sum() const;
  /// N = w0 * ... * w4
  BigInt weight_product() const;
  /// s = sum_{i<j} wi wj
  BigInt pair_sum() const;
  /// q = sum wi^2
  BigInt square_sum() const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  Integer degree_;
  std::array<Integer, kNumWeights> weights_;
};

enum class StratumKind { TwoFace, Edge, Vertex };

std::string to_string(StratumKind kind);

/// Coordinate stratum of P, given by the set J of vanishing coordinates
/// (2 <= |J| <= 4), stored as a bitmask.
class Stratum {
 public:
  explicit Stratum(std::vector<std::size_t> zeroed);

  static Stratum from_mask(unsigned mask);

  unsigned mask() const { return mask_; }
  std::vector<std::size_t> zeroed() const;
  std::vector<std::size_t> free() const;
  StratumKind kind() const;

  /// "{0,1,4}"
  std::string to_string() const;

  friend bool operator==(const Stratum&, const Stratum&) = default;
  /// |J| ascending, then J lexicographic.
  friend std::strong_ordering operator<=>(const Stratum& a, const Stratum& b);

 private:
  unsigned mask_ = 0;
};

/// All 25 strata (10 two-faces, 10 edges, 5 vertices) in canonical order.
const std::vector<Stratum>& all_strata();

/// The germ C^2 / Z_m with generator acting by (zeta^a, zeta^b). Equality is
/// up to swapping the weights and rescaling both by a unit mod m.
class CyclicQuotientType {
 public:
  CyclicQuotientType(Integer order, Integer a, Integer b);

  Integer order() const { return order_; }
  Integer a() const { return a_; }
  Integer b() const { return b_; }

  /// Representative with the lexicographically smallest (a, b).
  CyclicQuotientType canonical() const;

  /// Canonical display, e.g. "1/17(1,16)".
  std::string to_string() const;
  /// The weights as constructed, e.g. "1/17(6,11)".
  std::string raw_string() const;

  friend bool operator==(const CyclicQuotientType& x, const CyclicQuotientType& y);

 private:
  Integer order_;
  Integer a_;
  Integer b_;
};

/// Ambient singularity along a stratum. For two-faces `transverse` carries
/// the cyclic type of the corresponding curve on a general hypersurface;
/// edges and vertices only carry the order marker.
struct StratumSingularity {
  Stratum stratum;
  Integer order = 1;
  std::optional<CyclicQuotientType> transverse;
};

bool is_wellformed_hypersurface(const WeightSystem& ws);

/// nullopt when the stratum is not in P_sing.
std::optional<StratumSingularity> stratum_singularity(const WeightSystem& ws, const Stratum& s);

/// Every singular stratum of P, in canonical stratum order.
std::vector<StratumSingularity> singular_strata(const WeightSystem& ws);

}  // namespace cytk
