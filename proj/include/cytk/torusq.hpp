#pragma once

// Finite groups of affine automorphisms of a complex 2-torus C^2/L, written
// in coordinates of a lattice basis of L, and the du Val singularities of
// the quotient surface.

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cytk/arith.hpp"
#include "cytk/surface.hpp"

namespace cytk {

inline constexpr std::size_t kDefaultGroupCap = 48;

class TorusError : public std::runtime_error {
 public:
  enum class Kind {
    NotInvertible,
    NotFinite,
    ContainsTranslation,
    ForbiddenOrder,
    NonCanonical,
    MultipleInvolutions,
    InfiniteFixedPoints,
    UnrecognizedStabilizer,
    Malformed,
  };
  TorusError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// x -> M x + t (mod Z^4), M a 4x4 integer matrix with |det M| = 1.
class AffineTorusMap {
 public:
  /// Reduces t into [0,1)^4. Throws TorusError (NotInvertible or Malformed).
  AffineTorusMap(IntMatrix linear, RationalVector translation = RationalVector(4, 0));

  static AffineTorusMap identity();

  const IntMatrix& linear() const { return linear_; }
  const RationalVector& translation() const { return translation_; }

  bool is_identity() const;
  bool has_identity_linear_part() const;

  /// (this o other)(x) = this(other(x))
  AffineTorusMap compose(const AffineTorusMap& other) const;
  /// Image of x, reduced into [0,1)^4.
  RationalVector apply(const RationalVector& x) const;

  friend bool operator==(const AffineTorusMap&, const AffineTorusMap&) = default;
  friend bool operator<(const AffineTorusMap& a, const AffineTorusMap& b);

 private:
  IntMatrix linear_;
  RationalVector translation_;
};

/// Smallest n >= 1 with g^n = id; throws NotFinite past cap.
std::size_t element_order(const AffineTorusMap& g, std::size_t cap = kDefaultGroupCap);

class TorusAction {
 public:
  const std::string& label() const { return label_; }
  const std::vector<AffineTorusMap>& generators() const { return generators_; }
  /// Sorted; the identity comes first.
  const std::vector<AffineTorusMap>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// Element orders, parallel to elements().
  const std::vector<std::size_t>& element_orders() const { return orders_; }

 private:
  friend TorusAction close_group(const std::vector<AffineTorusMap>&, std::string, std::size_t);
  std::string label_;
  std::vector<AffineTorusMap> generators_;
  std::vector<AffineTorusMap> elements_;
  std::vector<std::size_t> orders_;
};

/// Breadth-first closure followed by validation, in this order: no
/// nontrivial pure translation, element orders in {1,2,3,4,6}, at most one
/// involution, characteristic polynomial of each linear part matching its
/// order.
TorusAction close_group(const std::vector<AffineTorusMap>& generators, std::string label = {},
                        std::size_t cap = kDefaultGroupCap);

/// Solutions of (M - I) x = -t mod Z^4, sorted. Empty if there are none;
/// throws InfiniteFixedPoints when det(M - I) = 0 and solutions exist.
std::vector<RationalVector> fixed_points(const AffineTorusMap& g);

struct StabilizerClass {
  std::string group;  // "Z2", "Z3", "Z4", "Z6", "BD8", "BD12", "BT24"
  DuValType type;
};

/// Recognizes a stabilizer from its order and element-order histogram.
std::optional<StabilizerClass> recognize_stabilizer(std::size_t order,
                                                    const std::map<std::size_t, std::size_t>& histogram);

struct QuotientOrbit {
  std::vector<RationalVector> points;  // sorted, first is the representative
  std::size_t stabilizer_order = 0;
  std::map<std::size_t, std::size_t> stabilizer_histogram;  // element order -> count
  std::string group;
  DuValType type;
};

struct QuotientReport {
  std::string label;
  std::size_t group_order = 0;
  /// element order -> number of fixed points of each element of that order,
  /// one entry per distinct count
  std::map<std::size_t, std::vector<std::size_t>> fixed_point_counts;
  std::vector<QuotientOrbit> orbits;
  DuValMultiset multiset;
};

QuotientReport quotient_singularities(const TorusAction& action);

struct BuiltinAction {
  std::string name;
  int entry;  // index into classitor_entries(), 1-based
  std::string lattice;
  std::vector<AffineTorusMap> generators;
};

/// The ten actions realizing the configurations of classitor_entries().
const std::vector<BuiltinAction>& builtin_actions();
const BuiltinAction* find_builtin(const std::string& name);

/// { "label": str, "generators": [ { "linear": [[int;4];4], "translation": ["p/q";4] } ] }
/// Returns the label and generators; throws TorusError (Malformed) on bad input.
std::pair<std::string, std::vector<AffineTorusMap>> read_action(std::istream& in);
std::string write_action(const std::string& label, const std::vector<AffineTorusMap>& generators);

}  // namespace cytk
