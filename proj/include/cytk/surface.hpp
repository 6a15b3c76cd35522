#pragma once

// Du Val surfaces with trivial canonical class: the orbifold second Chern
// class c2 = 24 - sum_x (k_x + 1 - 1/r_x) and the list of the ten
// configurations realized by quotients of abelian surfaces.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cytk/arith.hpp"

namespace cytk {

enum class DuValFamily { A, D, E };

/// A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
class DuValType {
 public:
  DuValType(DuValFamily family, int index);

  DuValFamily family() const { return family_; }
  int index() const { return index_; }

  /// Number of (-2)-curves in the minimal resolution.
  int k() const { return index_; }
  /// Order of the local group: n+1, 4(n-2), 24, 48, 120.
  Integer r() const;
  /// k + 1 - 1/r
  Rational deficiency() const;

  std::string to_string() const;

  friend auto operator<=>(const DuValType&, const DuValType&) = default;

 private:
  DuValFamily family_;
  int index_;
};

class MultisetSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuValMultiset {
 public:
  DuValMultiset() = default;

  /// Grammar: [count]FAMILYindex joined by '+', e.g. "2A3+11A1", "E6+D4+4A2+A1".
  /// The empty string is the empty multiset.
  static DuValMultiset parse(std::string_view text);

  void add(const DuValType& type, std::size_t count = 1);

  /// (type, multiplicity) in canonical (family, index) order.
  const std::map<DuValType, std::size_t>& entries() const { return counts_; }
  std::size_t size() const;
  bool empty() const { return counts_.empty(); }
  /// sum of k_x
  Integer total_k() const;

  /// Largest types first, e.g. "E6+D4+4A2+A1"; "0" for the empty multiset.
  std::string to_string() const;

  friend DuValMultiset operator+(DuValMultiset a, const DuValMultiset& b);
  friend bool operator==(const DuValMultiset&, const DuValMultiset&) = default;
  friend auto operator<=>(const DuValMultiset& a, const DuValMultiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<DuValType, std::size_t> counts_;
};

/// 24 - sum (k_x + 1 - 1/r_x)
Rational orbifold_c2(const DuValMultiset& m);

/// With at most 10 exceptional curves the crepant resolution is not
/// automatically K3 and the formula value is conditional on that.
bool c2_is_conditional(const DuValMultiset& m);

enum class GateReason { None, NonzeroC2, TooFewCurves, TooManyCurves };

std::string to_string(GateReason reason);

struct GateVerdict {
  bool possible = false;
  GateReason reason = GateReason::None;
};

/// Necessary conditions for being a quotient of an abelian surface:
/// c2 = 0 and 16 <= sum k <= 19.
GateVerdict abelian_type_gate(const DuValMultiset& m);

struct ClassitorEntry {
  int id;
  DuValMultiset multiset;
  std::string realization;
  /// Name of the matching built-in torus action.
  std::string builtin_action;
};

/// The ten configurations, numbered 1..10.
const std::vector<ClassitorEntry>& classitor_entries();

enum class ClassificationKind { Realized, NotRealized, K3Type };

std::string to_string(ClassificationKind kind);

struct Classification {
  ClassificationKind kind = ClassificationKind::K3Type;
  std::optional<int> entry;  // set iff Realized
};

Classification classify(const DuValMultiset& m);

/// Every multiset with orbifold_c2 = 0, ordered by sum k, then number of
/// points, then operator<.
std::vector<DuValMultiset> enumerate_zero_c2();

}  // namespace cytk
