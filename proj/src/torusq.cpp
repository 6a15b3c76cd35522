#include "cytk/torusq.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>

#include "json.hpp"

namespace cytk {

namespace {

constexpr std::size_t kDim = 4;

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::string vector_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

const std::vector<BigInt>& expected_charpoly(std::size_t order) {
  static const std::map<std::size_t, std::vector<BigInt>> table = {
      {2, {1, 4, 6, 4, 1}},
      {3, {1, 2, 3, 2, 1}},
      {4, {1, 0, 2, 0, 1}},
      {6, {1, -2, 3, -2, 1}},
  };
  return table.at(order);
}

IntMatrix blocks(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(kDim, kDim);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      m(r, c) = a(r, c);
      m(r + 2, c + 2) = b(r, c);
    }
  return m;
}

RationalVector halves(int a, int b, int c, int d) {
  const Rational h(1, 2);
  return {a * h, b * h, c * h, d * h};
}

}  // namespace

AffineTorusMap::AffineTorusMap(IntMatrix linear, RationalVector translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  if (linear_.rows() != kDim || linear_.cols() != kDim)
    throw TorusError(TorusError::Kind::Malformed, "linear part must be 4x4");
  if (translation_.size() != kDim)
    throw TorusError(TorusError::Kind::Malformed, "translation must have 4 entries");
  const BigInt det = determinant(linear_);
  if (det != 1 && det != -1)
    throw TorusError(TorusError::Kind::NotInvertible,
                     "linear part has determinant " + det.str() + ", not invertible over Z");
  translation_ = reduce_mod_one(std::move(translation_));
}

AffineTorusMap AffineTorusMap::identity() { return AffineTorusMap(IntMatrix::identity(kDim)); }

bool AffineTorusMap::has_identity_linear_part() const { return linear_ == IntMatrix::identity(kDim); }

bool AffineTorusMap::is_identity() const { return has_identity_linear_part() && is_zero(translation_); }

AffineTorusMap AffineTorusMap::compose(const AffineTorusMap& other) const {
  RationalVector t = linear_ * other.translation_;
  for (std::size_t i = 0; i < kDim; ++i) t[i] += translation_[i];
  return AffineTorusMap(linear_ * other.linear_, std::move(t));
}

RationalVector AffineTorusMap::apply(const RationalVector& x) const {
  RationalVector y = linear_ * x;
  for (std::size_t i = 0; i < kDim; ++i) y[i] += translation_[i];
  return reduce_mod_one(std::move(y));
}

bool operator<(const AffineTorusMap& a, const AffineTorusMap& b) {
  if (a.linear_ != b.linear_) return a.linear_ < b.linear_;
  return a.translation_ < b.translation_;
}

std::size_t element_order(const AffineTorusMap& g, std::size_t cap) {
  AffineTorusMap power = g;
  for (std::size_t n = 1; n <= cap; ++n) {
    if (power.is_identity()) return n;
    power = g.compose(power);
  }
  throw TorusError(TorusError::Kind::NotFinite, "element order exceeds " + std::to_string(cap));
}

TorusAction close_group(const std::vector<AffineTorusMap>& generators, std::string label, std::size_t cap) {
  std::set<AffineTorusMap> seen{AffineTorusMap::identity()};
  std::deque<AffineTorusMap> queue{AffineTorusMap::identity()};
  while (!queue.empty()) {
    const AffineTorusMap x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      AffineTorusMap y = g.compose(x);
      if (seen.count(y)) continue;
      if (y.has_identity_linear_part())
        throw TorusError(TorusError::Kind::ContainsTranslation,
                         "group contains nontrivial translation by " + vector_string(y.translation()));
      if (seen.size() >= cap)
        throw TorusError(TorusError::Kind::NotFinite, "group not finite within cap " + std::to_string(cap));
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }

  TorusAction action;
  action.label_ = std::move(label);
  action.generators_ = generators;
  action.elements_.assign(seen.begin(), seen.end());
  // Put the identity first; the rest stays sorted.
  std::stable_partition(action.elements_.begin(), action.elements_.end(),
                        [](const AffineTorusMap& g) { return g.is_identity(); });

  for (const auto& g : action.elements_) {
    const std::size_t n = element_order(g, cap);
    if (n != 1 && n != 2 && n != 3 && n != 4 && n != 6)
      throw TorusError(TorusError::Kind::ForbiddenOrder, "element of forbidden order " + std::to_string(n));
    action.orders_.push_back(n);
  }
  if (std::count(action.orders_.begin(), action.orders_.end(), 2) > 1)
    throw TorusError(TorusError::Kind::MultipleInvolutions, "multiple involutions");
  for (std::size_t i = 0; i < action.elements_.size(); ++i) {
    const std::size_t n = action.orders_[i];
    if (n == 1) continue;
    if (characteristic_polynomial(action.elements_[i].linear()) != expected_charpoly(n))
      throw TorusError(TorusError::Kind::NonCanonical,
                       "linear part of an order-" + std::to_string(n) + " element is not in SL(2,C)");
  }
  return action;
}

std::vector<RationalVector> fixed_points(const AffineTorusMap& g) {
  RationalVector rhs = g.translation();
  for (auto& q : rhs) q = -q;
  try {
    return solve_congruence(g.linear() - IntMatrix::identity(kDim), rhs);
  } catch (const CongruenceError& e) {
    if (e.kind() == CongruenceError::Kind::NoSolution) return {};
    throw TorusError(TorusError::Kind::InfiniteFixedPoints, "infinitely many fixed points");
  }
}

std::optional<StabilizerClass> recognize_stabilizer(std::size_t order,
                                                    const std::map<std::size_t, std::size_t>& histogram) {
  auto count = [&](std::size_t n) -> std::size_t {
    auto it = histogram.find(n);
    return it == histogram.end() ? 0 : it->second;
  };
  std::size_t total = 0;
  for (const auto& [n, c] : histogram) total += c;
  if (total != order || count(1) != 1) return std::nullopt;

  if (order == 2 || order == 3 || order == 4 || order == 6) {
    if (count(order) == 0) return std::nullopt;
    return StabilizerClass{"Z" + std::to_string(order), DuValType(DuValFamily::A, static_cast<int>(order) - 1)};
  }
  if (order == 8 && count(2) == 1 && count(4) == 6) return StabilizerClass{"BD8", DuValType(DuValFamily::D, 4)};
  if (order == 12 && count(2) == 1 && count(3) == 2 && count(4) == 6 && count(6) == 2)
    return StabilizerClass{"BD12", DuValType(DuValFamily::D, 5)};
  if (order == 24 && count(2) == 1 && count(3) == 8 && count(4) == 6 && count(6) == 8)
    return StabilizerClass{"BT24", DuValType(DuValFamily::E, 6)};
  return std::nullopt;
}

QuotientReport quotient_singularities(const TorusAction& action) {
  const auto& elements = action.elements();
  const auto& orders = action.element_orders();

  QuotientReport report;
  report.label = action.label();
  report.group_order = action.order();

  std::set<RationalVector> special;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (orders[i] == 1) continue;
    const auto pts = fixed_points(elements[i]);
    auto& counts = report.fixed_point_counts[orders[i]];
    if (std::find(counts.begin(), counts.end(), pts.size()) == counts.end()) counts.push_back(pts.size());
    special.insert(pts.begin(), pts.end());
  }
  for (auto& [n, counts] : report.fixed_point_counts) std::sort(counts.begin(), counts.end());

  std::set<RationalVector> visited;
  for (const auto& p : special) {
    if (visited.count(p)) continue;
    std::set<RationalVector> orbit;
    std::map<std::size_t, std::size_t> histogram;
    std::size_t stabilizer = 0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      RationalVector image = elements[i].apply(p);
      if (image == p) {
        ++stabilizer;
        ++histogram[orders[i]];
      }
      orbit.insert(std::move(image));
    }
    visited.insert(orbit.begin(), orbit.end());

    auto cls = recognize_stabilizer(stabilizer, histogram);
    if (!cls)
      throw TorusError(TorusError::Kind::UnrecognizedStabilizer,
                       "unrecognized stabilizer of order " + std::to_string(stabilizer) + " at " + vector_string(p));
    report.multiset.add(cls->type);
    report.orbits.push_back({{orbit.begin(), orbit.end()}, stabilizer, std::move(histogram), cls->group, cls->type});
  }
  return report;
}

const std::vector<BuiltinAction>& builtin_actions() {
  static const std::vector<BuiltinAction> actions = [] {
    const IntMatrix minus_id = {{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
    // multiplication by a cube root j and a sixth root w = -j^2 on C/<1, j>
    const IntMatrix j = {{0, -1}, {1, -1}};
    const IntMatrix j2 = {{-1, 1}, {-1, 0}};
    const IntMatrix w = {{0, -1}, {1, 1}};
    const IntMatrix w_inv = {{1, 1}, {-1, 0}};
    // (z1, z2) -> (-z2, z1) on E x E
    const IntMatrix b = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    // diag(i, -i) on E4 x E4 with basis (1,0), (i,0), (0,1), (0,i)
    const IntMatrix a_e4 = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    // basis (1,1), (1,-1), (i-1,0), (0,i-1) of the lattice L8
    const IntMatrix a8 = {{0, 1, -1, 1}, {1, 0, -1, -1}, {1, 1, -1, 0}, {-1, 1, 0, 1}};
    const IntMatrix b8 = {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    const IntMatrix c8 = {{1, 1, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, 1}};

    const AffineTorusMap a8_map(a8);
    const AffineTorusMap b8_map(b8);
    const AffineTorusMap b8_shift(b8, halves(1, 1, 0, 0));
    const AffineTorusMap c8_map(c8);
    const AffineTorusMap c8_shift(c8, halves(0, 1, 0, 1));

    return std::vector<BuiltinAction>{
        {"kummer", 1, "Z^4", {AffineTorusMap(minus_id)}},
        {"z3-diagonal", 2, "E3 x E3", {AffineTorusMap(blocks(j, j2))}},
        {"z4", 3, "E x E", {AffineTorusMap(b)}},
        {"z6-diagonal", 4, "E3 x E3", {AffineTorusMap(blocks(w, w_inv))}},
        {"bd8-shifted", 5, "L8", {a8_map, b8_shift}},
        {"bd8-e4", 6, "E4 x E4", {AffineTorusMap(a_e4), AffineTorusMap(b)}},
        {"bd8-linear", 7, "L8", {a8_map, b8_map}},
        {"bd12", 8, "E3 x E3", {AffineTorusMap(b), AffineTorusMap(blocks(w, w_inv))}},
        {"bt24-shifted", 9, "L8", {a8_map, b8_shift, c8_shift}},
        {"bt24-linear", 10, "L8", {a8_map, b8_map, c8_map}},
    };
  }();
  return actions;
}

const BuiltinAction* find_builtin(const std::string& name) {
  for (const auto& a : builtin_actions())
    if (a.name == name) return &a;
  return nullptr;
}

std::pair<std::string, std::vector<AffineTorusMap>> read_action(std::istream& in) {
  using nlohmann::json;
  auto malformed = [](const std::string& why) { return TorusError(TorusError::Kind::Malformed, why); };
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw malformed("top level must be an object");

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw malformed("label must be a string");
    label = doc["label"].get<std::string>();
  }
  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw malformed("generators must be a non-empty array");

  std::vector<AffineTorusMap> gens;
  for (const auto& g : doc["generators"]) {
    const std::string where = "generator " + std::to_string(gens.size());
    if (!g.is_object() || !g.contains("linear")) throw malformed(where + ": missing linear part");
    const auto& lin = g["linear"];
    if (!lin.is_array() || lin.size() != kDim) throw malformed(where + ": linear part must be 4x4");
    IntMatrix m(kDim, kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
      if (!lin[r].is_array() || lin[r].size() != kDim) throw malformed(where + ": linear part must be 4x4");
      for (std::size_t c = 0; c < kDim; ++c) {
        if (!lin[r][c].is_number_integer()) throw malformed(where + ": linear entries must be integers");
        m(r, c) = lin[r][c].get<Integer>();
      }
    }
    RationalVector t(kDim, 0);
    if (g.contains("translation")) {
      const auto& tr = g["translation"];
      if (!tr.is_array() || tr.size() != kDim) throw malformed(where + ": translation must have 4 entries");
      for (std::size_t i = 0; i < kDim; ++i) {
        try {
          if (tr[i].is_string())
            t[i] = parse_rational(tr[i].get<std::string>());
          else if (tr[i].is_number_integer())
            t[i] = tr[i].get<Integer>();
          else
            throw std::invalid_argument("not a rational");
        } catch (const std::invalid_argument&) {
          throw malformed(where + ": translation entries must be \"p/q\" strings");
        }
      }
    }
    gens.emplace_back(std::move(m), std::move(t));
  }
  return {label, gens};
}

std::string write_action(const std::string& label, const std::vector<AffineTorusMap>& generators) {
  using nlohmann::json;
  json doc;
  doc["label"] = label;
  doc["generators"] = json::array();
  for (const auto& g : generators) {
    json t = json::array();
    for (const auto& q : g.translation()) t.push_back(to_string(q));
    doc["generators"].push_back({{"linear", g.linear().to_rows()}, {"translation", t}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace cytk
