#include "cytk/wps.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cytk {

namespace {

Integer gcd_of(const WeightSystem& ws, const std::vector<std::size_t>& indices) {
  Integer g = 0;
  for (auto i : indices) g = std::gcd(g, ws.weight(i));
  return g;
}

Integer mod(Integer x, Integer m) {
  Integer r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

WeightSystem::WeightSystem(Integer degree, std::array<Integer, kNumWeights> weights)
    : degree_(degree), weights_(weights) {
  if (degree_ <= 0) throw std::invalid_argument("degree must be positive");
  for (Integer w : weights_)
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  if (gcd(std::span<const Integer>(weights_)) != 1)
    throw std::invalid_argument("weights must have gcd 1");
  if (degree_ < *std::max_element(weights_.begin(), weights_.end()))
    throw std::invalid_argument("degree must be at least the largest weight");
}

Integer WeightSystem::weight_sum() const {
  return std::accumulate(weights_.begin(), weights_.end(), Integer{0});
}

BigInt WeightSystem::weight_product() const {
  BigInt n = 1;
  for (Integer w : weights_) n *= w;
  return n;
}

BigInt WeightSystem::pair_sum() const {
  BigInt s = 0;
  for (std::size_t i = 0; i < kNumWeights; ++i)
    for (std::size_t j = i + 1; j < kNumWeights; ++j) s += BigInt(weights_[i]) * weights_[j];
  return s;
}

BigInt WeightSystem::square_sum() const {
  BigInt q = 0;
  for (Integer w : weights_) q += BigInt(w) * w;
  return q;
}

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "X_" << degree_ << " in P(";
  for (std::size_t i = 0; i < kNumWeights; ++i) os << (i ? "," : "") << weights_[i];
  os << ")";
  return os.str();
}

std::string to_string(StratumKind kind) {
  switch (kind) {
    case StratumKind::TwoFace: return "two-face";
    case StratumKind::Edge: return "edge";
    case StratumKind::Vertex: return "vertex";
  }
  return "?";
}

Stratum::Stratum(std::vector<std::size_t> zeroed) {
  for (auto i : zeroed) {
    if (i >= kNumWeights) throw std::invalid_argument("stratum index out of range");
    if (mask_ & (1u << i)) throw std::invalid_argument("duplicate stratum index");
    mask_ |= 1u << i;
  }
  const int n = std::popcount(mask_);
  if (n < 2 || n > 4) throw std::invalid_argument("a stratum zeroes 2, 3 or 4 coordinates");
}

Stratum Stratum::from_mask(unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < kNumWeights; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return Stratum(idx);
}

std::vector<std::size_t> Stratum::zeroed() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kNumWeights; ++i)
    if (mask_ & (1u << i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Stratum::free() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kNumWeights; ++i)
    if (!(mask_ & (1u << i))) out.push_back(i);
  return out;
}

StratumKind Stratum::kind() const {
  switch (std::popcount(mask_)) {
    case 2: return StratumKind::TwoFace;
    case 3: return StratumKind::Edge;
    default: return StratumKind::Vertex;
  }
}

std::string Stratum::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : zeroed()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(const Stratum& a, const Stratum& b) {
  if (auto c = std::popcount(a.mask_) <=> std::popcount(b.mask_); c != 0) return c;
  return a.zeroed() <=> b.zeroed();
}

const std::vector<Stratum>& all_strata() {
  static const std::vector<Stratum> strata = [] {
    std::vector<Stratum> out;
    for (unsigned mask = 0; mask < (1u << kNumWeights); ++mask) {
      const int n = std::popcount(mask);
      if (n >= 2 && n <= 4) out.push_back(Stratum::from_mask(mask));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return strata;
}

CyclicQuotientType::CyclicQuotientType(Integer order, Integer a, Integer b)
    : order_(order) {
  if (order_ < 2) throw std::invalid_argument("cyclic quotient order must be at least 2");
  a_ = mod(a, order_);
  b_ = mod(b, order_);
}

CyclicQuotientType CyclicQuotientType::canonical() const {
  std::pair<Integer, Integer> best{a_, b_};
  for (Integer u = 1; u < order_; ++u) {
    if (std::gcd(u, order_) != 1) continue;
    const Integer ua = (u * a_) % order_;
    const Integer ub = (u * b_) % order_;
    best = std::min({best, std::pair{ua, ub}, std::pair{ub, ua}});
  }
  return CyclicQuotientType(order_, best.first, best.second);
}

std::string CyclicQuotientType::to_string() const { return canonical().raw_string(); }

std::string CyclicQuotientType::raw_string() const {
  return "1/" + std::to_string(order_) + "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

bool operator==(const CyclicQuotientType& x, const CyclicQuotientType& y) {
  if (x.order_ != y.order_) return false;
  const auto cx = x.canonical();
  const auto cy = y.canonical();
  return cx.a_ == cy.a_ && cx.b_ == cy.b_;
}

bool is_wellformed_hypersurface(const WeightSystem& ws) {
  for (std::size_t i = 0; i < kNumWeights; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < kNumWeights; ++k)
      if (k != i) others.push_back(k);
    if (gcd_of(ws, others) != 1) return false;
  }
  for (std::size_t i = 0; i < kNumWeights; ++i)
    for (std::size_t j = i + 1; j < kNumWeights; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < kNumWeights; ++k)
        if (k != i && k != j) rest.push_back(k);
      if (ws.degree() % gcd_of(ws, rest) != 0) return false;
    }
  return true;
}

std::optional<StratumSingularity> stratum_singularity(const WeightSystem& ws, const Stratum& s) {
  const Integer m = gcd_of(ws, s.free());
  if (m <= 1) return std::nullopt;
  StratumSingularity out{s, m, std::nullopt};
  if (s.kind() == StratumKind::TwoFace) {
    const auto j = s.zeroed();
    out.transverse = CyclicQuotientType(m, ws.weight(j[0]), ws.weight(j[1]));
  }
  return out;
}

std::vector<StratumSingularity> singular_strata(const WeightSystem& ws) {
  std::vector<StratumSingularity> out;
  for (const auto& s : all_strata())
    if (auto sing = stratum_singularity(ws, s)) out.push_back(*sing);
  return out;
}

}  // namespace cytk
