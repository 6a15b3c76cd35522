#include "cytk/surface.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace cytk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> read_number(std::string_view& s) {
  std::size_t n = 0;
  std::size_t used = 0;
  while (used < s.size() && std::isdigit(static_cast<unsigned char>(s[used]))) {
    n = n * 10 + static_cast<std::size_t>(s[used] - '0');
    if (n > 1'000'000) return std::nullopt;
    ++used;
  }
  if (used == 0) return std::nullopt;
  s.remove_prefix(used);
  return n;
}

// Every du Val type whose deficiency does not exceed 24.
std::vector<DuValType> candidate_types() {
  std::vector<DuValType> out;
  for (int n = 1;; ++n) {
    DuValType t(DuValFamily::A, n);
    if (t.deficiency() > 24) break;
    out.push_back(t);
  }
  for (int n = 4;; ++n) {
    DuValType t(DuValFamily::D, n);
    if (t.deficiency() > 24) break;
    out.push_back(t);
  }
  for (int n : {6, 7, 8}) out.emplace_back(DuValFamily::E, n);
  return out;
}

}  // namespace

DuValType::DuValType(DuValFamily family, int index) : family_(family), index_(index) {
  switch (family_) {
    case DuValFamily::A:
      if (index_ < 1) throw std::invalid_argument("A_n needs n >= 1");
      break;
    case DuValFamily::D:
      if (index_ < 4) throw std::invalid_argument("D_n needs n >= 4");
      break;
    case DuValFamily::E:
      if (index_ < 6 || index_ > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
      break;
  }
}

Integer DuValType::r() const {
  switch (family_) {
    case DuValFamily::A: return index_ + 1;
    case DuValFamily::D: return 4 * (index_ - 2);
    case DuValFamily::E: return index_ == 6 ? 24 : index_ == 7 ? 48 : 120;
  }
  return 0;
}

Rational DuValType::deficiency() const { return Rational(k() + 1) - Rational(1, r()); }

std::string DuValType::to_string() const {
  const char letter = family_ == DuValFamily::A ? 'A' : family_ == DuValFamily::D ? 'D' : 'E';
  return letter + std::to_string(index_);
}

DuValMultiset DuValMultiset::parse(std::string_view text) {
  DuValMultiset out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto end = plus == std::string_view::npos ? text.size() : plus;
    std::string_view term = trim(text.substr(start, end - start));
    const std::string original(term);
    if (term.empty()) throw MultisetSyntaxError("empty term in '" + std::string(text) + "'");

    std::size_t count = 1;
    if (std::isdigit(static_cast<unsigned char>(term.front()))) {
      auto c = read_number(term);
      if (!c || *c == 0) throw MultisetSyntaxError("bad count in '" + original + "'");
      count = *c;
    }
    if (term.empty()) throw MultisetSyntaxError("missing family in '" + original + "'");
    DuValFamily family;
    switch (std::toupper(static_cast<unsigned char>(term.front()))) {
      case 'A': family = DuValFamily::A; break;
      case 'D': family = DuValFamily::D; break;
      case 'E': family = DuValFamily::E; break;
      default: throw MultisetSyntaxError("unknown family in '" + original + "'");
    }
    term.remove_prefix(1);
    auto index = read_number(term);
    if (!index || !term.empty()) throw MultisetSyntaxError("bad index in '" + original + "'");
    try {
      out.add(DuValType(family, static_cast<int>(*index)), count);
    } catch (const std::invalid_argument& e) {
      throw MultisetSyntaxError(std::string(e.what()) + " in '" + original + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

void DuValMultiset::add(const DuValType& type, std::size_t count) {
  if (count > 0) counts_[type] += count;
}

std::size_t DuValMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [t, c] : counts_) n += c;
  return n;
}

Integer DuValMultiset::total_k() const {
  Integer k = 0;
  for (const auto& [t, c] : counts_) k += static_cast<Integer>(c) * t.k();
  return k;
}

std::string DuValMultiset::to_string() const {
  if (counts_.empty()) return "0";
  std::string out;
  for (auto it = counts_.rbegin(); it != counts_.rend(); ++it) {
    if (!out.empty()) out += "+";
    if (it->second > 1) out += std::to_string(it->second);
    out += it->first.to_string();
  }
  return out;
}

DuValMultiset operator+(DuValMultiset a, const DuValMultiset& b) {
  for (const auto& [t, c] : b.counts_) a.add(t, c);
  return a;
}

Rational orbifold_c2(const DuValMultiset& m) {
  Rational c2 = 24;
  for (const auto& [t, c] : m.entries()) c2 -= static_cast<long>(c) * t.deficiency();
  return c2;
}

bool c2_is_conditional(const DuValMultiset& m) { return m.total_k() <= 10; }

std::string to_string(GateReason reason) {
  switch (reason) {
    case GateReason::None: return "";
    case GateReason::NonzeroC2: return "c2 ≠ 0";
    case GateReason::TooFewCurves: return "Σk < 16";
    case GateReason::TooManyCurves: return "Σk > 19";
  }
  return "";
}

GateVerdict abelian_type_gate(const DuValMultiset& m) {
  if (orbifold_c2(m) != 0) return {false, GateReason::NonzeroC2};
  const Integer k = m.total_k();
  if (k < 16) return {false, GateReason::TooFewCurves};
  if (k > 19) return {false, GateReason::TooManyCurves};
  return {true, GateReason::None};
}

const std::vector<ClassitorEntry>& classitor_entries() {
  static const std::vector<ClassitorEntry> entries = {
      {1, DuValMultiset::parse("16A1"), "abelian surface / {±id}", "kummer"},
      {2, DuValMultiset::parse("9A2"), "E3 x E3 / Z3, diag(j, j^-1)", "z3-diagonal"},
      {3, DuValMultiset::parse("4A3+6A1"), "E x E / Z4, b", "z4"},
      {4, DuValMultiset::parse("A5+4A2+5A1"), "E3 x E3 / Z6, diag(w, w^-1)", "z6-diagonal"},
      {5, DuValMultiset::parse("6A3+A1"), "C^2/L8 / BD8 = <a, b'>", "bd8-shifted"},
      {6, DuValMultiset::parse("2D4+3A3+2A1"), "E4 x E4 / BD8 = <a, b>", "bd8-e4"},
      {7, DuValMultiset::parse("4D4+3A1"), "C^2/L8 / BD8 = <a, b>", "bd8-linear"},
      {8, DuValMultiset::parse("D5+3A3+2A2+A1"), "E3 x E3 / BD12 = <b, d>", "bd12"},
      {9, DuValMultiset::parse("A5+2A3+4A2"), "C^2/L8 / BT24 = <a, b', c'>", "bt24-shifted"},
      {10, DuValMultiset::parse("E6+D4+4A2+A1"), "C^2/L8 / BT24 = <a, b, c>", "bt24-linear"},
  };
  return entries;
}

std::string to_string(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::Realized: return "realized";
    case ClassificationKind::NotRealized: return "not_realized";
    case ClassificationKind::K3Type: return "k3_type";
  }
  return "";
}

Classification classify(const DuValMultiset& m) {
  if (orbifold_c2(m) != 0) return {ClassificationKind::K3Type, std::nullopt};
  for (const auto& e : classitor_entries())
    if (e.multiset == m) return {ClassificationKind::Realized, e.id};
  return {ClassificationKind::NotRealized, std::nullopt};
}

std::vector<DuValMultiset> enumerate_zero_c2() {
  const std::vector<DuValType> types = candidate_types();
  std::vector<Rational> deficiency;
  for (const auto& t : types) deficiency.push_back(t.deficiency());
  const Rational smallest = *std::min_element(deficiency.begin(), deficiency.end());

  std::vector<DuValMultiset> out;
  DuValMultiset current;
  // Types are taken in non-decreasing list position so each multiset is
  // produced exactly once.
  std::function<void(std::size_t, const Rational&)> search = [&](std::size_t first, const Rational& left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (left < smallest) return;
    for (std::size_t i = first; i < types.size(); ++i) {
      if (deficiency[i] > left) continue;
      DuValMultiset saved = current;
      current.add(types[i]);
      search(i, left - deficiency[i]);
      current = std::move(saved);
    }
  };
  search(0, Rational(24));
  std::sort(out.begin(), out.end(), [](const DuValMultiset& a, const DuValMultiset& b) {
    if (a.total_k() != b.total_k()) return a.total_k() < b.total_k();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace cytk
