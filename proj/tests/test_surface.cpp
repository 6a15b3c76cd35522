#include "doctest.h"
#include "oracles.hpp"

#include "cytk/surface.hpp"

using namespace cytk;

TEST_CASE("du Val local data") {
  CHECK(DuValType(DuValFamily::A, 1).r() == 2);
  CHECK(DuValType(DuValFamily::A, 4).r() == 5);
  CHECK(DuValType(DuValFamily::D, 4).r() == 8);
  CHECK(DuValType(DuValFamily::D, 5).r() == 12);
  CHECK(DuValType(DuValFamily::E, 6).r() == 24);
  CHECK(DuValType(DuValFamily::E, 7).r() == 48);
  CHECK(DuValType(DuValFamily::E, 8).r() == 120);
  CHECK(DuValType(DuValFamily::A, 1).deficiency() == Rational(3, 2));
  CHECK_THROWS_AS(DuValType(DuValFamily::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(DuValType(DuValFamily::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(DuValType(DuValFamily::E, 9), std::invalid_argument);
}

TEST_CASE("multiset grammar") {
  CHECK(DuValMultiset::parse("16A1").size() == 16);
  CHECK(DuValMultiset::parse("E6+D4+4A2+A1").to_string() == "E6+D4+4A2+A1");
  CHECK(DuValMultiset::parse("A1+4A2+D4+E6") == DuValMultiset::parse("E6+D4+4A2+A1"));
  CHECK(DuValMultiset::parse("A1+A1") == DuValMultiset::parse("2A1"));
  CHECK(DuValMultiset::parse(" 2A3 + 11A1 ").total_k() == 17);
  CHECK(DuValMultiset::parse("").empty());
  CHECK(DuValMultiset::parse("").to_string() == "0");
  for (const char* bad : {"A", "2", "B2", "A1+", "+A1", "0A1", "D3", "E9", "A1x", "2 A1"})
    CHECK_THROWS_AS(DuValMultiset::parse(bad), MultisetSyntaxError);
}

TEST_CASE("orbifold c2 values") {
  CHECK(orbifold_c2(DuValMultiset()) == 24);
  CHECK(orbifold_c2(DuValMultiset::parse("A1")) == Rational(45, 2));
  CHECK(orbifold_c2(DuValMultiset::parse("16A1")) == 0);
  CHECK(orbifold_c2(DuValMultiset::parse("5A4")) == 0);
  CHECK(orbifold_c2(DuValMultiset::parse("2A3+11A1")) == 0);
  for (const auto& e : classitor_entries()) CHECK(orbifold_c2(e.multiset) == 0);
  CHECK(c2_is_conditional(DuValMultiset::parse("A1")));
  CHECK_FALSE(c2_is_conditional(DuValMultiset::parse("16A1")));
}

TEST_CASE("gate and classification") {
  const auto g = abelian_type_gate(DuValMultiset::parse("5A4"));
  CHECK_FALSE(g.possible);
  CHECK(to_string(g.reason) == "Σk > 19");
  CHECK(abelian_type_gate(DuValMultiset::parse("A1")).reason == GateReason::NonzeroC2);
  CHECK(abelian_type_gate(DuValMultiset::parse("16A1")).possible);
  CHECK(classify(DuValMultiset::parse("2A3+11A1")).kind == ClassificationKind::NotRealized);
  CHECK(classify(DuValMultiset::parse("A1")).kind == ClassificationKind::K3Type);
  const auto c = classify(DuValMultiset::parse("E6+D4+4A2+A1"));
  CHECK(c.kind == ClassificationKind::Realized);
  CHECK(c.entry == 10);
  REQUIRE(classitor_entries().size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(classitor_entries()[i].id == static_cast<int>(i) + 1);
    CHECK(classify(classitor_entries()[i].multiset).entry == static_cast<int>(i) + 1);
    CHECK(abelian_type_gate(classitor_entries()[i].multiset).possible);
  }
}

TEST_CASE("too few curves is its own gate reason") {
  // c2 = 0 forces sum of (k + 1 - 1/r) = 24, so fewer than 16 curves cannot
  // reach zero; the reason only arises for c2 = 0 multisets, of which none has
  // sum k < 16.
  for (const auto& m : enumerate_zero_c2()) CHECK(m.total_k() >= 16);
}

TEST_CASE("zero-c2 enumeration matches a scaled integer knapsack") {
  const auto fast = enumerate_zero_c2();
  const auto slow = oracle::zero_c2_multisets();
  std::set<std::string> a, b;
  for (const auto& m : fast) {
    REQUIRE(orbifold_c2(m) == 0);
    a.insert(m.to_string());
  }
  for (const auto& m : slow) {
    std::string text;
    for (const auto& [name, count] : m) text += (text.empty() ? "" : "+") + std::to_string(count) + name;
    b.insert(DuValMultiset::parse(text).to_string());
  }
  CHECK(a.size() == fast.size());
  CHECK(a == b);
  for (const auto& e : classitor_entries()) CHECK(a.count(e.multiset.to_string()) == 1);
  CHECK(a.count("5A4") == 1);
  CHECK(a.count("2A3+11A1") == 1);
}
