#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive: brute-force search instead of dynamic programming or
// Smith normal forms, and exact complex arithmetic instead of lattice
// coordinates.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cytk/arith.hpp"

namespace oracle {

using cytk::Integer;
using cytk::IntMatrix;
using cytk::Rational;
using cytk::RationalVector;

// Tries every coefficient of the first part and recurses on the rest.
inline bool partitionable(Integer target, const std::vector<Integer>& parts, std::size_t from = 0) {
  if (target == 0) return true;
  if (target < 0 || from == parts.size()) return false;
  for (Integer a = 0; a * parts[from] <= target; ++a)
    if (partitionable(target - a * parts[from], parts, from + 1)) return true;
  return false;
}

// All x in ((1/n) Z / Z)^dim with A x = b mod Z^dim.
inline std::set<RationalVector> congruence_on_grid(const IntMatrix& a, const RationalVector& b, Integer n) {
  const std::size_t dim = a.cols();
  std::set<RationalVector> out;
  std::vector<Integer> idx(dim, 0);
  while (true) {
    RationalVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = Rational(idx[i], n);
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      Rational s = -b[r];
      for (std::size_t c = 0; c < dim; ++c) s += a(r, c) * x[c];
      ok = denominator(s) == 1;
    }
    if (ok) out.insert(x);
    std::size_t k = 0;
    while (k < dim && ++idx[k] == n) idx[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

inline Integer gcd_except(const std::array<Integer, 5>& w, std::initializer_list<std::size_t> skip) {
  Integer g = 0;
  for (std::size_t i = 0; i < 5; ++i)
    if (std::find(skip.begin(), skip.end(), i) == skip.end()) g = std::gcd(g, w[i]);
  return g;
}

// The arithmetic form of wellformedness, read literally.
inline bool wellformed(Integer d, const std::array<Integer, 5>& w) {
  for (std::size_t i = 0; i < 5; ++i)
    if (gcd_except(w, {i}) != 1) return false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (d % gcd_except(w, {i, j}) != 0) return false;
  return true;
}

// Quasismoothness via explicit monomial search: for each condition look for
// an exponent vector of the required shape.
inline bool quasismooth(Integer d, const std::array<Integer, 5>& w) {
  auto monomial_in = [&](const std::vector<std::size_t>& vars, Integer target) {
    std::vector<Integer> parts;
    for (auto v : vars) parts.push_back(w[v]);
    return partitionable(target, parts);
  };
  for (std::size_t i = 0; i < 5; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < 5 && !found; ++j) {
      const Integer rest = d - w[j];
      for (Integer a = 0; a * w[i] <= rest && !found; ++a) found = a * w[i] == rest;
    }
    if (!found) return false;
  }
  for (std::size_t i1 = 0; i1 < 5; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < 5; ++i2) {
      std::set<std::size_t> js;
      for (std::size_t j = 0; j < 5; ++j)
        if (monomial_in({i1, i2}, d - w[j])) js.insert(j);
      if (js.size() < 2) return false;
    }
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i)) vars.push_back(i);
    if (!monomial_in(vars, d)) return false;
  }
  return true;
}

// Elements a + b t of Q(t) with t^2 = p + q t.
struct Quad {
  Rational a, b;
  Rational p, q;

  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b, p, q}; }
  Quad operator-(const Quad& o) const { return {a - o.a, b - o.b, p, q}; }
  Quad operator*(const Quad& o) const {
    // (a + b t)(c + e t) = ac + (ae + bc) t + be (p + q t)
    const Rational be = b * o.b;
    return {a * o.a + be * p, a * o.b + b * o.a + be * q, p, q};
  }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
};

struct Field {
  Rational p, q;
  Quad operator()(Rational a, Rational b = 0) const { return {a, b, p, q}; }
  Quad t() const { return {0, 1, p, q}; }
};

inline const Field gaussian{-1, 0};   // t = i
inline const Field eisenstein{-1, 1};  // t = exp(i pi / 3), t^2 = t - 1
inline const Field cube_root{-1, -1};  // t = exp(2 i pi / 3), t^2 = -1 - t

using CVec = std::array<Quad, 2>;
using CMat = std::array<std::array<Quad, 2>, 2>;

inline CVec apply(const CMat& m, const CVec& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// Checks that the complex-linear map m sends basis[k] to sum_r M(r,k) basis[r]
// and that the lattice-coordinate translation t equals the complex vector ct
// modulo the lattice.
inline bool matches_lattice_model(const CMat& m, const CVec& ct, const std::array<CVec, 4>& basis,
                                  const IntMatrix& linear, const RationalVector& t) {
  const Field f{basis[0][0].p, basis[0][0].q};
  for (std::size_t k = 0; k < 4; ++k) {
    CVec image = apply(m, basis[k]);
    CVec combo{f(0), f(0)};
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = 0; s < 2; ++s) combo[s] = combo[s] + f(linear(r, k)) * basis[r][s];
    if (!(image[0] == combo[0] && image[1] == combo[1])) return false;
  }
  CVec tv{f(0), f(0)};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t s = 0; s < 2; ++s) tv[s] = tv[s] + f(t[r]) * basis[r][s];
  // Translations agree when they differ by a lattice vector: solve for the
  // rational coordinates of the difference by Gauss-Jordan elimination.
  std::array<std::array<Rational, 5>, 4> rows;
  for (std::size_t s = 0; s < 2; ++s) {
    const Quad diff = tv[s] - ct[s];
    for (std::size_t r = 0; r < 4; ++r) {
      rows[2 * s][r] = basis[r][s].a;
      rows[2 * s + 1][r] = basis[r][s].b;
    }
    rows[2 * s][4] = diff.a;
    rows[2 * s + 1][4] = diff.b;
  }
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t p = c;
    while (p < 4 && rows[p][c] == 0) ++p;
    if (p == 4) return false;
    std::swap(rows[p], rows[c]);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[c][c];
      for (std::size_t k = c; k < 5; ++k) rows[r][k] -= factor * rows[c][k];
    }
  }
  for (std::size_t c = 0; c < 4; ++c)
    if (denominator(Rational(rows[c][4] / rows[c][c])) != 1) return false;
  return true;
}

// Random unimodular 4x4 matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int steps = 6) {
  IntMatrix m = IntMatrix::identity(4);
  std::uniform_int_distribution<int> idx(0, 3), coeff(-2, 2), coin(0, 3);
  for (int s = 0; s < steps; ++s) {
    IntMatrix e = IntMatrix::identity(4);
    const int i = idx(rng);
    const int j = idx(rng);
    if (coin(rng) == 0) {
      e(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = -1;
    } else if (i != j) {
      e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coeff(rng);
    }
    m = m * e;
  }
  return m;
}

// Multisets of du Val types with orbifold c2 = 0, found by scaling every
// deficiency k + 1 - 1/r by a common denominator and solving an unbounded
// knapsack for the exact total 24. Keys are (family, index) as "A1" etc.
inline std::vector<std::map<std::string, int>> zero_c2_multisets() {
  struct T {
    std::string name;
    Integer k, r;
  };
  std::vector<T> types;
  for (Integer n = 1; n <= 24; ++n) types.push_back({"A" + std::to_string(n), n, n + 1});
  for (Integer n = 4; n <= 24; ++n) types.push_back({"D" + std::to_string(n), n, 4 * (n - 2)});
  types.push_back({"E6", 6, 24});
  types.push_back({"E7", 7, 48});
  types.push_back({"E8", 8, 120});

  Integer den = 1;
  for (const auto& t : types) den = std::lcm(den, t.r);
  std::vector<Integer> cost;
  for (const auto& t : types) cost.push_back((t.k + 1) * den - den / t.r);
  const Integer total = 24 * den;

  std::vector<std::map<std::string, int>> out;
  std::map<std::string, int> cur;
  std::function<void(std::size_t, Integer)> go = [&](std::size_t from, Integer left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < types.size(); ++i) {
      if (cost[i] > left) continue;
      ++cur[types[i].name];
      go(i, left - cost[i]);
      if (--cur[types[i].name] == 0) cur.erase(types[i].name);
    }
  };
  go(0, total);
  return out;
}

}  // namespace oracle
