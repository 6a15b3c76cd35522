#pragma once

// Exact integer and rational primitives shared by the rest of the library.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cytk {

using Integer = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

Integer gcd(Integer a, Integer b);
Integer gcd(std::span<const Integer> values);

/// Fractional part of q, always in [0, 1).
Rational frac(const Rational& q);

/// Coordinatewise reduction into [0, 1)^n.
RationalVector reduce_mod_one(RationalVector v);

/// "num/den" with den >= 1, e.g. "45/2", "0/1", "-3/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

struct PartitionQuery {
  Integer target = 0;
  std::vector<Integer> parts;
};

/// True iff target is a non-negative integer combination of parts.
bool is_partitionable(Integer target, std::span<const Integer> parts);
bool is_partitionable(const PartitionQuery& query);

/// Small dense integer matrix, row-major. Arithmetic is overflow-checked and
/// throws std::overflow_error instead of wrapping.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<Integer>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
RationalVector operator*(const IntMatrix& a, const RationalVector& v);

BigInt determinant(const IntMatrix& a);

/// Monic characteristic polynomial det(xI - A), coefficients from x^n down
/// to the constant term.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);

struct SnfDecomposition {
  IntMatrix left;               // U, unimodular
  std::vector<Integer> diagonal;  // d1 | d2 | ..., non-negative
  IntMatrix right;              // V, unimodular
  IntMatrix original;           // A, with U * A * V = diag

  IntMatrix diagonal_matrix() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

class CongruenceError : public std::runtime_error {
 public:
  enum class Kind { InfiniteSolutions, NoSolution, ShapeMismatch };
  CongruenceError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// All x in (Q/Z)^n with A x = b (mod Z^n), each coordinate in [0, 1),
/// sorted lexicographically. A must be square. Throws CongruenceError when
/// the solution set is empty or infinite.
std::vector<RationalVector> solve_congruence(const IntMatrix& a,
                                             const RationalVector& b);

}  // namespace cytk
