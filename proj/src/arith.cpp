#include "cytk/arith.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

namespace cytk {

namespace {

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Integer abs_value(Integer a) {
  if (a == std::numeric_limits<Integer>::min()) throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& a) {
  BigMatrix m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

// Row and column operations used by the Smith reduction. Each operation is
// applied to the working matrix and mirrored into U (rows) or V (columns).
struct SnfWork {
  IntMatrix d, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols(); ++c) std::swap(d(i, c), d(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows(); ++r) std::swap(d(r, i), d(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, Integer k) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = checked_add(d(i, c), checked_mul(k, d(j, c)));
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = checked_add(u(i, c), checked_mul(k, u(j, c)));
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, Integer k) {
    for (std::size_t r = 0; r < d.rows(); ++r) d(r, i) = checked_add(d(r, i), checked_mul(k, d(r, j)));
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) = checked_add(v(r, i), checked_mul(k, v(r, j)));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(i, c) = checked_sub(0, d(i, c));
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = checked_sub(0, u(i, c));
  }
};

}  // namespace

Integer gcd(Integer a, Integer b) { return std::gcd(a, b); }

Integer gcd(std::span<const Integer> values) {
  Integer g = 0;
  for (Integer v : values) g = std::gcd(g, v);
  return g;
}

Rational frac(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

RationalVector reduce_mod_one(RationalVector v) {
  for (auto& x : v) x = frac(x);
  return v;
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

bool is_partitionable(Integer target, std::span<const Integer> parts) {
  if (target < 0) return false;
  if (target == 0) return true;
  std::vector<char> reachable(static_cast<std::size_t>(target) + 1, 0);
  reachable[0] = 1;
  for (Integer p : parts) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    if (p > target) continue;
    for (Integer v = p; v <= target; ++v)
      if (reachable[v - p]) reachable[v] = 1;
    if (reachable[target]) return true;
  }
  return reachable[target] != 0;
}

bool is_partitionable(const PartitionQuery& query) {
  return is_partitionable(query.target, query.parts);
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch in difference");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked_sub(a(i, j), b(i, j));
  return c;
}

RationalVector operator*(const IntMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * v[j];
  return out;
}

// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigMatrix m = to_big(a);
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Faddeev-LeVerrier; every division is exact over the integers.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const BigMatrix big = to_big(a);
  std::vector<BigInt> coeffs(n + 1);
  coeffs[0] = 1;
  BigMatrix m(n, std::vector<BigInt>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    BigMatrix next(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += big[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeffs[k - 1];
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += big[i][l] * next[l][i];
    coeffs[k] = -trace / static_cast<long>(k);
    m = std::move(next);
  }
  return coeffs;
}

IntMatrix SnfDecomposition::diagonal_matrix() const {
  IntMatrix m(original.rows(), original.cols());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SnfWork w{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    bool finished_all = false;
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          Integer v = abs_value(w.d(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) {
        finished_all = true;
        break;
      }
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      const Integer pivot = w.d(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.d(i, t) == 0) continue;
        w.add_row(i, t, -(w.d(i, t) / pivot));
        if (w.d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.d(t, j) == 0) continue;
        w.add_col(j, t, -(w.d(t, j) / pivot));
        if (w.d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain against the rest of the block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.d(i, j) % pivot != 0) {
            w.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (finished_all) break;
    if (w.d(t, t) < 0) w.negate_row(t);
  }

  SnfDecomposition out;
  out.diagonal.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.diagonal[i] = w.d(i, i);
  out.left = std::move(w.u);
  out.right = std::move(w.v);
  out.original = a;
  return out;
}

std::vector<RationalVector> solve_congruence(const IntMatrix& a, const RationalVector& b) {
  if (!a.is_square() || a.rows() != b.size())
    throw CongruenceError(CongruenceError::Kind::ShapeMismatch,
                          "solve_congruence needs a square matrix matching the right-hand side");
  const std::size_t n = a.rows();
  const SnfDecomposition snf = smith_normal_form(a);
  // A x = b  <=>  D y = U b  with  x = V y.
  const RationalVector c = snf.left * b;

  bool singular = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.diagonal[i] != 0) continue;
    singular = true;
    if (frac(c[i]) != 0)
      throw CongruenceError(CongruenceError::Kind::NoSolution, "congruence has no solution");
  }
  if (singular)
    throw CongruenceError(CongruenceError::Kind::InfiniteSolutions,
                          "congruence has infinitely many solutions");

  std::set<RationalVector> solutions;
  std::vector<Integer> counter(n, 0);
  RationalVector y(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) y[i] = (c[i] + counter[i]) / Rational(snf.diagonal[i]);
    solutions.insert(reduce_mod_one(snf.right * y));

    std::size_t k = 0;
    while (k < n && ++counter[k] == snf.diagonal[k]) counter[k++] = 0;
    if (k == n) break;
  }
  return {solutions.begin(), solutions.end()};
}

}  // namespace cytk
