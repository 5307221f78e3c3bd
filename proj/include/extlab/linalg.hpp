// Dense linear algebra over prime fields F_p.
//
// Everything in this library uses the row-vector convention: a linear map
// V -> W is a dim(V) x dim(W) matrix A and acts by v |-> v * A. This makes
// right module actions compose left to right, matching path concatenation.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extlab {

using Scalar = std::uint32_t;

/// The prime field F_p for p < 2^16 (so products fit in 32 bits).
class PrimeField {
 public:
  explicit PrimeField(Scalar p) : p_(p) {
    if (p < 2 || p >= (1u << 16) || !is_prime(p)) {
      throw std::invalid_argument("field characteristic must be a prime below 65536, got " +
                                  std::to_string(p));
    }
  }

  static bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  Scalar characteristic() const { return p_; }

  Scalar add(Scalar a, Scalar b) const { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }

  Scalar inv(Scalar a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat: a^(p-2)
    Scalar result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return result;
  }

  /// Reduces a signed integer into [0, p).
  Scalar from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<Scalar>(m);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  Scalar p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool is_zero() const {
    for (Scalar x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

using Vector = std::vector<Scalar>;

inline Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  const Scalar p = f.characteristic();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar x = a(i, k);
      if (x == 0) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] = (out[j] + x * brow[j]) % p;
    }
  }
  return c;
}

/// v * A.
inline Vector apply(const PrimeField& f, std::span<const Scalar> v, const Matrix& a) {
  if (v.size() != a.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
  Vector out(a.cols(), 0);
  const Scalar p = f.characteristic();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    auto arow = a.row(k);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = (out[j] + v[k] * arow[j]) % p;
  }
  return out;
}

inline Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  }
  return c;
}

inline Matrix scale(const PrimeField& f, Scalar s, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.mul(s, a(i, j));
  }
  return c;
}

/// Reduced row echelon form, in place. Returns pivot columns in row order.
inline std::vector<std::size_t> rref_in_place(const PrimeField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  const Scalar p = f.characteristic();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    }
    const Scalar iv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), iv);
    auto prow = m.row(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Scalar factor = m(i, c);
      if (factor == 0) continue;
      auto irow = m.row(i);
      const Scalar nf = p - factor;
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j] != 0) irow[j] = (irow[j] + nf * prow[j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const PrimeField& f, Matrix m) { return rref_in_place(f, m).size(); }

/// Basis (as rows) of { x : A x^T = 0 }, i.e. the right null space of A.
inline Matrix nullspace(const PrimeField& f, Matrix a) {
  const auto pivots = rref_in_place(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.append_row(v);
  }
  return basis;
}

/// Basis (as rows) of { x : x A = 0 }.
inline Matrix left_kernel(const PrimeField& f, const Matrix& a) {
  if (a.cols() == 0) return Matrix::identity(a.rows());
  return nullspace(f, a.transpose());
}

/// A subspace of F_p^n held in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const PrimeField& f, std::size_t ambient, Matrix spanning) : ambient_(ambient) {
    if (spanning.rows() == 0) {
      basis_ = Matrix(0, ambient);
      return;
    }
    if (spanning.cols() != ambient) throw std::invalid_argument("subspace spanning set has wrong width");
    pivots_ = rref_in_place(f, spanning);
    basis_ = Matrix(0, ambient);
    for (std::size_t r = 0; r < pivots_.size(); ++r) basis_.append_row(spanning.row(r));
  }

  static Subspace whole(std::size_t n) {
    Subspace s;
    s.ambient_ = n;
    s.basis_ = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Clears the pivot coordinates of v using the basis; the result is zero iff v lies in the span.
  Vector reduce(const PrimeField& f, std::span<const Scalar> v) const {
    Vector out(v.begin(), v.end());
    const Scalar p = f.characteristic();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Scalar c = out[pivots_[r]];
      if (c == 0) continue;
      auto brow = basis_.row(r);
      const Scalar nc = p - c;
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (brow[j] != 0) out[j] = (out[j] + nc * brow[j]) % p;
      }
    }
    return out;
  }

  bool contains(const PrimeField& f, std::span<const Scalar> v) const {
    for (Scalar x : reduce(f, v)) {
      if (x != 0) return false;
    }
    return true;
  }

  /// Coordinates of v with respect to basis() rows; v must lie in the span.
  Vector coordinates(const PrimeField& f, std::span<const Scalar> v) const {
    Vector c(pivots_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
    if (!contains(f, v)) throw std::logic_error("vector is not in the subspace");
    return c;
  }

  /// Non-pivot coordinates: these index a basis of the quotient F^n / span.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!is_pivot[j]) free.push_back(j);
    }
    return free;
  }

  Subspace sum(const PrimeField& f, const Subspace& other) const {
    Matrix m = basis_;
    for (std::size_t r = 0; r < other.basis_.rows(); ++r) m.append_row(other.basis_.row(r));
    if (m.rows() == 0) return Subspace(f, ambient_, Matrix(0, ambient_));
    return Subspace(f, ambient_, std::move(m));
  }

  Subspace intersect(const PrimeField& f, const Subspace& other) const {
    // x*B1 = y*B2  <=>  (x, y) in left kernel of [B1; -B2].
    if (dim() == 0 || other.dim() == 0) return Subspace(f, ambient_, Matrix(0, ambient_));
    Matrix stacked(dim() + other.dim(), ambient_);
    for (std::size_t r = 0; r < dim(); ++r) {
      for (std::size_t j = 0; j < ambient_; ++j) stacked(r, j) = basis_(r, j);
    }
    for (std::size_t r = 0; r < other.dim(); ++r) {
      for (std::size_t j = 0; j < ambient_; ++j) stacked(dim() + r, j) = f.neg(other.basis_(r, j));
    }
    const Matrix ker = left_kernel(f, stacked);
    Matrix span(0, ambient_);
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      Vector x(ker.row(k).begin(), ker.row(k).begin() + static_cast<std::ptrdiff_t>(dim()));
      span.append_row(apply(f, x, basis_));
    }
    return Subspace(f, ambient_, std::move(span));
  }

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Solves x * B = v for x, if possible.
inline std::optional<Vector> solve_left(const PrimeField& f, const Matrix& b, std::span<const Scalar> v) {
  // Augment B^T with v^T and row reduce.
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();
  Matrix aug(m, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(j, i) = b(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) aug(j, n) = v[j];
  const auto pivots = rref_in_place(f, aug);
  Vector x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    x[pivots[r]] = aug(r, n);
  }
  return x;
}

inline bool is_invertible(const PrimeField& f, const Matrix& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

}  // namespace extlab
