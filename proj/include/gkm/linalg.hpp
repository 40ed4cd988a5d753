#pragma once

// Exact integer lattice algebra: Hermite normal form, kernels, Smith invariant
// factors, integer solving and lattice completion. All arithmetic is GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gkm/error.hpp"

namespace gkm {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

inline IntVector make_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

inline std::string to_string(std::span<const Integer> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (long v : r) entries_.emplace_back(v);
    }
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
      std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Integer> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Integer> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  IntVector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
  IntVector col_vector(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
  }

  void append_row(std::span<const Integer> values) {
    if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "append_row: wrong length");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const { return gkm::is_zero(entries_); }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend IntVector operator*(const IntegerMatrix& a, std::span<const Integer> x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r) os << ";";
      os << gkm::to_string(row(r));
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

namespace detail {

// dst[k] -= q * src[k] for the listed nonzero positions of src.
inline void submul_row(IntVector& dst, const IntVector& src, const Integer& q,
                       const std::vector<std::size_t>& support) {
  for (std::size_t k : support) mpz_submul(dst[k].get_mpz_t(), q.get_mpz_t(), src[k].get_mpz_t());
}

inline std::vector<std::size_t> support_of(const IntVector& v, std::size_t from) {
  std::vector<std::size_t> s;
  for (std::size_t k = from; k < v.size(); ++k)
    if (sgn(v[k]) != 0) s.push_back(k);
  return s;
}

/// Brings the first `cols` columns of `rows` into row-style Hermite normal form
/// using unimodular row operations applied to whole rows (so trailing columns
/// carry a transform when the caller appends one). Pivots are positive and
/// entries above a pivot lie in [0, pivot). Returns the rank.
inline std::size_t hermite_in_place(std::vector<IntVector>& rows, std::size_t cols) {
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on the column: keep the smallest nonzero entry as pivot and
    // reduce every other entry below it until only the pivot survives.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      const auto support = support_of(rows[r], c);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        submul_row(rows[i], rows[r], q, support);
        if (sgn(rows[i][c]) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows.size() || sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] = -rows[r][k];
    const auto support = support_of(rows[r], c);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (sgn(q) != 0) submul_row(rows[i], rows[r], q, support);
    }
    ++r;
  }
  return r;
}

inline std::vector<IntVector> to_rows(const IntegerMatrix& m) { return m.row_vectors(); }

}  // namespace detail

struct HermiteForm {
  IntegerMatrix hnf;        ///< same shape as the input; zero rows at the bottom
  IntegerMatrix transform;  ///< unimodular, transform * input == hnf
  std::size_t rank = 0;
};

/// Row-style Hermite normal form with its unimodular transform.
inline HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntVector> aug(rows, IntVector(cols + rows));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug[i].begin());
    aug[i][cols + i] = 1;
  }
  HermiteForm out;
  out.rank = detail::hermite_in_place(aug, cols);
  out.hnf = IntegerMatrix(rows, cols);
  out.transform = IntegerMatrix(rows, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(aug[i].begin(), aug[i].begin() + cols, out.hnf.row(i).begin());
    std::copy(aug[i].begin() + cols, aug[i].end(), out.transform.row(i).begin());
  }
  return out;
}

/// The nonzero rows of the Hermite normal form: the canonical basis of the
/// row lattice. Two generating sets of the same lattice give equal results.
inline IntegerMatrix hermite_basis(const IntegerMatrix& m) {
  auto rows = detail::to_rows(m);
  const std::size_t rank = detail::hermite_in_place(rows, m.cols());
  rows.resize(rank);
  return IntegerMatrix::from_rows(rows, m.cols());
}

inline IntegerMatrix canonical_lattice(const std::vector<IntVector>& generators, std::size_t dim) {
  return hermite_basis(IntegerMatrix::from_rows(generators, dim));
}

inline std::size_t rank(const IntegerMatrix& m) { return hermite_basis(m).rows(); }

/// Basis of {x in Z^cols : m x = 0}, canonicalized by Hermite normal form.
inline std::vector<IntVector> integer_kernel_basis(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  if (n == 0) return {};
  // Row reduction first: same kernel, at most n rows left.
  const IntegerMatrix reduced = hermite_basis(m);
  const std::size_t r = reduced.rows();
  std::vector<IntVector> aug(n, IntVector(r + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug[i][k] = reduced(k, i);
    aug[i][r + i] = 1;
  }
  const std::size_t rk = detail::hermite_in_place(aug, r);
  std::vector<IntVector> kernel;
  for (std::size_t i = rk; i < n; ++i) kernel.emplace_back(aug[i].begin() + r, aug[i].end());
  if (kernel.empty()) return {};
  return canonical_lattice(kernel, n).row_vectors();
}

/// Nonzero Smith invariant factors d_1 | d_2 | ... of m.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& m) {
  IntegerMatrix a = hermite_basis(m);
  auto is_diagonal = [](const IntegerMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (i != j && sgn(x(i, j)) != 0) return false;
    return true;
  };
  // Alternate row and column Hermite reduction until diagonal.
  while (!is_diagonal(a)) a = hermite_basis(hermite_basis(a.transpose()).transpose());
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

/// True when the rows of `generators` span all of Z^cols over the integers.
inline bool generates_full_lattice(const IntegerMatrix& generators) {
  return hermite_basis(generators) == IntegerMatrix::identity(generators.cols());
}

/// Integer solution X of a * X = b, if one exists. Free directions are set to
/// zero; the solution is unique when a has full column rank.
inline std::optional<IntegerMatrix> solve_integer(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_integer");
  // Column echelon form: a * transform^T = hnf^T.
  const HermiteForm h = hermite_normal_form(a.transpose());
  const std::size_t k = a.cols(), r = h.rank;
  std::vector<std::size_t> pivot_row(r);
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t c = 0;
    while (sgn(h.hnf(t, c)) == 0) ++c;
    pivot_row[t] = c;
  }
  IntegerMatrix y(k, b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t t = 0; t < r; ++t) {
      const std::size_t p = pivot_row[t];
      Integer rest = b(p, col);
      for (std::size_t s = 0; s < t; ++s) rest -= h.hnf(s, p) * y(s, col);
      if (!mpz_divisible_p(rest.get_mpz_t(), h.hnf(t, p).get_mpz_t())) return std::nullopt;
      mpz_divexact(y(t, col).get_mpz_t(), rest.get_mpz_t(), h.hnf(t, p).get_mpz_t());
    }
  }
  IntegerMatrix x = h.transform.transpose() * y;
  if (!(a * x == b)) return std::nullopt;
  return x;
}

/// Basis of the saturation (rational span intersected with Z^dim) of the
/// lattice generated by `generators`.
inline std::vector<IntVector> saturate(const std::vector<IntVector>& generators, std::size_t dim) {
  if (generators.empty()) return {};
  const IntegerMatrix g = IntegerMatrix::from_rows(generators, dim);
  const auto annihilator = integer_kernel_basis(g);
  if (annihilator.empty()) return IntegerMatrix::identity(dim).row_vectors();
  return integer_kernel_basis(IntegerMatrix::from_rows(annihilator, dim));
}

/// Coordinates of `v` in the lattice basis `basis`, or nullopt when v is not
/// an integer combination of it.
inline std::optional<IntVector> lattice_coordinates(std::span<const Integer> v,
                                                    const std::vector<IntVector>& basis) {
  const IntegerMatrix bt = IntegerMatrix::from_rows(basis, v.size()).transpose();
  IntegerMatrix rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  auto x = solve_integer(bt, rhs);
  if (!x) return std::nullopt;
  return x->col_vector(0);
}

struct LatticeCompletion {
  std::vector<IntVector> completion;  ///< lattice vectors appended after `chosen`
  Integer index = 1;                  ///< [saturation of chosen inside the lattice : chosen]
};

/// Extends independent lattice vectors `chosen` with members of `lattice`
/// (a basis) to a maximal independent family. Greedy over the basis order.
inline LatticeCompletion complete_inside_lattice(const std::vector<IntVector>& chosen,
                                                 const std::vector<IntVector>& lattice) {
  LatticeCompletion out;
  if (lattice.empty()) {
    if (!chosen.empty()) throw Error(ErrorCode::NotInLattice, "lattice is trivial");
    return out;
  }
  const std::size_t dim = lattice.front().size();
  std::vector<IntVector> coords;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto y = lattice_coordinates(chosen[i], lattice);
    if (!y) throw Error(ErrorCode::NotInLattice, "chosen vector " + std::to_string(i) + " " + to_string(chosen[i]));
    coords.push_back(std::move(*y));
  }
  std::vector<IntVector> family = chosen;
  std::size_t current = family.empty() ? 0 : rank(IntegerMatrix::from_rows(family, dim));
  if (current != chosen.size())
    throw Error(ErrorCode::DimensionMismatch, "chosen vectors are linearly dependent");
  if (!coords.empty()) {
    Integer idx = 1;
    for (const auto& d : invariant_factors(IntegerMatrix::from_rows(coords, lattice.size()))) idx *= d;
    out.index = idx;
  }
  for (const auto& b : lattice) {
    family.push_back(b);
    const std::size_t next = rank(IntegerMatrix::from_rows(family, dim));
    if (next > current) {
      current = next;
      out.completion.push_back(b);
    } else {
      family.pop_back();
    }
  }
  return out;
}

/// Given `primitive` vectors generating a saturated sublattice of the lattice
/// with basis `basis`, returns vectors that complete them to a basis of it.
inline std::vector<IntVector> extend_to_basis(const std::vector<IntVector>& primitive,
                                              const std::vector<IntVector>& basis) {
  if (basis.empty()) return {};
  const std::size_t r = basis.size(), dim = basis.front().size();
  std::vector<IntVector> coords;
  for (const auto& v : primitive) {
    auto y = lattice_coordinates(v, basis);
    if (!y) throw Error(ErrorCode::NotInLattice, "vector " + to_string(v) + " outside lattice");
    coords.push_back(std::move(*y));
  }
  if (coords.empty()) return basis;
  // transform * Y^T = [I; 0] exactly when Y is primitive; then the columns of
  // transform^{-1} form a basis whose first columns are the rows of Y.
  const HermiteForm h = hermite_normal_form(IntegerMatrix::from_rows(coords, r).transpose());
  IntegerMatrix expected(r, coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) expected(i, i) = 1;
  if (h.rank != coords.size() || !(h.hnf == expected))
    throw Error(ErrorCode::NotInLattice, "vectors do not span a saturated sublattice");
  const IntegerMatrix inverse = hermite_normal_form(h.transform).transform;
  std::vector<IntVector> out;
  for (std::size_t c = coords.size(); c < r; ++c) {
    IntVector v(dim);
    for (std::size_t s = 0; s < r; ++s)
      if (sgn(inverse(s, c)) != 0)
        for (std::size_t k = 0; k < dim; ++k) v[k] += inverse(s, c) * basis[s][k];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace gkm
