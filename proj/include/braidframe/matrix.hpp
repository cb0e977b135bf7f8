#pragma once
// Exact integer matrices and Smith normal form.  Matrices here are small
// (abelianized relator matrices), so the algorithm favors clarity: elementary
// row/column operations with a minimum-absolute-value pivot, arbitrary
// precision entries, and optional tracking of the unimodular transforms.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "alphabet.hpp"

namespace braidframe {

using Int = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  void swap_rows(std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
  }
  // row r1 += m * row r2
  void add_row(std::size_t r1, std::size_t r2, const Int& m) {
    for (std::size_t c = 0; c < cols_; ++c) at(r1, c) += m * at(r2, c);
  }
  void add_col(std::size_t c1, std::size_t c2, const Int& m) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, c1) += m * at(r, c2);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
  }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw braid_error("matrix shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(r, k) == 0) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c)
          out.at(r, c) += at(r, k) * rhs.at(k, c);
      }
    return out;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

struct SmithResult {
  IntegerMatrix d;  // u * input * v = d, diagonal with divisibility chain
  IntegerMatrix u;
  IntegerMatrix v;
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // the positive diagonal entries, d1 | d2 | ...
};

inline SmithResult smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithResult res{std::move(m), IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  IntegerMatrix& d = res.d;

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // deterministic minimum-absolute-value pivot in the trailing block
    std::size_t pr = t, pc = t;
    Int best = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        const Int v = abs(d.at(r, c));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) break;
    if (pr != t) {
      d.swap_rows(t, pr);
      res.u.swap_rows(t, pr);
    }
    if (pc != t) {
      d.swap_cols(t, pc);
      res.v.swap_cols(t, pc);
    }

    bool dirty = false;
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (d.at(r, t) == 0) continue;
      const Int q = d.at(r, t) / d.at(t, t);
      d.add_row(r, t, -q);
      res.u.add_row(r, t, -q);
      if (d.at(r, t) != 0) dirty = true;  // remainder survives; pivot will shrink
    }
    for (std::size_t c = t + 1; c < cols; ++c) {
      if (d.at(t, c) == 0) continue;
      const Int q = d.at(t, c) / d.at(t, t);
      d.add_col(c, t, -q);
      res.v.add_col(c, t, -q);
      if (d.at(t, c) != 0) dirty = true;
    }
    if (dirty) continue;  // re-select a smaller pivot

    // pivot now divides its cleared row and column; enforce divisibility into
    // the trailing block
    bool fixed = false;
    for (std::size_t r = t + 1; r < rows && !fixed; ++r)
      for (std::size_t c = t + 1; c < cols && !fixed; ++c)
        if (d.at(r, c) % d.at(t, t) != 0) {
          d.add_row(t, r, 1);
          res.u.add_row(t, r, 1);
          fixed = true;
        }
    if (fixed) continue;

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      res.u.negate_row(t);
    }
    ++t;
  }

  res.rank = t;
  for (std::size_t k = 0; k < t; ++k) res.invariant_factors.push_back(d.at(k, k));
  return res;
}

// Is x in the integer row space of m?  With u*m*v = d, the condition is that
// z = x*v has z_t divisible by d_t for t < rank and z_t = 0 beyond.
inline bool in_row_space(const SmithResult& snf, const std::vector<Int>& x) {
  const std::size_t cols = snf.v.rows();
  if (x.size() != cols) throw braid_error("vector length mismatch");
  for (std::size_t c = 0; c < snf.v.cols(); ++c) {
    Int z = 0;
    for (std::size_t k = 0; k < cols; ++k) z += x[k] * snf.v.at(k, c);
    if (c < snf.rank) {
      if (z % snf.invariant_factors[c] != 0) return false;
    } else {
      if (z != 0) return false;
    }
  }
  return true;
}

struct H1Invariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, divisibility order

  friend bool operator==(const H1Invariants&, const H1Invariants&) = default;
};

// Cokernel invariants of a relation matrix (rows = relators, cols = generators).
inline H1Invariants cokernel_invariants(const IntegerMatrix& m) {
  const SmithResult snf = smith_normal_form(m);
  H1Invariants out;
  out.free_rank = static_cast<long long>(m.cols()) - static_cast<long long>(snf.rank);
  for (const Int& d : snf.invariant_factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace braidframe
