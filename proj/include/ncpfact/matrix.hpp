#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncpfact/cyclotomic.hpp"

namespace ncpfact {

using CycVector = std::vector<CyclotomicNumber>;

/// Dense matrix over Q(zeta_N). Group elements are square (dim x dim);
/// rectangular shapes appear only in stacked kernel computations.
class CycMatrix {
 public:
  CycMatrix(unsigned rows, unsigned cols, unsigned conductor)
      : rows_(rows), cols_(cols), conductor_(conductor),
        entries_(static_cast<std::size_t>(rows) * cols, CyclotomicNumber(conductor)) {}

  static CycMatrix identity(unsigned n, unsigned conductor) {
    CycMatrix m(n, n, conductor);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = CyclotomicNumber(conductor, 1);
    return m;
  }

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  unsigned conductor() const { return conductor_; }

  unsigned dim() const {
    if (rows_ != cols_) throw std::logic_error("dim() on a non-square matrix");
    return rows_;
  }

  CyclotomicNumber& at(unsigned r, unsigned c) { return entries_[std::size_t(r) * cols_ + c]; }
  const CyclotomicNumber& at(unsigned r, unsigned c) const {
    return entries_[std::size_t(r) * cols_ + c];
  }

  friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_ || a.conductor_ != b.conductor_)
      throw std::invalid_argument("matrix product shape/conductor mismatch");
    CycMatrix r(a.rows_, b.cols_, a.conductor_);
    for (unsigned i = 0; i < a.rows_; ++i)
      for (unsigned k = 0; k < a.cols_; ++k) {
        const CyclotomicNumber& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (unsigned j = 0; j < b.cols_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) += aik * b.at(k, j);
        }
      }
    return r;
  }

  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.conductor_ != b.conductor_)
      throw std::invalid_argument("matrix difference shape/conductor mismatch");
    CycMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
  }

  CycVector apply(const CycVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    CycVector r(rows_, CyclotomicNumber(conductor_));
    for (unsigned i = 0; i < rows_; ++i)
      for (unsigned j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero() || v[j].is_zero()) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  /// Exact rank via Gaussian elimination with first-nonzero-pivot selection.
  unsigned rank() const {
    CycMatrix work = *this;
    return work.rref_in_place();
  }

  /// Canonical basis (reduced-row-echelon rows) of { v : M v = 0 }.
  std::vector<CycVector> kernel_basis() const {
    CycMatrix work = *this;
    std::vector<unsigned> pivot_col;
    work.rref_in_place(&pivot_col);
    std::vector<bool> is_pivot(cols_, false);
    for (unsigned c : pivot_col) is_pivot[c] = true;
    std::vector<CycVector> basis;
    for (unsigned f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      CycVector v(cols_, CyclotomicNumber(conductor_));
      v[f] = CyclotomicNumber(conductor_, 1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[pivot_col[r]] = -work.at(static_cast<unsigned>(r), f);
      basis.push_back(std::move(v));
    }
    return rref_rows(std::move(basis), cols_, conductor_);
  }

  /// Canonical basis of Ker(M - mu I); empty when mu is not an eigenvalue.
  std::vector<CycVector> eigenspace(const CyclotomicNumber& mu) const {
    if (mu.conductor() != conductor_)
      throw std::invalid_argument("eigenvalue conductor mismatch");
    CycMatrix shifted = *this;
    for (unsigned i = 0; i < dim(); ++i) shifted.at(i, i) -= mu;
    return shifted.kernel_basis();
  }

  /// Canonical RREF form of a spanning set; the result is the unique
  /// reduced basis of the spanned subspace, usable as a dictionary key.
  static std::vector<CycVector> rref_rows(std::vector<CycVector> rows, unsigned width,
                                          unsigned conductor) {
    if (rows.empty()) return rows;
    CycMatrix m(static_cast<unsigned>(rows.size()), width, conductor);
    for (unsigned r = 0; r < rows.size(); ++r)
      for (unsigned c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
    unsigned rank = m.rref_in_place();
    std::vector<CycVector> out;
    out.reserve(rank);
    for (unsigned r = 0; r < rank; ++r) {
      CycVector v;
      v.reserve(width);
      for (unsigned c = 0; c < width; ++c) v.push_back(m.at(r, c));
      out.push_back(std::move(v));
    }
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (unsigned r = 0; r < rows_; ++r) {
      if (r) s += ';';
      for (unsigned c = 0; c < cols_; ++c) {
        if (c) s += ' ';
        s += at(r, c).to_string();
      }
    }
    return s;
  }

  /// Parses the row-major text form (rows ';'-separated, entries ' '-separated).
  static CycMatrix parse(std::string_view text) {
    std::vector<std::vector<std::string_view>> grid;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t semi = text.find(';', start);
      std::string_view row =
          semi == std::string_view::npos ? text.substr(start) : text.substr(start, semi - start);
      std::vector<std::string_view> cells;
      std::size_t cell_start = 0;
      while (cell_start <= row.size() && !row.empty()) {
        std::size_t space = row.find(' ', cell_start);
        cells.push_back(space == std::string_view::npos ? row.substr(cell_start)
                                                        : row.substr(cell_start, space - cell_start));
        if (space == std::string_view::npos) break;
        cell_start = space + 1;
      }
      grid.push_back(std::move(cells));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    if (grid.empty() || grid[0].empty())
      throw std::invalid_argument("empty matrix text");
    CyclotomicNumber first = CyclotomicNumber::parse(grid[0][0]);
    CycMatrix m(static_cast<unsigned>(grid.size()), static_cast<unsigned>(grid[0].size()),
                first.conductor());
    for (unsigned r = 0; r < m.rows_; ++r) {
      if (grid[r].size() != m.cols_) throw std::invalid_argument("ragged matrix text");
      for (unsigned c = 0; c < m.cols_; ++c) m.at(r, c) = CyclotomicNumber::parse(grid[r][c]);
    }
    return m;
  }

 private:
  // In-place RREF; returns rank, optionally reports pivot columns.
  unsigned rref_in_place(std::vector<unsigned>* pivot_cols = nullptr) {
    unsigned lead = 0;
    for (unsigned col = 0; col < cols_ && lead < rows_; ++col) {
      unsigned pivot = lead;
      while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != lead)
        for (unsigned c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(lead, c));
      CyclotomicNumber inv = at(lead, col).inverse();
      for (unsigned c = col; c < cols_; ++c)
        if (!at(lead, c).is_zero()) at(lead, c) = at(lead, c) * inv;
      for (unsigned r = 0; r < rows_; ++r) {
        if (r == lead || at(r, col).is_zero()) continue;
        CyclotomicNumber factor = at(r, col);
        for (unsigned c = col; c < cols_; ++c) {
          if (at(lead, c).is_zero()) continue;
          at(r, c) -= factor * at(lead, c);
        }
      }
      if (pivot_cols) pivot_cols->push_back(col);
      ++lead;
    }
    return lead;
  }

  unsigned rows_, cols_, conductor_;
  std::vector<CyclotomicNumber> entries_;
};

/// True when v lies in the row space spanned by an RREF basis.
inline bool rref_contains_vector(const std::vector<CycVector>& basis, CycVector v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  // Each basis row is reduced; eliminate v against each pivot in turn.
  for (const auto& row : basis) {
    unsigned pivot = 0;
    while (pivot < row.size() && row[pivot].is_zero()) ++pivot;
    if (pivot == row.size()) continue;
    if (v[pivot].is_zero()) continue;
    CyclotomicNumber factor = v[pivot];
    for (unsigned c = pivot; c < row.size(); ++c)
      if (!row[c].is_zero()) v[c] -= factor * row[c];
  }
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Subspace containment: span(inner) is contained in span(outer).
inline bool rref_contains(const std::vector<CycVector>& outer,
                          const std::vector<CycVector>& inner) {
  for (const auto& v : inner)
    if (!rref_contains_vector(outer, v)) return false;
  return true;
}

inline std::string subspace_to_string(const std::vector<CycVector>& basis) {
  std::string s;
  for (const auto& row : basis) {
    if (!s.empty()) s += ';';
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) s += ' ';
      s += row[c].to_string();
    }
  }
  return s.empty() ? std::string("0") : s;
}

/// Entry-wise reinterpretation in a larger cyclotomic field.
inline CycMatrix promoted_matrix(const CycMatrix& m, unsigned conductor) {
  if (conductor == m.conductor()) return m;
  CycMatrix out(m.rows(), m.cols(), conductor);
  for (unsigned r = 0; r < m.rows(); ++r)
    for (unsigned c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c).promoted(conductor);
  return out;
}

inline std::vector<CycVector> promoted_rows(const std::vector<CycVector>& rows,
                                            unsigned conductor) {
  std::vector<CycVector> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    CycVector v;
    v.reserve(row.size());
    for (const auto& x : row) v.push_back(x.promoted(conductor));
    out.push_back(std::move(v));
  }
  return out;
}

/// Intersection of two spans, via the kernel of the column-concatenated
/// matrix [A^T | B^T]; result in canonical RREF form.
inline std::vector<CycVector> span_intersection(const std::vector<CycVector>& a,
                                                const std::vector<CycVector>& b, unsigned width,
                                                unsigned conductor) {
  if (a.empty() || b.empty()) return {};
  const unsigned p = static_cast<unsigned>(a.size());
  const unsigned q = static_cast<unsigned>(b.size());
  CycMatrix m(width, p + q, conductor);
  for (unsigned j = 0; j < p; ++j)
    for (unsigned i = 0; i < width; ++i) m.at(i, j) = a[j][i];
  for (unsigned j = 0; j < q; ++j)
    for (unsigned i = 0; i < width; ++i) m.at(i, p + j) = b[j][i];
  auto null_rows = m.kernel_basis();
  std::vector<CycVector> vectors;
  for (const auto& coeff : null_rows) {
    CycVector x(width, CyclotomicNumber(conductor));
    for (unsigned j = 0; j < p; ++j) {
      if (coeff[j].is_zero()) continue;
      for (unsigned i = 0; i < width; ++i) {
        if (a[j][i].is_zero()) continue;
        x[i] += coeff[j] * a[j][i];
      }
    }
    bool zero = true;
    for (const auto& e : x)
      if (!e.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) vectors.push_back(std::move(x));
  }
  return CycMatrix::rref_rows(std::move(vectors), width, conductor);
}

/// Kernel of the stacked matrix [A0; A1; ...]: the intersection of kernels.
inline std::vector<CycVector> stacked_kernel(const std::vector<const CycMatrix*>& blocks,
                                             unsigned width, unsigned conductor) {
  unsigned total_rows = 0;
  for (const auto* b : blocks) total_rows += b->rows();
  if (total_rows == 0) {
    CycMatrix zero(1, width, conductor);
    return zero.kernel_basis();
  }
  CycMatrix stacked(total_rows, width, conductor);
  unsigned r0 = 0;
  for (const auto* b : blocks) {
    for (unsigned r = 0; r < b->rows(); ++r)
      for (unsigned c = 0; c < width; ++c) stacked.at(r0 + r, c) = b->at(r, c);
    r0 += b->rows();
  }
  return stacked.kernel_basis();
}

}  // namespace ncpfact
