#pragma once

#include <vector>

#include "trussalg/errors.hpp"
#include "trussalg/rational.hpp"

namespace trussalg {

// Dense matrix over the rationals.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator*(const RatMat& o) const;
  RatMat scaled(const Rational& s) const;
  bool operator==(const RatMat& o) const = default;

  bool is_zero() const;

  // entrywise triangular projections (square matrices)
  RatMat upper_triangular() const;        // keeps i <= j
  RatMat strictly_lower_triangular() const;  // keeps i > j

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Block matrix A(a, b, alpha) = [[a, b], [0, alpha]] with a n-by-n, b n-by-1.
// Multiplication follows A(a,b,alpha) A(a',b',alpha') = A(aa', ab'+alpha' b, alpha alpha').
struct BlockMatrix {
  RatMat a;       // n x n
  RatMat b;       // n x 1
  Rational alpha;

  static BlockMatrix zero(int n);
  static BlockMatrix coset_unit(int n);  // q = A(0,0,1)
  int dim() const { return a.rows(); }

  BlockMatrix operator+(const BlockMatrix& o) const;
  BlockMatrix operator-(const BlockMatrix& o) const;
  BlockMatrix operator*(const BlockMatrix& o) const;
  BlockMatrix scaled(const Rational& s) const;
  bool operator==(const BlockMatrix& o) const = default;

  // [x,y,z] = x - y + z, the heap operation of the ambient ring
  static BlockMatrix heap(const BlockMatrix& x, const BlockMatrix& y, const BlockMatrix& z);

  // embedding into the full (n+1) x (n+1) matrix; used by the product oracle
  RatMat embed() const;
};

// Coset truss access for T(I;q) = q + I inside the block matrix ring:
// validates q idempotent and, on the supplied ideal samples, closure of the
// coset under the product. Throws StructuralError with a witness otherwise.
struct CosetTrussCheck {
  bool idempotent = false;
  bool closure_ok = false;
};
CosetTrussCheck coset_truss_check(const BlockMatrix& q,
                                  const std::vector<BlockMatrix>& ideal_samples);

}  // namespace trussalg
