#include "trussalg/blockmatrix.hpp"

#include <sstream>

namespace trussalg {

std::string rat_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

Rational rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    using Int = boost::multiprecision::cpp_int;
    if (slash == std::string::npos) return Rational(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den == 0) throw StructuralError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw StructuralError("cannot parse rational: " + s);
  }
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix shape mismatch");
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

RatMat RatMat::scaled(const Rational& s) const {
  RatMat r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

bool RatMat::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::upper_triangular() const {
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

RatMat RatMat::strictly_lower_triangular() const {
  RatMat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i && j < cols_; ++j) r.at(i, j) = at(i, j);
  return r;
}

BlockMatrix BlockMatrix::zero(int n) { return BlockMatrix{RatMat(n, n), RatMat(n, 1), 0}; }

BlockMatrix BlockMatrix::coset_unit(int n) {
  return BlockMatrix{RatMat(n, n), RatMat(n, 1), 1};
}

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
  return BlockMatrix{a + o.a, b + o.b, alpha + o.alpha};
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& o) const {
  return BlockMatrix{a - o.a, b - o.b, alpha - o.alpha};
}

BlockMatrix BlockMatrix::operator*(const BlockMatrix& o) const {
  return BlockMatrix{a * o.a, a * o.b + b.scaled(o.alpha), alpha * o.alpha};
}

BlockMatrix BlockMatrix::scaled(const Rational& s) const {
  return BlockMatrix{a.scaled(s), b.scaled(s), alpha * s};
}

BlockMatrix BlockMatrix::heap(const BlockMatrix& x, const BlockMatrix& y,
                              const BlockMatrix& z) {
  return x - y + z;
}

RatMat BlockMatrix::embed() const {
  const int n = dim();
  RatMat m(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b.at(i, 0);
  }
  m.at(n, n) = alpha;
  return m;
}

CosetTrussCheck coset_truss_check(const BlockMatrix& q,
                                  const std::vector<BlockMatrix>& ideal_samples) {
  CosetTrussCheck out;
  if (!(q * q == q)) throw StructuralError("NotIdempotent: q*q != q");
  out.idempotent = true;
  for (const BlockMatrix& x : ideal_samples)
    for (const BlockMatrix& y : ideal_samples) {
      // (q+x)(q+y) - q must land back in I (alpha = 0)
      const BlockMatrix p = (q + x) * (q + y) - q;
      if (p.alpha != 0)
        throw StructuralError("ClosureViolation: (q+x)(q+y) - q left the ideal");
    }
  out.closure_ok = true;
  return out;
}

}  // namespace trussalg
