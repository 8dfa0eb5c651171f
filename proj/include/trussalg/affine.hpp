#pragma once

#include <functional>
#include <random>
#include <vector>

#include "trussalg/blockmatrix.hpp"

namespace trussalg {

// Affine map on the ambient block-matrix space, stored as its action on
// entries: N(X) = unvec(L vec(X) + t). Coset preservation (alpha = 1 slice
// into itself) is a checked property of particular operators, not a type
// invariant, so scalar multiples (heap endomorphisms that are no longer
// affine over the coset) live in the same type.
class AffineOperator {
 public:
  AffineOperator() = default;
  AffineOperator(int n, RatMat linear, std::vector<Rational> translation);

  // Builds the matrix-on-entries form by probing an affine map at the origin
  // and the entry basis.
  static AffineOperator from_map(int n, const std::function<BlockMatrix(const BlockMatrix&)>& h);

  static AffineOperator identity(int n);
  static AffineOperator constant(const BlockMatrix& q);
  // Example operators on the block ring:
  static AffineOperator upper_projection_lift(int n);   // A(a,b,.) -> A(P+(a), b, .)
  static AffineOperator lower_projection_lift(int n);   // A(a,b,.) -> A(P-(a), 0, .)
  static AffineOperator transpose_on_block(int n);      // A(a,b,.) -> A(a^T, b, .)

  int dim() const { return n_; }
  const RatMat& linear() const { return linear_; }

  BlockMatrix apply(const BlockMatrix& x) const;
  // linearisation: vectors are alpha-0 block matrices
  BlockMatrix linearised(const BlockMatrix& v) const;

  AffineOperator scaled(const Rational& s) const;  // s N, pointwise
  AffineOperator compose(const AffineOperator& o) const;
  AffineOperator power(int k) const;

 private:
  int n_ = 0;
  RatMat linear_;                     // d x d with d = n^2 + n + 1
  std::vector<Rational> translation_;  // d
};

// Barycentric combination sum(w_i N_i); weights must sum to 1 exactly.
AffineOperator barycentric_combination(const std::vector<AffineOperator>& ops,
                                       const std::vector<Rational>& weights);
// Verifies each operator is affine Nijenhuis and pairwise compatible on the
// samples before combining; throws StructuralError("CompatibilityFailure...").
AffineOperator barycentric_combination_checked(const std::vector<AffineOperator>& ops,
                                               const std::vector<Rational>& weights,
                                               const std::vector<BlockMatrix>& pts);

// a o_N b = N(a)b - N(ab) + aN(b) in the ambient ring
BlockMatrix nijenhuis_product(const AffineOperator& N, const BlockMatrix& a,
                              const BlockMatrix& b);
// T^e_N(a,b) = N(a o_N b) - N(a)N(b) + e
BlockMatrix torsion(const AffineOperator& N, const BlockMatrix& e,
                    const BlockMatrix& a, const BlockMatrix& b);

// [a,b] = ab - ba, a vector (alpha 0 on coset points)
BlockMatrix commutator_bracket(const BlockMatrix& a, const BlockMatrix& b);
// [a,b]_N = [N(a),b] - Nvec([a,b]) + [a,N(b)]
BlockMatrix deformed_bracket(const AffineOperator& N, const BlockMatrix& a,
                             const BlockMatrix& b);

// Deterministic sample source: entries with numerators in [-9,9] and
// denominators in [1,9].
class SampleGen {
 public:
  explicit SampleGen(std::uint64_t seed) : rng_(seed) {}
  Rational rational();
  BlockMatrix coset_point(int n);   // alpha = 1
  BlockMatrix ideal_vector(int n);  // alpha = 0

 private:
  std::mt19937_64 rng_;
};

// ---- sampled verifications (exact; zero tolerance) ----

bool maps_coset_to_coset(const AffineOperator& N, const std::vector<BlockMatrix>& pts);
bool is_affine_on_samples(const AffineOperator& N, const std::vector<BlockMatrix>& pts,
                          const std::vector<Rational>& lambdas);
bool is_affine_nijenhuis(const AffineOperator& N, const std::vector<BlockMatrix>& pts);
bool operators_compatible(const AffineOperator& N1, const AffineOperator& N2,
                          const std::vector<BlockMatrix>& pts);
// lift condition: Nbar(xq) = Nbar(x)q and Nbar(qx) = q Nbar(x) on samples
bool lift_condition_ne(const AffineOperator& Nbar, const BlockMatrix& q,
                       const std::vector<BlockMatrix>& ideal_samples);
bool product_biaffine(const AffineOperator& N, const std::vector<BlockMatrix>& pts,
                      const std::vector<Rational>& lambdas);
bool bracket_antisymmetric(const AffineOperator& N, const std::vector<BlockMatrix>& pts);
bool bracket_equals_product_commutator(const AffineOperator& N,
                                       const std::vector<BlockMatrix>& pts);
// linearised Jacobi for the deformed bracket (identity operator gives the
// plain commutator case); anchor independence is asserted internally
bool bracket_jacobi(const AffineOperator& N, const std::vector<BlockMatrix>& pts);
bool linearisation_intertwines(const AffineOperator& N, const std::vector<BlockMatrix>& pts);

struct AffineVerifyConfig {
  int n = 3;
  Rational lambda1 = 2;
  Rational lambda2 = Rational(-1, 2);
  int trials = 64;
  std::uint64_t seed = 20230404;
};

struct AffineVerifyReport {
  bool coset_idempotent = false;
  bool coset_closure = false;
  bool product_rule_matches_embedding = false;
  bool lift_ne_condition = false;
  bool lift_torsion_trivial = false;
  bool example_operator_affine = false;
  bool example_operator_nijenhuis = false;
  bool product_biaffine = false;
  bool bracket_equals_commutator = false;
  bool bracket_antisymmetric = false;
  bool bracket_jacobi = false;
  bool linearisation_intertwines = false;
  bool all() const;
};

AffineVerifyReport affine_verify(const AffineVerifyConfig& cfg);

}  // namespace trussalg
