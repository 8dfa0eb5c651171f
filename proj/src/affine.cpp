#include "trussalg/affine.hpp"

namespace trussalg {

namespace {

int vec_dim(int n) { return n * n + n + 1; }

std::vector<Rational> vec(const BlockMatrix& x) {
  const int n = x.dim();
  std::vector<Rational> v;
  v.reserve(vec_dim(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.push_back(x.a.at(i, j));
  for (int i = 0; i < n; ++i) v.push_back(x.b.at(i, 0));
  v.push_back(x.alpha);
  return v;
}

BlockMatrix unvec(int n, const std::vector<Rational>& v) {
  BlockMatrix x = BlockMatrix::zero(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x.a.at(i, j) = v[k++];
  for (int i = 0; i < n; ++i) x.b.at(i, 0) = v[k++];
  x.alpha = v[k];
  return x;
}

BlockMatrix basis_elem(int n, int k) {
  std::vector<Rational> v(vec_dim(n));
  v[k] = 1;
  return unvec(n, v);
}

}  // namespace

AffineOperator::AffineOperator(int n, RatMat linear, std::vector<Rational> translation)
    : n_(n), linear_(std::move(linear)), translation_(std::move(translation)) {
  const int d = vec_dim(n);
  if (linear_.rows() != d || linear_.cols() != d ||
      static_cast<int>(translation_.size()) != d)
    throw StructuralError("affine operator shape mismatch");
}

AffineOperator AffineOperator::from_map(
    int n, const std::function<BlockMatrix(const BlockMatrix&)>& h) {
  const int d = vec_dim(n);
  const std::vector<Rational> t = vec(h(BlockMatrix::zero(n)));
  RatMat L(d, d);
  for (int k = 0; k < d; ++k) {
    const std::vector<Rational> col = vec(h(basis_elem(n, k)));
    for (int i = 0; i < d; ++i) L.at(i, k) = col[i] - t[i];
  }
  return AffineOperator(n, std::move(L), t);
}

AffineOperator AffineOperator::identity(int n) {
  const int d = vec_dim(n);
  return AffineOperator(n, RatMat::identity(d), std::vector<Rational>(d));
}

AffineOperator AffineOperator::constant(const BlockMatrix& q) {
  const int d = vec_dim(q.dim());
  return AffineOperator(q.dim(), RatMat(d, d), vec(q));
}

AffineOperator AffineOperator::upper_projection_lift(int n) {
  return from_map(n, [](const BlockMatrix& x) {
    return BlockMatrix{x.a.upper_triangular(), x.b, x.alpha};
  });
}

AffineOperator AffineOperator::lower_projection_lift(int n) {
  return from_map(n, [n](const BlockMatrix& x) {
    return BlockMatrix{x.a.strictly_lower_triangular(), RatMat(n, 1), x.alpha};
  });
}

AffineOperator AffineOperator::transpose_on_block(int n) {
  return from_map(n, [n](const BlockMatrix& x) {
    BlockMatrix y = x;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) y.a.at(i, j) = x.a.at(j, i);
    return y;
  });
}

BlockMatrix AffineOperator::apply(const BlockMatrix& x) const {
  const std::vector<Rational> v = vec(x);
  std::vector<Rational> out = translation_;
  for (int i = 0; i < linear_.rows(); ++i)
    for (int j = 0; j < linear_.cols(); ++j)
      if (linear_.at(i, j) != 0) out[i] += linear_.at(i, j) * v[j];
  return unvec(n_, out);
}

BlockMatrix AffineOperator::linearised(const BlockMatrix& v) const {
  const std::vector<Rational> x = vec(v);
  std::vector<Rational> out(x.size());
  for (int i = 0; i < linear_.rows(); ++i)
    for (int j = 0; j < linear_.cols(); ++j)
      if (linear_.at(i, j) != 0) out[i] += linear_.at(i, j) * x[j];
  return unvec(n_, out);
}

AffineOperator AffineOperator::scaled(const Rational& s) const {
  std::vector<Rational> t = translation_;
  for (Rational& x : t) x *= s;
  return AffineOperator(n_, linear_.scaled(s), std::move(t));
}

AffineOperator AffineOperator::compose(const AffineOperator& o) const {
  // (this ∘ o)(x) = L (L_o x + t_o) + t
  std::vector<Rational> t = translation_;
  for (int i = 0; i < linear_.rows(); ++i)
    for (int j = 0; j < linear_.cols(); ++j)
      if (linear_.at(i, j) != 0) t[i] += linear_.at(i, j) * o.translation_[j];
  return AffineOperator(n_, linear_ * o.linear_, std::move(t));
}

AffineOperator AffineOperator::power(int k) const {
  AffineOperator out = identity(n_);
  for (int i = 0; i < k; ++i) out = compose(out);
  return out;
}

AffineOperator barycentric_combination(const std::vector<AffineOperator>& ops,
                                       const std::vector<Rational>& weights) {
  if (ops.empty() || ops.size() != weights.size())
    throw StructuralError("barycentric combination needs matching operators and weights");
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  if (total != 1) throw StructuralError("WeightsNotBarycentric: weights must sum to 1");
  return AffineOperator::from_map(ops[0].dim(), [&](const BlockMatrix& x) {
    BlockMatrix acc = ops[0].apply(x).scaled(weights[0]);
    for (size_t i = 1; i < ops.size(); ++i) acc = acc + ops[i].apply(x).scaled(weights[i]);
    return acc;
  });
}

AffineOperator barycentric_combination_checked(const std::vector<AffineOperator>& ops,
                                               const std::vector<Rational>& weights,
                                               const std::vector<BlockMatrix>& pts) {
  for (size_t i = 0; i < ops.size(); ++i) {
    if (!is_affine_nijenhuis(ops[i], pts))
      throw StructuralError("CompatibilityFailure: operator " + std::to_string(i) +
                            " is not affine Nijenhuis on the samples");
    for (size_t j = i + 1; j < ops.size(); ++j)
      if (!operators_compatible(ops[i], ops[j], pts))
        throw StructuralError("CompatibilityFailure: operators " + std::to_string(i) +
                              " and " + std::to_string(j) + " are incompatible");
  }
  return barycentric_combination(ops, weights);
}

BlockMatrix nijenhuis_product(const AffineOperator& N, const BlockMatrix& a,
                              const BlockMatrix& b) {
  return N.apply(a) * b - N.apply(a * b) + a * N.apply(b);
}

BlockMatrix torsion(const AffineOperator& N, const BlockMatrix& e,
                    const BlockMatrix& a, const BlockMatrix& b) {
  return N.apply(nijenhuis_product(N, a, b)) - N.apply(a) * N.apply(b) + e;
}

BlockMatrix commutator_bracket(const BlockMatrix& a, const BlockMatrix& b) {
  return a * b - b * a;
}

BlockMatrix deformed_bracket(const AffineOperator& N, const BlockMatrix& a,
                             const BlockMatrix& b) {
  return commutator_bracket(N.apply(a), b) - N.linearised(commutator_bracket(a, b)) +
         commutator_bracket(a, N.apply(b));
}

Rational SampleGen::rational() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng_), den(rng_));
}

BlockMatrix SampleGen::coset_point(int n) {
  BlockMatrix x = ideal_vector(n);
  x.alpha = 1;
  return x;
}

BlockMatrix SampleGen::ideal_vector(int n) {
  BlockMatrix x = BlockMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x.a.at(i, j) = rational();
  for (int i = 0; i < n; ++i) x.b.at(i, 0) = rational();
  return x;
}

bool maps_coset_to_coset(const AffineOperator& N, const std::vector<BlockMatrix>& pts) {
  for (const BlockMatrix& p : pts)
    if (N.apply(p).alpha != 1) return false;
  return true;
}

bool is_affine_on_samples(const AffineOperator& N, const std::vector<BlockMatrix>& pts,
                          const std::vector<Rational>& lambdas) {
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1];
    for (const Rational& l : lambdas) {
      const BlockMatrix lhs = N.apply(a + (b - a).scaled(l));
      const BlockMatrix rhs = N.apply(a) + (N.apply(b) - N.apply(a)).scaled(l);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool is_affine_nijenhuis(const AffineOperator& N, const std::vector<BlockMatrix>& pts) {
  if (!maps_coset_to_coset(N, pts))
    throw StructuralError("NotCosetPreserving: operator leaves the alpha = 1 coset");
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1];
    if (!(N.apply(nijenhuis_product(N, a, b)) == N.apply(a) * N.apply(b))) return false;
  }
  return true;
}

bool operators_compatible(const AffineOperator& N1, const AffineOperator& N2,
                          const std::vector<BlockMatrix>& pts) {
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1];
    const BlockMatrix lhs = N1.apply(a) * N2.apply(b);
    const BlockMatrix rhs = N1.apply(nijenhuis_product(N2, a, b)) -
                            N2.apply(a) * N1.apply(b) +
                            N2.apply(nijenhuis_product(N1, a, b));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool lift_condition_ne(const AffineOperator& Nbar, const BlockMatrix& q,
                       const std::vector<BlockMatrix>& ideal_samples) {
  for (const BlockMatrix& x : ideal_samples) {
    if (!(Nbar.apply(x * q) == Nbar.apply(x) * q)) return false;
    if (!(Nbar.apply(q * x) == q * Nbar.apply(x))) return false;
  }
  return true;
}

bool product_biaffine(const AffineOperator& N, const std::vector<BlockMatrix>& pts,
                      const std::vector<Rational>& lambdas) {
  for (size_t i = 0; i + 2 < pts.size(); i += 3) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    for (const Rational& l : lambdas) {
      const BlockMatrix mid = a + (b - a).scaled(l);
      const BlockMatrix left =
          nijenhuis_product(N, a, c) +
          (nijenhuis_product(N, b, c) - nijenhuis_product(N, a, c)).scaled(l);
      if (!(nijenhuis_product(N, mid, c) == left)) return false;
      const BlockMatrix right =
          nijenhuis_product(N, c, a) +
          (nijenhuis_product(N, c, b) - nijenhuis_product(N, c, a)).scaled(l);
      if (!(nijenhuis_product(N, c, mid) == right)) return false;
    }
  }
  return true;
}

bool bracket_antisymmetric(const AffineOperator& N, const std::vector<BlockMatrix>& pts) {
  const BlockMatrix z = BlockMatrix::zero(N.dim());
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    if (!(deformed_bracket(N, pts[i], pts[i + 1]) + deformed_bracket(N, pts[i + 1], pts[i]) == z))
      return false;
    if (!(deformed_bracket(N, pts[i], pts[i]) == z)) return false;
  }
  return true;
}

bool bracket_equals_product_commutator(const AffineOperator& N,
                                       const std::vector<BlockMatrix>& pts) {
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1];
    const BlockMatrix vecdiff = nijenhuis_product(N, a, b) - nijenhuis_product(N, b, a);
    if (!(deformed_bracket(N, a, b) == vecdiff)) return false;
  }
  return true;
}

bool bracket_jacobi(const AffineOperator& N, const std::vector<BlockMatrix>& pts) {
  if (pts.size() < 5) throw StructuralError("need at least 5 sample points");
  // linearisation of v -> [anchor + v, c]_N, anchor independence included
  const BlockMatrix z = BlockMatrix::zero(N.dim());
  auto beta = [&](const BlockMatrix& anchor, const BlockMatrix& v, const BlockMatrix& c) {
    return deformed_bracket(N, anchor + v, c) - deformed_bracket(N, anchor, c);
  };
  const BlockMatrix &anchor1 = pts[pts.size() - 1], &anchor2 = pts[pts.size() - 2];
  for (size_t i = 0; i + 2 < pts.size() - 2; i += 3) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1], &c = pts[i + 2];
    const BlockMatrix ab = deformed_bracket(N, a, b);
    const BlockMatrix bc = deformed_bracket(N, b, c);
    const BlockMatrix ca = deformed_bracket(N, c, a);
    const BlockMatrix cyc = beta(anchor1, ab, c) + beta(anchor1, bc, a) + beta(anchor1, ca, b);
    if (!(cyc == z)) return false;
    if (!(beta(anchor1, ab, c) == beta(anchor2, ab, c))) return false;
  }
  return true;
}

bool linearisation_intertwines(const AffineOperator& N, const std::vector<BlockMatrix>& pts) {
  for (size_t i = 0; i + 1 < pts.size(); i += 2) {
    const BlockMatrix &a = pts[i], &b = pts[i + 1];
    if (!(N.linearised(deformed_bracket(N, a, b)) ==
          commutator_bracket(N.apply(a), N.apply(b))))
      return false;
  }
  return true;
}

bool AffineVerifyReport::all() const {
  return coset_idempotent && coset_closure && product_rule_matches_embedding &&
         lift_ne_condition && lift_torsion_trivial && example_operator_affine &&
         example_operator_nijenhuis && product_biaffine && bracket_equals_commutator &&
         bracket_antisymmetric && bracket_jacobi && linearisation_intertwines;
}

AffineVerifyReport affine_verify(const AffineVerifyConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 6) throw StructuralError("matrix size must be in [2,6]");
  AffineVerifyReport rep;
  SampleGen gen(cfg.seed);
  const int n = cfg.n;
  std::vector<BlockMatrix> pts, vecs;
  for (int i = 0; i < cfg.trials; ++i) {
    pts.push_back(gen.coset_point(n));
    vecs.push_back(gen.ideal_vector(n));
  }
  const std::vector<Rational> lambdas = {0, 1, Rational(1, 2), Rational(2, 3),
                                         Rational(-5, 7)};
  const BlockMatrix q = BlockMatrix::coset_unit(n);

  try {
    const CosetTrussCheck cc = coset_truss_check(q, vecs);
    rep.coset_idempotent = cc.idempotent;
    rep.coset_closure = cc.closure_ok;
  } catch (const StructuralError&) {
    // flags stay false
  }

  rep.product_rule_matches_embedding = true;
  for (size_t i = 0; i + 1 < pts.size(); i += 2)
    if (!((pts[i] * pts[i + 1]).embed() == pts[i].embed() * pts[i + 1].embed()))
      rep.product_rule_matches_embedding = false;

  const AffineOperator lift = AffineOperator::upper_projection_lift(n);
  rep.lift_ne_condition = lift_condition_ne(lift, q, vecs);
  rep.lift_torsion_trivial = true;
  for (size_t i = 0; i + 1 < pts.size(); i += 2)
    if (!(torsion(lift, q, pts[i], pts[i + 1]) == q))
      rep.lift_torsion_trivial = false;

  // N = (1 - l1 - l2) Q + l1 N1 + l2 N2 with N1, N2 the triangular lifts
  const AffineOperator N = barycentric_combination_checked(
      {AffineOperator::constant(q), AffineOperator::upper_projection_lift(n),
       AffineOperator::lower_projection_lift(n)},
      {Rational(1) - cfg.lambda1 - cfg.lambda2, cfg.lambda1, cfg.lambda2}, pts);
  rep.example_operator_affine = is_affine_on_samples(N, pts, lambdas);
  rep.example_operator_nijenhuis = is_affine_nijenhuis(N, pts);
  rep.product_biaffine = trussalg::product_biaffine(N, pts, lambdas);
  rep.bracket_equals_commutator = bracket_equals_product_commutator(N, pts);
  rep.bracket_antisymmetric = trussalg::bracket_antisymmetric(N, pts);
  rep.bracket_jacobi = trussalg::bracket_jacobi(N, pts);
  rep.linearisation_intertwines = trussalg::linearisation_intertwines(N, pts);
  return rep;
}

}  // namespace trussalg
