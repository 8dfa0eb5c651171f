#include "trussalg/nijenhuis.hpp"

#include <algorithm>
#include <numeric>

namespace trussalg {

bool is_heap_endo(const FiniteAbelianGroup& G, const FnTable& N) {
  if (static_cast<int>(N.size()) != G.order()) return false;
  return is_multi_heap_map(G, N, 1);
}

Elem nijenhuis_product(const FiniteTruss& T, const FnTable& N, Elem a, Elem b) {
  return T.heap(T.mul(N[a], b), N[T.mul(a, b)], T.mul(a, N[b]));
}

std::vector<Elem> nijenhuis_product_table(const FiniteTruss& T, const FnTable& N) {
  const int n = T.size();
  std::vector<Elem> out(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      out[static_cast<size_t>(a) * n + b] = nijenhuis_product(T, N, a, b);
  return out;
}

FnTable torsion_table(const FiniteTruss& T, const FnTable& N, Elem e) {
  const int n = T.size();
  FnTable out(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      out[static_cast<size_t>(a) * n + b] =
          T.heap(N[nijenhuis_product(T, N, a, b)], T.mul(N[a], N[b]), e);
  return out;
}

NijenhuisReport check_nijenhuis(const FiniteTruss& T, const FnTable& N, Elem e) {
  NijenhuisReport rep;
  rep.is_heap_endo = is_heap_endo(T.group(), N);
  if (!rep.is_heap_endo) return rep;
  const int n = T.size();

  const FnTable tor = torsion_table(T, N, e);
  rep.torsion_trivial = std::all_of(tor.begin(), tor.end(), [&](Elem v) { return v == e; });

  const std::vector<Elem> prod = nijenhuis_product_table(T, N);
  auto mu = [&](Elem a, Elem b) { return prod[static_cast<size_t>(a) * n + b]; };
  rep.product_associative = true;
  for (Elem a = 0; a < n && rep.product_associative; ++a)
    for (Elem b = 0; b < n && rep.product_associative; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mu(mu(a, b), c) != mu(a, mu(b, c))) {
          rep.product_associative = false;
          rep.witness = {a, b, c};
          break;
        }

  const Cochain tc = make_cochain(T, 2, tor);
  rep.torsion_is_2cocycle = is_constant(coboundary(T, e, tc), e);
  if (rep.product_associative != rep.torsion_is_2cocycle)
    throw StructuralError("associativity/2-cocycle equivalence violated");
  return rep;
}

FiniteTruss deformed_truss(const FiniteTruss& T, const FnTable& N) {
  const NijenhuisReport rep = check_nijenhuis(T, N, 0);
  if (!rep.product_associative) throw StructuralError("NotAssociative: o_N fails");
  return validate_truss(T.group(), nijenhuis_product_table(T, N),
                        T.name().empty() ? "deformed" : T.name() + "[N]");
}

FnTable endo_power(const FnTable& N, int k) {
  FnTable out(N.size());
  std::iota(out.begin(), out.end(), 0);
  for (int i = 0; i < k; ++i)
    for (size_t x = 0; x < out.size(); ++x) out[x] = N[out[x]];
  return out;
}

bool compatible(const FiniteTruss& T, const FnTable& N1, const FnTable& N2) {
  const int n = T.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem lhs = T.mul(N1[a], N2[b]);
      const Elem rhs = T.heap(N1[nijenhuis_product(T, N2, a, b)],
                              T.mul(N2[a], N1[b]),
                              N2[nijenhuis_product(T, N1, a, b)]);
      if (lhs != rhs) return false;
    }
  return true;
}

FnTable heap_combination(const FiniteAbelianGroup& G, const std::vector<FnTable>& ops) {
  if (ops.empty() || ops.size() % 2 == 0)
    throw StructuralError("EvenArity: heap combination needs an odd number of operators");
  FnTable out = ops[0];
  for (size_t i = 1; i + 1 < ops.size(); i += 2)
    for (size_t x = 0; x < out.size(); ++x)
      out[x] = G.heap(out[x], ops[i][x], ops[i + 1][x]);
  return out;
}

bool power_laws_check(const FiniteTruss& T, const FnTable& N, int k, int l) {
  if (k < 0 || l < 0 || k > 8 || l > 8) throw CapacityError("powers guarded at k,l <= 8");
  const FnTable Nk = endo_power(N, k);
  const FnTable Nl = endo_power(N, l);
  if (!check_nijenhuis(T, Nk, 0).torsion_trivial) return false;

  // T[N^k][N^l] = T[N^{k+l}] pointwise
  const FiniteTruss Tk = deformed_truss(T, Nk);
  if (nijenhuis_product_table(Tk, Nl) !=
      nijenhuis_product_table(T, endo_power(N, k + l)))
    return false;

  // k-power identities: N^k(a)N(b) = [N(N^k(a)b), N^{k+1}(ab), N^k(aN(b))]
  // and its mirror.
  const FnTable Nk1 = endo_power(N, k + 1);
  const int n = T.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = T.mul(a, b);
      if (T.mul(Nk[a], N[b]) !=
          T.heap(N[T.mul(Nk[a], b)], Nk1[ab], Nk[T.mul(a, N[b])]))
        return false;
      if (T.mul(N[a], Nk[b]) !=
          T.heap(N[T.mul(a, Nk[b])], Nk1[ab], Nk[T.mul(N[a], b)]))
        return false;
    }

  return compatible(T, Nk, Nl);
}

// ---- integer carrier ----

long long AffineIntMap::apply(long long m) const {
  return checked_add(checked_mul(p, m), q);
}

AffineIntMap AffineIntMap::power(int k) const {
  AffineIntMap out;  // identity
  for (int i = 0; i < k; ++i)
    out = AffineIntMap{checked_mul(p, out.p), checked_add(checked_mul(p, out.q), q)};
  return out;
}

long long z_nijenhuis_product(const ZTrussParams& t, const AffineIntMap& N,
                              long long m, long long n) {
  const long long x = z_truss_mult(t, N.apply(m), n);
  const long long y = z_truss_mult(t, m, n);
  const long long z = z_truss_mult(t, m, N.apply(n));
  return checked_add(checked_add(x, -N.apply(y)), z);
}

long long z_torsion(const ZTrussParams& t, const AffineIntMap& N, long long e,
                    long long m, long long n) {
  const long long lhs = N.apply(z_nijenhuis_product(t, N, m, n));
  const long long rhs = z_truss_mult(t, N.apply(m), N.apply(n));
  return checked_add(checked_add(lhs, -rhs), e);
}

long long z_torsion_polynomial(const ZTrussParams& t, const AffineIntMap& N) {
  const long long p = N.p, q = N.q;
  long long r = checked_mul(-t.c, checked_mul(p, p));
  r = checked_add(r, checked_mul(checked_add(checked_mul(2 * t.b - 1, q), 2 * t.c), p));
  r = checked_add(r, -checked_mul(t.a, checked_mul(q, q)));
  r = checked_add(r, -checked_mul(2 * t.b - 1, q));
  return checked_add(r, -t.c);
}

namespace {
constexpr long long kGrid = 5;
}

bool z_is_nijenhuis(const ZTrussParams& t, const AffineIntMap& N) {
  for (long long m = -kGrid; m <= kGrid; ++m)
    for (long long n = -kGrid; n <= kGrid; ++n)
      if (z_torsion(t, N, 0, m, n) != 0) return false;
  return true;
}

bool z_product_associative(const ZTrussParams& t, const AffineIntMap& N) {
  for (long long m = -kGrid; m <= kGrid; ++m)
    for (long long n = -kGrid; n <= kGrid; ++n)
      for (long long k = -kGrid; k <= kGrid; ++k) {
        const long long lhs = z_nijenhuis_product(t, N, z_nijenhuis_product(t, N, m, n), k);
        const long long rhs = z_nijenhuis_product(t, N, m, z_nijenhuis_product(t, N, n, k));
        if (lhs != rhs) return false;
      }
  return true;
}

bool z_compatible(const ZTrussParams& t, const AffineIntMap& N1, const AffineIntMap& N2) {
  for (long long m = -kGrid; m <= kGrid; ++m)
    for (long long n = -kGrid; n <= kGrid; ++n) {
      const long long lhs = z_truss_mult(t, N1.apply(m), N2.apply(n));
      const long long rhs =
          checked_add(checked_add(N1.apply(z_nijenhuis_product(t, N2, m, n)),
                                  -z_truss_mult(t, N2.apply(m), N1.apply(n))),
                      N2.apply(z_nijenhuis_product(t, N1, m, n)));
      if (lhs != rhs) return false;
    }
  return true;
}

AffineIntMap z_heap_combination(const std::vector<AffineIntMap>& ops) {
  if (ops.empty() || ops.size() % 2 == 0)
    throw StructuralError("EvenArity: heap combination needs an odd number of operators");
  AffineIntMap out = ops[0];
  for (size_t i = 1; i + 1 < ops.size(); i += 2) {
    out.p = checked_add(checked_add(out.p, -ops[i].p), ops[i + 1].p);
    out.q = checked_add(checked_add(out.q, -ops[i].q), ops[i + 1].q);
  }
  return out;
}

bool z_power_laws_check(const ZTrussParams& t, const AffineIntMap& N, int k, int l) {
  if (k < 0 || l < 0 || k > 8 || l > 8) throw CapacityError("powers guarded at k,l <= 8");
  const AffineIntMap Nk = N.power(k);
  const AffineIntMap Nl = N.power(l);
  const AffineIntMap Nkl = N.power(k + l);
  if (!z_is_nijenhuis(t, Nk)) return false;
  // products of T[N^k][N^l] and T[N^{k+l}] on the grid; o in T[N^k] is itself
  // a commutative Z-truss product so deform it pointwise
  for (long long m = -kGrid; m <= kGrid; ++m)
    for (long long n = -kGrid; n <= kGrid; ++n) {
      auto prod_k = [&](long long x, long long y) { return z_nijenhuis_product(t, Nk, x, y); };
      const long long lhs = checked_add(
          checked_add(prod_k(Nl.apply(m), n), -Nl.apply(prod_k(m, n))),
          prod_k(m, Nl.apply(n)));
      if (lhs != z_nijenhuis_product(t, Nkl, m, n)) return false;
    }
  return z_compatible(t, Nk, Nl);
}

namespace {

long long gcd_abs(long long x, long long y) {
  return std::gcd(std::llabs(x), std::llabs(y));  // gcd(0,c) = |c|
}

void push_if_in_box(std::vector<AffineIntMap>& v, long long p, long long q, long long bound) {
  if (std::llabs(p) <= bound && std::llabs(q) <= bound) v.push_back({p, q});
}

}  // namespace

ClassifyZReport classify_z(const ZTrussParams& t, long long bound) {
  t.require_constraint();
  if (bound < 0 || bound > 10000) throw CapacityError("classify_z bound guarded at 10^4");
  ClassifyZReport rep;
  rep.params = t;
  rep.bound = bound;
  rep.a_zero_all_associative = (t.a == 0);

  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q)
      if (z_torsion_polynomial(t, {p, q}) == 0) rep.brute_force.push_back({p, q});

  if (t.c != 0) {
    const long long g1 = gcd_abs(t.b, t.c);
    const long long g2 = gcd_abs(t.b - 1, t.c);
    for (long long s = -bound; s <= bound; ++s) {
      push_if_in_box(rep.closed_form, (t.b / g1) * s + 1, (t.c / g1) * s, bound);
      push_if_in_box(rep.closed_form, ((t.b - 1) / g2) * s + 1, (t.c / g2) * s, bound);
    }
  } else {
    // constraint forces b in {0,1}, so 2b-1 is a unit
    for (long long p = -bound; p <= bound; ++p) rep.closed_form.push_back({p, 0});
    for (long long q = -bound; q <= bound; ++q)
      push_if_in_box(rep.closed_form, (t.a / (2 * t.b - 1)) * q + 1, q, bound);
  }

  auto dedup = [](std::vector<AffineIntMap>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(rep.brute_force);
  dedup(rep.closed_form);
  rep.agree = rep.brute_force == rep.closed_form;
  return rep;
}

}  // namespace trussalg
