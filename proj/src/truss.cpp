#include "trussalg/truss.hpp"

namespace trussalg {

FiniteTruss::FiniteTruss(FiniteAbelianGroup group, std::vector<Elem> mult_table,
                         std::string name)
    : group_(std::move(group)), mult_(std::move(mult_table)), name_(std::move(name)) {
  const size_t n = static_cast<size_t>(group_.order());
  if (mult_.size() != n * n) throw StructuralError("mult table is not |G| x |G|");
  for (Elem v : mult_) group_.check_elem(v);
}

std::optional<TrussViolation> FiniteTruss::check_axioms(const FiniteAbelianGroup& G,
                                                        const std::vector<Elem>& mult) {
  const int n = G.order();
  if (mult.size() != static_cast<size_t>(n) * n)
    throw StructuralError("mult table is not |G| x |G|");
  auto mu = [&](Elem a, Elem b) { return mult[static_cast<size_t>(a) * n + b]; };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mu(mu(a, b), c) != mu(a, mu(b, c)))
          return TrussViolation{TrussViolation::Assoc, {a, b, c}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d) {
          if (mu(a, G.heap(b, c, d)) != G.heap(mu(a, b), mu(a, c), mu(a, d)))
            return TrussViolation{TrussViolation::LeftDistrib, {a, b, c, d}};
          if (mu(G.heap(b, c, d), a) != G.heap(mu(b, a), mu(c, a), mu(d, a)))
            return TrussViolation{TrussViolation::RightDistrib, {a, b, c, d}};
        }
  return std::nullopt;
}

FiniteTruss validate_truss(const FiniteAbelianGroup& G, const std::vector<Elem>& mult,
                           const std::string& name) {
  if (auto v = FiniteTruss::check_axioms(G, mult)) {
    std::string w;
    for (Elem e : v->witness) w += (w.empty() ? "" : ",") + std::to_string(e);
    throw StructuralError(v->kind_name() + " at (" + w + ")");
  }
  return FiniteTruss(G, mult, name);
}

namespace {
FiniteTruss from_rule(const FiniteAbelianGroup& G, const std::string& name,
                      Elem (*rule)(const FiniteAbelianGroup&, Elem, Elem)) {
  const int n = G.order();
  std::vector<Elem> mult(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mult[static_cast<size_t>(a) * n + b] = rule(G, a, b);
  return FiniteTruss(G, std::move(mult), name);
}
}  // namespace

FiniteTruss left_projection_truss(const FiniteAbelianGroup& G) {
  return from_rule(G, "left_projection", [](const FiniteAbelianGroup&, Elem a, Elem) { return a; });
}

FiniteTruss addition_truss(const FiniteAbelianGroup& G) {
  return from_rule(G, "addition",
                   [](const FiniteAbelianGroup& g, Elem a, Elem b) { return g.add(a, b); });
}

std::vector<FiniteTruss> standard_products(const FiniteAbelianGroup& G) {
  if (G.order() < 2) throw StructuralError("standard products need |G| >= 2");
  std::vector<FiniteTruss> out;
  out.push_back(from_rule(G, "zero", [](const FiniteAbelianGroup&, Elem, Elem) { return 0; }));
  out.push_back(left_projection_truss(G));
  out.push_back(from_rule(G, "right_projection",
                          [](const FiniteAbelianGroup&, Elem, Elem b) { return b; }));
  out.push_back(addition_truss(G));
  return out;
}

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("64-bit add overflow");
  return r;
}

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("64-bit mul overflow");
  return r;
}

bool ZTrussParams::constraint_holds() const {
  return checked_mul(a, c) == checked_mul(b, b - 1);
}

void ZTrussParams::require_constraint() const {
  if (!constraint_holds())
    throw StructuralError("ConstraintViolation: ac != b(b-1) for (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

long long z_truss_mult(const ZTrussParams& p, long long m, long long n) {
  p.require_constraint();
  // a m n + b(m+n) + c
  long long r = checked_mul(p.a, checked_mul(m, n));
  r = checked_add(r, checked_mul(p.b, checked_add(m, n)));
  return checked_add(r, p.c);
}

}  // namespace trussalg
