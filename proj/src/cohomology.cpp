#include "trussalg/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace trussalg {

namespace {
constexpr long long kTableGuard = 4096;

long long checked_table_size(const FiniteTruss& T, int arity) {
  return table_size_guarded(T.size(), arity, kTableGuard);
}

Elem eval(const FiniteTruss& T, const Cochain& f, const std::vector<Elem>& args) {
  return f.table[rank_args(args, T.size())];
}
}  // namespace

Cochain make_cochain(const FiniteTruss& T, int arity, FnTable table) {
  if (arity < 0) throw StructuralError("cochain arity must be >= 0");
  const long long tsize = checked_table_size(T, arity);
  if (static_cast<long long>(table.size()) != tsize)
    throw StructuralError("cochain table size is not |T|^arity");
  for (Elem v : table) T.group().check_elem(v);
  if (!is_multi_heap_map(T.group(), table, arity))
    throw StructuralError("cochain table is not a heap morphism in each argument");
  return Cochain{arity, std::move(table)};
}

Cochain constant_cochain(const FiniteTruss& T, int arity, Elem value) {
  const long long tsize = checked_table_size(T, arity);
  return Cochain{arity, FnTable(static_cast<size_t>(tsize), value)};
}

bool is_constant(const Cochain& f, Elem value) {
  return std::all_of(f.table.begin(), f.table.end(), [&](Elem v) { return v == value; });
}

std::vector<Cochain> enumerate_cochains(const FiniteTruss& T, int arity) {
  std::vector<Cochain> out;
  for (FnTable& t : enumerate_multi_heap_maps(T.group(), arity))
    out.push_back(Cochain{arity, std::move(t)});
  return out;
}

Cochain coboundary(const FiniteTruss& T, Elem e, const Cochain& f) {
  const int n = f.arity;
  const int ord = T.size();
  const long long out_size = checked_table_size(T, n + 1);
  const Retract R{&T.group(), e};
  FnTable out(static_cast<size_t>(out_size));
  std::vector<Elem> sub(n > 0 ? n : 1);
  for (long long idx = 0; idx < out_size; ++idx) {
    const std::vector<Elem> a = unrank_args(idx, n + 1, ord);
    // signed terms of the retract-form coboundary, folded with retract ops
    Elem acc = R.zero();
    auto fold = [&](int sign, Elem t) { acc = R.add(acc, sign > 0 ? t : R.neg(t)); };
    fold(-1, T.mul(a[0], e));
    for (int i = 0; i < n; ++i) sub[i] = a[i + 1];
    fold(+1, T.mul(a[0], n == 0 ? f.table[0] : eval(T, f, {sub.begin(), sub.begin() + n})));
    for (int j = 1; j <= n; ++j) {
      std::vector<Elem> args;
      args.reserve(n);
      for (int i = 0; i < j - 1; ++i) args.push_back(a[i]);
      args.push_back(T.mul(a[j - 1], a[j]));
      for (int i = j + 1; i <= n; ++i) args.push_back(a[i]);
      fold(j % 2 == 0 ? +1 : -1, eval(T, f, args));
    }
    const Elem f_front = n == 0 ? f.table[0]
                                : eval(T, f, {a.begin(), a.begin() + n});
    fold((n + 1) % 2 == 0 ? +1 : -1, T.mul(f_front, a[n]));
    fold(n % 2 == 0 ? +1 : -1, T.mul(e, a[n]));
    out[idx] = acc;
  }
  Cochain result{n + 1, std::move(out)};
  assert(is_multi_heap_map(T.group(), result.table, result.arity));
  return result;
}

Cochain coboundary_bracket_form(const FiniteTruss& T, Elem e, const Cochain& f) {
  const int n = f.arity;
  const int ord = T.size();
  const long long out_size = checked_table_size(T, n + 1);
  const auto& G = T.group();
  FnTable out(static_cast<size_t>(out_size));
  for (long long idx = 0; idx < out_size; ++idx) {
    const std::vector<Elem> a = unrank_args(idx, n + 1, ord);
    std::vector<Elem> entries;
    entries.push_back(e);
    entries.push_back(T.mul(a[0], e));
    entries.push_back(T.mul(a[0], n == 0 ? f.table[0] : eval(T, f, {a.begin() + 1, a.end()})));
    for (int j = 1; j <= n; ++j) {
      std::vector<Elem> args;
      for (int i = 0; i < j - 1; ++i) args.push_back(a[i]);
      args.push_back(T.mul(a[j - 1], a[j]));
      for (int i = j + 1; i <= n; ++i) args.push_back(a[i]);
      entries.push_back(eval(T, f, args));
    }
    entries.push_back(T.mul(n == 0 ? f.table[0] : eval(T, f, {a.begin(), a.begin() + n}), a[n]));
    entries.push_back(T.mul(e, a[n]));
    if (n % 2 == 1) entries.push_back(e);  // odd arity carries a trailing e
    // [x1,...,x_{2k+1}] evaluated left to right
    Elem acc = entries[0];
    for (size_t i = 1; i + 1 < entries.size(); i += 2)
      acc = G.heap(acc, entries[i], entries[i + 1]);
    out[idx] = acc;
  }
  return Cochain{n + 1, std::move(out)};
}

bool coboundary_squared_check(const FiniteTruss& T, Elem e, int arity) {
  for (const Cochain& f : enumerate_cochains(T, arity)) {
    if (!is_constant(coboundary(T, e, coboundary(T, e, f)), e)) return false;
  }
  return true;
}

std::vector<Cochain> cocycles(const FiniteTruss& T, Elem e, int arity) {
  std::vector<Cochain> out;
  for (Cochain& f : enumerate_cochains(T, arity))
    if (is_constant(coboundary(T, e, f), e)) out.push_back(std::move(f));
  return out;
}

std::vector<Cochain> coboundaries(const FiniteTruss& T, Elem e, int arity) {
  if (arity == 0) return {Cochain{0, FnTable{e}}};  // B^0_e = {e} by convention
  std::set<Cochain> image;
  for (const Cochain& g : enumerate_cochains(T, arity - 1))
    image.insert(coboundary(T, e, g));
  return {image.begin(), image.end()};
}

CohomologyReport cohomology(const FiniteTruss& T, Elem e, int degree) {
  T.group().check_elem(e);
  const std::vector<Cochain> Z = cocycles(T, e, degree);
  const std::vector<Cochain> B = coboundaries(T, e, degree);
  const Retract R{&T.group(), e};

  // Classes are cosets of B inside Z under pointwise retract addition at the
  // constant-e cochain; the canonical representative of the coset of f is the
  // lexicographically least table among {f + b : b in B}.
  std::set<FnTable> classes;
  for (const Cochain& f : Z) {
    FnTable best;
    for (const Cochain& b : B) {
      FnTable t(f.table.size());
      for (size_t i = 0; i < t.size(); ++i) t[i] = R.add(f.table[i], b.table[i]);
      if (best.empty() || t < best) best = std::move(t);
    }
    classes.insert(std::move(best));
  }

  CohomologyReport rep;
  rep.degree = degree;
  rep.basepoint = e;
  rep.cocycle_count = static_cast<long long>(Z.size());
  rep.coboundary_count = static_cast<long long>(B.size());
  rep.class_count = static_cast<long long>(classes.size());
  rep.class_representatives.assign(classes.begin(), classes.end());
  if (rep.coboundary_count == 0 || rep.cocycle_count % rep.coboundary_count != 0 ||
      rep.class_count * rep.coboundary_count != rep.cocycle_count)
    throw StructuralError("coset partition of Z by B is inconsistent");
  return rep;
}

Cochain transport(const FiniteTruss& T, const Cochain& f, Elem e, Elem e_prime) {
  const Translation tau{&T.group(), e, e_prime};
  FnTable t(f.table.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = tau.apply(f.table[i]);
  return Cochain{f.arity, std::move(t)};
}

bool is_derivation(const FiniteTruss& T, const FnTable& D) {
  const int n = T.size();
  if (static_cast<int>(D.size()) != n) throw StructuralError("derivation table size");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = T.mul(a, b);
      if (D[ab] != T.heap(T.mul(D[a], b), ab, T.mul(a, D[b]))) return false;
    }
  return true;
}

std::vector<FnTable> derivations(const FiniteTruss& T) {
  std::vector<FnTable> out;
  for (FnTable& f : enumerate_heap_endos(T.group()))
    if (is_derivation(T, f)) out.push_back(std::move(f));
  return out;
}

Cochain derivation_to_cocycle(const FiniteTruss& T, const FnTable& D, Elem e) {
  FnTable t(D.size());
  for (Elem a = 0; a < T.size(); ++a) t[a] = T.heap(D[a], a, e);
  return Cochain{1, std::move(t)};
}

FnTable cocycle_to_derivation(const FiniteTruss& T, const Cochain& f, Elem e) {
  if (f.arity != 1) throw StructuralError("Theta^{-1} expects an arity-1 cochain");
  FnTable D(f.table.size());
  for (Elem a = 0; a < T.size(); ++a) D[a] = T.heap(f.table[a], e, a);
  return D;
}

}  // namespace trussalg
