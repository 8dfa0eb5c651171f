#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "trussalg/errors.hpp"

namespace trussalg {

using Elem = int;  // element index in [0, order)

// Direct sum of cyclic groups Z_{n_1} + ... + Z_{n_r}, every n_i >= 2.
// Elements are mixed-radix indices, first component most significant,
// so the index <-> tuple map is the lexicographic bijection.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  int order() const { return order_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& cyclic_orders() const { return orders_; }

  std::vector<int> to_tuple(Elem a) const;
  Elem from_tuple(const std::vector<int>& t) const;
  // index of the i-th standard generator (1 in component i, 0 elsewhere)
  Elem generator(int i) const;
  // i-th component of element a
  int component(Elem a, int i) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem smul(long long k, Elem a) const;

  // [a,b,c] = a - b + c, the heap operation of H(G)
  Elem heap(Elem a, Elem b, Elem c) const;

  bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }

  void check_elem(Elem a) const;

 private:
  std::vector<int> orders_;
  std::vector<int> strides_;
  int order_ = 0;
};

// Retract group G(H;e): x +_e y = [x,e,y], neutral e, -_e x = [e,x,e].
struct Retract {
  const FiniteAbelianGroup* group;
  Elem e;

  Elem add(Elem x, Elem y) const { return group->heap(x, e, y); }
  Elem neg(Elem x) const { return group->heap(e, x, e); }
  Elem zero() const { return e; }
};

// Translation isomorphism tau: a -> a - e + e', the group isomorphism
// G(H;e) -> G(H;e') that carries the neutral element e to e'.
struct Translation {
  const FiniteAbelianGroup* group;
  Elem from_base;  // e
  Elem to_base;    // e'

  Elem apply(Elem a) const { return group->heap(a, from_base, to_base); }
  Translation inverse() const { return Translation{group, to_base, from_base}; }
};

using FnTable = std::vector<Elem>;  // total function table, mixed-radix domain

// Mixed-radix index helpers for tables G^n -> G (slot 0 most significant).
std::vector<Elem> unrank_args(long long idx, int arity, int order);
long long rank_args(const std::vector<Elem>& args, int order);
// |G|^n with the capacity guard applied
long long table_size_guarded(int order, int arity, long long guard);

// All heap endomorphisms of H(G), i.e. maps f with
// f(a-b+c) = f(a)-f(b)+f(c); exactly f(x) = g(x)+c with g in End(G).
// Guard: |G| <= 64.
std::vector<FnTable> enumerate_heap_endos(const FiniteAbelianGroup& G);

// All f: G^n -> G that are heap morphisms in each argument, generated
// structurally as a constant plus subset-indexed multi-additive parts.
// Guard: |G|^n <= 4096. For n = 0 yields the |G| constants.
std::vector<FnTable> enumerate_multi_heap_maps(const FiniteAbelianGroup& G, int arity);

// Membership predicate used by the brute-force oracle in tests and by
// cochain validation: is table a heap morphism in each of its n slots?
bool is_multi_heap_map(const FiniteAbelianGroup& G, const FnTable& table, int arity);

}  // namespace trussalg
