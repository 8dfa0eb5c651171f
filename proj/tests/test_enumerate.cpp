#include <algorithm>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "trussalg/enumerate.hpp"
#include "trussalg/group.hpp"

using namespace trussalg;

TEST_CASE("automorphism counts of small groups") {
  CHECK(group_automorphisms(FiniteAbelianGroup({2})).size() == 1);
  CHECK(group_automorphisms(FiniteAbelianGroup({3})).size() == 2);
  CHECK(group_automorphisms(FiniteAbelianGroup({4})).size() == 2);
  CHECK(group_automorphisms(FiniteAbelianGroup({2, 2})).size() == 6);  // GL(2,F2)
  CHECK(heap_automorphisms(FiniteAbelianGroup({4})).size() == 8);
  CHECK(heap_automorphisms(FiniteAbelianGroup({2, 2})).size() == 24);
}

TEST_CASE("heap automorphisms preserve the ternary operation") {
  const FiniteAbelianGroup G({2, 2});
  for (const auto& f : heap_automorphisms(G))
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b)
        for (Elem c = 0; c < 4; ++c)
          CHECK(f[G.heap(a, b, c)] == G.heap(f[a], f[b], f[c]));
}

namespace {

// Independent orbit count: brute-force scan of all tables, transport by
// every heap automorphism, count distinct orbit minima.
std::pair<long long, long long> brute_force_classes(const FiniteAbelianGroup& G) {
  const int n = G.order();
  const auto autos = heap_automorphisms(G);
  std::set<std::vector<Elem>> minima;
  long long valid = 0;
  std::vector<Elem> t(static_cast<size_t>(n) * n, 0);
  auto transport = [&](const FnTable& psi) {
    FnTable inv(n);
    for (Elem x = 0; x < n; ++x) inv[psi[x]] = x;
    std::vector<Elem> out(t.size());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        out[static_cast<size_t>(x) * n + y] = psi[t[static_cast<size_t>(inv[x]) * n + inv[y]]];
    return out;
  };
  while (true) {
    if (!FiniteTruss::check_axioms(G, t)) {
      ++valid;
      std::vector<Elem> best = t;
      for (const auto& psi : autos) best = std::min(best, transport(psi));
      minima.insert(best);
    }
    int i = static_cast<int>(t.size()) - 1;
    while (i >= 0 && t[i] == n - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return {valid, static_cast<long long>(minima.size())};
}

}  // namespace

TEST_CASE("structure enumeration matches the brute-force orbit count") {
  for (const auto& orders : {std::vector<int>{2}, {3}}) {
    const FiniteAbelianGroup G(orders);
    const auto [valid, classes] = brute_force_classes(G);
    const IsoClassReport r = enumerate_truss_structures(G);
    CHECK(r.total_valid == valid);
    CHECK(r.class_count == classes);
    CHECK(r.representatives.size() == static_cast<size_t>(r.class_count));
    for (const auto& rep : r.representatives)
      CHECK(!FiniteTruss::check_axioms(G, rep).has_value());
  }
}

TEST_CASE("two-element carrier has eight products") {
  const IsoClassReport r = enumerate_truss_structures(FiniteAbelianGroup({2}));
  CHECK(r.total_valid == 8);  // the associative half of the 16 tables
}

TEST_CASE("report is independent of the worker count") {
  const FiniteAbelianGroup G({4});
  setenv("NIJ_THREADS", "1", 1);
  const IsoClassReport one = enumerate_truss_structures(G);
  setenv("NIJ_THREADS", "4", 1);
  const IsoClassReport four = enumerate_truss_structures(G);
  unsetenv("NIJ_THREADS");
  CHECK(one.total_valid == four.total_valid);
  CHECK(one.class_count == four.class_count);
  CHECK(one.ring_class_count == four.ring_class_count);
  CHECK(one.representatives == four.representatives);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_truss_structures(FiniteAbelianGroup({5})), CapacityError);
}
