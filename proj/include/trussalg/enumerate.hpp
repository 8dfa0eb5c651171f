#pragma once

#include <vector>

#include "trussalg/truss.hpp"

namespace trussalg {

struct IsoClassReport {
  long long total_valid = 0;       // associative candidates (truss multiplications)
  long long class_count = 0;       // orbits under heap automorphisms of H(G)
  long long ring_class_count = 0;  // bi-additive survivors up to group automorphism
  std::vector<std::vector<Elem>> representatives;  // lexicographically least per orbit
};

// Heap automorphisms of H(G): x -> phi(x) + t with phi a group automorphism.
// Returned as function tables.
std::vector<FnTable> group_automorphisms(const FiniteAbelianGroup& G);
std::vector<FnTable> heap_automorphisms(const FiniteAbelianGroup& G);

// Exhaustive scan of all truss multiplications on H(G) in bi-affine normal
// form mu(x,y) = beta(x,y) + f(x) + g(y) + c, filtered by associativity and
// grouped into isomorphism orbits. Guard: |G| <= 4.
IsoClassReport enumerate_truss_structures(const FiniteAbelianGroup& G);

// Worker count: min(NIJ_THREADS, hardware concurrency), at least 1.
int worker_count();

}  // namespace trussalg
