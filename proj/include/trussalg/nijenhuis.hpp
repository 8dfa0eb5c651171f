#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trussalg/cohomology.hpp"
#include "trussalg/truss.hpp"

namespace trussalg {

struct NijenhuisReport {
  bool is_heap_endo = false;
  bool torsion_trivial = false;       // N is a Nijenhuis operator
  bool product_associative = false;
  bool torsion_is_2cocycle = false;
  std::vector<Elem> witness;          // first failing tuple, empty when all pass
};

// ---- finite trusses ----

bool is_heap_endo(const FiniteAbelianGroup& G, const FnTable& N);

// a o_N b = [N(a)b, N(ab), aN(b)] as a full multiplication table
std::vector<Elem> nijenhuis_product_table(const FiniteTruss& T, const FnTable& N);

Elem nijenhuis_product(const FiniteTruss& T, const FnTable& N, Elem a, Elem b);

// T^e_N(a,b) = [N(a o_N b), N(a)N(b), e], as an arity-2 table
FnTable torsion_table(const FiniteTruss& T, const FnTable& N, Elem e);

NijenhuisReport check_nijenhuis(const FiniteTruss& T, const FnTable& N, Elem e);

// Requires an associative Nijenhuis product; throws StructuralError otherwise.
FiniteTruss deformed_truss(const FiniteTruss& T, const FnTable& N);

FnTable endo_power(const FnTable& N, int k);

bool compatible(const FiniteTruss& T, const FnTable& N1, const FnTable& N2);

// [N_1,...,N_{2n+1}] pointwise; throws StructuralError on an even count.
FnTable heap_combination(const FiniteAbelianGroup& G, const std::vector<FnTable>& ops);

// Bundled iteration laws: N^k Nijenhuis, T[N^k][N^l] = T[N^{k+l}], the k-power
// identities, and compatibility of N^k with N^l.
bool power_laws_check(const FiniteTruss& T, const FnTable& N, int k, int l);

// ---- the integer carrier T(Z;a,b,c) ----

// N(m) = p m + q
struct AffineIntMap {
  long long p = 1, q = 0;

  long long apply(long long m) const;
  AffineIntMap power(int k) const;
  bool operator==(const AffineIntMap&) const = default;
  auto operator<=>(const AffineIntMap&) const = default;
};

long long z_nijenhuis_product(const ZTrussParams& t, const AffineIntMap& N,
                              long long m, long long n);
long long z_torsion(const ZTrussParams& t, const AffineIntMap& N, long long e,
                    long long m, long long n);
// closed polynomial -c p^2 + ((2b-1)q + 2c) p - a q^2 - (2b-1)q - c
long long z_torsion_polynomial(const ZTrussParams& t, const AffineIntMap& N);

// grid [-5,5]^2 (and ^3 for associativity) exact checks
bool z_is_nijenhuis(const ZTrussParams& t, const AffineIntMap& N);
bool z_product_associative(const ZTrussParams& t, const AffineIntMap& N);
bool z_compatible(const ZTrussParams& t, const AffineIntMap& N1, const AffineIntMap& N2);
AffineIntMap z_heap_combination(const std::vector<AffineIntMap>& ops);
bool z_power_laws_check(const ZTrussParams& t, const AffineIntMap& N, int k, int l);

struct ClassifyZReport {
  ZTrussParams params;
  long long bound = 0;
  std::vector<AffineIntMap> brute_force;   // torsion polynomial vanishes
  std::vector<AffineIntMap> closed_form;   // the classification families
  bool agree = false;
  bool a_zero_all_associative = false;     // a = 0: every (p,q) is associative
};

ClassifyZReport classify_z(const ZTrussParams& t, long long bound);

}  // namespace trussalg
