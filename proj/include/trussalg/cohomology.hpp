#pragma once

#include <vector>

#include "trussalg/truss.hpp"

namespace trussalg {

// Arity-n cochain: total function T^n -> T, heap morphism in each slot.
// For n = 0 the table holds a single element.
struct Cochain {
  int arity = 0;
  FnTable table;

  bool operator==(const Cochain& o) const = default;
  bool operator<(const Cochain& o) const { return table < o.table; }
};

Cochain make_cochain(const FiniteTruss& T, int arity, FnTable table);
Cochain constant_cochain(const FiniteTruss& T, int arity, Elem value);
bool is_constant(const Cochain& f, Elem value);

// All of C^n(T), generated structurally.
std::vector<Cochain> enumerate_cochains(const FiniteTruss& T, int arity);

// e-relative Hochschild coboundary, evaluated term by term in the retract
// group at e (the production path).
Cochain coboundary(const FiniteTruss& T, Elem e, const Cochain& f);

// Independent evaluation straight off the parity-split bracket list; kept
// as the cross-checking oracle for coboundary.
Cochain coboundary_bracket_form(const FiniteTruss& T, Elem e, const Cochain& f);

// true iff delta^{n+1}(delta^n f) == const e for every f in C^n(T).
bool coboundary_squared_check(const FiniteTruss& T, Elem e, int arity);

struct CohomologyReport {
  int degree = 0;
  Elem basepoint = 0;
  long long cocycle_count = 0;
  long long coboundary_count = 0;
  long long class_count = 0;
  std::vector<FnTable> class_representatives;  // lexicographically least per coset
};

std::vector<Cochain> cocycles(const FiniteTruss& T, Elem e, int arity);
std::vector<Cochain> coboundaries(const FiniteTruss& T, Elem e, int arity);
CohomologyReport cohomology(const FiniteTruss& T, Elem e, int degree);

// tau-vec: post-compose with the translation tau^e_{e'}.
Cochain transport(const FiniteTruss& T, const Cochain& f, Elem e, Elem e_prime);

// Derivations and the bijection Der(T) <-> Z^1_e(T).
bool is_derivation(const FiniteTruss& T, const FnTable& D);
std::vector<FnTable> derivations(const FiniteTruss& T);
Cochain derivation_to_cocycle(const FiniteTruss& T, const FnTable& D, Elem e);   // Theta
FnTable cocycle_to_derivation(const FiniteTruss& T, const Cochain& f, Elem e);   // Theta^{-1}

}  // namespace trussalg
