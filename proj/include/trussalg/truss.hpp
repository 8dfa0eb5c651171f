#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trussalg/group.hpp"

namespace trussalg {

// First violated truss axiom, with a witnessing tuple of element indices.
struct TrussViolation {
  enum Kind { Assoc, LeftDistrib, RightDistrib } kind;
  std::vector<Elem> witness;  // (a,b,c) for Assoc, (a,b,c,d) for distributivity

  std::string kind_name() const {
    switch (kind) {
      case Assoc: return "AssocViolation";
      case LeftDistrib: return "LeftDistribViolation";
      default: return "RightDistribViolation";
    }
  }
};

// A finite abelian heap H(G) together with a multiplication table that
// distributes over the heap operation and is associative.
class FiniteTruss {
 public:
  FiniteTruss(FiniteAbelianGroup group, std::vector<Elem> mult_table,
              std::string name = "");

  const FiniteAbelianGroup& group() const { return group_; }
  int size() const { return group_.order(); }
  const std::string& name() const { return name_; }
  const std::vector<Elem>& table() const { return mult_; }

  Elem mul(Elem a, Elem b) const { return mult_[static_cast<size_t>(a) * size() + b]; }
  Elem heap(Elem a, Elem b, Elem c) const { return group_.heap(a, b, c); }

  // nullopt when all axioms hold; the mult table may be any total table here,
  // construction via validate_truss is the checked path.
  static std::optional<TrussViolation> check_axioms(const FiniteAbelianGroup& G,
                                                    const std::vector<Elem>& mult);

 private:
  FiniteAbelianGroup group_;
  std::vector<Elem> mult_;
  std::string name_;
};

// Throws StructuralError carrying the violation text when an axiom fails.
FiniteTruss validate_truss(const FiniteAbelianGroup& G, const std::vector<Elem>& mult,
                           const std::string& name = "");

// The four standard truss products of an abelian group:
// ab=0, ab=a, ab=b, ab=a+b. Requires |G| >= 2.
std::vector<FiniteTruss> standard_products(const FiniteAbelianGroup& G);
FiniteTruss left_projection_truss(const FiniteAbelianGroup& G);   // ab = a
FiniteTruss addition_truss(const FiniteAbelianGroup& G);          // ab = a+b

// Commutative truss T(Z;a,b,c): m*n = a m n + b(m+n) + c with ac = b(b-1).
struct ZTrussParams {
  long long a = 0, b = 0, c = 0;

  bool constraint_holds() const;
  void require_constraint() const;  // throws StructuralError
};

// Checked 64-bit helpers; throw OverflowError.
long long checked_add(long long x, long long y);
long long checked_mul(long long x, long long y);

long long z_truss_mult(const ZTrussParams& p, long long m, long long n);

}  // namespace trussalg
