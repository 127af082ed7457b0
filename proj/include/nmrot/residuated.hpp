#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmrot/lattice.hpp"

namespace nmrot {

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::vector<Elem> witness;  // offending tuple, empty when passing
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_pass() const;
  bool passed(std::string_view axiom) const;  // true iff present and passing
  const AxiomResult* find(std::string_view axiom) const;
  void record_pass(std::string axiom);
  void record_fail(std::string axiom, std::vector<Elem> witness, std::string note);
  void merge(const AxiomReport& other);
};

struct Classification {
  bool mtl = false;
  bool godel = false;
  bool nm = false;
  bool nm_minus = false;
  bool nm_plus = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

// A finite lattice with monoid and residuum tables. The residuum is always
// derived from the star table; a supplied arrow can only be checked against
// it (see document realization). Axiom failures are recorded in the
// classification rather than rejected, so diagnostic reports stay possible.
class ResiduatedAlgebra {
public:
  static ResiduatedAlgebra make(FiniteLattice lattice, BinaryTable star,
                                std::optional<Elem> fixpoint = std::nullopt);

  const FiniteLattice& lattice() const { return lat_; }
  int size() const { return lat_.size(); }
  Elem bot() const { return lat_.bot(); }
  Elem top() const { return lat_.top(); }
  Elem meet(Elem x, Elem y) const { return lat_.meet(x, y); }
  Elem join(Elem x, Elem y) const { return lat_.join(x, y); }
  bool leq(Elem x, Elem y) const { return lat_.leq(x, y); }
  Elem star(Elem x, Elem y) const { return star_(x, y); }
  Elem arrow(Elem x, Elem y) const { return arrow_(x, y); }
  Elem neg(Elem x) const;  // x -> bot; throws UnknownElement
  std::optional<Elem> fixpoint() const { return fixpoint_; }
  const Classification& classification() const { return cls_; }
  const std::string& label(Elem x) const { return lat_.label(x); }
  Elem index_of(std::string_view label) const { return lat_.index_of(label); }
  const BinaryTable& star_table() const { return star_; }
  const BinaryTable& arrow_table() const { return arrow_; }

  friend bool operator==(const ResiduatedAlgebra&, const ResiduatedAlgebra&) = default;

private:
  ResiduatedAlgebra() = default;

  FiniteLattice lat_;
  BinaryTable star_, arrow_;
  std::optional<Elem> fixpoint_;
  Classification cls_;
};

// arrow(y,z) = greatest x with x*y <= z. Throws NoResiduum when some set of
// candidates has no maximum.
BinaryTable derive_residuum(const FiniteLattice& lattice, const BinaryTable& star);

// Monoid laws, (Res), (Pre), bounds; every failure carries a witness tuple.
AxiomReport check_mtl(const FiniteLattice& lattice, const BinaryTable& star, const BinaryTable& arrow);
AxiomReport check_mtl(const ResiduatedAlgebra& a);

// (Idem) x*x = x for all x.
bool check_godel(const ResiduatedAlgebra& a);

// (Inv) and the nilpotent-minimum law with top right-hand side, cross-checked
// against the linearly ordered quotients (x*y lands on bot or min there).
bool check_nm(const ResiduatedAlgebra& a);

// Fixpoint-excluding identity; implies no element satisfies neg(e) = e.
bool check_nm_minus(const ResiduatedAlgebra& a);

// neg(f) = f for the designated constant. Throws MissingFixpointConstant.
bool check_nm_plus(const ResiduatedAlgebra& a);

struct Filter {
  std::vector<Elem> elements;  // ascending indices
  std::optional<Elem> principal_generator;
};

// All filters, as principal up-sets of idempotent elements; in a finite
// MTL-algebra every filter has this shape (it is meet-closed, hence has a
// minimum). Ordered by generator index.
std::vector<Filter> filters(const ResiduatedAlgebra& a);
std::vector<Filter> prime_filters(const ResiduatedAlgebra& a);
std::vector<Filter> maximal_proper_filters(const ResiduatedAlgebra& a);

struct DirectIndecomposability {
  bool value = false;
  std::string evidence;
};

// Godel algebras: bot meet-irreducible. NM algebras: unique maximal proper
// filter. Cross-checked against find_factorization up to the given cap.
// Throws UnclassifiedAlgebra when neither classification holds.
DirectIndecomposability is_directly_indecomposable(const ResiduatedAlgebra& a, int oracle_cap = 12);

// Brute-force decomposition search: a complemented element u (u v ~u = top)
// strictly between the bounds whose pair of filter quotients is verified to
// multiply back to the algebra. nullopt means directly indecomposable.
std::optional<Elem> find_factorization(const ResiduatedAlgebra& a);

struct Quotient {
  ResiduatedAlgebra algebra;
  std::vector<Elem> projection;  // element -> class index
};

// Quotient by the congruence of the filter generated by an idempotent.
Quotient quotient_by_filter(const ResiduatedAlgebra& a, Elem generator);

// Spec-facing wrapper for the negation operation.
Elem negation(const ResiduatedAlgebra& a, Elem x);

}  // namespace nmrot
