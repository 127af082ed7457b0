#pragma once

#include <functional>
#include <set>
#include <vector>

#include "nmrot/residuated.hpp"

namespace nmrot {

using UnaryTable = std::vector<Elem>;

struct ModalPair {
  UnaryTable box;
  UnaryTable diamond;
  AxiomReport compliance;  // recomputable via classify_modal

  friend bool operator==(const ModalPair& a, const ModalPair& b) {
    return a.box == b.box && a.diamond == b.diamond;
  }
};

enum class ModalAxiom { Box1, Box2, Dia1, Dia2, K, Mon, N1, SMBox, SMDia, F, Dual, P, N };
using AxiomSet = std::set<ModalAxiom>;

// Display name; the nm flavour prints the rotated-operator glyphs.
const char* axiom_name(ModalAxiom ax, bool nm_style);

// Operator axioms on a Godel algebra: box preserves top and binary meets,
// diamond preserves bot and binary joins.
AxiomReport check_gao(const ResiduatedAlgebra& a, const ModalPair& m);

// (K) and (Mon) follow from the operator axioms; a failure here is reported
// as an inconsistent derivation.
AxiomReport check_derived(const ResiduatedAlgebra& a, const ModalPair& m);

// (N1), (SM box), (SM diamond).
AxiomReport check_side_conditions(const ResiduatedAlgebra& a, const ModalPair& m);

// Rotated-operator axioms incl. (F) and the box/diamond duality. Throws
// MissingFixpointConstant when no constant is designated.
AxiomReport check_nmao_plus(const ResiduatedAlgebra& a, const ModalPair& m);

// Rotated-operator axioms incl. (P) and the conditional (N).
AxiomReport check_nmao_minus(const ResiduatedAlgebra& a, const ModalPair& m);

// Positive/negative cones closed under both operators; diamond fixes f in the
// fixpointed case. Throws NotNM on other classifications.
AxiomReport check_positivity_closure(const ResiduatedAlgebra& a, const ModalPair& m);

// Class-appropriate full compliance record.
AxiomReport classify_modal(const ResiduatedAlgebra& a, const ModalPair& m);

// All unary tables satisfying the box-side (resp. diamond-side) constraints,
// sorted lexicographically. The search assigns along a linear extension and
// aborts early on monotonicity and preservation violations.
std::vector<UnaryTable> enumerate_boxes(const ResiduatedAlgebra& a, const AxiomSet& constraints);
std::vector<UnaryTable> enumerate_diamonds(const ResiduatedAlgebra& a, const AxiomSet& constraints);

// Streams every compliant pair exactly once, box-major lexicographic order.
// With the duality constraint the diamond is derived from the box. Yield
// returns false to stop. Throws ConstraintInapplicable for class-inappropriate
// constraint sets.
void enumerate_modal_pairs(const ResiduatedAlgebra& a, const AxiomSet& constraints,
                           const std::function<bool(const ModalPair&)>& yield);
std::vector<ModalPair> list_modal_pairs(const ResiduatedAlgebra& a, const AxiomSet& constraints);

}  // namespace nmrot
