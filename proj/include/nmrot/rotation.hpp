#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nmrot/modal.hpp"

namespace nmrot {

enum class RotationMode { Plus, Minus };

const char* to_string(RotationMode mode);

// Pair algebra over a Godel base. Element i of the algebra is the pair
// carrier[i] = (lo, hi) of base elements; the plus carrier keeps pairs with
// lo ^ hi = bot, the minus carrier additionally drops pairs whose union has
// nonzero negation. Star, meet and negation follow the pair formulas; join
// and residuum are derived and re-verified.
struct RotatedAlgebra {
  ResiduatedAlgebra base;
  RotationMode mode = RotationMode::Plus;
  std::vector<std::pair<Elem, Elem>> carrier;
  ResiduatedAlgebra algebra;

  // Index of the algebra element for a base pair, -1 when outside the carrier.
  Elem pair_index(Elem lo, Elem hi) const {
    return index_[static_cast<size_t>(lo) * base.size() + hi];
  }

  friend RotatedAlgebra rotate(const ResiduatedAlgebra& a, RotationMode mode);

private:
  std::vector<Elem> index_;
};

// Throws NotGodel. Accepts non-d.i. bases; the construction is defined for
// every Godel algebra.
RotatedAlgebra rotate(const ResiduatedAlgebra& a, RotationMode mode);

// Componentwise operator lift: box swaps in the base diamond on the lower
// coordinate, and dually. Requires a d.i. base, operator axioms, (N1), and
// for the minus mode both strictness conditions; throws PreconditionViolated
// naming what is missing, ClosureFailure if a lifted value escapes.
ModalPair lift_modal(const RotatedAlgebra& r, const ModalPair& base_ops);

struct Skeleton {
  ResiduatedAlgebra algebra;
  std::vector<Elem> embed;   // skeleton element -> source element
  std::vector<Elem> squash;  // source element -> skeleton element (b -> b*b)
};

// Subalgebra of squares with squared implication. Throws NotNM; asserts that
// the result is a Godel algebra and that direct indecomposability transfers.
Skeleton skeleton(const ResiduatedAlgebra& b);

// Squared restriction of rotated operators to the skeleton. Requires a d.i.
// source passing the rotated-operator axioms.
ModalPair lower_modal(const ResiduatedAlgebra& b, const ModalPair& ops, const Skeleton& s);

struct Homomorphism {
  ResiduatedAlgebra source;
  ResiduatedAlgebra target;
  std::vector<Elem> map;
  std::optional<ModalPair> source_modal;
  std::optional<ModalPair> target_modal;
};

// a -> skeleton(rotate(a)) via the square of (bot, a). Throws
// NotDirectlyIndecomposable.
Homomorphism gamma(const ResiduatedAlgebra& a, const RotatedAlgebra& r);
Homomorphism gamma(const ResiduatedAlgebra& a, const RotatedAlgebra& r, const Skeleton& s);

// b -> rotate(skeleton(b)) splitting on the sign of b. Throws
// NotDirectlyIndecomposable and ModeMismatch.
Homomorphism eta(const ResiduatedAlgebra& b, const Skeleton& s, const RotatedAlgebra& r);

// Bijectivity plus preservation of every operation, constant and attached
// modal table; one result per item, witnesses on failure. Throws
// SignatureMismatch when source and target disagree on designated constants
// or modal presence.
AxiomReport verify_isomorphism(const Homomorphism& h);

// Backtracking isomorphism search over the full signature; modal tables are
// matched when both are given.
std::optional<std::vector<Elem>> find_isomorphism(const ResiduatedAlgebra& a,
                                                  const ResiduatedAlgebra& b,
                                                  const ModalPair* ma = nullptr,
                                                  const ModalPair* mb = nullptr);

std::vector<std::vector<Elem>> automorphisms(const ResiduatedAlgebra& a);

}  // namespace nmrot
