#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nmrot/errors.hpp"

namespace nmrot {

using Elem = int;

// Flat n x n table of element indices.
class BinaryTable {
public:
  BinaryTable() = default;
  explicit BinaryTable(int n, Elem fill = 0) : n_(n), cells_(static_cast<size_t>(n) * n, fill) {}

  Elem operator()(Elem x, Elem y) const { return cells_[static_cast<size_t>(x) * n_ + y]; }
  Elem& operator()(Elem x, Elem y) { return cells_[static_cast<size_t>(x) * n_ + y]; }
  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  friend bool operator==(const BinaryTable&, const BinaryTable&) = default;

private:
  int n_ = 0;
  std::vector<Elem> cells_;
};

// n x n truth table, row-major.
using Relation = std::vector<std::uint8_t>;

// Reflexive-transitive closure of an arbitrary relation on n points.
// Throws CyclicCovers if the closure fails antisymmetry.
Relation order_closure(int n, Relation rel);

// Cover pairs (lower, upper) of a partial order: the transitive reduction.
std::vector<std::pair<Elem, Elem>> transitive_reduce(int n, const Relation& leq);

// Bounded lattice on elements 0..n-1 with precomputed order and operation
// tables. Immutable once built; construction validates everything.
class FiniteLattice {
public:
  // Builds from a Hasse description. Throws CyclicCovers, NoBounds,
  // NotALattice, UnknownElement (bad cover label), SchemaError (dup label).
  static FiniteLattice from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& covers);
  static FiniteLattice from_cover_indices(std::vector<std::string> labels,
                                          const std::vector<std::pair<Elem, Elem>>& covers);
  // Builds from a full order relation (must already be a partial order).
  static FiniteLattice from_order(std::vector<std::string> labels, Relation leq);

  int size() const { return n_; }
  bool leq(Elem x, Elem y) const { return leq_[static_cast<size_t>(x) * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem meet(Elem x, Elem y) const { return meet_(x, y); }
  Elem join(Elem x, Elem y) const { return join_(x, y); }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }

  const std::vector<std::pair<Elem, Elem>>& covers() const { return covers_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_[x]; }
  Elem index_of(std::string_view label) const;  // throws UnknownElement

  bool is_meet_irreducible(Elem e) const;  // throws UnknownElement
  bool is_join_irreducible(Elem e) const;
  std::vector<Elem> coatoms() const;

  // Elements sorted compatibly with the order (x <= y implies x before y);
  // deterministic.
  std::vector<Elem> linear_extension() const;

  const Relation& order() const { return leq_; }
  const BinaryTable& meet_table() const { return meet_; }
  const BinaryTable& join_table() const { return join_; }

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

private:
  FiniteLattice() = default;
  void check_element(Elem e) const;

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::pair<Elem, Elem>> covers_;
  Relation leq_;
  BinaryTable meet_, join_;
  Elem bot_ = 0, top_ = 0;
};

}  // namespace nmrot
