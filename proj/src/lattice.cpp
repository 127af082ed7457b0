#include "nmrot/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nmrot {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NoResiduum: return "NoResiduum";
    case ErrorKind::MissingFixpointConstant: return "MissingFixpointConstant";
    case ErrorKind::UnclassifiedAlgebra: return "UnclassifiedAlgebra";
    case ErrorKind::NotGodel: return "NotGodel";
    case ErrorKind::NotNM: return "NotNM";
    case ErrorKind::NotDirectlyIndecomposable: return "NotDirectlyIndecomposable";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::ConstraintInapplicable: return "ConstraintInapplicable";
    case ErrorKind::InconsistentDerivation: return "InconsistentDerivation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Error";
}

Relation order_closure(int n, Relation rel) {
  rel.resize(static_cast<size_t>(n) * n, 0);
  for (Elem i = 0; i < n; ++i) rel[static_cast<size_t>(i) * n + i] = 1;
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i) {
      if (!rel[static_cast<size_t>(i) * n + k]) continue;
      const auto* rk = &rel[static_cast<size_t>(k) * n];
      auto* ri = &rel[static_cast<size_t>(i) * n];
      for (Elem j = 0; j < n; ++j) ri[j] |= rk[j];
    }
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (rel[static_cast<size_t>(i) * n + j] && rel[static_cast<size_t>(j) * n + i])
        fail(ErrorKind::CyclicCovers, "elements " + std::to_string(i) + " and " + std::to_string(j) +
                                          " lie on a cycle");
  return rel;
}

std::vector<std::pair<Elem, Elem>> transitive_reduce(int n, const Relation& leq) {
  auto at = [&](Elem x, Elem y) { return leq[static_cast<size_t>(x) * n + y] != 0; };
  std::vector<std::pair<Elem, Elem>> covers;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !at(x, y)) continue;
      bool direct = true;
      for (Elem z = 0; z < n && direct; ++z)
        if (z != x && z != y && at(x, z) && at(z, y)) direct = false;
      if (direct) covers.emplace_back(x, y);
    }
  return covers;
}

FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, Elem> index;
  for (Elem i = 0; i < static_cast<Elem>(labels.size()); ++i)
    if (!index.emplace(labels[i], i).second)
      fail(ErrorKind::SchemaError, "duplicate element label '" + labels[i] + "'");
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto l = index.find(lo), h = index.find(hi);
    if (l == index.end()) fail(ErrorKind::UnknownElement, "cover refers to unknown label '" + lo + "'");
    if (h == index.end()) fail(ErrorKind::UnknownElement, "cover refers to unknown label '" + hi + "'");
    pairs.emplace_back(l->second, h->second);
  }
  return from_cover_indices(std::move(labels), pairs);
}

FiniteLattice FiniteLattice::from_cover_indices(std::vector<std::string> labels,
                                                const std::vector<std::pair<Elem, Elem>>& covers) {
  const int n = static_cast<int>(labels.size());
  Relation rel(static_cast<size_t>(n) * n, 0);
  for (const auto& [lo, hi] : covers) {
    if (lo == hi) fail(ErrorKind::CyclicCovers, "cover pair (" + labels[lo] + "," + labels[hi] + ") is a loop");
    rel[static_cast<size_t>(lo) * n + hi] = 1;
  }
  return from_order(std::move(labels), order_closure(n, std::move(rel)));
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> labels, Relation leq) {
  FiniteLattice lat;
  const int n = static_cast<int>(labels.size());
  if (n == 0) fail(ErrorKind::NoBounds, "empty carrier has no bounds");
  if (leq.size() != static_cast<size_t>(n) * n)
    fail(ErrorKind::NotALattice, "order relation has wrong shape");
  auto at = [&](Elem x, Elem y) { return leq[static_cast<size_t>(x) * n + y] != 0; };
  for (Elem i = 0; i < n; ++i)
    if (!at(i, i)) fail(ErrorKind::NotALattice, "order is not reflexive at " + labels[i]);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i))
        fail(ErrorKind::CyclicCovers, labels[i] + " and " + labels[j] + " order each other");
      if (!at(i, j)) continue;
      for (Elem k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k)) fail(ErrorKind::NotALattice, "order is not transitive");
    }

  Elem bot = -1, top = -1;
  for (Elem i = 0; i < n; ++i) {
    bool least = true, greatest = true;
    for (Elem j = 0; j < n; ++j) {
      least = least && at(i, j);
      greatest = greatest && at(j, i);
    }
    if (least) bot = i;
    if (greatest) top = i;
  }
  if (bot < 0) fail(ErrorKind::NoBounds, "no least element");
  if (top < 0) fail(ErrorKind::NoBounds, "no greatest element");

  BinaryTable meet(n), join(n);
  std::vector<Elem> cand;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) {
      cand.clear();
      for (Elem z = 0; z < n; ++z)
        if (at(z, x) && at(z, y)) cand.push_back(z);
      Elem glb = -1;
      for (Elem m : cand) {
        bool greatest = true;
        for (Elem z : cand)
          if (!at(z, m)) { greatest = false; break; }
        if (greatest) { glb = m; break; }
      }
      if (glb < 0)
        fail(ErrorKind::NotALattice, "pair {" + labels[x] + "," + labels[y] + "} has no unique meet");
      meet(x, y) = meet(y, x) = glb;

      cand.clear();
      for (Elem z = 0; z < n; ++z)
        if (at(x, z) && at(y, z)) cand.push_back(z);
      Elem lub = -1;
      for (Elem m : cand) {
        bool least = true;
        for (Elem z : cand)
          if (!at(m, z)) { least = false; break; }
        if (least) { lub = m; break; }
      }
      if (lub < 0)
        fail(ErrorKind::NotALattice, "pair {" + labels[x] + "," + labels[y] + "} has no unique join");
      join(x, y) = join(y, x) = lub;
    }

  lat.n_ = n;
  lat.labels_ = std::move(labels);
  lat.leq_ = std::move(leq);
  lat.meet_ = std::move(meet);
  lat.join_ = std::move(join);
  lat.bot_ = bot;
  lat.top_ = top;
  lat.covers_ = transitive_reduce(n, lat.leq_);
  return lat;
}

Elem FiniteLattice::index_of(std::string_view label) const {
  for (Elem i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  fail(ErrorKind::UnknownElement, "no element labelled '" + std::string(label) + "'");
}

void FiniteLattice::check_element(Elem e) const {
  if (e < 0 || e >= n_) fail(ErrorKind::UnknownElement, "element index " + std::to_string(e) + " out of range");
}

bool FiniteLattice::is_meet_irreducible(Elem e) const {
  check_element(e);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (meet_(x, y) == e && x != e && y != e) return false;
  return true;
}

bool FiniteLattice::is_join_irreducible(Elem e) const {
  check_element(e);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (join_(x, y) == e && x != e && y != e) return false;
  return true;
}

std::vector<Elem> FiniteLattice::coatoms() const {
  std::vector<Elem> out;
  for (const auto& [lo, hi] : covers_)
    if (hi == top_) out.push_back(lo);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> FiniteLattice::linear_extension() const {
  std::vector<Elem> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> below(n_, 0);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (lt(y, x)) ++below[x];
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return below[a] < below[b]; });
  return order;
}

}  // namespace nmrot
