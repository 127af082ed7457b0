#include "nmrot/residuated.hpp"

#include <algorithm>

namespace nmrot {

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

bool AxiomReport::passed(std::string_view axiom) const {
  const AxiomResult* r = find(axiom);
  return r != nullptr && r->pass;
}

const AxiomResult* AxiomReport::find(std::string_view axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

void AxiomReport::record_pass(std::string axiom) {
  results.push_back({std::move(axiom), true, {}, {}});
}

void AxiomReport::record_fail(std::string axiom, std::vector<Elem> witness, std::string note) {
  results.push_back({std::move(axiom), false, std::move(witness), std::move(note)});
}

void AxiomReport::merge(const AxiomReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

BinaryTable derive_residuum(const FiniteLattice& lat, const BinaryTable& star) {
  const int n = lat.size();
  BinaryTable arrow(n);
  for (Elem y = 0; y < n; ++y)
    for (Elem z = 0; z < n; ++z) {
      Elem m = -1;
      for (Elem x = 0; x < n; ++x) {
        if (!lat.leq(star(x, y), z)) continue;
        m = (m < 0) ? x : lat.join(m, x);
      }
      if (m < 0 || !lat.leq(star(m, y), z))
        fail(ErrorKind::NoResiduum, "{x : x*" + lat.label(y) + " <= " + lat.label(z) +
                                        "} has no maximum");
      arrow(y, z) = m;
    }
  return arrow;
}

AxiomReport check_mtl(const FiniteLattice& lat, const BinaryTable& star, const BinaryTable& arrow) {
  const int n = lat.size();
  AxiomReport rep;
  auto lbl = [&](Elem x) { return lat.label(x); };

  bool ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    for (Elem y = x + 1; y < n && ok; ++y)
      if (star(x, y) != star(y, x)) {
        rep.record_fail("comm", {x, y}, lbl(x) + "*" + lbl(y) + " != " + lbl(y) + "*" + lbl(x));
        ok = false;
      }
  if (ok) rep.record_pass("comm");

  ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    for (Elem y = 0; y < n && ok; ++y)
      for (Elem z = 0; z < n && ok; ++z)
        if (star(x, star(y, z)) != star(star(x, y), z)) {
          rep.record_fail("assoc", {x, y, z}, "associativity fails at (" + lbl(x) + "," + lbl(y) +
                                                  "," + lbl(z) + ")");
          ok = false;
        }
  if (ok) rep.record_pass("assoc");

  ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    if (star(lat.top(), x) != x) {
      rep.record_fail("unit", {x}, "top*" + lbl(x) + " = " + lbl(star(lat.top(), x)));
      ok = false;
    }
  if (ok) rep.record_pass("unit");

  ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    for (Elem y = 0; y < n && ok; ++y)
      for (Elem z = 0; z < n && ok; ++z) {
        const bool lhs = lat.leq(star(x, y), z);
        const bool rhs = lat.leq(x, arrow(y, z));
        if (lhs != rhs) {
          rep.record_fail("Res", {x, y, z},
                          lbl(x) + "*" + lbl(y) + " <= " + lbl(z) + " iff " + lbl(x) +
                              " <= " + lbl(y) + "->" + lbl(z) + " fails");
          ok = false;
        }
      }
  if (ok) rep.record_pass("Res");

  ok = true;
  for (Elem x = 0; x < n && ok; ++x)
    for (Elem y = 0; y < n && ok; ++y)
      if (lat.join(arrow(x, y), arrow(y, x)) != lat.top()) {
        rep.record_fail("Pre", {x, y}, "(" + lbl(x) + "->" + lbl(y) + ") v (" + lbl(y) + "->" +
                                           lbl(x) + ") = " +
                                           lbl(lat.join(arrow(x, y), arrow(y, x))));
        ok = false;
      }
  if (ok) rep.record_pass("Pre");

  // bot <= x <= top holds by lattice construction; recorded for completeness.
  rep.record_pass("bounds");
  return rep;
}

AxiomReport check_mtl(const ResiduatedAlgebra& a) {
  return check_mtl(a.lattice(), a.star_table(), a.arrow_table());
}

bool check_godel(const ResiduatedAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.star(x, x) != x) return false;
  return true;
}

namespace {

bool involution_holds(const ResiduatedAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.arrow(a.arrow(x, a.bot()), a.bot()) != x) return false;
  return true;
}

bool nm_law_holds(const ResiduatedAlgebra& a) {
  const int n = a.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = a.star(x, y);
      if (a.join(a.arrow(xy, a.bot()), a.arrow(a.meet(x, y), xy)) != a.top()) return false;
    }
  return true;
}

bool nm_minus_equation(const ResiduatedAlgebra& a) {
  for (Elem x = 0; x < a.size(); ++x) {
    const Elem s = a.arrow(a.star(x, x), a.bot());
    const Elem lhs = a.arrow(a.star(s, s), a.bot());
    const Elem nx = a.arrow(x, a.bot());
    const Elem t = a.arrow(a.star(nx, nx), a.bot());
    if (lhs != a.star(t, t)) return false;
  }
  return true;
}

// On every linearly ordered quotient the product must be bot or the minimum.
bool nm_chain_shape(const ResiduatedAlgebra& a) {
  for (const Filter& f : prime_filters(a)) {
    Quotient q = quotient_by_filter(a, *f.principal_generator);
    const ResiduatedAlgebra& c = q.algebra;
    for (Elem x = 0; x < c.size(); ++x)
      for (Elem y = 0; y < c.size(); ++y) {
        ensure(c.leq(x, y) || c.leq(y, x), "prime-filter quotient is not a chain");
        const Elem p = c.star(x, y);
        if (p != c.bot() && p != c.meet(x, y)) return false;
      }
  }
  return true;
}

std::vector<Elem> fixpoint_elements(const ResiduatedAlgebra& a) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.size(); ++x)
    if (a.neg(x) == x) out.push_back(x);
  return out;
}

constexpr int kSemanticCheckCap = 64;

}  // namespace

bool check_nm(const ResiduatedAlgebra& a) {
  const bool law = nm_law_holds(a);
  // The equational form and the chain-quotient shape must agree.
  if (a.classification().mtl && a.size() <= kSemanticCheckCap)
    ensure(nm_chain_shape(a) == law, "nilpotent-minimum law disagrees with chain quotients");
  return involution_holds(a) && law;
}

bool check_nm_minus(const ResiduatedAlgebra& a) {
  const bool eq = nm_minus_equation(a);
  if (eq && a.size() > 1 && a.classification().nm)
    ensure(fixpoint_elements(a).empty(), "fixpoint-excluding identity holds beside a fixpoint");
  return eq;
}

bool check_nm_plus(const ResiduatedAlgebra& a) {
  if (!a.fixpoint())
    fail(ErrorKind::MissingFixpointConstant, "algebra has no designated fixpoint constant");
  const bool eq = a.neg(*a.fixpoint()) == *a.fixpoint();
  if (eq && a.classification().nm)
    ensure(fixpoint_elements(a).size() == 1, "negation fixpoint is not unique");
  return eq;
}

ResiduatedAlgebra ResiduatedAlgebra::make(FiniteLattice lattice, BinaryTable star,
                                          std::optional<Elem> fixpoint) {
  ResiduatedAlgebra a;
  if (star.size() != lattice.size())
    fail(ErrorKind::SchemaError, "star table does not match carrier size");
  if (fixpoint && (*fixpoint < 0 || *fixpoint >= lattice.size()))
    fail(ErrorKind::UnknownElement, "designated fixpoint out of range");
  a.arrow_ = derive_residuum(lattice, star);
  a.lat_ = std::move(lattice);
  a.star_ = std::move(star);
  a.fixpoint_ = fixpoint;

  // Classification uses the pure equations; the public check_* entry points
  // additionally run the semantic cross-validations, which build quotients
  // and must therefore stay out of the construction path.
  Classification cls;
  cls.mtl = check_mtl(a).all_pass();
  if (cls.mtl) {
    cls.godel = check_godel(a);
    cls.nm = involution_holds(a) && nm_law_holds(a);
    if (cls.nm) {
      cls.nm_minus = nm_minus_equation(a);
      if (a.fixpoint_) cls.nm_plus = a.arrow_(*a.fixpoint_, a.lat_.bot()) == *a.fixpoint_;
    }
  }
  a.cls_ = cls;
  return a;
}

Elem ResiduatedAlgebra::neg(Elem x) const {
  if (x < 0 || x >= size())
    fail(ErrorKind::UnknownElement, "element index " + std::to_string(x) + " out of range");
  return arrow_(x, lat_.bot());
}

Elem negation(const ResiduatedAlgebra& a, Elem x) { return a.neg(x); }

std::vector<Filter> filters(const ResiduatedAlgebra& a) {
  const int n = a.size();
  std::vector<Filter> out;
  for (Elem g = 0; g < n; ++g) {
    if (a.star(g, g) != g) continue;
    Filter f;
    f.principal_generator = g;
    for (Elem x = 0; x < n; ++x)
      if (a.leq(g, x)) f.elements.push_back(x);
    bool valid = std::find(f.elements.begin(), f.elements.end(), a.top()) != f.elements.end();
    for (Elem x : f.elements)
      for (Elem y : f.elements)
        if (!a.leq(g, a.star(x, y))) valid = false;
    if (valid) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Filter> prime_filters(const ResiduatedAlgebra& a) {
  const int n = a.size();
  std::vector<Filter> out;
  for (Filter& f : filters(a)) {
    if (static_cast<int>(f.elements.size()) == n) continue;  // proper only
    const Elem g = *f.principal_generator;
    bool prime = true;
    for (Elem x = 0; x < n && prime; ++x)
      for (Elem y = 0; y < n && prime; ++y)
        if (a.leq(g, a.join(x, y)) && !a.leq(g, x) && !a.leq(g, y)) prime = false;
    if (prime) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Filter> maximal_proper_filters(const ResiduatedAlgebra& a) {
  const int n = a.size();
  std::vector<Filter> proper;
  for (Filter& f : filters(a))
    if (static_cast<int>(f.elements.size()) < n) proper.push_back(std::move(f));
  std::vector<Filter> out;
  for (const Filter& f : proper) {
    bool maximal = true;
    for (const Filter& g : proper) {
      if (g.elements.size() <= f.elements.size()) continue;
      if (std::includes(g.elements.begin(), g.elements.end(), f.elements.begin(), f.elements.end()))
        maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

Quotient quotient_by_filter(const ResiduatedAlgebra& a, Elem generator) {
  const int n = a.size();
  if (generator < 0 || generator >= n) fail(ErrorKind::UnknownElement, "generator out of range");
  ensure(a.star(generator, generator) == generator, "filter generator must be idempotent");
  auto equiv = [&](Elem x, Elem y) {
    return a.leq(generator, a.meet(a.arrow(x, y), a.arrow(y, x)));
  };

  std::vector<Elem> cls(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    for (size_t c = 0; c < reps.size(); ++c)
      if (equiv(x, reps[c])) { cls[x] = static_cast<Elem>(c); break; }
    if (cls[x] < 0) {
      cls[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  const int m = static_cast<int>(reps.size());

  Relation leq(static_cast<size_t>(m) * m, 0);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      leq[static_cast<size_t>(i) * m + j] = a.leq(generator, a.arrow(reps[i], reps[j])) ? 1 : 0;

  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem r : reps) labels.push_back("[" + a.label(r) + "]");

  BinaryTable star(m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) star(i, j) = cls[a.star(reps[i], reps[j])];
  // Congruence sanity: operations must not depend on representatives.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      ensure(cls[a.star(x, y)] == star(cls[x], cls[y]), "quotient star is not well defined");
      ensure(cls[a.meet(x, y)] == cls[a.meet(reps[cls[x]], reps[cls[y]])],
             "quotient meet is not well defined");
      ensure(cls[a.join(x, y)] == cls[a.join(reps[cls[x]], reps[cls[y]])],
             "quotient join is not well defined");
      ensure(cls[a.arrow(x, y)] == cls[a.arrow(reps[cls[x]], reps[cls[y]])],
             "quotient arrow is not well defined");
    }

  std::optional<Elem> fix;
  if (a.fixpoint()) fix = cls[*a.fixpoint()];
  Quotient q{ResiduatedAlgebra::make(FiniteLattice::from_order(std::move(labels), std::move(leq)),
                                     std::move(star), fix),
             std::move(cls)};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      ensure(q.projection[a.arrow(x, y)] == q.algebra.arrow(q.projection[x], q.projection[y]),
             "quotient residuum disagrees with projected residuum");
  return q;
}

std::optional<Elem> find_factorization(const ResiduatedAlgebra& a) {
  const int n = a.size();
  for (Elem u = 0; u < n; ++u) {
    if (u == a.bot() || u == a.top()) continue;
    const Elem nu = a.neg(u);
    if (a.join(u, nu) != a.top()) continue;
    ensure(a.star(u, u) == u, "complemented element is not idempotent");
    ensure(a.star(nu, nu) == nu, "complement is not idempotent");
    Quotient q1 = quotient_by_filter(a, u);
    Quotient q2 = quotient_by_filter(a, nu);
    ensure(q1.algebra.size() * q2.algebra.size() == n, "factor sizes do not multiply back");
    std::vector<std::vector<bool>> seen(q1.algebra.size(),
                                        std::vector<bool>(q2.algebra.size(), false));
    for (Elem x = 0; x < n; ++x) {
      ensure(!seen[q1.projection[x]][q2.projection[x]], "factor map is not injective");
      seen[q1.projection[x]][q2.projection[x]] = true;
    }
    return u;
  }
  return std::nullopt;
}

DirectIndecomposability is_directly_indecomposable(const ResiduatedAlgebra& a, int oracle_cap) {
  DirectIndecomposability out;
  const Classification& cls = a.classification();
  if (a.size() == 1) {
    out.value = false;
    out.evidence = "trivial one-element algebra";
    return out;
  }
  if (cls.godel) {
    out.value = a.lattice().is_meet_irreducible(a.bot());
    const auto cas = a.lattice().coatoms();
    std::string coatoms;
    for (Elem c : cas) coatoms += (coatoms.empty() ? "" : ", ") + a.label(c);
    out.evidence = std::string("bot is ") + (out.value ? "" : "not ") + "meet-irreducible; coatoms: " + coatoms;
  } else if (cls.nm) {
    const auto maximal = maximal_proper_filters(a);
    out.value = maximal.size() == 1;
    std::string gens;
    for (const Filter& f : maximal) gens += (gens.empty() ? "" : ", ") + a.label(*f.principal_generator);
    out.evidence = std::to_string(maximal.size()) + " maximal proper filter(s), generated by: " + gens;
  } else {
    fail(ErrorKind::UnclassifiedAlgebra, "direct indecomposability needs a Godel or NM classification");
  }
  if (a.size() <= oracle_cap)
    ensure(out.value == !find_factorization(a).has_value(),
           "characterization disagrees with the factorization oracle");
  return out;
}

}  // namespace nmrot
