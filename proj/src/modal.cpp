#include "nmrot/modal.hpp"

#include <algorithm>

namespace nmrot {

const char* axiom_name(ModalAxiom ax, bool nm_style) {
  switch (ax) {
    case ModalAxiom::Box1: return nm_style ? "⊟1" : "□1";
    case ModalAxiom::Box2: return nm_style ? "⊟2" : "□2";
    case ModalAxiom::Dia1: return nm_style ? "⟐1" : "◇1";
    case ModalAxiom::Dia2: return nm_style ? "⟐2" : "◇2";
    case ModalAxiom::K: return "K";
    case ModalAxiom::Mon: return "Mon";
    case ModalAxiom::N1: return "N1";
    case ModalAxiom::SMBox: return nm_style ? "SM⊟" : "SM□";
    case ModalAxiom::SMDia: return nm_style ? "SM⟐" : "SM◇";
    case ModalAxiom::F: return "F";
    case ModalAxiom::Dual: return "⊟-⟐";
    case ModalAxiom::P: return "P";
    case ModalAxiom::N: return "N";
  }
  return "?";
}

namespace {

void require_tables(const ResiduatedAlgebra& a, const ModalPair& m) {
  if (static_cast<int>(m.box.size()) != a.size() || static_cast<int>(m.diamond.size()) != a.size())
    fail(ErrorKind::SchemaError, "modal tables do not match carrier size");
}

void check_box1(const ResiduatedAlgebra& a, const UnaryTable& box, const char* name,
                AxiomReport& rep) {
  if (box[a.top()] == a.top())
    rep.record_pass(name);
  else
    rep.record_fail(name, {a.top()}, std::string(name) + " maps top to " + a.label(box[a.top()]));
}

void check_box2(const ResiduatedAlgebra& a, const UnaryTable& box, const char* name,
                AxiomReport& rep) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (box[a.meet(x, y)] != a.meet(box[x], box[y])) {
        rep.record_fail(name, {x, y},
                        "meet preservation fails at (" + a.label(x) + "," + a.label(y) + ")");
        return;
      }
  rep.record_pass(name);
}

void check_dia1(const ResiduatedAlgebra& a, const UnaryTable& dia, const char* name,
                AxiomReport& rep) {
  if (dia[a.bot()] == a.bot())
    rep.record_pass(name);
  else
    rep.record_fail(name, {a.bot()}, std::string(name) + " maps bot to " + a.label(dia[a.bot()]));
}

void check_dia2(const ResiduatedAlgebra& a, const UnaryTable& dia, const char* name,
                AxiomReport& rep) {
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (dia[a.join(x, y)] != a.join(dia[x], dia[y])) {
        rep.record_fail(name, {x, y},
                        "join preservation fails at (" + a.label(x) + "," + a.label(y) + ")");
        return;
      }
  rep.record_pass(name);
}

void check_dual(const ResiduatedAlgebra& a, const ModalPair& m, AxiomReport& rep) {
  for (Elem x = 0; x < a.size(); ++x)
    if (m.diamond[x] != a.neg(m.box[a.neg(x)])) {
      rep.record_fail("⊟-⟐", {x}, "duality fails at " + a.label(x));
      return;
    }
  rep.record_pass("⊟-⟐");
}

}  // namespace

AxiomReport check_gao(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  AxiomReport rep;
  check_box1(a, m.box, "□1", rep);
  check_box2(a, m.box, "□2", rep);
  check_dia1(a, m.diamond, "◇1", rep);
  check_dia2(a, m.diamond, "◇2", rep);
  return rep;
}

AxiomReport check_derived(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  AxiomReport rep;
  bool ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x)
    for (Elem y = 0; y < a.size() && ok; ++y) {
      const Elem lhs = a.arrow(m.box[a.arrow(x, y)], a.arrow(m.box[x], m.box[y]));
      if (lhs != a.top()) {
        rep.record_fail("K", {x, y},
                        "InconsistentDerivation: K fails at (" + a.label(x) + "," + a.label(y) + ")");
        ok = false;
      }
    }
  if (ok) rep.record_pass("K");

  ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x)
    for (Elem y = 0; y < a.size() && ok; ++y) {
      if (!a.leq(x, y)) continue;
      if (!a.leq(m.box[x], m.box[y]) || !a.leq(m.diamond[x], m.diamond[y])) {
        rep.record_fail("Mon", {x, y},
                        "InconsistentDerivation: monotonicity fails at (" + a.label(x) + "," +
                            a.label(y) + ")");
        ok = false;
      }
    }
  if (ok) rep.record_pass("Mon");
  return rep;
}

AxiomReport check_side_conditions(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  AxiomReport rep;
  if (m.box[a.bot()] == a.bot())
    rep.record_pass("N1");
  else
    rep.record_fail("N1", {a.bot()}, "□⊥ = " + a.label(m.box[a.bot()]));

  bool ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x)
    if (x != a.bot() && m.box[x] == a.bot()) {
      rep.record_fail("SM□", {x}, "□" + a.label(x) + " = ⊥");
      ok = false;
    }
  if (ok) rep.record_pass("SM□");

  ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x)
    if (x != a.bot() && m.diamond[x] == a.bot()) {
      rep.record_fail("SM◇", {x}, "◇" + a.label(x) + " = ⊥");
      ok = false;
    }
  if (ok) rep.record_pass("SM◇");
  return rep;
}

AxiomReport check_nmao_plus(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  if (!a.fixpoint())
    fail(ErrorKind::MissingFixpointConstant, "rotated-operator axioms need a designated fixpoint");
  AxiomReport rep;
  check_box1(a, m.box, "⊟1", rep);
  check_box2(a, m.box, "⊟2", rep);
  check_dia1(a, m.diamond, "⟐1", rep);
  check_dia2(a, m.diamond, "⟐2", rep);
  const Elem f = *a.fixpoint();
  if (m.box[f] == f)
    rep.record_pass("F");
  else
    rep.record_fail("F", {f}, "⊟f = " + a.label(m.box[f]));
  check_dual(a, m, rep);
  return rep;
}

AxiomReport check_nmao_minus(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  AxiomReport rep;
  check_box1(a, m.box, "⊟1", rep);
  check_box2(a, m.box, "⊟2", rep);
  check_dia1(a, m.diamond, "⟐1", rep);
  check_dia2(a, m.diamond, "⟐2", rep);
  check_dual(a, m, rep);

  bool ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x) {
    const Elem nx = a.neg(x);
    if (m.box[a.join(x, nx)] != a.join(m.box[x], m.box[nx])) {
      rep.record_fail("P", {x}, "P fails at " + a.label(x));
      ok = false;
    }
  }
  if (ok) rep.record_pass("P");

  ok = true;
  for (Elem x = 0; x < a.size() && ok; ++x) {
    if (!a.leq(x, a.neg(x))) continue;
    const Elem dx = m.diamond[x];
    if (!a.leq(dx, a.neg(dx))) {
      rep.record_fail("N", {x}, "⟐" + a.label(x) + " = " + a.label(dx) + " is not negative");
      ok = false;
    }
  }
  if (ok) rep.record_pass("N");
  return rep;
}

AxiomReport check_positivity_closure(const ResiduatedAlgebra& a, const ModalPair& m) {
  require_tables(a, m);
  if (!a.classification().nm)
    fail(ErrorKind::NotNM, "positivity closure applies to NM algebras");
  AxiomReport rep;
  const bool fixpointed = a.classification().nm_plus;
  const Elem f = fixpointed ? *a.fixpoint() : -1;
  auto positive = [&](Elem x) { return fixpointed ? a.leq(f, x) : a.lt(a.neg(x), x); };
  auto negative = [&](Elem x) { return fixpointed ? a.leq(x, f) : a.leq(x, a.neg(x)); };

  struct Item {
    const char* name;
    const UnaryTable* table;
    bool pos;
  };
  const Item items[] = {{"⊟-pos", &m.box, true},
                        {"⊟-neg", &m.box, false},
                        {"⟐-pos", &m.diamond, true},
                        {"⟐-neg", &m.diamond, false}};
  for (const Item& it : items) {
    bool ok = true;
    for (Elem x = 0; x < a.size() && ok; ++x) {
      const bool in_class = it.pos ? positive(x) : negative(x);
      if (!in_class) continue;
      const Elem y = (*it.table)[x];
      if (!(it.pos ? positive(y) : negative(y))) {
        rep.record_fail(it.name, {x}, a.label(x) + " maps to " + a.label(y));
        ok = false;
      }
    }
    if (ok) rep.record_pass(it.name);
  }
  if (fixpointed) {
    if (m.diamond[f] == f)
      rep.record_pass("⟐f=f");
    else
      rep.record_fail("⟐f=f", {f}, "⟐f = " + a.label(m.diamond[f]));
  }
  return rep;
}

AxiomReport classify_modal(const ResiduatedAlgebra& a, const ModalPair& m) {
  const Classification& cls = a.classification();
  AxiomReport rep;
  if (cls.nm) {
    rep = cls.nm_plus ? check_nmao_plus(a, m) : check_nmao_minus(a, m);
    rep.merge(check_positivity_closure(a, m));
  } else {
    rep = check_gao(a, m);
    if (rep.all_pass()) rep.merge(check_derived(a, m));
    rep.merge(check_side_conditions(a, m));
  }
  return rep;
}

namespace {

bool has(const AxiomSet& cs, ModalAxiom ax) { return cs.count(ax) != 0; }

// Full-table filter for one side; pair-level axioms are handled by the
// pair enumerator.
bool side_table_ok(const ResiduatedAlgebra& a, const AxiomSet& cs, const UnaryTable& t, bool box_side) {
  const int n = a.size();
  if (box_side) {
    if (has(cs, ModalAxiom::Box1) && t[a.top()] != a.top()) return false;
    if (has(cs, ModalAxiom::N1) && t[a.bot()] != a.bot()) return false;
    if (has(cs, ModalAxiom::SMBox))
      for (Elem x = 0; x < n; ++x)
        if (x != a.bot() && t[x] == a.bot()) return false;
    if (has(cs, ModalAxiom::Box2))
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (t[a.meet(x, y)] != a.meet(t[x], t[y])) return false;
    if (has(cs, ModalAxiom::F) && t[*a.fixpoint()] != *a.fixpoint()) return false;
    if (has(cs, ModalAxiom::P))
      for (Elem x = 0; x < n; ++x) {
        const Elem nx = a.neg(x);
        if (t[a.join(x, nx)] != a.join(t[x], t[nx])) return false;
      }
    if (has(cs, ModalAxiom::K))
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (a.arrow(t[a.arrow(x, y)], a.arrow(t[x], t[y])) != a.top()) return false;
  } else {
    if (has(cs, ModalAxiom::Dia1) && t[a.bot()] != a.bot()) return false;
    if (has(cs, ModalAxiom::SMDia))
      for (Elem x = 0; x < n; ++x)
        if (x != a.bot() && t[x] == a.bot()) return false;
    if (has(cs, ModalAxiom::Dia2))
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (t[a.join(x, y)] != a.join(t[x], t[y])) return false;
    if (has(cs, ModalAxiom::N))
      for (Elem x = 0; x < n; ++x)
        if (a.leq(x, a.neg(x)) && !a.leq(t[x], a.neg(t[x]))) return false;
  }
  if (has(cs, ModalAxiom::Mon))
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (a.leq(x, y) && !a.leq(t[x], t[y])) return false;
  return true;
}

std::vector<UnaryTable> enumerate_side(const ResiduatedAlgebra& a, const AxiomSet& cs, bool box_side) {
  const int n = a.size();
  std::vector<Elem> ord = a.lattice().linear_extension();
  if (box_side) std::reverse(ord.begin(), ord.end());
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[ord[p]] = p;

  // Pairs whose meet (box side) or join (diamond side) is assigned at
  // position p, with both arguments assigned earlier; they force the value.
  std::vector<std::vector<std::pair<Elem, Elem>>> forced(n);
  const bool preserve = box_side ? has(cs, ModalAxiom::Box2) : has(cs, ModalAxiom::Dia2);
  if (preserve)
    for (Elem u = 0; u < n; ++u)
      for (Elem w = u + 1; w < n; ++w) {
        const Elem r = box_side ? a.meet(u, w) : a.join(u, w);
        if (r == u || r == w) continue;
        forced[pos[r]].emplace_back(u, w);
      }
  const bool mono = preserve || has(cs, ModalAxiom::Mon);

  std::vector<UnaryTable> out;
  UnaryTable t(n, -1);
  auto dfs = [&](auto&& self, int p) -> void {
    if (p == n) {
      if (side_table_ok(a, cs, t, box_side)) out.push_back(t);
      return;
    }
    const Elem e = ord[p];
    for (Elem v = 0; v < n; ++v) {
      if (box_side) {
        if (has(cs, ModalAxiom::Box1) && e == a.top() && v != a.top()) continue;
        if (has(cs, ModalAxiom::N1) && e == a.bot() && v != a.bot()) continue;
        if (has(cs, ModalAxiom::SMBox) && e != a.bot() && v == a.bot()) continue;
        if (has(cs, ModalAxiom::F) && e == *a.fixpoint() && v != e) continue;
      } else {
        if (has(cs, ModalAxiom::Dia1) && e == a.bot() && v != a.bot()) continue;
        if (has(cs, ModalAxiom::SMDia) && e != a.bot() && v == a.bot()) continue;
        if (has(cs, ModalAxiom::N) && a.leq(e, a.neg(e)) && !a.leq(v, a.neg(v))) continue;
      }
      bool ok = true;
      if (mono)
        for (int q = 0; q < p && ok; ++q) {
          const Elem u = ord[q];
          if (a.leq(e, u) && !a.leq(v, t[u])) ok = false;
          if (a.leq(u, e) && !a.leq(t[u], v)) ok = false;
        }
      for (const auto& [u, w] : forced[p]) {
        if (!ok) break;
        const Elem need = box_side ? a.meet(t[u], t[w]) : a.join(t[u], t[w]);
        if (need != v) ok = false;
      }
      if (!ok) continue;
      t[e] = v;
      self(self, p + 1);
      t[e] = -1;
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

void require_applicable(const ResiduatedAlgebra& a, const AxiomSet& cs) {
  if (has(cs, ModalAxiom::F) && !a.classification().nm_plus)
    fail(ErrorKind::ConstraintInapplicable, "(F) requires an NM algebra with fixpoint constant");
  if ((has(cs, ModalAxiom::P) || has(cs, ModalAxiom::N) || has(cs, ModalAxiom::Dual)) &&
      !a.classification().nm)
    fail(ErrorKind::ConstraintInapplicable, "rotated-operator constraints require an NM algebra");
}

AxiomSet box_subset(const AxiomSet& cs) {
  AxiomSet out;
  for (ModalAxiom ax : cs)
    if (ax != ModalAxiom::Dia1 && ax != ModalAxiom::Dia2 && ax != ModalAxiom::SMDia &&
        ax != ModalAxiom::N && ax != ModalAxiom::Dual)
      out.insert(ax);
  return out;
}

AxiomSet dia_subset(const AxiomSet& cs) {
  AxiomSet out;
  for (ModalAxiom ax : cs)
    switch (ax) {
      case ModalAxiom::Dia1:
      case ModalAxiom::Dia2:
      case ModalAxiom::SMDia:
      case ModalAxiom::N:
      case ModalAxiom::Mon:
        out.insert(ax);
        break;
      default:
        break;
    }
  return out;
}

}  // namespace

std::vector<UnaryTable> enumerate_boxes(const ResiduatedAlgebra& a, const AxiomSet& constraints) {
  require_applicable(a, constraints);
  return enumerate_side(a, box_subset(constraints), true);
}

std::vector<UnaryTable> enumerate_diamonds(const ResiduatedAlgebra& a, const AxiomSet& constraints) {
  require_applicable(a, constraints);
  return enumerate_side(a, dia_subset(constraints), false);
}

void enumerate_modal_pairs(const ResiduatedAlgebra& a, const AxiomSet& constraints,
                           const std::function<bool(const ModalPair&)>& yield) {
  require_applicable(a, constraints);
  const auto boxes = enumerate_side(a, box_subset(constraints), true);
  const AxiomSet dia_cs = dia_subset(constraints);
  if (constraints.count(ModalAxiom::Dual)) {
    for (const UnaryTable& box : boxes) {
      UnaryTable dia(a.size());
      for (Elem x = 0; x < a.size(); ++x) dia[x] = a.neg(box[a.neg(x)]);
      if (!side_table_ok(a, dia_cs, dia, false)) continue;
      if (!yield({box, dia, {}})) return;
    }
    return;
  }
  const auto dias = enumerate_side(a, dia_cs, false);
  for (const UnaryTable& box : boxes)
    for (const UnaryTable& dia : dias)
      if (!yield({box, dia, {}})) return;
}

std::vector<ModalPair> list_modal_pairs(const ResiduatedAlgebra& a, const AxiomSet& constraints) {
  std::vector<ModalPair> out;
  enumerate_modal_pairs(a, constraints, [&](const ModalPair& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace nmrot
