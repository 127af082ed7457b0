#include "nmrot/rotation.hpp"

#include <algorithm>

namespace nmrot {

const char* to_string(RotationMode mode) {
  return mode == RotationMode::Plus ? "plus" : "minus";
}

RotatedAlgebra rotate(const ResiduatedAlgebra& a, RotationMode mode) {
  if (!a.classification().godel)
    fail(ErrorKind::NotGodel, "rotation is defined over Godel algebras");
  const int n = a.size();

  RotatedAlgebra r;
  r.base = a;
  r.mode = mode;
  r.index_.assign(static_cast<size_t>(n) * n, -1);
  for (Elem lo = 0; lo < n; ++lo)
    for (Elem hi = 0; hi < n; ++hi) {
      const Elem m = a.meet(lo, hi);
      const bool member = mode == RotationMode::Plus
                              ? m == a.bot()
                              : a.join(m, a.neg(a.join(lo, hi))) == a.bot();
      if (!member) continue;
      r.index_[static_cast<size_t>(lo) * n + hi] = static_cast<Elem>(r.carrier.size());
      r.carrier.emplace_back(lo, hi);
    }
  const int m = static_cast<int>(r.carrier.size());

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [lo, hi] : r.carrier)
    labels.push_back("(" + a.label(lo) + "," + a.label(hi) + ")");

  Relation leq(static_cast<size_t>(m) * m, 0);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      leq[static_cast<size_t>(i) * m + j] =
          (a.leq(r.carrier[j].first, r.carrier[i].first) &&
           a.leq(r.carrier[i].second, r.carrier[j].second))
              ? 1
              : 0;
  FiniteLattice lat = FiniteLattice::from_order(std::move(labels), std::move(leq));

  // The displayed meet and the dual join must agree with the derived order.
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const auto& [alo, ahi] = r.carrier[i];
      const auto& [blo, bhi] = r.carrier[j];
      const Elem mt = r.pair_index(a.join(alo, blo), a.meet(ahi, bhi));
      ensure(mt >= 0 && mt == lat.meet(i, j), "pair meet leaves the carrier or disagrees");
      const Elem jn = r.pair_index(a.meet(alo, blo), a.join(ahi, bhi));
      ensure(jn >= 0 && jn == lat.join(i, j), "pair join leaves the carrier or disagrees");
    }

  BinaryTable star(m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const auto& [alo, ahi] = r.carrier[i];
      const auto& [blo, bhi] = r.carrier[j];
      const Elem s = r.pair_index(a.arrow(a.join(ahi, bhi), a.join(alo, blo)), a.meet(ahi, bhi));
      ensure(s >= 0, "pair star leaves the carrier");
      star(i, j) = s;
    }

  std::optional<Elem> fix;
  if (mode == RotationMode::Plus) {
    const Elem f = r.pair_index(a.bot(), a.bot());
    ensure(f >= 0, "plus carrier lost its fixpoint pair");
    fix = f;
  }
  r.algebra = ResiduatedAlgebra::make(std::move(lat), std::move(star), fix);

  ensure(r.algebra.bot() == r.pair_index(a.top(), a.bot()), "rotation bottom is not (top,bot)");
  ensure(r.algebra.top() == r.pair_index(a.bot(), a.top()), "rotation top is not (bot,top)");
  for (Elem i = 0; i < m; ++i)
    ensure(r.algebra.neg(i) == r.pair_index(r.carrier[i].second, r.carrier[i].first),
           "derived negation disagrees with pair swap");
  return r;
}

namespace {

void require_di(const ResiduatedAlgebra& a, const char* who) {
  if (!is_directly_indecomposable(a).value)
    fail(ErrorKind::PreconditionViolated,
         std::string(who) + " requires a directly indecomposable algebra");
}

}  // namespace

ModalPair lift_modal(const RotatedAlgebra& r, const ModalPair& base_ops) {
  const ResiduatedAlgebra& a = r.base;
  const AxiomReport gao = check_gao(a, base_ops);
  if (!gao.all_pass()) {
    std::string which;
    for (const auto& x : gao.results)
      if (!x.pass) { which = x.axiom; break; }
    fail(ErrorKind::PreconditionViolated, "operator axioms fail on the base: " + which);
  }
  require_di(a, "lift");
  const AxiomReport side = check_side_conditions(a, base_ops);
  if (!side.passed("N1")) fail(ErrorKind::PreconditionViolated, "missing side condition N1");
  if (r.mode == RotationMode::Minus) {
    if (!side.passed("SM□")) fail(ErrorKind::PreconditionViolated, "missing side condition SM□");
    if (!side.passed("SM◇")) fail(ErrorKind::PreconditionViolated, "missing side condition SM◇");
  }

  const int m = static_cast<int>(r.carrier.size());
  ModalPair out;
  out.box.resize(m);
  out.diamond.resize(m);
  for (Elem i = 0; i < m; ++i) {
    const auto& [lo, hi] = r.carrier[i];
    const Elem b = r.pair_index(base_ops.diamond[lo], base_ops.box[hi]);
    if (b < 0)
      fail(ErrorKind::ClosureFailure, "⊟ escapes the carrier at (" + a.label(lo) + "," +
                                          a.label(hi) + ")");
    const Elem d = r.pair_index(base_ops.box[lo], base_ops.diamond[hi]);
    if (d < 0)
      fail(ErrorKind::ClosureFailure, "⟐ escapes the carrier at (" + a.label(lo) + "," +
                                          a.label(hi) + ")");
    out.box[i] = b;
    out.diamond[i] = d;
  }
  return out;
}

Skeleton skeleton(const ResiduatedAlgebra& b) {
  if (!b.classification().nm) fail(ErrorKind::NotNM, "skeleton is defined over NM algebras");
  const int n = b.size();

  Skeleton s;
  std::vector<Elem> to_skel(n, -1);
  for (Elem x = 0; x < n; ++x) {
    const Elem sq = b.star(x, x);
    if (to_skel[sq] < 0) {
      to_skel[sq] = 0;  // mark; indices assigned after the scan in element order
      s.embed.push_back(sq);
    }
  }
  std::sort(s.embed.begin(), s.embed.end());
  std::fill(to_skel.begin(), to_skel.end(), -1);
  for (size_t i = 0; i < s.embed.size(); ++i) to_skel[s.embed[i]] = static_cast<Elem>(i);
  s.squash.resize(n);
  for (Elem x = 0; x < n; ++x) s.squash[x] = to_skel[b.star(x, x)];

  const int m = static_cast<int>(s.embed.size());
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      ensure(to_skel[b.meet(s.embed[i], s.embed[j])] >= 0, "squares are not meet-closed");
      ensure(to_skel[b.join(s.embed[i], s.embed[j])] >= 0, "squares are not join-closed");
    }

  std::vector<std::string> labels;
  Relation leq(static_cast<size_t>(m) * m, 0);
  BinaryTable star(m);
  for (Elem i = 0; i < m; ++i) {
    labels.push_back(b.label(s.embed[i]));
    for (Elem j = 0; j < m; ++j) {
      leq[static_cast<size_t>(i) * m + j] = b.leq(s.embed[i], s.embed[j]) ? 1 : 0;
      star(i, j) = to_skel[b.meet(s.embed[i], s.embed[j])];
    }
  }
  s.algebra = ResiduatedAlgebra::make(FiniteLattice::from_order(std::move(labels), std::move(leq)),
                                      std::move(star));

  ensure(s.algebra.classification().godel, "skeleton is not a Godel algebra");
  // The derived residuum must be the squared implication of the source.
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem t = b.arrow(s.embed[i], s.embed[j]);
      ensure(s.algebra.arrow(i, j) == s.squash[t],
             "skeleton residuum disagrees with the squared implication");
    }
  ensure(is_directly_indecomposable(b).value == is_directly_indecomposable(s.algebra).value,
         "direct indecomposability does not transfer to the skeleton");
  return s;
}

ModalPair lower_modal(const ResiduatedAlgebra& b, const ModalPair& ops, const Skeleton& s) {
  require_di(b, "lower");
  const AxiomReport rep =
      b.classification().nm_plus ? check_nmao_plus(b, ops) : check_nmao_minus(b, ops);
  if (!rep.all_pass()) {
    std::string which;
    for (const auto& x : rep.results)
      if (!x.pass) { which = x.axiom; break; }
    fail(ErrorKind::PreconditionViolated, "rotated-operator axioms fail: " + which);
  }
  const int m = static_cast<int>(s.embed.size());
  ModalPair out;
  out.box.resize(m);
  out.diamond.resize(m);
  for (Elem i = 0; i < m; ++i) {
    out.box[i] = s.squash[ops.box[s.embed[i]]];
    out.diamond[i] = s.squash[ops.diamond[s.embed[i]]];
  }
  return out;
}

Homomorphism gamma(const ResiduatedAlgebra& a, const RotatedAlgebra& r) {
  return gamma(a, r, skeleton(r.algebra));
}

Homomorphism gamma(const ResiduatedAlgebra& a, const RotatedAlgebra& r, const Skeleton& s) {
  if (!(r.base == a))
    fail(ErrorKind::PreconditionViolated, "rotation was not built from this algebra");
  if (!is_directly_indecomposable(a).value)
    fail(ErrorKind::NotDirectlyIndecomposable, "gamma needs a directly indecomposable base");

  Homomorphism h;
  h.source = a;
  h.target = s.algebra;
  h.map.resize(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    // (bot,x)*(bot,x) evaluates to the pair (neg x, x) whether or not the
    // unsquared pair lies in the carrier (the minus carrier omits (bot,bot)).
    const Elem image = r.pair_index(a.neg(x), x);
    ensure(image >= 0, "square image leaves the carrier");
    const Elem direct = r.pair_index(a.bot(), x);
    if (direct >= 0)
      ensure(r.algebra.star(direct, direct) == image, "pair formula disagrees with star table");
    ensure(s.embed[s.squash[image]] == image, "gamma image is not a square");
    h.map[x] = s.squash[image];
  }
  return h;
}

Homomorphism eta(const ResiduatedAlgebra& b, const Skeleton& s, const RotatedAlgebra& r) {
  if (!(r.base == s.algebra))
    fail(ErrorKind::PreconditionViolated, "rotation was not built from the skeleton");
  if (!is_directly_indecomposable(b).value)
    fail(ErrorKind::NotDirectlyIndecomposable, "eta needs a directly indecomposable algebra");
  bool has_fix = false;
  for (Elem x = 0; x < b.size(); ++x)
    if (b.neg(x) == x) has_fix = true;
  if (has_fix != (r.mode == RotationMode::Plus))
    fail(ErrorKind::ModeMismatch, std::string("algebra ") + (has_fix ? "has" : "lacks") +
                                      " a negation fixpoint but the rotation mode is " +
                                      to_string(r.mode));

  Homomorphism h;
  h.source = b;
  h.target = r.algebra;
  h.map.resize(b.size());
  for (Elem x = 0; x < b.size(); ++x) {
    const Elem nx = b.neg(x);
    Elem lo, hi;
    if (b.lt(nx, x)) {  // strictly positive branch
      lo = s.algebra.bot();
      hi = s.squash[b.star(x, x)];
    } else {
      lo = s.squash[b.star(nx, nx)];
      hi = s.algebra.bot();
    }
    const Elem image = r.pair_index(lo, hi);
    ensure(image >= 0, "eta image leaves the carrier");
    h.map[x] = image;
  }
  return h;
}

AxiomReport verify_isomorphism(const Homomorphism& h) {
  const ResiduatedAlgebra& a = h.source;
  const ResiduatedAlgebra& b = h.target;
  if (static_cast<int>(h.map.size()) != a.size())
    fail(ErrorKind::SignatureMismatch, "map does not cover the source");
  if (a.fixpoint().has_value() != b.fixpoint().has_value())
    fail(ErrorKind::SignatureMismatch, "fixpoint constant designated on one side only");
  if (h.source_modal.has_value() != h.target_modal.has_value())
    fail(ErrorKind::SignatureMismatch, "modal operators attached on one side only");

  AxiomReport rep;
  bool ok = a.size() == b.size();
  std::vector<char> hit(b.size(), 0);
  for (Elem x = 0; x < a.size() && ok; ++x) {
    if (h.map[x] < 0 || h.map[x] >= b.size() || hit[h.map[x]]) {
      rep.record_fail("bijective", {x}, "image collision or range escape at " + a.label(x));
      ok = false;
    } else {
      hit[h.map[x]] = 1;
    }
  }
  if (ok && a.size() != b.size()) ok = false;
  if (ok)
    rep.record_pass("bijective");
  else if (rep.results.empty())
    rep.record_fail("bijective", {}, "carriers have different sizes");

  struct BinOp {
    const char* name;
    Elem (ResiduatedAlgebra::*op)(Elem, Elem) const;
  };
  const BinOp ops[] = {{"meet", &ResiduatedAlgebra::meet},
                       {"join", &ResiduatedAlgebra::join},
                       {"star", &ResiduatedAlgebra::star},
                       {"arrow", &ResiduatedAlgebra::arrow}};
  for (const BinOp& op : ops) {
    bool pass = true;
    for (Elem x = 0; x < a.size() && pass; ++x)
      for (Elem y = 0; y < a.size() && pass; ++y)
        if (a.size() == b.size() &&
            h.map[(a.*op.op)(x, y)] != (b.*op.op)(h.map[x], h.map[y])) {
          rep.record_fail(op.name, {x, y}, std::string(op.name) + " not preserved at (" +
                                               a.label(x) + "," + a.label(y) + ")");
          pass = false;
        }
    if (pass) rep.record_pass(op.name);
  }

  if (h.map[a.bot()] == b.bot())
    rep.record_pass("bot");
  else
    rep.record_fail("bot", {a.bot()}, "bottom not preserved");
  if (h.map[a.top()] == b.top())
    rep.record_pass("top");
  else
    rep.record_fail("top", {a.top()}, "top not preserved");
  if (a.fixpoint()) {
    if (h.map[*a.fixpoint()] == *b.fixpoint())
      rep.record_pass("fixpoint");
    else
      rep.record_fail("fixpoint", {*a.fixpoint()}, "fixpoint constant not preserved");
  }

  if (h.source_modal) {
    const ModalPair& ma = *h.source_modal;
    const ModalPair& mb = *h.target_modal;
    if (static_cast<int>(ma.box.size()) != a.size() ||
        static_cast<int>(mb.box.size()) != b.size())
      fail(ErrorKind::SignatureMismatch, "modal tables do not match carriers");
    bool pass = true;
    for (Elem x = 0; x < a.size() && pass; ++x)
      if (h.map[ma.box[x]] != mb.box[h.map[x]]) {
        rep.record_fail("box", {x}, "box operator not preserved at " + a.label(x));
        pass = false;
      }
    if (pass) rep.record_pass("box");
    pass = true;
    for (Elem x = 0; x < a.size() && pass; ++x)
      if (h.map[ma.diamond[x]] != mb.diamond[h.map[x]]) {
        rep.record_fail("diamond", {x}, "diamond operator not preserved at " + a.label(x));
        pass = false;
      }
    if (pass) rep.record_pass("diamond");
  }
  return rep;
}

namespace {

std::vector<long> element_key(const ResiduatedAlgebra& a, const ModalPair* m, Elem x) {
  long down = 0, up = 0;
  for (Elem y = 0; y < a.size(); ++y) {
    if (a.leq(y, x)) ++down;
    if (a.leq(x, y)) ++up;
  }
  std::vector<long> key{down, up, a.star(x, x) == x ? 1 : 0};
  long ndown = 0;
  const Elem nx = a.neg(x);
  for (Elem y = 0; y < a.size(); ++y)
    if (a.leq(y, nx)) ++ndown;
  key.push_back(ndown);
  if (m) {
    // Raw operator images are not invariant; their down-set sizes are.
    long bdown = 0, ddown = 0;
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(y, m->box[x])) ++bdown;
      if (a.leq(y, m->diamond[x])) ++ddown;
    }
    key.push_back(bdown);
    key.push_back(ddown);
  }
  return key;
}

void iso_search(const ResiduatedAlgebra& a, const ResiduatedAlgebra& b, const ModalPair* ma,
                const ModalPair* mb, bool collect_all, std::vector<std::vector<Elem>>& out) {
  if (a.size() != b.size()) return;
  if (a.fixpoint().has_value() != b.fixpoint().has_value()) return;
  const int n = a.size();

  std::vector<std::vector<Elem>> cand(n);
  {
    std::vector<std::vector<long>> keys_b(n);
    for (Elem y = 0; y < n; ++y) keys_b[y] = element_key(b, mb, y);
    for (Elem x = 0; x < n; ++x) {
      const auto key = element_key(a, ma, x);
      for (Elem y = 0; y < n; ++y)
        if (keys_b[y] == key) cand[x].push_back(y);
      if (cand[x].empty()) return;
    }
  }

  std::vector<Elem> order(n);
  for (Elem i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem p, Elem q) { return cand[p].size() < cand[q].size(); });

  std::vector<Elem> map(n, -1);
  std::vector<char> used(n, 0);
  auto complete_ok = [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
        if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
        if (map[a.star(x, y)] != b.star(map[x], map[y])) return false;
        if (map[a.arrow(x, y)] != b.arrow(map[x], map[y])) return false;
      }
    if (map[a.bot()] != b.bot() || map[a.top()] != b.top()) return false;
    if (a.fixpoint() && map[*a.fixpoint()] != *b.fixpoint()) return false;
    if (ma)
      for (Elem x = 0; x < n; ++x)
        if (map[ma->box[x]] != mb->box[map[x]] || map[ma->diamond[x]] != mb->diamond[map[x]])
          return false;
    return true;
  };

  auto dfs = [&](auto&& self, int at) -> bool {
    if (at == n) {
      if (!complete_ok()) return false;
      out.push_back(map);
      return !collect_all;
    }
    const Elem x = order[at];
    for (Elem y : cand[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (int q = 0; q < at && ok; ++q) {
        const Elem u = order[q];
        if (a.leq(x, u) != b.leq(y, map[u])) ok = false;
        if (a.leq(u, x) != b.leq(map[u], y)) ok = false;
        if (ok) {
          const Elem sxu = a.star(x, u);
          if (map[sxu] >= 0 && map[sxu] != b.star(y, map[u])) ok = false;
        }
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, at + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  dfs(dfs, 0);
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const ResiduatedAlgebra& a,
                                                  const ResiduatedAlgebra& b, const ModalPair* ma,
                                                  const ModalPair* mb) {
  if ((ma == nullptr) != (mb == nullptr))
    fail(ErrorKind::SignatureMismatch, "modal tables given on one side only");
  std::vector<std::vector<Elem>> out;
  iso_search(a, b, ma, mb, false, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<std::vector<Elem>> automorphisms(const ResiduatedAlgebra& a) {
  std::vector<std::vector<Elem>> out;
  iso_search(a, a, nullptr, nullptr, true, out);
  return out;
}

}  // namespace nmrot
