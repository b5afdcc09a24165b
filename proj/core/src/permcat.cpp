#include "factperm/permcat.hpp"

#include <algorithm>
#include <map>

namespace factperm::permcat {

PermPtr make_perm(RelPtr base, const RawPermData& raw, bool truncated, std::string bound_note) {
  PermRelCategory c;
  c.base = base;
  c.unit = raw.unit;
  c.truncated = truncated;
  c.bound_note = std::move(bound_note);
  const int nobj = base->base->objects();
  const int nmor = base->base->morphisms();
  c.tensor_obj.assign(static_cast<size_t>(nobj) * nobj, -1);
  c.tensor_mor.assign(static_cast<size_t>(nmor) * nmor, -1);
  c.braid.assign(static_cast<size_t>(nobj) * nobj, -1);
  for (auto [x, y, t] : raw.tensor_obj) c.tensor_obj[static_cast<size_t>(x) * nobj + y] = t;
  for (auto [f, g, t] : raw.tensor_mor) c.tensor_mor[static_cast<size_t>(f) * nmor + g] = t;
  for (auto [x, y, b] : raw.braid) c.braid[static_cast<size_t>(x) * nobj + y] = b;
  return std::make_shared<const PermRelCategory>(std::move(c));
}

Report validate_permutative(const PermRelCategory& c) {
  Report rep;
  rep.check = "permcat/laws";
  if (c.truncated) rep.bounds = c.bound_note;
  const fincat::FinCategory& k = c.cat();
  const int nobj = k.objects();
  const int nmor = k.morphisms();
  auto oname = [&](ObjId x) { return k.oname(x); };
  auto mname = [&](MorId f) { return k.mname(f); };

  if (!c.truncated) {
    for (ObjId x = 0; x < nobj; ++x)
      for (ObjId y = 0; y < nobj; ++y) {
        if (c.tob(x, y) < 0) rep.fail("tensor undefined on (" + oname(x) + "," + oname(y) + ")");
        if (c.braiding(x, y) < 0) rep.fail("braid undefined on (" + oname(x) + "," + oname(y) + ")");
      }
    for (MorId f = 0; f < nmor; ++f)
      for (MorId g = 0; g < nmor; ++g)
        if (c.tmor(f, g) < 0)
          rep.fail("tensor undefined on morphisms (" + mname(f) + "," + mname(g) + ")");
    if (!rep.pass) return rep;
  }

  // unit and associativity on objects
  for (ObjId x = 0; x < nobj; ++x) {
    if (c.tob(x, c.unit) != x) rep.fail("right unit fails at " + oname(x));
    if (c.tob(c.unit, x) != x) rep.fail("left unit fails at " + oname(x));
  }
  for (ObjId x = 0; x < nobj; ++x)
    for (ObjId y = 0; y < nobj; ++y) {
      if (c.tob(x, y) < 0) continue;
      for (ObjId z = 0; z < nobj; ++z) {
        if (c.tob(y, z) < 0) continue;
        ObjId l = c.tob(c.tob(x, y), z);
        ObjId r = c.tob(x, c.tob(y, z));
        if (l < 0 || r < 0) continue;
        if (l != r)
          rep.fail("associativity fails on (" + oname(x) + "," + oname(y) + "," + oname(z) + ")");
      }
    }

  // tensor of morphisms: typing, unit, associativity, bifunctoriality
  for (MorId f = 0; f < nmor; ++f)
    for (MorId g = 0; g < nmor; ++g) {
      MorId t = c.tmor(f, g);
      if (t < 0) continue;
      if (k.dom(t) != c.tob(k.dom(f), k.dom(g)) || k.cod(t) != c.tob(k.cod(f), k.cod(g)))
        rep.fail("tensor of (" + mname(f) + "," + mname(g) + ") has wrong dom/cod");
    }
  for (MorId f = 0; f < nmor; ++f) {
    MorId idu = k.identity(c.unit);
    if (c.tmor(f, idu) != f) rep.fail("right unit fails at morphism " + mname(f));
    if (c.tmor(idu, f) != f) rep.fail("left unit fails at morphism " + mname(f));
  }
  for (ObjId x = 0; x < nobj; ++x)
    for (ObjId y = 0; y < nobj; ++y) {
      if (c.tob(x, y) < 0) continue;
      if (c.tmor(k.identity(x), k.identity(y)) != k.identity(c.tob(x, y)))
        rep.fail("tensor of identities at (" + oname(x) + "," + oname(y) + ") is not the identity");
    }
  {
    std::vector<std::vector<MorId>> partners(nmor);
    for (MorId f = 0; f < nmor; ++f)
      for (MorId g = 0; g < nmor; ++g)
        if (c.tmor(f, g) >= 0) partners[f].push_back(g);
    for (MorId f = 0; f < nmor; ++f)
      for (MorId g : partners[f]) {
        MorId fg = c.tmor(f, g);
        for (MorId h : partners[g]) {
          MorId gh = c.tmor(g, h);
          MorId l = c.tmor(fg, h);
          MorId r = c.tmor(f, gh);
          if (l < 0 || r < 0) continue;
          if (l != r)
            rep.fail("associativity fails on morphisms (" + mname(f) + "," + mname(g) + "," +
                     mname(h) + ")");
        }
      }
  }

  // interchange: (g.f) @ (g'.f') = (g @ g') . (f @ f'), joined over the
  // defined tensor entries grouped by their endpoint pair
  {
    std::vector<std::pair<MorId, MorId>> defined;
    for (MorId f = 0; f < nmor; ++f)
      for (MorId g = 0; g < nmor; ++g)
        if (c.tmor(f, g) >= 0) defined.emplace_back(f, g);
    std::map<std::pair<ObjId, ObjId>, std::vector<size_t>> by_dom;
    for (size_t i = 0; i < defined.size(); ++i)
      by_dom[{k.dom(defined[i].first), k.dom(defined[i].second)}].push_back(i);
    for (auto [f, f2] : defined) {
      auto it = by_dom.find({k.cod(f), k.cod(f2)});
      if (it == by_dom.end()) continue;
      for (size_t gi : it->second) {
        auto [g, g2] = defined[gi];
        MorId lhs = c.tmor(k.compose(g, f), k.compose(g2, f2));
        if (lhs < 0) continue;
        if (lhs != k.compose(c.tmor(g, g2), c.tmor(f, f2)))
          rep.fail("interchange fails on ((" + mname(g) + "," + mname(f) + "),(" + mname(g2) +
                   "," + mname(f2) + "))");
      }
    }
  }

  // braid: iso, involution, naturality, hexagon
  auto isos = fincat::isomorphisms(k);
  std::vector<char> is_iso(nmor, 0);
  for (MorId f : isos) is_iso[f] = 1;
  for (ObjId x = 0; x < nobj; ++x)
    for (ObjId y = 0; y < nobj; ++y) {
      MorId b = c.braiding(x, y);
      if (b < 0) continue;
      if (c.tob(x, y) < 0 || c.tob(y, x) < 0 || k.dom(b) != c.tob(x, y) ||
          k.cod(b) != c.tob(y, x)) {
        rep.fail("braid at (" + oname(x) + "," + oname(y) + ") has wrong dom/cod");
        continue;
      }
      if (!is_iso[b]) rep.fail("braid at (" + oname(x) + "," + oname(y) + ") is not invertible");
      MorId back = c.braiding(y, x);
      if (back >= 0 && k.compose(back, b) != k.identity(c.tob(x, y)))
        rep.fail("braid involution fails at (" + oname(x) + "," + oname(y) + ")");
    }
  for (MorId f = 0; f < nmor; ++f)
    for (MorId g = 0; g < nmor; ++g) {
      MorId fg = c.tmor(f, g);
      MorId gf = c.tmor(g, f);
      if (fg < 0 || gf < 0) continue;
      MorId b0 = c.braiding(k.dom(f), k.dom(g));
      MorId b1 = c.braiding(k.cod(f), k.cod(g));
      if (b0 < 0 || b1 < 0) continue;
      if (k.compose(b1, fg) != k.compose(gf, b0))
        rep.fail("braid naturality fails on (" + mname(f) + "," + mname(g) + ")");
    }
  for (ObjId x = 0; x < nobj; ++x)
    for (ObjId y = 0; y < nobj; ++y) {
      ObjId xy = c.tob(x, y);
      if (xy < 0) continue;
      for (ObjId z = 0; z < nobj; ++z) {
        MorId whole = c.braiding(xy, z);
        MorId bxz = c.braiding(x, z);
        MorId byz = c.braiding(y, z);
        if (whole < 0 || bxz < 0 || byz < 0) continue;
        MorId left = c.tmor(bxz, k.identity(y));
        MorId right = c.tmor(k.identity(x), byz);
        if (left < 0 || right < 0) continue;
        if (whole != k.compose(left, right))
          rep.fail("hexagon fails on (" + oname(x) + "," + oname(y) + "," + oname(z) + ")");
      }
    }

  // weqs are stable under tensor
  for (MorId f = 0; f < nmor; ++f)
    for (MorId g = 0; g < nmor; ++g) {
      MorId t = c.tmor(f, g);
      if (t < 0) continue;
      if (c.base->is_weq(f) && c.base->is_weq(g) && !c.base->is_weq(t))
        rep.fail("tensor of weqs (" + mname(f) + "," + mname(g) + ") is not a weq");
    }
  return rep;
}

ObjId iterated_tensor(const PermRelCategory& c, std::span<const ObjId> xs) {
  ObjId acc = c.unit;
  bool first = true;
  for (ObjId x : xs) {
    acc = first ? x : c.tob(acc, x);
    first = false;
    if (acc < 0) return -1;
  }
  return acc;
}

MorId iterated_tensor_mor(const PermRelCategory& c, std::span<const MorId> fs) {
  MorId acc = c.cat().identity(c.unit);
  bool first = true;
  for (MorId f : fs) {
    acc = first ? f : c.tmor(acc, f);
    first = false;
    if (acc < 0) return -1;
  }
  return acc;
}

// Composite of adjacent-transposition braidings along one sorting schedule.
// `order` lists, per position, which input sits there; sorting it to the
// identity step by step yields the morphism.
static MorId symmetry_along(const PermRelCategory& c, std::vector<int> order,
                            std::span<const ObjId> xs, bool insertion) {
  const fincat::FinCategory& k = c.cat();
  const int n = static_cast<int>(order.size());
  auto object_at = [&](const std::vector<int>& ord) {
    std::vector<ObjId> objs(n);
    for (int i = 0; i < n; ++i) objs[i] = xs[ord[i]];
    return iterated_tensor(c, objs);
  };
  MorId acc = k.identity(object_at(order));
  if (acc < 0) return -1;
  auto apply_swap = [&](int p) -> bool {
    // swap positions p, p+1 with a whiskered braiding
    std::vector<MorId> legs(n);
    for (int i = 0; i < n; ++i) legs[i] = k.identity(xs[order[i]]);
    // build id x ... x braid x ... x id as a left fold
    MorId step;
    {
      std::vector<ObjId> pre;
      for (int i = 0; i < p; ++i) pre.push_back(xs[order[i]]);
      MorId head = k.identity(iterated_tensor(c, pre));
      MorId b = c.braiding(xs[order[p]], xs[order[p + 1]]);
      if (b < 0) return false;
      step = c.tmor(head, b);
      if (step < 0) return false;
      for (int i = p + 2; i < n; ++i) {
        step = c.tmor(step, k.identity(xs[order[i]]));
        if (step < 0) return false;
      }
    }
    acc = k.compose(step, acc);
    std::swap(order[p], order[p + 1]);
    return true;
  };
  if (!insertion) {
    // bubble sort
    bool moved = true;
    while (moved) {
      moved = false;
      for (int p = 0; p + 1 < n; ++p)
        if (order[p] > order[p + 1]) {
          if (!apply_swap(p)) return -1;
          moved = true;
        }
    }
  } else {
    for (int i = 1; i < n; ++i)
      for (int p = i - 1; p >= 0 && order[p] > order[p + 1]; --p)
        if (!apply_swap(p)) return -1;
  }
  return acc;
}

MorId canonical_symmetry(const PermRelCategory& c, const std::vector<int>& sigma,
                         std::span<const ObjId> xs) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> order(n);  // position i holds input sigma^{-1}(i)
  for (int i = 0; i < n; ++i) order[sigma[i]] = i;
  MorId bubble = symmetry_along(c, order, xs, false);
  MorId insertion = symmetry_along(c, order, xs, true);
  if (bubble != insertion) {
    Report rep;
    rep.check = "permcat/canonical-symmetry";
    rep.fail("decomposition-dependent symmetry; braid data is incoherent");
    throw ValidationError("decomposition-dependent symmetry", rep);
  }
  return bubble;
}

MorId reorder_symmetry(const PermRelCategory& c, std::span<const ObjId> domain,
                       const std::vector<int>& dest) {
  const int n = static_cast<int>(domain.size());
  std::vector<ObjId> arranged(n);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) {
    arranged[dest[i]] = domain[i];
    sigma[dest[i]] = i;
  }
  return canonical_symmetry(c, sigma, arranged);
}

Report check_strict_sm_functor(const PermRelCategory& src, const PermRelCategory& dst,
                               const relcat::RelFunctor& rf) {
  Report rep;
  rep.check = "permcat/strict-sm-functor";
  if (src.truncated || dst.truncated)
    rep.bounds = src.truncated ? src.bound_note : dst.bound_note;
  Report base = relcat::check_rel_functor(rf);
  if (!base.pass) {
    rep.fail("underlying functor is not relative");
    for (auto& d : base.details) rep.note(d);
    return rep;
  }
  const fincat::FinCategory& s = src.cat();
  if (rf.f.object_map[src.unit] != dst.unit) rep.fail("unit not preserved");
  for (ObjId x = 0; x < s.objects(); ++x)
    for (ObjId y = 0; y < s.objects(); ++y) {
      if (src.tob(x, y) < 0) continue;
      ObjId d = dst.tob(rf.f.object_map[x], rf.f.object_map[y]);
      if (d < 0) continue;
      if (rf.f.object_map[src.tob(x, y)] != d)
        rep.fail("tensor of objects not preserved at (" + s.oname(x) + "," + s.oname(y) + ")");
      MorId b = src.braiding(x, y);
      MorId db = dst.braiding(rf.f.object_map[x], rf.f.object_map[y]);
      if (b >= 0 && db >= 0 && rf.f.morphism_map[b] != db)
        rep.fail("braiding not preserved at (" + s.oname(x) + "," + s.oname(y) + ")");
    }
  for (MorId f = 0; f < s.morphisms(); ++f)
    for (MorId g = 0; g < s.morphisms(); ++g) {
      if (src.tmor(f, g) < 0) continue;
      MorId d = dst.tmor(rf.f.morphism_map[f], rf.f.morphism_map[g]);
      if (d < 0) continue;
      if (rf.f.morphism_map[src.tmor(f, g)] != d)
        rep.fail("tensor of morphisms not preserved at (" + s.mname(f) + "," + s.mname(g) + ")");
    }
  return rep;
}

}  // namespace factperm::permcat
