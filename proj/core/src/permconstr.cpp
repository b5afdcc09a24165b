#include "factperm/permconstr.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace factperm::permconstr {

using factop::FactAlgebra;
using factop::FactMorphism;
using finstar::Subset;
using finstar::subset_elements;

Report check_segal_functor(const TruncatedSegalFunctor& f) {
  Report rep;
  rep.check = "permconstr/segal-functor";
  rep.bounds = "max_n=" + std::to_string(f.bound);
  for (int n = 0; n <= f.bound; ++n) {
    auto it = f.action.find(finstar::identity_map(n));
    if (it == f.action.end() || !relcat::same_functor(it->second, relcat::identity_rel_functor(f.value[n]))) {
      rep.fail("action at the identity of <" + std::to_string(n) + "> is not the identity");
    }
  }
  for (const auto& [m1, a1] : f.action)
    for (const auto& [m2, a2] : f.action) {
      if (m2.n != m1.m) continue;
      PointedMap c = finstar::compose(m2, m1);
      auto it = f.action.find(c);
      if (it == f.action.end()) {
        rep.fail("missing action at " + finstar::to_text(c));
        continue;
      }
      if (!relcat::same_functor(it->second, relcat::compose(a2, a1)))
        rep.fail("functoriality fails on " + finstar::to_text(m1) + " then " +
                 finstar::to_text(m2));
    }
  for (const auto& [m, a] : f.action) {
    Report fr = relcat::check_rel_functor(a);
    if (!fr.pass) {
      rep.fail("action at " + finstar::to_text(m) + " is not a relative functor");
      for (auto& d : fr.details) rep.note(d);
    }
  }
  return rep;
}

TruncatedSegalFunctor fact_functor(const factop::FactFamily& fam, bool attach_segal,
                                   int segal_max_n) {
  TruncatedSegalFunctor f;
  f.bound = fam.bound;
  for (int n = 0; n <= fam.bound; ++n) f.value.push_back(fam.level[n].cat);
  for (int n = 0; n <= fam.bound; ++n)
    for (int m = 0; m <= fam.bound; ++m)
      for (const auto& u : finstar::all_maps(n, m))
        f.action.emplace(u, factop::pullback_rel_functor(fam, u));
  if (attach_segal) {
    f.segal_flag = true;
    for (int n = 0; n <= std::min(fam.bound, segal_max_n); ++n)
      f.segal_witness.push_back(factop::segal_witness(fam, n).witness);
  }
  return f;
}

// ---------------------------------------------------------------------------

// The slot map <n_{v(j)}> -> <k_j> of a twisted-arrow morphism: identify with
// the preimage, apply the top map, restrict to the j-th preimage.
static PointedMap slot_map(const PointedMap& fmap, const PointedMap& gmap,
                           const PointedMap& a, const PointedMap& b, int j) {
  int vj = b(j);
  PointedMap inc;  // <n_{v(j)}> -> <fmap.n>
  inc.m = fmap.n;
  for (int i = 1; i <= fmap.n; ++i)
    if (fmap(i) == vj) inc.img.push_back(i);
  inc.n = static_cast<int>(inc.img.size());
  Subset gj = 0;
  for (int i = 1; i <= gmap.n; ++i)
    if (gmap(i) == j) gj |= 1u << (i - 1);
  return finstar::compose(finstar::rho(gmap.n, gj), finstar::compose(a, inc));
}

TwIndexedProduct f_tw(const TruncatedSegalFunctor& f, int bound) {
  TwIndexedProduct t;
  t.bound = bound;
  t.tw = finstar::enumerate_tw_active(bound);
  const auto& objs = t.tw.object_map();
  for (const auto& u : objs) {
    std::vector<int> levels(u.m, 0);
    for (int i = 1; i <= u.n; ++i) ++levels[u(i) - 1];
    std::vector<relcat::RelPtr> factors;
    for (int l : levels) factors.push_back(f.value[l]);
    t.slot_level.push_back(levels);
    t.fiber.push_back(relcat::rel_product(std::move(factors)));
  }
  for (int m = 0; m < t.tw.tw.cat->morphisms(); ++m) {
    int dom = t.tw.tw.cat->dom(m);
    int cod = t.tw.tw.cat->cod(m);
    auto [a, b] = t.tw.mor_maps(m);
    const PointedMap& fmap = objs[dom];
    const PointedMap& gmap = objs[cod];
    if (gmap.m == 0) {
      t.action.push_back(relcat::constant_rel_functor(t.fiber[dom].cat, t.fiber[cod].cat, 0));
      continue;
    }
    std::vector<relcat::RelFunctor> legs;
    for (int j = 1; j <= gmap.m; ++j) {
      PointedMap mj = slot_map(fmap, gmap, a, b, j);
      legs.push_back(relcat::compose(f.act(mj), t.fiber[dom].projections[b(j) - 1]));
    }
    t.action.push_back(relcat::rel_pairing(t.fiber[cod], legs));
  }
  return t;
}

Report check_f_tw(const TwIndexedProduct& t) {
  Report rep;
  rep.check = "permconstr/f-tw-functorial";
  rep.bounds = "max_n=" + std::to_string(t.bound);
  const fincat::FinCategory& tw = *t.tw.tw.cat;
  for (int x = 0; x < tw.objects(); ++x)
    if (!relcat::same_functor(t.action[tw.identity(x)],
                              relcat::identity_rel_functor(t.fiber[x].cat)))
      rep.fail("identity action fails at object " + tw.oname(x));
  for (int g = 0; g < tw.morphisms(); ++g)
    for (int f = 0; f < tw.morphisms(); ++f) {
      if (!tw.composable(g, f)) continue;
      if (!relcat::same_functor(t.action[tw.compose(g, f)],
                                relcat::compose(t.action[g], t.action[f])))
        rep.fail("composition fails on (" + tw.mname(g) + ", " + tw.mname(f) + ")");
    }
  return rep;
}

// ---------------------------------------------------------------------------

int GrothendieckTotal::total_obj(int c, int x) const {
  auto it = std::lower_bound(obj_pair.begin(), obj_pair.end(), std::make_pair(c, x));
  if (it == obj_pair.end() || *it != std::make_pair(c, x)) return -1;
  return static_cast<int>(it - obj_pair.begin());
}

int GrothendieckTotal::total_mor(int index_mor, int cod_fiber_obj, int fiber_mor) const {
  auto key = std::make_tuple(index_mor, cod_fiber_obj, fiber_mor);
  auto cmp = [](const MorData& m, const std::tuple<int, int, int>& k) {
    return std::make_tuple(m.index_mor, m.cod_fiber_obj, m.fiber_mor) < k;
  };
  auto it = std::lower_bound(mor_data.begin(), mor_data.end(), key, cmp);
  if (it == mor_data.end() ||
      std::make_tuple(it->index_mor, it->cod_fiber_obj, it->fiber_mor) != key)
    return -1;
  return static_cast<int>(it - mor_data.begin());
}

GrothendieckTotal grothendieck(fincat::CatPtr index, std::vector<relcat::RelPtr> fibers,
                               std::vector<relcat::RelFunctor> transitions) {
  GrothendieckTotal g;
  g.index = index;
  g.fibers = std::move(fibers);
  g.transition = std::move(transitions);

  {
    Report rep;
    rep.check = "permconstr/grothendieck-input";
    for (int x = 0; x < index->objects(); ++x)
      if (!relcat::same_functor(g.transition[index->identity(x)],
                                relcat::identity_rel_functor(g.fibers[x])))
        rep.fail("transition at an identity is not the identity");
    for (int q = 0; q < index->morphisms(); ++q)
      for (int p = 0; p < index->morphisms(); ++p) {
        if (!index->composable(q, p)) continue;
        if (!relcat::same_functor(g.transition[index->compose(q, p)],
                                  relcat::compose(g.transition[p], g.transition[q])))
          rep.fail("transitions not functorial on (" + index->mname(q) + ", " +
                   index->mname(p) + ")");
      }
    if (!rep.pass) throw ValidationError("non-functorial transition data", rep);
  }

  for (int c = 0; c < index->objects(); ++c)
    for (int x = 0; x < g.fibers[c]->base->objects(); ++x) g.obj_pair.emplace_back(c, x);

  fincat::RawCategory raw;
  for (auto [c, x] : g.obj_pair)
    raw.objects.push_back("(" + index->oname(c) + "|" + g.fibers[c]->base->oname(x) + ")");

  for (int f = 0; f < index->morphisms(); ++f) {
    int c = index->dom(f), d = index->cod(f);
    const fincat::FinCategory& fc = *g.fibers[c]->base;
    for (int y = 0; y < g.fibers[d]->base->objects(); ++y) {
      int ty = g.transition[f].f.object_map[y];
      for (int h = 0; h < fc.morphisms(); ++h) {
        if (fc.cod(h) != ty) continue;
        g.mor_data.push_back({f, y, h});
        raw.morphisms.push_back({"(" + index->mname(f) + "|" + fc.mname(h) + ")",
                                 g.total_obj(c, fc.dom(h)), g.total_obj(d, y)});
      }
    }
  }

  raw.identities.resize(g.obj_pair.size());
  for (size_t o = 0; o < g.obj_pair.size(); ++o) {
    auto [c, x] = g.obj_pair[o];
    raw.identities[o] =
        g.total_mor(index->identity(c), x, g.fibers[c]->base->identity(x));
  }

  std::vector<std::vector<int>> by_dom(g.obj_pair.size());
  for (size_t m = 0; m < g.mor_data.size(); ++m)
    by_dom[raw.morphisms[m].dom].push_back(static_cast<int>(m));

  for (size_t j = 0; j < g.mor_data.size(); ++j) {
    int mid = raw.morphisms[j].cod;
    for (int i : by_dom[mid]) {  // i after j
      auto [f1, y1, h1] = std::make_tuple(g.mor_data[j].index_mor, g.mor_data[j].cod_fiber_obj,
                                          g.mor_data[j].fiber_mor);
      auto [f2, y2, h2] = std::make_tuple(g.mor_data[i].index_mor, g.mor_data[i].cod_fiber_obj,
                                          g.mor_data[i].fiber_mor);
      int f = g.index->compose(f2, f1);
      int c = g.index->dom(f1);
      int h = g.fibers[c]->base->compose(g.transition[f1].f.morphism_map[h2], h1);
      int target = g.total_mor(f, y2, h);
      raw.compose.push_back({i, static_cast<int>(j), target});
    }
  }
  fincat::CatPtr total = fincat::make_cat(raw);

  std::vector<int> weq;
  g.cartesian.assign(g.mor_data.size(), 0);
  {
    std::vector<std::vector<char>> fiber_iso(g.fibers.size());
    std::vector<std::vector<char>> fiber_weq(g.fibers.size());
    for (size_t c = 0; c < g.fibers.size(); ++c) {
      fiber_iso[c].assign(g.fibers[c]->base->morphisms(), 0);
      for (int m : fincat::isomorphisms(*g.fibers[c]->base)) fiber_iso[c][m] = 1;
      fiber_weq[c] = g.fibers[c]->weq;
    }
    for (size_t m = 0; m < g.mor_data.size(); ++m) {
      int c = g.index->dom(g.mor_data[m].index_mor);
      g.cartesian[m] = fiber_iso[c][g.mor_data[m].fiber_mor];
      if (fiber_weq[c][g.mor_data[m].fiber_mor]) weq.push_back(static_cast<int>(m));
    }
  }
  g.total = relcat::make_relcat(total, weq);

  g.projection.source = total;
  g.projection.target = index;
  for (auto [c, x] : g.obj_pair) g.projection.object_map.push_back(c);
  for (const auto& m : g.mor_data) g.projection.morphism_map.push_back(m.index_mor);
  return g;
}

Report check_grothendieck(const GrothendieckTotal& g) {
  Report rep;
  rep.check = "permconstr/grothendieck-laws";
  const fincat::FinCategory& total = *g.total->base;

  Report proj = fincat::check_functor(g.projection);
  if (!proj.pass) {
    rep.fail("projection is not a functor");
    for (auto& d : proj.details) rep.note(d);
  }

  // cartesian <=> invertible fiber part
  std::vector<std::vector<char>> fiber_iso(g.fibers.size());
  for (size_t c = 0; c < g.fibers.size(); ++c) {
    fiber_iso[c].assign(g.fibers[c]->base->morphisms(), 0);
    for (int m : fincat::isomorphisms(*g.fibers[c]->base)) fiber_iso[c][m] = 1;
  }
  for (size_t m = 0; m < g.mor_data.size(); ++m) {
    int c = g.index->dom(g.mor_data[m].index_mor);
    if (g.cartesian[m] != fiber_iso[c][g.mor_data[m].fiber_mor])
      rep.fail("cartesian flag disagrees with the fiber part at " + total.mname(static_cast<int>(m)));
  }

  // the marking is exactly the set of composites (fiberwise weq, then cartesian)
  std::vector<char> expected(g.mor_data.size(), 0);
  for (size_t w = 0; w < g.mor_data.size(); ++w) {
    if (g.mor_data[w].index_mor != g.index->identity(g.index->dom(g.mor_data[w].index_mor)))
      continue;
    int c = g.index->dom(g.mor_data[w].index_mor);
    if (!g.fibers[c]->is_weq(g.mor_data[w].fiber_mor)) continue;
    for (size_t k = 0; k < g.mor_data.size(); ++k) {
      if (!g.cartesian[k]) continue;
      if (!total.composable(static_cast<int>(k), static_cast<int>(w))) continue;
      expected[total.compose(static_cast<int>(k), static_cast<int>(w))] = 1;
    }
  }
  for (size_t m = 0; m < g.mor_data.size(); ++m)
    if (static_cast<bool>(expected[m]) != g.total->is_weq(static_cast<int>(m)))
      rep.fail("marking differs from the fiberwise-weq-then-cartesian closure at " +
               total.mname(static_cast<int>(m)));

  Report closure = relcat::check_relcat(*g.total);
  if (!closure.pass) {
    rep.fail("total marking is not a relative category");
    for (auto& d : closure.details) rep.note(d);
  }
  return rep;
}

// ---------------------------------------------------------------------------

int PermBuild::obj_of(const PointedMap& active_map, const std::vector<ObjId>& tuple) const {
  int tw_obj = ftw.tw.object_id(active_map);
  if (tw_obj < 0) return -1;
  ObjId fib = tuple.empty() ? 0 : ftw.fiber[tw_obj].obj_id(tuple);
  return groth.total_obj(tw_obj, fib);
}

std::pair<PointedMap, std::vector<ObjId>> PermBuild::obj_data(int total_obj) const {
  auto [c, x] = groth.obj_pair[total_obj];
  return {ftw.tw.object_map()[c], ftw.fiber[c].obj_tuple(x)};
}

PermBuild perm_build(const TruncatedSegalFunctor& f, int bound) {
  PermBuild pb;
  pb.bound = bound;
  if (f.bound < bound) {
    Report rep;
    rep.check = "permconstr/perm-build";
    rep.fail("input functor bound " + std::to_string(f.bound) +
             " is below the requested truncation " + std::to_string(bound));
    throw ValidationError("insufficient input bound", rep);
  }
  pb.ftw = f_tw(f, bound);
  {
    Report ftw_rep = check_f_tw(pb.ftw);
    if (!ftw_rep.pass) throw ValidationError("fiber assignment is not functorial", ftw_rep);
  }

  fincat::CatPtr index = fincat::opposite(pb.ftw.tw.tw.cat).cat;
  std::vector<relcat::RelPtr> fibers;
  for (int c = 0; c < index->objects(); ++c) fibers.push_back(pb.ftw.fiber[c].cat);
  pb.groth = grothendieck(index, fibers, pb.ftw.action);

  const auto& objs = pb.ftw.tw.object_map();
  const int nobj = pb.groth.total->base->objects();
  const int nmor = pb.groth.total->base->morphisms();

  permcat::RawPermData raw;
  raw.unit = pb.obj_of(finstar::identity_map(0), {});

  auto wedge_obj = [&](int x, int y) -> int {
    auto [ux, tx] = pb.obj_data(x);
    auto [uy, ty] = pb.obj_data(y);
    if (ux.n + uy.n > bound || ux.m + uy.m > bound) return -1;
    int cw = pb.ftw.tw.object_id(finstar::wedge(ux, uy));
    int fx = pb.groth.obj_pair[x].second;
    int fy = pb.groth.obj_pair[y].second;
    int fw = fx * pb.ftw.fiber[pb.groth.obj_pair[y].first].cat->base->objects() + fy;
    return pb.groth.total_obj(cw, fw);
  };
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y) {
      int t = wedge_obj(x, y);
      if (t >= 0) raw.tensor_obj.push_back({x, y, t});
    }

  // tensor of morphisms: wedge the underlying twisted-arrow squares and
  // concatenate the fiber parts
  for (int m1 = 0; m1 < nmor; ++m1)
    for (int m2 = 0; m2 < nmor; ++m2) {
      const auto& d1 = pb.groth.mor_data[m1];
      const auto& d2 = pb.groth.mor_data[m2];
      int dom = wedge_obj(pb.groth.total->base->dom(m1), pb.groth.total->base->dom(m2));
      int cod = wedge_obj(pb.groth.total->base->cod(m1), pb.groth.total->base->cod(m2));
      if (dom < 0 || cod < 0) continue;
      auto [a1, b1] = pb.ftw.tw.mor_maps(d1.index_mor);
      auto [a2, b2] = pb.ftw.tw.mor_maps(d2.index_mor);
      int twdom1 = pb.ftw.tw.tw.cat->dom(d1.index_mor);
      int twdom2 = pb.ftw.tw.tw.cat->dom(d2.index_mor);
      int twcod1 = pb.ftw.tw.tw.cat->cod(d1.index_mor);
      int twcod2 = pb.ftw.tw.tw.cat->cod(d2.index_mor);
      int wdom = pb.ftw.tw.object_id(finstar::wedge(objs[twdom1], objs[twdom2]));
      int wcod = pb.ftw.tw.object_id(finstar::wedge(objs[twcod1], objs[twcod2]));
      int widx = pb.ftw.tw.mor_id(finstar::wedge(a1, a2), finstar::wedge(b1, b2), wdom, wcod);
      if (widx < 0) continue;
      int wy = d1.cod_fiber_obj * pb.ftw.fiber[twdom2].cat->base->objects() + d2.cod_fiber_obj;
      int wh = d1.fiber_mor * pb.ftw.fiber[twcod2].cat->base->morphisms() + d2.fiber_mor;
      int t = pb.groth.total_mor(widx, wy, wh);
      if (t >= 0) raw.tensor_mor.push_back({m1, m2, t});
    }

  // braiding: block swap on both legs, identity in the fibers
  for (int x = 0; x < nobj; ++x)
    for (int y = 0; y < nobj; ++y) {
      int xy = wedge_obj(x, y);
      int yx = wedge_obj(y, x);
      if (xy < 0 || yx < 0) continue;
      auto [ux, tx] = pb.obj_data(x);
      auto [uy, ty] = pb.obj_data(y);
      PointedMap a = finstar::swap_blocks(uy.n, ux.n);
      PointedMap b = finstar::swap_blocks(ux.m, uy.m);
      int tw_yx = pb.groth.obj_pair[yx].first;
      int tw_xy = pb.groth.obj_pair[xy].first;
      int widx = pb.ftw.tw.mor_id(a, b, tw_yx, tw_xy);
      int y_fib = pb.groth.obj_pair[yx].second;
      if (widx < 0 || pb.ftw.action[widx].f.object_map[y_fib] != pb.groth.obj_pair[xy].second)
        throw std::logic_error("block swap does not shuffle the fiber slots");
      int h = pb.ftw.fiber[tw_xy].cat->base->identity(pb.groth.obj_pair[xy].second);
      int t = pb.groth.total_mor(widx, y_fib, h);
      if (t < 0) throw std::logic_error("braiding morphism missing from the total category");
      raw.braid.push_back({x, y, t});
    }

  pb.perm = permcat::make_perm(pb.groth.total, raw, true,
                               "wedge bound n,m<=" + std::to_string(bound));
  return pb;
}

// ---------------------------------------------------------------------------

static relcat::RelFunctor level1_inclusion(const TruncatedSegalFunctor& f,
                                           const PermBuild& pb) {
  relcat::RelPtr f1 = f.value[1];
  int tw1 = pb.ftw.tw.object_id(finstar::identity_map(1));
  int ididx = pb.groth.index->identity(tw1);
  std::vector<ObjId> om(f1->base->objects());
  std::vector<MorId> mm(f1->base->morphisms());
  for (ObjId x = 0; x < f1->base->objects(); ++x) om[x] = pb.groth.total_obj(tw1, x);
  for (MorId m = 0; m < f1->base->morphisms(); ++m)
    mm[m] = pb.groth.total_mor(ididx, f1->base->cod(m), m);
  return relcat::make_rel_functor(f1, pb.groth.total, std::move(om), std::move(mm));
}

UnitInclusion unit_inclusion(const TruncatedSegalFunctor& f, const PermBuild& pb) {
  UnitInclusion out;
  out.incl = level1_inclusion(f, pb);
  out.pi0.check = "permconstr/pi0-unit";
  out.pi0.bounds = "perm bound=" + std::to_string(pb.bound);

  const fincat::FinCategory& total = *pb.groth.total->base;
  std::vector<int> parent(total.objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int m = 0; m < total.morphisms(); ++m) {
    int a = find(total.dom(m)), b = find(total.cod(m));
    if (a != b) parent[a] = b;
  }
  const fincat::FinCategory& f1 = *f.value[1]->base;
  std::vector<int> p1(f1.objects());
  std::iota(p1.begin(), p1.end(), 0);
  std::function<int(int)> find1 = [&](int a) {
    while (p1[a] != a) a = p1[a] = p1[p1[a]];
    return a;
  };
  for (int m = 0; m < f1.morphisms(); ++m) {
    int a = find1(f1.dom(m)), b = find1(f1.cod(m));
    if (a != b) p1[a] = b;
  }
  // injectivity and surjectivity on components
  std::map<int, int> image;  // total class -> source class
  for (ObjId x = 0; x < f1.objects(); ++x) {
    int tc = find(out.incl.f.object_map[x]);
    int sc = find1(x);
    auto it = image.find(tc);
    if (it == image.end())
      image[tc] = sc;
    else if (it->second != sc)
      out.pi0.fail("components of the unit fiber merge in the total category");
  }
  for (int o = 0; o < total.objects(); ++o)
    if (!image.count(find(o))) {
      out.pi0.fail("component of " + total.oname(o) + " misses the unit fiber");
      break;
    }
  return out;
}

Report pi0_bijection(const TruncatedSegalFunctor& f, int bound) {
  Report rep;
  rep.check = "permconstr/pi0-unit";
  rep.bounds = "perm bound=" + std::to_string(bound) + " (graph only)";

  // objects: (active map u, tuple of fiber objects), indexed by offsets
  struct Node { PointedMap u; std::vector<int> levels; int offset; int size; };
  std::vector<Node> nodes;
  int total = 0;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (const auto& u : finstar::all_active(n, m)) {
        std::vector<int> levels(u.m, 0);
        for (int i = 1; i <= u.n; ++i) ++levels[u(i) - 1];
        int size = 1;
        for (int l : levels) size *= f.value[l]->base->objects();
        nodes.push_back({u, levels, total, size});
        total += size;
      }
  auto node_of = [&](const PointedMap& u) -> const Node& {
    for (const auto& nd : nodes)
      if (nd.u == u) return nd;
    throw std::logic_error("node not found");
  };
  auto decode = [&](const Node& nd, int x) {
    std::vector<int> t(nd.levels.size());
    for (size_t i = nd.levels.size(); i-- > 0;) {
      int sz = f.value[nd.levels[i]]->base->objects();
      t[i] = x % sz;
      x /= sz;
    }
    return t;
  };
  auto encode = [&](const Node& nd, const std::vector<int>& t) {
    int x = 0;
    for (size_t i = 0; i < nd.levels.size(); ++i)
      x = x * f.value[nd.levels[i]]->base->objects() + t[i];
    return x;
  };

  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };

  // in-fiber edges: hom-nonempty componentwise
  for (const auto& nd : nodes) {
    for (int x = 0; x < nd.size; ++x)
      for (int y = 0; y < nd.size; ++y) {
        auto tx = decode(nd, x), ty = decode(nd, y);
        bool all = true;
        for (size_t i = 0; i < nd.levels.size() && all; ++i) {
          const fincat::FinCategory& k = *f.value[nd.levels[i]]->base;
          bool found = false;
          for (int m = 0; m < k.morphisms() && !found; ++m)
            if (k.dom(m) == tx[i] && k.cod(m) == ty[i]) found = true;
          all = found;
        }
        if (all) unite(nd.offset + x, nd.offset + y);
      }
  }

  // cross edges along every twisted-arrow morphism
  for (const auto& from : nodes)
    for (const auto& to : nodes)
      for (const auto& [a, b] : finstar::tw_hom(from.u, to.u)) {
        for (int y = 0; y < from.size; ++y) {
          auto ty = decode(from, y);
          std::vector<int> tx(to.levels.size());
          for (int j = 1; j <= to.u.m; ++j) {
            PointedMap mj = slot_map(from.u, to.u, a, b, j);
            tx[j - 1] = f.act(mj).f.object_map[ty[b(j) - 1]];
          }
          unite(from.offset + y, to.offset + encode(to, tx));
        }
      }

  const Node& unit_node = node_of(finstar::identity_map(1));
  const fincat::FinCategory& f1 = *f.value[1]->base;
  std::vector<int> p1(f1.objects());
  std::iota(p1.begin(), p1.end(), 0);
  std::function<int(int)> find1 = [&](int a) {
    while (p1[a] != a) a = p1[a] = p1[p1[a]];
    return a;
  };
  for (int m = 0; m < f1.morphisms(); ++m) {
    int a = find1(f1.dom(m)), c = find1(f1.cod(m));
    if (a != c) p1[a] = c;
  }
  std::map<int, int> image;
  for (int x = 0; x < f1.objects(); ++x) {
    int tc = find(unit_node.offset + x);
    int sc = find1(x);
    auto it = image.find(tc);
    if (it == image.end())
      image[tc] = sc;
    else if (it->second != sc)
      rep.fail("components of the unit fiber merge in the total category");
  }
  for (int o = 0; o < total; ++o)
    if (!image.count(find(o))) {
      rep.fail("a component misses the unit fiber");
      break;
    }
  return rep;
}

// ---------------------------------------------------------------------------

CounitResult counit_functor(const factop::FactFamily& fam, const PermBuild& pb) {
  CounitResult out;
  const permcat::PermRelCategory& c = *fam.ambient;
  const fincat::FinCategory& k = c.cat();
  const fincat::FinCategory& total = *pb.groth.total->base;
  const auto& objs = pb.ftw.tw.object_map();

  auto kappa_obj = [&](int tw_obj, const std::vector<ObjId>& tuple) {
    std::vector<ObjId> vals(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i) {
      int lvl = pb.ftw.slot_level[tw_obj][i];
      vals[i] = fam.level[lvl].algebras[tuple[i]].obj[(1u << lvl) - 1];
    }
    return permcat::iterated_tensor(c, vals);
  };

  std::vector<ObjId> om(total.objects());
  for (int o = 0; o < total.objects(); ++o) {
    auto [tw_obj, fib] = pb.groth.obj_pair[o];
    om[o] = kappa_obj(tw_obj, pb.ftw.fiber[tw_obj].obj_tuple(fib));
  }

  std::vector<MorId> mm(total.morphisms());
  for (int m = 0; m < total.morphisms(); ++m) {
    const auto& md = pb.groth.mor_data[m];
    int c_idx = pb.groth.index->dom(md.index_mor);  // domain side (tw-codomain)
    int d_idx = pb.groth.index->cod(md.index_mor);  // codomain side (tw-domain)
    auto [a, b] = pb.ftw.tw.mor_maps(md.index_mor);
    const PointedMap& fmap = objs[d_idx];
    const PointedMap& gmap = objs[c_idx];

    // kappa applied to the fiber part
    std::vector<MorId> legs(pb.ftw.slot_level[c_idx].size());
    auto htuple = pb.ftw.fiber[c_idx].mor_tuple(md.fiber_mor);
    for (size_t j = 0; j < legs.size(); ++j) {
      int lvl = pb.ftw.slot_level[c_idx][j];
      legs[j] = fam.level[lvl].mor_data[htuple[j]].comp[(1u << lvl) - 1];
    }
    MorId kh = permcat::iterated_tensor_mor(c, legs);

    // the comparison component at the codomain tuple
    auto ytuple = pb.ftw.fiber[d_idx].obj_tuple(md.cod_fiber_obj);
    const int l = gmap.m;
    std::vector<ObjId> domain_objs(l);
    std::vector<Subset> slot_masks(l);
    std::vector<int> group_dest(l);
    {
      std::vector<int> order(l);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return b(p + 1) < b(q + 1); });
      std::vector<int> rank(l);
      for (int p = 0; p < l; ++p) rank[order[p]] = p;
      for (int j = 1; j <= l; ++j) {
        PointedMap mj = slot_map(fmap, gmap, a, b, j);
        Subset s = 0;
        for (int i = 1; i <= mj.n; ++i)
          if (mj(i) != 0) s |= 1u << (i - 1);
        slot_masks[j - 1] = s;
        int lvl = pb.ftw.slot_level[d_idx][b(j) - 1];
        domain_objs[j - 1] = fam.level[lvl].algebras[ytuple[b(j) - 1]].obj[s];
        group_dest[j - 1] = rank[j - 1];
      }
    }
    MorId regroup = permcat::reorder_symmetry(c, domain_objs, group_dest);
    std::vector<MorId> per_slot(fmap.m);
    for (int i = 1; i <= fmap.m; ++i) {
      std::vector<Subset> sources;
      for (int j = 1; j <= l; ++j)
        if (b(j) == i) sources.push_back(slot_masks[j - 1]);
      int lvl = pb.ftw.slot_level[d_idx][i - 1];
      per_slot[i - 1] = factop::derived_struct(fam.level[lvl].algebras[ytuple[i - 1]],
                                               fam.level[lvl].operad, sources);
    }
    MorId assemble = permcat::iterated_tensor_mor(c, per_slot);
    MorId sigma = k.compose(assemble, regroup);
    mm[m] = k.compose(sigma, kh);
  }

  out.functor = relcat::make_rel_functor(pb.groth.total, fam.ambient->base, std::move(om),
                                         std::move(mm));
  out.strict_sm = permcat::check_strict_sm_functor(*pb.perm, *fam.ambient, out.functor);
  out.strict_sm.check = "permconstr/counit-strict-sm";

  // triangle: level-1 inclusion followed by the counit equals evaluation
  out.triangle.check = "permconstr/counit-triangle";
  {
    TruncatedSegalFunctor f = fact_functor(fam, false, 0);
    relcat::RelFunctor incl = level1_inclusion(f, pb);
    relcat::RelFunctor comp = relcat::compose(out.functor, incl);
    const factop::FactCategory& l1 = fam.level[1];
    std::vector<ObjId> eo(l1.algebras.size());
    std::vector<MorId> em(l1.mor_data.size());
    for (size_t x = 0; x < l1.algebras.size(); ++x) eo[x] = l1.algebras[x].obj[1];
    for (size_t h = 0; h < l1.mor_data.size(); ++h) em[h] = l1.mor_data[h].comp[1];
    relcat::RelFunctor eval =
        relcat::make_rel_functor(l1.cat, fam.ambient->base, std::move(eo), std::move(em));
    if (!relcat::same_functor(comp, eval))
      out.triangle.fail("inclusion-then-counit differs from evaluation at the singleton");
  }
  return out;
}

// ---------------------------------------------------------------------------

Report check_oplax(const OplaxTransformation& a) {
  Report rep;
  rep.check = "permconstr/oplax";
  const int bound = std::min(a.from.bound, a.to.bound);
  rep.bounds = "max_n=" + std::to_string(bound);
  for (const auto& [u, fill] : a.filler) {
    relcat::RelFunctor lhs = relcat::compose(a.component[u.m], a.from.act(u));
    relcat::RelFunctor rhs = relcat::compose(a.to.act(u), a.component[u.n]);
    if (!fincat::same_functor(fill.source_functor, lhs.f) ||
        !fincat::same_functor(fill.target_functor, rhs.f)) {
      rep.fail("filler at " + finstar::to_text(u) + " has wrong endpoints");
      continue;
    }
    Report nat = fincat::check_nat_trans(fill);
    if (!nat.pass) {
      rep.fail("filler at " + finstar::to_text(u) + " is not natural");
      for (auto& d : nat.details) rep.note(d);
    }
    for (size_t x = 0; x < fill.component.size(); ++x)
      if (!a.to.value[u.m]->is_weq(fill.component[x]))
        rep.fail("filler at " + finstar::to_text(u) + " has a non-weq component");
  }
  // pasting across composites
  for (const auto& [u1, f1] : a.filler)
    for (const auto& [u2, f2] : a.filler) {
      if (u2.n != u1.m) continue;
      PointedMap u21 = finstar::compose(u2, u1);
      auto it = a.filler.find(u21);
      if (it == a.filler.end()) {
        rep.fail("missing filler at " + finstar::to_text(u21));
        continue;
      }
      const fincat::FinCategory& tk = *a.to.value[u2.m]->base;
      for (size_t x = 0; x < it->second.component.size(); ++x) {
        MorId left = f2.component[a.from.act(u1).f.object_map[x]];
        MorId right = a.to.act(u2).f.morphism_map[f1.component[x]];
        if (it->second.component[x] != tk.compose(right, left))
          rep.fail("pasting fails at " + finstar::to_text(u1) + " then " +
                   finstar::to_text(u2));
      }
    }
  return rep;
}

EtaResult eta(const TruncatedSegalFunctor& f, const PermBuild& pb) {
  EtaResult out;
  out.bound = std::min(f.bound, pb.bound);
  out.report.check = "permconstr/eta";
  out.report.bounds = "max_n=" + std::to_string(out.bound);
  const int arity = std::min(out.bound + 1, pb.bound);

  // the structure morphism of an image algebra at a canonical arrow: permute
  // the flattened domain, fold the slots, identity in the fiber
  auto eta_value = [&](int n, ObjId x, Subset s) -> std::pair<PointedMap, ObjId> {
    PointedMap rho = finstar::rho(n, s);
    return {finstar::fold(finstar::subset_size(s)), f.act(rho).f.object_map[x]};
  };

  std::vector<std::vector<FactAlgebra>> seeds(out.bound + 1);
  std::vector<factop::FactOperad> ops;
  for (int n = 0; n <= out.bound; ++n) ops.push_back(factop::build_fact_operad(n, arity));
  for (int n = 0; n <= out.bound; ++n) {
    const fincat::FinCategory& fn = *f.value[n]->base;
    for (ObjId x = 0; x < fn.objects(); ++x) {
      FactAlgebra alg;
      alg.ambient = pb.perm;
      alg.n = n;
      alg.obj.resize(1u << n);
      for (Subset s = 0; s < (1u << n); ++s) {
        auto [mapv, fib] = eta_value(n, x, s);
        alg.obj[s] = pb.obj_of(mapv, {fib});
      }
      alg.struct_map.resize(ops[n].arrows.size());
      for (size_t ai = 0; ai < ops[n].arrows.size(); ++ai) {
        const factop::MultiArrow& m = ops[n].arrows[ai];
        // wedge object and its fiber tuple
        PointedMap w = finstar::identity_map(0);
        std::vector<ObjId> wt;
        for (Subset s : m.sources) {
          auto [mapv, fib] = eta_value(n, x, s);
          w = finstar::wedge(w, mapv);
          wt.push_back(fib);
        }
        int wobj = pb.ftw.tw.object_id(w);
        // permutation matching ascending order of the target with the
        // concatenated order of the sources
        std::vector<int> target_elems = subset_elements(m.target);
        std::vector<int> concat;
        for (Subset s : m.sources)
          for (int e : subset_elements(s)) concat.push_back(e);
        PointedMap sigma;
        sigma.n = sigma.m = static_cast<int>(target_elems.size());
        sigma.img.resize(sigma.n);
        for (int r = 0; r < sigma.n; ++r) {
          int e = target_elems[r];
          int p = static_cast<int>(std::find(concat.begin(), concat.end(), e) - concat.begin());
          sigma.img[r] = p + 1;
        }
        PointedMap bmap = finstar::fold(m.arity());
        auto [smapv, sfib] = eta_value(n, x, m.target);
        int dobj = pb.ftw.tw.object_id(smapv);
        int widx = pb.ftw.tw.mor_id(sigma, bmap, dobj, wobj);
        if (widx < 0) {
          out.report.fail("structure square missing at level " + std::to_string(n));
          continue;
        }
        int wfib = wt.empty() ? 0 : pb.ftw.fiber[wobj].obj_id(wt);
        if (pb.ftw.action[widx].f.object_map[sfib] != wfib) {
          out.report.fail("fiber part of a structure map is not the identity at level " +
                          std::to_string(n));
          continue;
        }
        int h = pb.ftw.fiber[wobj].cat->base->identity(wfib);
        alg.struct_map[ai] = pb.groth.total_mor(widx, sfib, h);
      }
      seeds[n].push_back(std::move(alg));
    }
  }
  if (!out.report.pass) return out;

  out.target_family =
      factop::build_family_from_seeds(pb.perm, out.bound, arity, std::move(seeds));
  out.target = fact_functor(out.target_family, false, 0);

  // validate every image algebra and build the components
  out.eta.from = f;
  out.eta.from.bound = out.bound;
  out.eta.to = out.target;
  for (int n = 0; n <= out.bound; ++n) {
    const fincat::FinCategory& fn = *f.value[n]->base;
    const factop::FactCategory& tgt = out.target_family.level[n];
    std::vector<ObjId> om(fn.objects());
    std::vector<MorId> mm(fn.morphisms());
    for (ObjId x = 0; x < fn.objects(); ++x) {
      FactAlgebra alg;
      alg.ambient = pb.perm;
      alg.n = n;
      alg.obj.resize(1u << n);
      for (Subset s = 0; s < (1u << n); ++s) {
        auto [mapv, fib] = eta_value(n, x, s);
        alg.obj[s] = pb.obj_of(mapv, {fib});
      }
      // locate the seeded algebra by its object table
      int id = -1;
      for (size_t i = 0; i < tgt.algebras.size() && id < 0; ++i)
        if (tgt.algebras[i].obj == alg.obj) id = static_cast<int>(i);
      om[x] = id;
      Report val = factop::validate_fact_algebra(tgt.algebras[id], tgt.operad);
      if (!val.pass) {
        out.report.fail("image algebra fails the laws at level " + std::to_string(n));
        for (auto& d : val.details) out.report.note(d);
      }
      if (!factop::is_fact_object(tgt.algebras[id], tgt.operad))
        out.report.fail("image algebra is not made of weqs at level " + std::to_string(n));
    }
    for (MorId p = 0; p < fn.morphisms(); ++p) {
      FactMorphism h;
      h.comp.resize(1u << n);
      for (Subset s = 0; s < (1u << n); ++s) {
        PointedMap rho = finstar::rho(n, s);
        MorId img = f.act(rho).f.morphism_map[p];
        auto [mapv, fibcod] = eta_value(n, fn.cod(p), s);
        int tw1 = pb.ftw.tw.object_id(mapv);
        int ididx = pb.groth.index->identity(tw1);
        h.comp[s] = pb.groth.total_mor(ididx, fibcod, img);
      }
      mm[p] = tgt.morphism_id(om[fn.dom(p)], om[fn.cod(p)], h);
      if (mm[p] < 0) out.report.fail("component morphism missing at level " + std::to_string(n));
    }
    out.eta.component.push_back(
        relcat::make_rel_functor(f.value[n], tgt.cat, std::move(om), std::move(mm)));
  }
  if (!out.report.pass) return out;

  // oplax fillers: the induced active restriction on the first leg, identity
  // in the fibers
  for (int n = 0; n <= out.bound; ++n)
    for (int m = 0; m <= out.bound; ++m)
      for (const auto& u : finstar::all_maps(n, m)) {
        const fincat::FinCategory& fn = *f.value[n]->base;
        fincat::NatTransformation fill;
        fill.source_functor =
            relcat::compose(out.eta.component[m], f.act(u)).f;
        fill.target_functor =
            relcat::compose(out.target.act(u), out.eta.component[n]).f;
        fill.component.resize(fn.objects());
        const factop::FactCategory& tgt = out.target_family.level[m];
        for (ObjId x = 0; x < fn.objects(); ++x) {
          FactMorphism h;
          h.comp.resize(1u << m);
          for (Subset s = 0; s < (1u << m); ++s) {
            Subset pre = 0;
            for (int i = 1; i <= n; ++i)
              if (u(i) != 0 && (s & (1u << (u(i) - 1)))) pre |= 1u << (i - 1);
            PointedMap restr = finstar::active_restriction(u, s);
            auto [dmapv, dfib] = eta_value(m, f.act(u).f.object_map[x], s);
            auto [cmapv, cfib] = eta_value(n, x, pre);
            int dobj = pb.ftw.tw.object_id(dmapv);
            int cobj = pb.ftw.tw.object_id(cmapv);
            int widx = pb.ftw.tw.mor_id(restr, finstar::identity_map(1), cobj, dobj);
            if (widx < 0) {
              out.report.fail("filler square missing at " + finstar::to_text(u));
              continue;
            }
            if (pb.ftw.action[widx].f.object_map[cfib] != dfib) {
              out.report.fail("filler fiber part is not the identity at " +
                              finstar::to_text(u));
              continue;
            }
            int hh = pb.ftw.fiber[dobj].cat->base->identity(dfib);
            h.comp[s] = pb.groth.total_mor(widx, cfib, hh);
          }
          int dom_alg = out.eta.component[m].f.object_map[f.act(u).f.object_map[x]];
          int cod_alg = out.target.act(u).f.object_map[out.eta.component[n].f.object_map[x]];
          fill.component[x] = tgt.morphism_id(dom_alg, cod_alg, h);
          if (fill.component[x] < 0)
            out.report.fail("filler component missing at " + finstar::to_text(u));
        }
        out.eta.filler.emplace(u, std::move(fill));
      }
  if (!out.report.pass) return out;

  Report ox = check_oplax(out.eta);
  if (!ox.pass) {
    out.report.fail("oplax coherence failed");
    for (auto& d : ox.details) out.report.note(d);
  }
  return out;
}

PathOfOplax path_of_oplax(const OplaxTransformation& a) {
  PathOfOplax out;
  out.report.check = "permconstr/path-of-oplax";
  const int bound = std::min(a.from.bound, a.to.bound);
  out.report.bounds = "max_n=" + std::to_string(bound);

  Report ox = check_oplax(a);
  if (!ox.pass) {
    out.report.fail("invalid oplax data");
    for (auto& d : ox.details) out.report.note(d);
    return out;
  }

  for (int n = 0; n <= bound; ++n) {
    out.pieces.push_back(relcat::path_construction(a.component[n]));
    out.to_source.push_back(out.pieces[n].proj_source);
    out.to_target.push_back(out.pieces[n].proj_target);
  }

  out.path.bound = bound;
  for (int n = 0; n <= bound; ++n) out.path.value.push_back(out.pieces[n].cat);
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (const auto& u : finstar::all_maps(n, m)) {
        const relcat::PathCategory& pn = out.pieces[n];
        const relcat::PathCategory& pm = out.pieces[m];
        const fincat::FinCategory& gk = *a.to.value[m]->base;
        const fincat::NatTransformation& fill = a.filler.at(u);
        std::vector<ObjId> om(pn.cat->base->objects());
        std::vector<MorId> mm(pn.cat->base->morphisms());
        for (size_t o = 0; o < pn.obj_data.size(); ++o) {
          auto [x, w] = pn.obj_data[o];
          ObjId fx = a.from.act(u).f.object_map[x];
          MorId neww = gk.compose(a.to.act(u).f.morphism_map[w], fill.component[x]);
          om[o] = pm.object_of(fx, neww);
        }
        for (size_t p = 0; p < pn.mor_data.size(); ++p) {
          auto [pa, pbm] = pn.mor_data[p];
          int dom = om[pn.cat->base->dom(static_cast<int>(p))];
          int cod = om[pn.cat->base->cod(static_cast<int>(p))];
          mm[p] = pm.mor_of(a.from.act(u).f.morphism_map[pa],
                            a.to.act(u).f.morphism_map[pbm], dom, cod);
          if (mm[p] < 0) out.report.fail("path action misses a square at " + finstar::to_text(u));
        }
        out.path.action.emplace(
            u, relcat::make_rel_functor(pn.cat, pm.cat, std::move(om), std::move(mm)));
      }
  if (!out.report.pass) return out;

  Report fr = check_segal_functor(out.path);
  if (!fr.pass) {
    out.report.fail("path assignment is not strictly functorial");
    for (auto& d : fr.details) out.report.note(d);
  }
  // strict naturality of both projections
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m)
      for (const auto& u : finstar::all_maps(n, m)) {
        relcat::RelFunctor lhs_s =
            relcat::compose(out.to_source[m], out.path.act(u));
        relcat::RelFunctor rhs_s = relcat::compose(a.from.act(u), out.to_source[n]);
        if (!relcat::same_functor(lhs_s, rhs_s))
          out.report.fail("source projection is not natural at " + finstar::to_text(u));
        relcat::RelFunctor lhs_t =
            relcat::compose(out.to_target[m], out.path.act(u));
        relcat::RelFunctor rhs_t = relcat::compose(a.to.act(u), out.to_target[n]);
        if (!relcat::same_functor(lhs_t, rhs_t))
          out.report.fail("target projection is not natural at " + finstar::to_text(u));
      }
  return out;
}

Report alpha_beta_check(const TruncatedSegalFunctor& f, const PermBuild& pb) {
  Report rep;
  rep.check = "permconstr/alpha-beta";
  EtaResult e = eta(f, pb);
  rep.bounds = "max_n=" + std::to_string(e.bound);
  if (!e.report.pass) {
    rep.fail("unit family construction failed");
    for (auto& d : e.report.details) rep.note(d);
    return rep;
  }
  PathOfOplax p = path_of_oplax(e.eta);
  if (!p.report.pass) {
    rep.fail("path construction failed");
    for (auto& d : p.report.details) rep.note(d);
    return rep;
  }
  relcat::RelFunctor sigma1;
  for (int n = 0; n <= e.bound; ++n) {
    relcat::PathAdjunction adj = relcat::path_adjunction_witness(e.eta.component[n]);
    if (!adj.report.pass) {
      rep.fail("retraction witness fails at level " + std::to_string(n));
      for (auto& d : adj.report.details) rep.note(d);
    }
    if (n == 1) sigma1 = adj.section;
  }
  // the section equation at level 1
  relcat::RelFunctor beta_sigma = relcat::compose(p.to_target[1], sigma1);
  if (!relcat::same_functor(beta_sigma, e.eta.component[1]))
    rep.fail("section equation fails at level 1");
  return rep;
}

}  // namespace factperm::permconstr
