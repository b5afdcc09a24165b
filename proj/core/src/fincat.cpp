#include "factperm/fincat.hpp"

#include <algorithm>
#include <map>

#include "factperm/sset.hpp"

namespace factperm::fincat {

FinCategory validate_category(const RawCategory& raw) {
  Report rep;
  rep.check = "fincat/validate";
  const int nobj = static_cast<int>(raw.objects.size());
  const int nmor = static_cast<int>(raw.morphisms.size());

  FinCategory c;
  c.object_names = raw.objects;
  c.mor_dom.resize(nmor);
  c.mor_cod.resize(nmor);
  c.morphism_names.resize(nmor);
  for (int f = 0; f < nmor; ++f) {
    const auto& m = raw.morphisms[f];
    if (m.dom < 0 || m.dom >= nobj || m.cod < 0 || m.cod >= nobj)
      rep.fail("morphism " + m.name + " has dangling dom/cod");
    c.mor_dom[f] = m.dom;
    c.mor_cod[f] = m.cod;
    c.morphism_names[f] = m.name;
  }
  if (!rep.pass) throw ValidationError("dangling dom/cod", rep);

  if (static_cast<int>(raw.identities.size()) != nobj)
    rep.fail("need exactly one identity per object");
  else {
    c.obj_identity = raw.identities;
    for (ObjId x = 0; x < nobj; ++x) {
      MorId i = raw.identities[x];
      if (i < 0 || i >= nmor)
        rep.fail("identity of object " + raw.objects[x] + " is not a morphism");
      else if (c.mor_dom[i] != x || c.mor_cod[i] != x)
        rep.fail("identity of object " + raw.objects[x] + " is not an endomorphism");
    }
  }
  if (!rep.pass) throw ValidationError("missing identity", rep);

  c.compose_table.assign(static_cast<size_t>(nmor) * nmor, -1);
  for (const auto& row : raw.compose) {
    auto [g, f, gf] = row;
    if (g < 0 || g >= nmor || f < 0 || f >= nmor || gf < 0 || gf >= nmor) {
      rep.fail("compose row with out-of-range ids");
      continue;
    }
    if (c.mor_cod[f] != c.mor_dom[g]) {
      rep.fail("compose row (" + c.morphism_names[g] + ", " + c.morphism_names[f] +
               ") is not a composable pair");
      continue;
    }
    MorId& slot = c.compose_table[static_cast<size_t>(g) * nmor + f];
    if (slot != -1 && slot != gf)
      rep.fail("conflicting compose rows for (" + c.morphism_names[g] + ", " +
               c.morphism_names[f] + ")");
    slot = gf;
  }
  if (!rep.pass) throw ValidationError("malformed compose table", rep);

  // totality on composable pairs, with the right dom/cod
  for (MorId g = 0; g < nmor; ++g)
    for (MorId f = 0; f < nmor; ++f) {
      if (!c.composable(g, f)) continue;
      MorId gf = c.compose(g, f);
      if (gf == -1) {
        rep.fail("missing composite (" + c.morphism_names[g] + " after " +
                 c.morphism_names[f] + ")");
        continue;
      }
      if (c.mor_dom[gf] != c.mor_dom[f] || c.mor_cod[gf] != c.mor_cod[g])
        rep.fail("composite (" + c.morphism_names[g] + " after " + c.morphism_names[f] +
                 ") has wrong dom/cod");
    }
  if (!rep.pass) throw ValidationError("incomplete compose table", rep);

  for (MorId f = 0; f < nmor; ++f) {
    if (c.compose(f, c.identity(c.dom(f))) != f)
      rep.fail("unit law fails on the right of " + c.morphism_names[f]);
    if (c.compose(c.identity(c.cod(f)), f) != f)
      rep.fail("unit law fails on the left of " + c.morphism_names[f]);
  }
  if (!rep.pass) throw ValidationError("unit law violated", rep);

  {
    std::vector<std::vector<MorId>> out_of(nobj);
    for (MorId f = 0; f < nmor; ++f) out_of[c.mor_dom[f]].push_back(f);
    for (MorId f = 0; f < nmor; ++f)
      for (MorId g : out_of[c.mor_cod[f]]) {
        MorId gf = c.compose(g, f);
        for (MorId h : out_of[c.mor_cod[g]]) {
          if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
            rep.fail("associativity fails on (" + c.morphism_names[h] + ", " +
                     c.morphism_names[g] + ", " + c.morphism_names[f] + ")");
            if (rep.details.size() > 20) throw ValidationError("non-associative table", rep);
          }
        }
      }
  }
  if (!rep.pass) throw ValidationError("non-associative table", rep);

  return c;
}

CatPtr make_cat(const RawCategory& raw) {
  return std::make_shared<const FinCategory>(validate_category(raw));
}

std::vector<MorId> isomorphisms(const FinCategory& c) {
  std::vector<MorId> out;
  for (MorId f = 0; f < c.morphisms(); ++f) {
    for (MorId g = 0; g < c.morphisms(); ++g) {
      if (c.dom(g) != c.cod(f) || c.cod(g) != c.dom(f)) continue;
      if (c.compose(g, f) == c.identity(c.dom(f)) &&
          c.compose(f, g) == c.identity(c.cod(f))) {
        out.push_back(f);
        break;
      }
    }
  }
  return out;
}

Functor identity_functor(CatPtr c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.object_map.resize(c->objects());
  f.morphism_map.resize(c->morphisms());
  for (ObjId x = 0; x < c->objects(); ++x) f.object_map[x] = x;
  for (MorId m = 0; m < c->morphisms(); ++m) f.morphism_map[m] = m;
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  Functor h;
  h.source = f.source;
  h.target = g.target;
  h.object_map.resize(f.object_map.size());
  h.morphism_map.resize(f.morphism_map.size());
  for (size_t x = 0; x < f.object_map.size(); ++x)
    h.object_map[x] = g.object_map[f.object_map[x]];
  for (size_t m = 0; m < f.morphism_map.size(); ++m)
    h.morphism_map[m] = g.morphism_map[f.morphism_map[m]];
  return h;
}

bool same_functor(const Functor& a, const Functor& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

Report check_functor(const Functor& f) {
  Report rep;
  rep.check = "fincat/functor";
  const FinCategory& s = *f.source;
  const FinCategory& t = *f.target;
  if (static_cast<int>(f.object_map.size()) != s.objects() ||
      static_cast<int>(f.morphism_map.size()) != s.morphisms()) {
    rep.fail("object/morphism map sizes do not match the source");
    return rep;
  }
  for (MorId m = 0; m < s.morphisms(); ++m) {
    MorId fm = f.morphism_map[m];
    if (t.dom(fm) != f.object_map[s.dom(m)] || t.cod(fm) != f.object_map[s.cod(m)])
      rep.fail("dom/cod broken at " + s.mname(m));
  }
  for (ObjId x = 0; x < s.objects(); ++x)
    if (f.morphism_map[s.identity(x)] != t.identity(f.object_map[x]))
      rep.fail("identity not preserved at " + s.oname(x));
  for (MorId g = 0; g < s.morphisms(); ++g)
    for (MorId m = 0; m < s.morphisms(); ++m) {
      if (!s.composable(g, m)) continue;
      if (f.morphism_map[s.compose(g, m)] !=
          t.compose(f.morphism_map[g], f.morphism_map[m]))
        rep.fail("composition broken on (" + s.mname(g) + ", " + s.mname(m) + ")");
    }
  return rep;
}

NatTransformation identity_transformation(const Functor& f) {
  NatTransformation t;
  t.source_functor = f;
  t.target_functor = f;
  t.component.resize(f.object_map.size());
  for (size_t x = 0; x < f.object_map.size(); ++x)
    t.component[x] = f.target->identity(f.object_map[x]);
  return t;
}

Report check_nat_trans(const NatTransformation& t) {
  Report rep;
  rep.check = "fincat/nat-trans";
  const Functor& f = t.source_functor;
  const Functor& g = t.target_functor;
  const FinCategory& s = *f.source;
  const FinCategory& d = *f.target;
  if (!(f.source == g.source && f.target == g.target) &&
      !(f.source->objects() == g.source->objects() &&
        f.source->morphisms() == g.source->morphisms())) {
    rep.fail("functors do not share endpoints");
    return rep;
  }
  if (static_cast<int>(t.component.size()) != s.objects()) {
    rep.fail("one component per source object required");
    return rep;
  }
  for (ObjId x = 0; x < s.objects(); ++x) {
    MorId cx = t.component[x];
    if (d.dom(cx) != f.object_map[x] || d.cod(cx) != g.object_map[x])
      rep.fail("component at " + s.oname(x) + " has wrong dom/cod");
  }
  if (!rep.pass) return rep;
  for (MorId m = 0; m < s.morphisms(); ++m) {
    ObjId x = s.dom(m), y = s.cod(m);
    if (d.compose(t.component[y], f.morphism_map[m]) !=
        d.compose(g.morphism_map[m], t.component[x]))
      rep.fail("naturality square fails at " + s.mname(m));
  }
  return rep;
}

OppositeCategory opposite(CatPtr c) {
  RawCategory raw;
  raw.objects = c->object_names;
  for (MorId f = 0; f < c->morphisms(); ++f)
    raw.morphisms.push_back({c->mname(f), c->cod(f), c->dom(f)});
  raw.identities = c->obj_identity;
  for (MorId g = 0; g < c->morphisms(); ++g)
    for (MorId f = 0; f < c->morphisms(); ++f)
      if (c->composable(g, f)) raw.compose.push_back({f, g, c->compose(g, f)});
  return {make_cat(raw)};
}

ObjId ProductCategory::obj_id(const std::vector<ObjId>& component) const {
  ObjId id = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    id = id * factors[i]->objects() + component[i];
  return id;
}

MorId ProductCategory::mor_id(const std::vector<MorId>& component) const {
  MorId id = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    id = id * factors[i]->morphisms() + component[i];
  return id;
}

std::vector<ObjId> ProductCategory::obj_tuple(ObjId x) const {
  std::vector<ObjId> out(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    out[i] = x % factors[i]->objects();
    x /= factors[i]->objects();
  }
  return out;
}

std::vector<MorId> ProductCategory::mor_tuple(MorId f) const {
  std::vector<MorId> out(factors.size());
  for (size_t i = factors.size(); i-- > 0;) {
    out[i] = f % factors[i]->morphisms();
    f /= factors[i]->morphisms();
  }
  return out;
}

ProductCategory product(std::vector<CatPtr> factors) {
  ProductCategory p;
  p.factors = std::move(factors);

  long long nobj = 1, nmor = 1;
  for (const auto& c : p.factors) {
    nobj *= c->objects();
    nmor *= c->morphisms();
  }

  RawCategory raw;
  auto tuple_name = [](const std::vector<std::string>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
  };
  raw.objects.resize(nobj);
  raw.morphisms.resize(nmor);
  raw.identities.resize(nobj);

  std::vector<ObjId> ot(p.factors.size());
  for (ObjId x = 0; x < nobj; ++x) {
    ObjId rem = x;
    std::vector<std::string> names;
    for (size_t i = p.factors.size(); i-- > 0;) {
      ot[i] = rem % p.factors[i]->objects();
      rem /= p.factors[i]->objects();
    }
    for (size_t i = 0; i < p.factors.size(); ++i) names.push_back(p.factors[i]->oname(ot[i]));
    raw.objects[x] = tuple_name(names);
    std::vector<MorId> ids(p.factors.size());
    for (size_t i = 0; i < p.factors.size(); ++i) ids[i] = p.factors[i]->identity(ot[i]);
    MorId idm = 0;
    for (size_t i = 0; i < p.factors.size(); ++i)
      idm = idm * p.factors[i]->morphisms() + ids[i];
    raw.identities[x] = idm;
  }

  std::vector<MorId> mt(p.factors.size());
  for (MorId f = 0; f < nmor; ++f) {
    MorId rem = f;
    for (size_t i = p.factors.size(); i-- > 0;) {
      mt[i] = rem % p.factors[i]->morphisms();
      rem /= p.factors[i]->morphisms();
    }
    std::vector<std::string> names;
    ObjId d = 0, c = 0;
    for (size_t i = 0; i < p.factors.size(); ++i) {
      names.push_back(p.factors[i]->mname(mt[i]));
      d = d * p.factors[i]->objects() + p.factors[i]->dom(mt[i]);
      c = c * p.factors[i]->objects() + p.factors[i]->cod(mt[i]);
    }
    raw.morphisms[f] = {tuple_name(names), d, c};
  }

  // composites, componentwise
  std::vector<MorId> gt(p.factors.size());
  for (MorId g = 0; g < nmor; ++g) {
    MorId rem = g;
    for (size_t i = p.factors.size(); i-- > 0;) {
      gt[i] = rem % p.factors[i]->morphisms();
      rem /= p.factors[i]->morphisms();
    }
    for (MorId f = 0; f < nmor; ++f) {
      MorId rf = f;
      bool ok = true;
      for (size_t i = p.factors.size(); i-- > 0;) {
        mt[i] = rf % p.factors[i]->morphisms();
        rf /= p.factors[i]->morphisms();
      }
      MorId comp = 0;
      for (size_t i = 0; i < p.factors.size() && ok; ++i) {
        if (!p.factors[i]->composable(gt[i], mt[i])) ok = false;
      }
      if (!ok) continue;
      for (size_t i = 0; i < p.factors.size(); ++i)
        comp = comp * p.factors[i]->morphisms() + p.factors[i]->compose(gt[i], mt[i]);
      raw.compose.push_back({g, f, comp});
    }
  }
  if (p.factors.empty()) {
    raw.objects = {"*"};
    raw.morphisms = {{"id", 0, 0}};
    raw.identities = {0};
    raw.compose = {{0, 0, 0}};
  }
  p.cat = make_cat(raw);

  for (size_t i = 0; i < p.factors.size(); ++i) {
    Functor pr;
    pr.source = p.cat;
    pr.target = p.factors[i];
    pr.object_map.resize(p.cat->objects());
    pr.morphism_map.resize(p.cat->morphisms());
    for (ObjId x = 0; x < p.cat->objects(); ++x) pr.object_map[x] = p.obj_tuple(x)[i];
    for (MorId f = 0; f < p.cat->morphisms(); ++f) pr.morphism_map[f] = p.mor_tuple(f)[i];
    p.projections.push_back(std::move(pr));
  }
  return p;
}

Functor pairing(const ProductCategory& p, const std::vector<Functor>& legs) {
  Functor f;
  f.source = legs.empty() ? p.cat : legs[0].source;
  f.target = p.cat;
  int nobj = legs.empty() ? p.cat->objects() : legs[0].source->objects();
  int nmor = legs.empty() ? p.cat->morphisms() : legs[0].source->morphisms();
  f.object_map.resize(nobj);
  f.morphism_map.resize(nmor);
  std::vector<ObjId> ot(legs.size());
  std::vector<MorId> mt(legs.size());
  for (ObjId x = 0; x < nobj; ++x) {
    for (size_t i = 0; i < legs.size(); ++i) ot[i] = legs[i].object_map[x];
    f.object_map[x] = p.obj_id(ot);
  }
  for (MorId m = 0; m < nmor; ++m) {
    for (size_t i = 0; i < legs.size(); ++i) mt[i] = legs[i].morphism_map[m];
    f.morphism_map[m] = p.mor_id(mt);
  }
  return f;
}

SliceCategory slice(CatPtr c, ObjId over) {
  SliceCategory s;
  s.base = c;
  s.over = over;
  for (MorId u = 0; u < c->morphisms(); ++u)
    if (c->cod(u) == over) s.obj_mor.push_back(u);

  RawCategory raw;
  for (MorId u : s.obj_mor) raw.objects.push_back(c->mname(u));
  struct SMor { int dom, cod; MorId w; };
  std::vector<SMor> mors;
  for (size_t a = 0; a < s.obj_mor.size(); ++a)
    for (size_t b = 0; b < s.obj_mor.size(); ++b) {
      MorId u = s.obj_mor[a], v = s.obj_mor[b];
      for (MorId w = 0; w < c->morphisms(); ++w) {
        if (c->dom(w) != c->dom(u) || c->cod(w) != c->dom(v)) continue;
        if (c->compose(v, w) == u) {
          mors.push_back({static_cast<int>(a), static_cast<int>(b), w});
          s.mor_mediator.push_back(w);
          raw.morphisms.push_back({c->mname(w) + ":" + c->mname(u) + ">" + c->mname(v),
                                   static_cast<int>(a), static_cast<int>(b)});
        }
      }
    }
  raw.identities.resize(s.obj_mor.size());
  for (size_t a = 0; a < s.obj_mor.size(); ++a) {
    for (size_t i = 0; i < mors.size(); ++i)
      if (mors[i].dom == static_cast<int>(a) && mors[i].cod == static_cast<int>(a) &&
          mors[i].w == c->identity(c->dom(s.obj_mor[a])))
        raw.identities[a] = static_cast<MorId>(i);
  }
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (mors[j].cod != mors[i].dom) continue;  // i after j
      MorId w = c->compose(mors[i].w, mors[j].w);
      for (size_t k = 0; k < mors.size(); ++k)
        if (mors[k].dom == mors[j].dom && mors[k].cod == mors[i].cod && mors[k].w == w)
          raw.compose.push_back({static_cast<MorId>(i), static_cast<MorId>(j),
                                 static_cast<MorId>(k)});
    }
  s.cat = make_cat(raw);

  s.forget.source = s.cat;
  s.forget.target = c;
  for (MorId u : s.obj_mor) s.forget.object_map.push_back(c->dom(u));
  for (const auto& m : mors) s.forget.morphism_map.push_back(m.w);
  return s;
}

TwistedArrowCategory twisted_arrow(CatPtr c) {
  TwistedArrowCategory tw;
  tw.base = c;
  for (MorId f = 0; f < c->morphisms(); ++f) tw.obj_mor.push_back(f);

  RawCategory raw;
  for (MorId f : tw.obj_mor) raw.objects.push_back(c->mname(f));

  // a morphism (f : X -> Y) -> (g : Z -> W) is (u : X -> Z, v : W -> Y)
  // with v . g . u = f
  struct TMor { int dom, cod; MorId u, v; };
  std::vector<TMor> mors;
  for (MorId f = 0; f < c->morphisms(); ++f)
    for (MorId g = 0; g < c->morphisms(); ++g)
      for (MorId u = 0; u < c->morphisms(); ++u) {
        if (c->dom(u) != c->dom(f) || c->cod(u) != c->dom(g)) continue;
        for (MorId v = 0; v < c->morphisms(); ++v) {
          if (c->dom(v) != c->cod(g) || c->cod(v) != c->cod(f)) continue;
          if (c->compose(v, c->compose(g, u)) == f) {
            mors.push_back({f, g, u, v});
            tw.mor_pair.emplace_back(u, v);
            raw.morphisms.push_back({"(" + c->mname(u) + ";" + c->mname(v) + ")", f, g});
          }
        }
      }

  raw.identities.resize(tw.obj_mor.size());
  for (size_t i = 0; i < mors.size(); ++i)
    if (mors[i].dom == mors[i].cod && mors[i].u == c->identity(c->dom(mors[i].dom)) &&
        mors[i].v == c->identity(c->cod(mors[i].dom)))
      raw.identities[mors[i].dom] = static_cast<MorId>(i);

  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (mors[j].cod != mors[i].dom) continue;  // i after j
      MorId u = c->compose(mors[i].u, mors[j].u);
      MorId v = c->compose(mors[j].v, mors[i].v);
      for (size_t k = 0; k < mors.size(); ++k)
        if (mors[k].dom == mors[j].dom && mors[k].cod == mors[i].cod && mors[k].u == u &&
            mors[k].v == v)
          raw.compose.push_back({static_cast<MorId>(i), static_cast<MorId>(j),
                                 static_cast<MorId>(k)});
    }
  tw.cat = make_cat(raw);

  tw.dom_proj.source = tw.cat;
  tw.dom_proj.target = c;
  for (MorId f : tw.obj_mor) tw.dom_proj.object_map.push_back(c->dom(f));
  for (const auto& m : mors) tw.dom_proj.morphism_map.push_back(m.u);
  return tw;
}

int TwistedArrowCategory::object_of(MorId base_mor) const { return base_mor; }

int TwistedArrowCategory::mor_of(MorId u, MorId v) const {
  for (size_t i = 0; i < mor_pair.size(); ++i)
    if (mor_pair[i].first == u && mor_pair[i].second == v) return static_cast<int>(i);
  return -1;
}

Functor twisted_functor(const Functor& f, const TwistedArrowCategory& tw_src,
                        const TwistedArrowCategory& tw_dst) {
  Functor out;
  out.source = tw_src.cat;
  out.target = tw_dst.cat;
  for (MorId m : tw_src.obj_mor) out.object_map.push_back(f.morphism_map[m]);
  for (size_t i = 0; i < tw_src.mor_pair.size(); ++i) {
    auto [u, v] = tw_src.mor_pair[i];
    ObjId d = out.object_map[tw_src.cat->dom(static_cast<MorId>(i))];
    ObjId c = out.object_map[tw_src.cat->cod(static_cast<MorId>(i))];
    int img = -1;
    for (MorId j = 0; j < tw_dst.cat->morphisms(); ++j)
      if (tw_dst.cat->dom(j) == d && tw_dst.cat->cod(j) == c &&
          tw_dst.mor_pair[j].first == f.morphism_map[u] &&
          tw_dst.mor_pair[j].second == f.morphism_map[v]) {
        img = j;
        break;
      }
    out.morphism_map.push_back(img);
  }
  return out;
}

FiberProductCategory fiber_product(const Functor& f, const Functor& g) {
  FiberProductCategory p;
  const FinCategory& a = *f.source;
  const FinCategory& b = *g.source;

  for (ObjId x = 0; x < a.objects(); ++x)
    for (ObjId y = 0; y < b.objects(); ++y)
      if (f.object_map[x] == g.object_map[y]) p.obj_pair.emplace_back(x, y);

  auto obj_index = [&](ObjId x, ObjId y) {
    for (size_t i = 0; i < p.obj_pair.size(); ++i)
      if (p.obj_pair[i] == std::make_pair(x, y)) return static_cast<int>(i);
    return -1;
  };

  RawCategory raw;
  for (auto [x, y] : p.obj_pair)
    raw.objects.push_back("(" + a.oname(x) + "," + b.oname(y) + ")");

  for (MorId m = 0; m < a.morphisms(); ++m)
    for (MorId n = 0; n < b.morphisms(); ++n) {
      if (f.morphism_map[m] != g.morphism_map[n]) continue;
      int d = obj_index(a.dom(m), b.dom(n));
      int c = obj_index(a.cod(m), b.cod(n));
      if (d < 0 || c < 0) continue;
      p.mor_pair.emplace_back(m, n);
      raw.morphisms.push_back({"(" + a.mname(m) + "," + b.mname(n) + ")", d, c});
    }

  auto mor_index = [&](MorId m, MorId n) {
    for (size_t i = 0; i < p.mor_pair.size(); ++i)
      if (p.mor_pair[i] == std::make_pair(m, n)) return static_cast<int>(i);
    return -1;
  };

  raw.identities.resize(p.obj_pair.size());
  for (size_t i = 0; i < p.obj_pair.size(); ++i)
    raw.identities[i] = mor_index(a.identity(p.obj_pair[i].first), b.identity(p.obj_pair[i].second));

  for (size_t i = 0; i < p.mor_pair.size(); ++i)
    for (size_t j = 0; j < p.mor_pair.size(); ++j) {
      auto [m2, n2] = p.mor_pair[i];
      auto [m1, n1] = p.mor_pair[j];
      if (!a.composable(m2, m1) || !b.composable(n2, n1)) continue;
      if (raw.morphisms[i].dom != raw.morphisms[j].cod) continue;
      int k = mor_index(a.compose(m2, m1), b.compose(n2, n1));
      if (k >= 0)
        raw.compose.push_back({static_cast<MorId>(i), static_cast<MorId>(j), k});
    }
  p.cat = make_cat(raw);

  p.proj1.source = p.cat;
  p.proj1.target = f.source;
  p.proj2.source = p.cat;
  p.proj2.target = g.source;
  for (auto [x, y] : p.obj_pair) {
    p.proj1.object_map.push_back(x);
    p.proj2.object_map.push_back(y);
  }
  for (auto [m, n] : p.mor_pair) {
    p.proj1.morphism_map.push_back(m);
    p.proj2.morphism_map.push_back(n);
  }
  return p;
}

CommaProbe comma_probe(CatPtr c, ObjId obj) {
  TwistedArrowCategory tw = twisted_arrow(c);
  SliceCategory sl = slice(c, obj);
  FiberProductCategory comma = fiber_product(tw.dom_proj, sl.forget);
  sset::TruncatedSSet nerve = sset::nerve_truncate(*comma.cat, 2);
  auto [pi0, h1_rank, h1_torsion] = sset::homology(nerve);
  return {pi0, h1_rank, h1_torsion};
}

}  // namespace factperm::fincat
