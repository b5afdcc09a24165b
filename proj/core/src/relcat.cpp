#include "factperm/relcat.hpp"

#include <algorithm>

namespace factperm::relcat {

std::vector<MorId> RelCategory::weq_ids() const {
  std::vector<MorId> out;
  for (MorId f = 0; f < static_cast<MorId>(weq.size()); ++f)
    if (weq[f]) out.push_back(f);
  return out;
}

RelCategory validate_relcat(CatPtr base, const std::vector<MorId>& weq_in, bool complete) {
  RelCategory c;
  c.base = base;
  c.weq.assign(base->morphisms(), 0);
  for (MorId f : weq_in) c.weq[f] = 1;

  Report rep;
  rep.check = "relcat/validate";
  auto isos = fincat::isomorphisms(*base);
  if (complete) {
    for (MorId f : isos) c.weq[f] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (MorId g = 0; g < base->morphisms(); ++g)
        for (MorId f = 0; f < base->morphisms(); ++f)
          if (base->composable(g, f) && c.weq[g] && c.weq[f] && !c.weq[base->compose(g, f)]) {
            c.weq[base->compose(g, f)] = 1;
            grew = true;
          }
    }
    return c;
  }
  for (MorId f : isos)
    if (!c.weq[f]) rep.fail("missing isomorphism " + base->mname(f));
  for (MorId g = 0; g < base->morphisms(); ++g)
    for (MorId f = 0; f < base->morphisms(); ++f)
      if (base->composable(g, f) && c.weq[g] && c.weq[f] && !c.weq[base->compose(g, f)])
        rep.fail("composition escape on (" + base->mname(g) + ", " + base->mname(f) + ")");
  if (!rep.pass) throw ValidationError("invalid weak equivalence marking", rep);
  return c;
}

RelPtr make_relcat(CatPtr base, const std::vector<MorId>& weq, bool complete) {
  return std::make_shared<const RelCategory>(validate_relcat(base, weq, complete));
}

RelPtr minimal_relcat(CatPtr base) {
  return make_relcat(base, fincat::isomorphisms(*base));
}

RelPtr maximal_relcat(CatPtr base) {
  std::vector<MorId> all(base->morphisms());
  for (MorId f = 0; f < base->morphisms(); ++f) all[f] = f;
  return make_relcat(base, all);
}

Report check_relcat(const RelCategory& c) {
  Report rep;
  rep.check = "relcat/laws";
  for (MorId f : fincat::isomorphisms(*c.base))
    if (!c.is_weq(f)) rep.fail("isomorphism " + c.base->mname(f) + " not marked");
  for (MorId g = 0; g < c.base->morphisms(); ++g)
    for (MorId f = 0; f < c.base->morphisms(); ++f)
      if (c.base->composable(g, f) && c.is_weq(g) && c.is_weq(f) &&
          !c.is_weq(c.base->compose(g, f)))
        rep.fail("marking not closed under composition at (" + c.base->mname(g) + ", " +
                 c.base->mname(f) + ")");
  return rep;
}

RelFunctor make_rel_functor(RelPtr source, RelPtr target, std::vector<ObjId> object_map,
                            std::vector<MorId> morphism_map) {
  RelFunctor rf;
  rf.source = source;
  rf.target = target;
  rf.f.source = source->base;
  rf.f.target = target->base;
  rf.f.object_map = std::move(object_map);
  rf.f.morphism_map = std::move(morphism_map);
  return rf;
}

RelFunctor identity_rel_functor(RelPtr c) {
  RelFunctor rf;
  rf.source = c;
  rf.target = c;
  rf.f = fincat::identity_functor(c->base);
  return rf;
}

RelFunctor compose(const RelFunctor& g, const RelFunctor& f) {
  RelFunctor rf;
  rf.source = f.source;
  rf.target = g.target;
  rf.f = fincat::compose(g.f, f.f);
  return rf;
}

bool same_functor(const RelFunctor& a, const RelFunctor& b) {
  return fincat::same_functor(a.f, b.f);
}

Report check_rel_functor(const RelFunctor& rf) {
  Report rep = fincat::check_functor(rf.f);
  rep.check = "relcat/rel-functor";
  for (MorId f = 0; f < rf.source->base->morphisms(); ++f)
    if (rf.source->is_weq(f) && !rf.target->is_weq(rf.f.morphism_map[f]))
      rep.fail("weak equivalence " + rf.source->base->mname(f) + " not preserved");
  return rep;
}

RelProduct rel_product(std::vector<RelPtr> factors) {
  RelProduct p;
  p.factors = factors;
  std::vector<CatPtr> bases;
  for (const auto& f : factors) bases.push_back(f->base);
  p.prod = fincat::product(std::move(bases));
  std::vector<MorId> weq;
  for (MorId m = 0; m < p.prod.cat->morphisms(); ++m) {
    auto tup = p.prod.mor_tuple(m);
    bool all = true;
    for (size_t i = 0; i < factors.size(); ++i)
      if (!factors[i]->is_weq(tup[i])) all = false;
    if (all) weq.push_back(m);
  }
  p.cat = make_relcat(p.prod.cat, weq);
  for (size_t i = 0; i < factors.size(); ++i) {
    RelFunctor pr;
    pr.source = p.cat;
    pr.target = factors[i];
    pr.f = p.prod.projections[i];
    p.projections.push_back(std::move(pr));
  }
  return p;
}

RelFunctor rel_pairing(const RelProduct& p, const std::vector<RelFunctor>& legs) {
  RelFunctor rf;
  rf.source = legs.empty() ? p.cat : legs[0].source;
  rf.target = p.cat;
  std::vector<Functor> fs;
  for (const auto& l : legs) fs.push_back(l.f);
  rf.f = fincat::pairing(p.prod, fs);
  if (legs.empty()) rf.f.source = rf.source->base;
  return rf;
}

RelFunctor constant_rel_functor(RelPtr src, RelPtr dst, ObjId obj) {
  std::vector<ObjId> om(src->base->objects(), obj);
  std::vector<MorId> mm(src->base->morphisms(), dst->base->identity(obj));
  return make_rel_functor(src, dst, std::move(om), std::move(mm));
}

ZigZag empty_zigzag(const RelFunctor& f) { return {f, f, {}}; }

ZigZag one_step_zigzag(const RelFunctor& from, const RelFunctor& to, bool forward,
                       NatTransformation t) {
  ZigZag z;
  z.from = from;
  z.to = to;
  z.steps.push_back({forward, std::move(t)});
  return z;
}

Report check_zigzag(const ZigZag& z) {
  Report rep;
  rep.check = "relcat/zigzag";
  const RelCategory& target = *z.from.target;
  const Functor* cur = &z.from.f;
  for (size_t i = 0; i < z.steps.size(); ++i) {
    const ZigZagStep& st = z.steps[i];
    const Functor& a = st.forward ? st.t.source_functor : st.t.target_functor;
    const Functor& b = st.forward ? st.t.target_functor : st.t.source_functor;
    if (!fincat::same_functor(*cur, a))
      rep.fail("step " + std::to_string(i) + " does not start at the previous functor");
    Report tr = fincat::check_nat_trans(st.t);
    if (!tr.pass) {
      rep.fail("step " + std::to_string(i) + " is not natural");
      for (auto& d : tr.details) rep.note(d);
    }
    for (size_t x = 0; x < st.t.component.size(); ++x)
      if (!target.is_weq(st.t.component[x]))
        rep.fail("step " + std::to_string(i) + " component at object " + std::to_string(x) +
                 " is not a weak equivalence");
    cur = &b;
  }
  if (!fincat::same_functor(*cur, z.to.f)) rep.fail("zig-zag does not end at its target");
  return rep;
}

ZigZag concat(const ZigZag& a, const ZigZag& b) {
  ZigZag z;
  z.from = a.from;
  z.to = b.to;
  z.steps = a.steps;
  z.steps.insert(z.steps.end(), b.steps.begin(), b.steps.end());
  return z;
}

static NatTransformation whisker_left_t(const Functor& h, const NatTransformation& t) {
  NatTransformation out;
  out.source_functor = fincat::compose(h, t.source_functor);
  out.target_functor = fincat::compose(h, t.target_functor);
  out.component.resize(t.component.size());
  for (size_t x = 0; x < t.component.size(); ++x)
    out.component[x] = h.morphism_map[t.component[x]];
  return out;
}

static NatTransformation whisker_right_t(const NatTransformation& t, const Functor& k) {
  NatTransformation out;
  out.source_functor = fincat::compose(t.source_functor, k);
  out.target_functor = fincat::compose(t.target_functor, k);
  out.component.resize(k.object_map.size());
  for (size_t x = 0; x < k.object_map.size(); ++x)
    out.component[x] = t.component[k.object_map[x]];
  return out;
}

ZigZag whisker_left(const RelFunctor& h, const ZigZag& z) {
  ZigZag out;
  out.from = compose(h, z.from);
  out.to = compose(h, z.to);
  for (const auto& st : z.steps) out.steps.push_back({st.forward, whisker_left_t(h.f, st.t)});
  return out;
}

ZigZag whisker_right(const ZigZag& z, const RelFunctor& k) {
  ZigZag out;
  out.from = compose(z.from, k);
  out.to = compose(z.to, k);
  for (const auto& st : z.steps) out.steps.push_back({st.forward, whisker_right_t(st.t, k.f)});
  return out;
}

Report verify_homotopy_equivalence(const HomotopyEquivWitness& w) {
  Report rep;
  rep.check = "relcat/homotopy-equivalence";
  Report rf = check_rel_functor(w.f);
  Report rg = check_rel_functor(w.g);
  if (!rf.pass) {
    rep.fail("forward functor is not relative");
    for (auto& d : rf.details) rep.note(d);
  }
  if (!rg.pass) {
    rep.fail("backward functor is not relative");
    for (auto& d : rg.details) rep.note(d);
  }
  RelFunctor gf = compose(w.g, w.f);
  RelFunctor fg = compose(w.f, w.g);
  if (!same_functor(w.zz_gf.from, gf)) rep.fail("zig-zag gf does not start at g.f");
  if (!same_functor(w.zz_gf.to, identity_rel_functor(w.f.source)))
    rep.fail("zig-zag gf does not end at the identity");
  if (!same_functor(w.zz_fg.from, fg)) rep.fail("zig-zag fg does not start at f.g");
  if (!same_functor(w.zz_fg.to, identity_rel_functor(w.f.target)))
    rep.fail("zig-zag fg does not end at the identity");
  Report z1 = check_zigzag(w.zz_gf);
  Report z2 = check_zigzag(w.zz_fg);
  if (!z1.pass) {
    rep.fail("zig-zag gf invalid");
    for (auto& d : z1.details) rep.note(d);
  }
  if (!z2.pass) {
    rep.fail("zig-zag fg invalid");
    for (auto& d : z2.details) rep.note(d);
  }
  return rep;
}

HomotopyEquivWitness compose_witnesses(const HomotopyEquivWitness& w1,
                                       const HomotopyEquivWitness& w2) {
  HomotopyEquivWitness w;
  w.f = compose(w2.f, w1.f);
  w.g = compose(w1.g, w2.g);
  // g1 g2 f2 f1 => g1 f1 => id
  w.zz_gf = concat(whisker_right(whisker_left(w1.g, w2.zz_gf), w1.f), w1.zz_gf);
  // f2 f1 g1 g2 => f2 g2 => id
  w.zz_fg = concat(whisker_right(whisker_left(w2.f, w1.zz_fg), w2.g), w2.zz_fg);
  return w;
}

int PathCategory::object_of(ObjId x, MorId u) const {
  auto it = obj_index.find({x, u});
  return it == obj_index.end() ? -1 : it->second;
}

int PathCategory::mor_of(MorId a, MorId b, int dom, int cod) const {
  auto it = mor_index.find({a, b, dom, cod});
  return it == mor_index.end() ? -1 : it->second;
}

PathCategory path_construction(const RelFunctor& rf) {
  PathCategory p;
  const RelCategory& x = *rf.source;
  const RelCategory& y = *rf.target;
  const fincat::FinCategory& xb = *x.base;
  const fincat::FinCategory& yb = *y.base;

  for (ObjId ox = 0; ox < xb.objects(); ++ox)
    for (MorId u = 0; u < yb.morphisms(); ++u)
      if (y.is_weq(u) && yb.dom(u) == rf.f.object_map[ox]) p.obj_data.emplace_back(ox, u);
  for (size_t i = 0; i < p.obj_data.size(); ++i) p.obj_index[p.obj_data[i]] = static_cast<int>(i);

  fincat::RawCategory raw;
  for (auto [ox, u] : p.obj_data) raw.objects.push_back("(" + xb.oname(ox) + "," + yb.mname(u) + ")");

  // morphisms bucketed by endpoints
  std::vector<std::vector<MorId>> xhom(static_cast<size_t>(xb.objects()) * xb.objects());
  std::vector<std::vector<MorId>> yhom(static_cast<size_t>(yb.objects()) * yb.objects());
  for (MorId a = 0; a < xb.morphisms(); ++a)
    xhom[static_cast<size_t>(xb.dom(a)) * xb.objects() + xb.cod(a)].push_back(a);
  for (MorId b = 0; b < yb.morphisms(); ++b)
    yhom[static_cast<size_t>(yb.dom(b)) * yb.objects() + yb.cod(b)].push_back(b);

  struct PMor { int dom, cod; MorId a, b; };
  std::vector<PMor> mors;
  for (size_t i = 0; i < p.obj_data.size(); ++i)
    for (size_t j = 0; j < p.obj_data.size(); ++j) {
      auto [x0, u0] = p.obj_data[i];
      auto [x1, u1] = p.obj_data[j];
      for (MorId a : xhom[static_cast<size_t>(x0) * xb.objects() + x1])
        for (MorId b : yhom[static_cast<size_t>(yb.cod(u0)) * yb.objects() + yb.cod(u1)])
          if (yb.compose(u1, rf.f.morphism_map[a]) == yb.compose(b, u0)) {
            mors.push_back({static_cast<int>(i), static_cast<int>(j), a, b});
            p.mor_data.emplace_back(a, b);
            raw.morphisms.push_back({"(" + xb.mname(a) + "," + yb.mname(b) + ")",
                                     static_cast<int>(i), static_cast<int>(j)});
          }
    }

  for (size_t i = 0; i < mors.size(); ++i)
    p.mor_index[{mors[i].a, mors[i].b, mors[i].dom, mors[i].cod}] = static_cast<int>(i);

  raw.identities.resize(p.obj_data.size());
  for (size_t i = 0; i < p.obj_data.size(); ++i) {
    auto [ox, u] = p.obj_data[i];
    raw.identities[i] = p.mor_of(xb.identity(ox), yb.identity(yb.cod(u)),
                                 static_cast<int>(i), static_cast<int>(i));
  }
  std::vector<std::vector<int>> by_dom(p.obj_data.size());
  for (size_t m = 0; m < mors.size(); ++m) by_dom[mors[m].dom].push_back(static_cast<int>(m));
  for (size_t j = 0; j < mors.size(); ++j)
    for (int i : by_dom[mors[j].cod]) {  // i after j
      MorId a = xb.compose(mors[i].a, mors[j].a);
      MorId b = yb.compose(mors[i].b, mors[j].b);
      raw.compose.push_back({i, static_cast<MorId>(j),
                             p.mor_of(a, b, mors[j].dom, mors[i].cod)});
    }
  CatPtr cat = fincat::make_cat(raw);

  std::vector<MorId> weq;
  for (size_t m = 0; m < mors.size(); ++m)
    if (x.is_weq(mors[m].a) && y.is_weq(mors[m].b)) weq.push_back(static_cast<MorId>(m));
  p.cat = make_relcat(cat, weq);

  std::vector<ObjId> po, qo;
  std::vector<MorId> pm, qm;
  for (auto [ox, u] : p.obj_data) {
    po.push_back(ox);
    qo.push_back(yb.cod(u));
  }
  for (const auto& m : mors) {
    pm.push_back(m.a);
    qm.push_back(m.b);
  }
  p.proj_source = make_rel_functor(p.cat, rf.source, po, pm);
  p.proj_target = make_rel_functor(p.cat, rf.target, qo, qm);
  return p;
}

PathAdjunction path_adjunction_witness(const RelFunctor& rf) {
  PathAdjunction adj;
  adj.path = path_construction(rf);
  const PathCategory& p = adj.path;
  const fincat::FinCategory& xb = *rf.source->base;
  const fincat::FinCategory& yb = *rf.target->base;

  Report rep;
  rep.check = "relcat/path-adjunction";

  // section x |-> (x, id_{f(x)}), a |-> (a, f(a))
  std::vector<ObjId> so(xb.objects());
  std::vector<MorId> sm(xb.morphisms());
  for (ObjId x = 0; x < xb.objects(); ++x)
    so[x] = p.object_of(x, yb.identity(rf.f.object_map[x]));
  for (MorId a = 0; a < xb.morphisms(); ++a)
    sm[a] = p.mor_of(a, rf.f.morphism_map[a], so[xb.dom(a)], so[xb.cod(a)]);
  adj.section = make_rel_functor(rf.source, p.cat, so, sm);

  Report secr = check_rel_functor(adj.section);
  if (!secr.pass) {
    rep.fail("section is not a relative functor");
    for (auto& d : secr.details) rep.note(d);
  }

  const RelFunctor& r = p.proj_source;
  RelFunctor rl = compose(r, adj.section);
  if (!same_functor(rl, identity_rel_functor(rf.source)))
    rep.fail("retraction r . l is not the identity");

  // counit l . r => id with component (id_x, u) at (x, u)
  NatTransformation counit;
  counit.source_functor = compose(adj.section, r).f;
  counit.target_functor = fincat::identity_functor(p.cat->base);
  counit.component.resize(p.obj_data.size());
  for (size_t i = 0; i < p.obj_data.size(); ++i) {
    auto [x, u] = p.obj_data[i];
    int dom = p.object_of(x, yb.identity(rf.f.object_map[x]));
    counit.component[i] = p.mor_of(xb.identity(x), u, dom, static_cast<int>(i));
    if (counit.component[i] < 0) rep.fail("counit component missing at object " + std::to_string(i));
  }
  Report cn = fincat::check_nat_trans(counit);
  if (!cn.pass) {
    rep.fail("counit is not natural");
    for (auto& d : cn.details) rep.note(d);
  }
  for (size_t i = 0; i < counit.component.size(); ++i)
    if (!p.cat->is_weq(counit.component[i]))
      rep.fail("counit component at object " + std::to_string(i) + " is not a weq");

  // triangle identities; the unit is an identity transformation, so both
  // reduce to component checks
  for (ObjId x = 0; x < xb.objects(); ++x) {
    int lx = so[x];
    if (counit.component[lx] != p.cat->base->identity(lx))
      rep.fail("triangle (counit at section) fails at " + xb.oname(x));
  }
  for (size_t i = 0; i < p.obj_data.size(); ++i)
    if (r.f.morphism_map[counit.component[i]] != xb.identity(p.obj_data[i].first))
      rep.fail("triangle (r of counit) fails at object " + std::to_string(i));

  adj.witness.f = r;
  adj.witness.g = adj.section;
  adj.witness.zz_gf = one_step_zigzag(compose(adj.section, r), identity_rel_functor(p.cat),
                                      true, counit);
  adj.witness.zz_fg = empty_zigzag(identity_rel_functor(rf.source));

  Report wr = verify_homotopy_equivalence(adj.witness);
  if (!wr.pass) {
    rep.fail("assembled witness failed verification");
    for (auto& d : wr.details) rep.note(d);
  }
  adj.report = rep;
  return adj;
}

}  // namespace factperm::relcat
