#include "factperm/factop.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace factperm::factop {

using finstar::subset_elements;
using finstar::subset_name;
using finstar::subset_size;

bool sources_disjoint_cover(const std::vector<Subset>& sources, Subset target) {
  Subset seen = 0;
  for (Subset s : sources) {
    if (seen & s) return false;
    seen |= s;
  }
  return seen == target;
}

bool is_canonical(const MultiArrow& m) {
  bool past_empty = false;
  int last_min = -1;
  for (Subset s : m.sources) {
    if (s == 0) {
      if (past_empty) return false;
      continue;
    }
    past_empty = true;
    int mn = subset_elements(s)[0];
    if (mn <= last_min) return false;
    last_min = mn;
  }
  return sources_disjoint_cover(m.sources, m.target);
}

std::pair<MultiArrow, std::vector<int>> canonicalize(const std::vector<Subset>& sources) {
  const int k = static_cast<int>(sources.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    bool ea = sources[a] == 0, eb = sources[b] == 0;
    if (ea != eb) return ea;  // empties first
    if (ea && eb) return false;
    return subset_elements(sources[a])[0] < subset_elements(sources[b])[0];
  });
  MultiArrow m;
  m.sources.resize(k);
  std::vector<int> pos(k);
  Subset target = 0;
  for (int p = 0; p < k; ++p) {
    m.sources[p] = sources[idx[p]];
    pos[idx[p]] = p;
    target |= sources[idx[p]];
  }
  m.target = target;
  return {m, pos};
}

static void partitions_rec(const std::vector<int>& elems, size_t at,
                           std::vector<std::vector<int>>& blocks,
                           std::vector<std::vector<Subset>>& out) {
  if (at == elems.size()) {
    std::vector<Subset> masks;
    for (const auto& b : blocks) {
      Subset m = 0;
      for (int e : b) m |= 1u << (e - 1);
      masks.push_back(m);
    }
    out.push_back(std::move(masks));
    return;
  }
  for (size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].push_back(elems[at]);
    partitions_rec(elems, at + 1, blocks, out);
    blocks[b].pop_back();
  }
  blocks.push_back({elems[at]});
  partitions_rec(elems, at + 1, blocks, out);
  blocks.pop_back();
}

FactOperad build_fact_operad(int n, int max_arity) {
  FactOperad op;
  op.n = n;
  op.max_arity = max_arity;
  for (Subset t = 0; t < (1u << n); ++t) {
    std::vector<std::vector<Subset>> parts;
    if (t == 0) {
      parts.push_back({});
    } else {
      std::vector<std::vector<int>> blocks;
      partitions_rec(subset_elements(t), 0, blocks, parts);
    }
    std::vector<MultiArrow> arrows;
    for (auto& p : parts) {
      // blocks are created in ascending order of their least element
      int base = static_cast<int>(p.size());
      for (int e = 0; base + e <= max_arity; ++e) {
        MultiArrow m;
        m.sources.assign(e, 0);
        m.sources.insert(m.sources.end(), p.begin(), p.end());
        m.target = t;
        arrows.push_back(std::move(m));
      }
    }
    std::sort(arrows.begin(), arrows.end(), [](const MultiArrow& a, const MultiArrow& b) {
      if (a.sources.size() != b.sources.size()) return a.sources.size() < b.sources.size();
      return a.sources < b.sources;
    });
    for (auto& m : arrows) op.arrows.push_back(std::move(m));
  }
  return op;
}

int FactOperad::arrow_id(const MultiArrow& m) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i] == m) return static_cast<int>(i);
  return -1;
}

Report check_operad_closure(const FactOperad& op) {
  Report rep;
  rep.check = "factop/operad-closure";
  rep.bounds = "arity<=" + std::to_string(op.max_arity);
  std::map<Subset, std::vector<int>> by_target;
  for (size_t i = 0; i < op.arrows.size(); ++i)
    by_target[op.arrows[i].target].push_back(static_cast<int>(i));

  for (const auto& m : op.arrows) {
    // substitute arrows into every slot, pruning on total arity
    std::vector<int> choice(m.sources.size(), 0);
    auto options = [&](int slot) -> const std::vector<int>& { return by_target[m.sources[slot]]; };
    if (m.sources.empty()) continue;
    while (true) {
      int total = 0;
      for (size_t s = 0; s < choice.size(); ++s)
        total += op.arrows[options(static_cast<int>(s))[choice[s]]].arity();
      if (total <= op.max_arity) {
        std::vector<Subset> concat;
        for (size_t s = 0; s < choice.size(); ++s) {
          const auto& inner = op.arrows[options(static_cast<int>(s))[choice[s]]];
          concat.insert(concat.end(), inner.sources.begin(), inner.sources.end());
        }
        auto [canon, pos] = canonicalize(concat);
        if (op.arrow_id(canon) < 0)
          rep.fail("composite escapes the enumeration at target " + subset_name(m.target));
      }
      int s = static_cast<int>(choice.size()) - 1;
      while (s >= 0 && choice[s] + 1 >= static_cast<int>(options(s).size())) choice[s--] = 0;
      if (s < 0) break;
      ++choice[s];
    }
  }
  // uniqueness: each canonical shape occurs exactly once
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    if (!is_canonical(op.arrows[i])) rep.fail("non-canonical arrow in enumeration");
    for (size_t j = i + 1; j < op.arrows.size(); ++j)
      if (op.arrows[i] == op.arrows[j]) rep.fail("duplicate arrow in enumeration");
  }
  return rep;
}

bool same_algebra(const FactAlgebra& a, const FactAlgebra& b) {
  return a.n == b.n && a.obj == b.obj && a.struct_map == b.struct_map;
}

MorId derived_struct(const FactAlgebra& a, const FactOperad& op,
                     const std::vector<Subset>& sources) {
  auto [canon, pos] = canonicalize(sources);
  int id = op.arrow_id(canon);
  if (id < 0) return -1;
  MorId base = a.struct_map[id];
  if (base < 0) return -1;
  std::vector<ObjId> domain(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) domain[i] = a.obj[sources[i]];
  MorId sym = permcat::reorder_symmetry(*a.ambient, domain, pos);
  if (sym < 0) return -1;
  return a.ambient->cat().compose(base, sym);
}

Report validate_fact_algebra(const FactAlgebra& a, const FactOperad& op) {
  Report rep;
  rep.check = "factop/algebra-laws";
  rep.bounds = "arity<=" + std::to_string(op.max_arity);
  const permcat::PermRelCategory& c = *a.ambient;
  const fincat::FinCategory& k = c.cat();

  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    MorId s = a.struct_map[i];
    if (s < 0) {
      rep.fail("structure map missing at target " + subset_name(m.target));
      continue;
    }
    std::vector<ObjId> domain(m.sources.size());
    for (size_t j = 0; j < m.sources.size(); ++j) domain[j] = a.obj[m.sources[j]];
    ObjId dom = permcat::iterated_tensor(c, domain);
    if (k.dom(s) != dom || k.cod(s) != a.obj[m.target])
      rep.fail("structure map at target " + subset_name(m.target) + " has wrong dom/cod");
  }
  if (!rep.pass) return rep;

  // unit: unary arrows are identities
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    if (m.arity() == 1 && m.sources[0] == m.target &&
        a.struct_map[i] != k.identity(a.obj[m.target]))
      rep.fail("unary structure map at " + subset_name(m.target) + " is not the identity");
  }

  // associativity via substitution
  std::map<Subset, std::vector<int>> by_target;
  for (size_t i = 0; i < op.arrows.size(); ++i)
    by_target[op.arrows[i].target].push_back(static_cast<int>(i));
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    if (m.sources.empty()) continue;
    std::vector<int> choice(m.sources.size(), 0);
    while (true) {
      int total = 0;
      for (size_t s = 0; s < choice.size(); ++s)
        total += op.arrows[by_target[m.sources[s]][choice[s]]].arity();
      if (total <= op.max_arity) {
        std::vector<Subset> concat;
        std::vector<MorId> inner;
        for (size_t s = 0; s < choice.size(); ++s) {
          const auto& ia = op.arrows[by_target[m.sources[s]][choice[s]]];
          concat.insert(concat.end(), ia.sources.begin(), ia.sources.end());
          inner.push_back(a.struct_map[by_target[m.sources[s]][choice[s]]]);
        }
        MorId lhs = derived_struct(a, op, concat);
        MorId tens = permcat::iterated_tensor_mor(c, inner);
        MorId rhs = (tens < 0) ? -1 : k.compose(a.struct_map[i], tens);
        if (lhs != rhs || lhs < 0)
          rep.fail("associativity fails under target " + subset_name(m.target));
      }
      int s = static_cast<int>(choice.size()) - 1;
      while (s >= 0 && choice[s] + 1 >= static_cast<int>(by_target[m.sources[s]].size()))
        choice[s--] = 0;
      if (s < 0) break;
      ++choice[s];
    }
  }

  // equivariance: permuted source tuples agree through the canonical symmetry
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    const int kk = m.arity();
    if (kk < 2) continue;
    std::vector<std::vector<int>> perms;
    if (kk <= 3) {
      std::vector<int> p(kk);
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    } else {
      for (int t = 0; t + 1 < kk; ++t) {
        std::vector<int> p(kk);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[t], p[t + 1]);
        perms.push_back(p);
      }
    }
    for (const auto& p : perms) {
      std::vector<Subset> permuted(kk);
      std::vector<ObjId> domain(kk);
      for (int j = 0; j < kk; ++j) {
        permuted[j] = m.sources[p[j]];
        domain[j] = a.obj[permuted[j]];
      }
      MorId lhs = derived_struct(a, op, permuted);
      MorId sym = permcat::reorder_symmetry(c, domain, p);
      MorId rhs = (sym < 0) ? -1 : k.compose(a.struct_map[i], sym);
      if (lhs != rhs || lhs < 0)
        rep.fail("equivariance fails at target " + subset_name(m.target));
    }
  }
  return rep;
}

bool is_fact_object(const FactAlgebra& a, const FactOperad& op) {
  for (size_t i = 0; i < op.arrows.size(); ++i)
    if (a.struct_map[i] < 0 || !a.ambient->base->is_weq(a.struct_map[i])) return false;
  return true;
}

FactAlgebra psi(PermPtr c, const FactOperad& op, std::span<const ObjId> xs) {
  FactAlgebra a;
  a.ambient = c;
  a.n = op.n;
  a.obj.resize(1u << op.n);
  for (Subset s = 0; s < (1u << op.n); ++s) {
    std::vector<ObjId> objs;
    for (int e : subset_elements(s)) objs.push_back(xs[e - 1]);
    a.obj[s] = permcat::iterated_tensor(*c, objs);
  }
  a.struct_map.resize(op.arrows.size());
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    std::vector<int> concat_elems;
    for (Subset s : m.sources)
      for (int e : subset_elements(s)) concat_elems.push_back(e);
    std::vector<int> target_elems = subset_elements(m.target);
    std::vector<ObjId> domain;
    std::vector<int> dest;
    for (int e : concat_elems) {
      domain.push_back(xs[e - 1]);
      dest.push_back(static_cast<int>(
          std::lower_bound(target_elems.begin(), target_elems.end(), e) - target_elems.begin()));
    }
    a.struct_map[i] = permcat::reorder_symmetry(*c, domain, dest);
  }
  return a;
}

std::vector<ObjId> phi(const FactAlgebra& a) {
  std::vector<ObjId> out(a.n);
  for (int i = 0; i < a.n; ++i) out[i] = a.obj[1u << i];
  return out;
}

Report check_fact_morphism(const FactAlgebra& a, const FactAlgebra& b, const FactMorphism& h,
                           const FactOperad& op) {
  Report rep;
  rep.check = "factop/algebra-morphism";
  const fincat::FinCategory& k = a.ambient->cat();
  for (Subset s = 0; s < (1u << a.n); ++s) {
    MorId c = h.comp[s];
    if (c < 0 || k.dom(c) != a.obj[s] || k.cod(c) != b.obj[s]) {
      rep.fail("component at {" + subset_name(s) + "} has wrong dom/cod");
      return rep;
    }
  }
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    const MultiArrow& m = op.arrows[i];
    std::vector<MorId> legs(m.sources.size());
    for (size_t j = 0; j < m.sources.size(); ++j) legs[j] = h.comp[m.sources[j]];
    MorId tens = permcat::iterated_tensor_mor(*a.ambient, legs);
    if (tens < 0 || k.compose(h.comp[m.target], a.struct_map[i]) !=
                        k.compose(b.struct_map[i], tens))
      rep.fail("structure square fails at target {" + subset_name(m.target) + "}");
  }
  return rep;
}

FactMorphism counit_components(const FactAlgebra& a, const FactOperad& op) {
  FactMorphism h;
  h.comp.resize(1u << a.n);
  for (Subset s = 0; s < (1u << a.n); ++s) {
    std::vector<Subset> singles;
    for (int e : subset_elements(s)) singles.push_back(1u << (e - 1));
    h.comp[s] = derived_struct(a, op, singles);
  }
  return h;
}

static Subset preimage(const PointedMap& f, Subset s) {
  Subset out = 0;
  for (int i = 1; i <= f.n; ++i)
    if (f(i) != 0 && (s & (1u << (f(i) - 1)))) out |= 1u << (i - 1);
  return out;
}

FactAlgebra pull_algebra(const PointedMap& f, const FactAlgebra& a, const FactOperad& op_src,
                         const FactOperad& op_dst) {
  FactAlgebra out;
  out.ambient = a.ambient;
  out.n = f.m;
  out.obj.resize(1u << f.m);
  for (Subset s = 0; s < (1u << f.m); ++s) out.obj[s] = a.obj[preimage(f, s)];
  out.struct_map.resize(op_dst.arrows.size());
  for (size_t i = 0; i < op_dst.arrows.size(); ++i) {
    std::vector<Subset> pre;
    for (Subset s : op_dst.arrows[i].sources) pre.push_back(preimage(f, s));
    out.struct_map[i] = derived_struct(a, op_src, pre);
  }
  return out;
}

FactMorphism pull_morphism(const PointedMap& f, const FactMorphism& h) {
  FactMorphism out;
  out.comp.resize(1u << f.m);
  for (Subset s = 0; s < (1u << f.m); ++s) out.comp[s] = h.comp[preimage(f, s)];
  return out;
}

// ---------------------------------------------------------------------------

int FactCategory::algebra_id(const FactAlgebra& a) const {
  for (size_t i = 0; i < algebras.size(); ++i)
    if (same_algebra(algebras[i], a)) return static_cast<int>(i);
  return -1;
}

int FactCategory::morphism_id(int dom, int cod, const FactMorphism& h) const {
  const fincat::FinCategory& k = *cat->base;
  for (MorId m = 0; m < k.morphisms(); ++m)
    if (k.dom(m) == dom && k.cod(m) == cod && mor_data[m].comp == h.comp) return m;
  return -1;
}

static FactCategory materialize_level(PermPtr c, const FactOperad& op,
                                      std::vector<FactAlgebra> algebras) {
  FactCategory fc;
  fc.ambient = c;
  fc.n = op.n;
  fc.operad = op;
  fc.algebras = std::move(algebras);
  const fincat::FinCategory& k = c->cat();

  fincat::RawCategory raw;
  for (size_t i = 0; i < fc.algebras.size(); ++i)
    raw.objects.push_back("A" + std::to_string(op.n) + "." + std::to_string(i));

  const Subset nmask = (1u << op.n);
  // arrows indexed by target mask; sources are submasks, so a family can be
  // grown mask by mask with early square checks
  std::vector<std::vector<int>> arrows_at(nmask);
  for (size_t i = 0; i < op.arrows.size(); ++i)
    arrows_at[op.arrows[i].target].push_back(static_cast<int>(i));

  for (size_t a = 0; a < fc.algebras.size(); ++a)
    for (size_t b = 0; b < fc.algebras.size(); ++b) {
      const FactAlgebra& A = fc.algebras[a];
      const FactAlgebra& B = fc.algebras[b];
      std::vector<std::vector<MorId>> slots(nmask);
      bool any = true;
      for (Subset s = 0; s < nmask && any; ++s) {
        for (MorId m = 0; m < k.morphisms(); ++m)
          if (k.dom(m) == A.obj[s] && k.cod(m) == B.obj[s]) slots[s].push_back(m);
        if (slots[s].empty()) any = false;
      }
      if (!any) continue;
      std::vector<MorId> comp(nmask, -1);
      auto square_ok = [&](Subset upto) {
        for (int ai : arrows_at[upto]) {
          const MultiArrow& m = op.arrows[ai];
          std::vector<MorId> legs(m.sources.size());
          for (size_t j = 0; j < m.sources.size(); ++j) legs[j] = comp[m.sources[j]];
          MorId tens = permcat::iterated_tensor_mor(*c, legs);
          if (tens < 0 ||
              k.compose(comp[upto], A.struct_map[ai]) != k.compose(B.struct_map[ai], tens))
            return false;
        }
        return true;
      };
      auto rec = [&](auto&& self, Subset s) -> void {
        if (s == nmask) {
          FactMorphism h;
          h.comp = comp;
          fc.mor_data.push_back(std::move(h));
          raw.morphisms.push_back({"h" + std::to_string(fc.mor_data.size() - 1),
                                   static_cast<int>(a), static_cast<int>(b)});
          return;
        }
        for (MorId m : slots[s]) {
          comp[s] = m;
          if (square_ok(s)) self(self, s + 1);
        }
        comp[s] = -1;
      };
      rec(rec, 0);
    }

  std::map<std::tuple<int, int, std::vector<MorId>>, int> index;
  for (size_t m = 0; m < fc.mor_data.size(); ++m)
    index[{raw.morphisms[m].dom, raw.morphisms[m].cod, fc.mor_data[m].comp}] =
        static_cast<int>(m);
  auto find_mor = [&](int dom, int cod, const std::vector<MorId>& comp) {
    auto it = index.find({dom, cod, comp});
    return it == index.end() ? -1 : it->second;
  };

  raw.identities.resize(fc.algebras.size());
  for (size_t a = 0; a < fc.algebras.size(); ++a) {
    std::vector<MorId> comp(nmask);
    for (Subset s = 0; s < nmask; ++s) comp[s] = k.identity(fc.algebras[a].obj[s]);
    raw.identities[a] = find_mor(static_cast<int>(a), static_cast<int>(a), comp);
  }
  std::vector<std::vector<int>> by_dom(fc.algebras.size());
  for (size_t m = 0; m < fc.mor_data.size(); ++m)
    by_dom[raw.morphisms[m].dom].push_back(static_cast<int>(m));
  for (size_t j = 0; j < fc.mor_data.size(); ++j)
    for (int i : by_dom[raw.morphisms[j].cod]) {  // i after j
      std::vector<MorId> comp(nmask);
      for (Subset s = 0; s < nmask; ++s)
        comp[s] = k.compose(fc.mor_data[i].comp[s], fc.mor_data[j].comp[s]);
      int target = find_mor(raw.morphisms[j].dom, raw.morphisms[i].cod, comp);
      raw.compose.push_back({i, static_cast<int>(j), target});
    }
  fincat::CatPtr cat = fincat::make_cat(raw);

  std::vector<MorId> weq;
  for (size_t m = 0; m < fc.mor_data.size(); ++m) {
    bool all = true;
    for (Subset s = 0; s < nmask; ++s)
      if (!c->base->is_weq(fc.mor_data[m].comp[s])) all = false;
    if (all) weq.push_back(static_cast<MorId>(m));
  }
  fc.cat = relcat::make_relcat(cat, weq);
  return fc;
}

FactFamily build_family_from_seeds(PermPtr c, int bound, int max_arity,
                                   std::vector<std::vector<FactAlgebra>> seeds) {
  FactFamily fam;
  fam.ambient = c;
  fam.bound = bound;
  fam.max_arity = max_arity;

  std::vector<FactOperad> ops;
  for (int n = 0; n <= bound; ++n) ops.push_back(build_fact_operad(n, max_arity));

  std::vector<std::vector<FactAlgebra>> pool(bound + 1);
  auto add = [&](int n, const FactAlgebra& a) {
    for (const auto& b : pool[n])
      if (same_algebra(b, a)) return false;
    pool[n].push_back(a);
    return true;
  };
  for (int n = 0; n <= bound; ++n)
    for (auto& a : seeds[n]) add(n, a);

  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 0; k <= bound; ++k)
      for (int l = 0; l <= bound; ++l)
        for (const auto& f : finstar::all_maps(k, l)) {
          size_t count = pool[k].size();
          for (size_t i = 0; i < count; ++i)
            if (add(l, pull_algebra(f, pool[k][i], ops[k], ops[l]))) grew = true;
        }
  }

  for (int n = 0; n <= bound; ++n)
    fam.level.push_back(materialize_level(c, ops[n], pool[n]));
  return fam;
}

FactFamily build_fact_family(PermPtr c, int bound, int max_arity) {
  if (max_arity < 0) max_arity = bound + 1;
  std::vector<std::vector<FactAlgebra>> seeds(bound + 1);
  const int nobj = c->cat().objects();
  for (int n = 0; n <= bound; ++n) {
    FactOperad op = build_fact_operad(n, max_arity);
    std::vector<ObjId> xs(n, 0);
    while (true) {
      seeds[n].push_back(psi(c, op, xs));
      int i = n - 1;
      while (i >= 0 && xs[i] + 1 >= nobj) xs[i--] = 0;
      if (i < 0) break;
      ++xs[i];
    }
  }
  return build_family_from_seeds(c, bound, max_arity, std::move(seeds));
}

relcat::RelFunctor pullback_rel_functor(const FactFamily& fam, const PointedMap& f) {
  const FactCategory& src = fam.level[f.n];
  const FactCategory& dst = fam.level[f.m];
  std::vector<ObjId> om(src.algebras.size());
  for (size_t a = 0; a < src.algebras.size(); ++a) {
    om[a] = dst.algebra_id(pull_algebra(f, src.algebras[a], src.operad, dst.operad));
    if (om[a] < 0) throw std::logic_error("pullback escapes the sampled algebras");
  }
  std::vector<MorId> mm(src.mor_data.size());
  for (size_t m = 0; m < src.mor_data.size(); ++m) {
    int dom = om[src.cat->base->dom(static_cast<int>(m))];
    int cod = om[src.cat->base->cod(static_cast<int>(m))];
    mm[m] = dst.morphism_id(dom, cod, pull_morphism(f, src.mor_data[m]));
    if (mm[m] < 0) throw std::logic_error("pulled morphism missing from the sampled level");
  }
  return relcat::make_rel_functor(src.cat, dst.cat, std::move(om), std::move(mm));
}

relcat::RelFunctor phi_functor(const FactFamily& fam, int n, const relcat::RelProduct& cn) {
  const FactCategory& fc = fam.level[n];
  std::vector<ObjId> om(fc.algebras.size());
  std::vector<MorId> mm(fc.mor_data.size());
  for (size_t a = 0; a < fc.algebras.size(); ++a) {
    std::vector<ObjId> tup = phi(fc.algebras[a]);
    om[a] = n == 0 ? 0 : cn.prod.obj_id(tup);
  }
  for (size_t m = 0; m < fc.mor_data.size(); ++m) {
    std::vector<MorId> tup(n);
    for (int i = 0; i < n; ++i) tup[i] = fc.mor_data[m].comp[1u << i];
    mm[m] = n == 0 ? 0 : cn.prod.mor_id(tup);
  }
  return relcat::make_rel_functor(fc.cat, cn.cat, std::move(om), std::move(mm));
}

relcat::RelFunctor psi_functor(const FactFamily& fam, int n, const relcat::RelProduct& cn) {
  const FactCategory& fc = fam.level[n];
  const int nobj = cn.cat->base->objects();
  const int nmor = cn.cat->base->morphisms();
  std::vector<ObjId> om(nobj);
  std::vector<MorId> mm(nmor);
  for (ObjId x = 0; x < nobj; ++x) {
    std::vector<ObjId> xs = n == 0 ? std::vector<ObjId>{} : cn.prod.obj_tuple(x);
    om[x] = fc.algebra_id(psi(fam.ambient, fc.operad, xs));
    if (om[x] < 0) throw std::logic_error("tensor algebra missing from the sampled level");
  }
  for (MorId f = 0; f < nmor; ++f) {
    std::vector<MorId> fs = n == 0 ? std::vector<MorId>{} : cn.prod.mor_tuple(f);
    FactMorphism h;
    h.comp.resize(1u << n);
    for (Subset s = 0; s < (1u << n); ++s) {
      std::vector<MorId> legs;
      for (int e : subset_elements(s)) legs.push_back(fs[e - 1]);
      h.comp[s] = permcat::iterated_tensor_mor(*fam.ambient, legs);
    }
    mm[f] = fc.morphism_id(om[cn.cat->base->dom(f)], om[cn.cat->base->cod(f)], h);
    if (mm[f] < 0) throw std::logic_error("tensor morphism missing from the sampled level");
  }
  return relcat::make_rel_functor(cn.cat, fc.cat, std::move(om), std::move(mm));
}

fincat::NatTransformation counit_transformation(const FactFamily& fam, int n,
                                                const relcat::RelProduct& cn) {
  const FactCategory& fc = fam.level[n];
  relcat::RelFunctor ph = phi_functor(fam, n, cn);
  relcat::RelFunctor ps = psi_functor(fam, n, cn);
  relcat::RelFunctor psiphi = relcat::compose(ps, ph);
  fincat::NatTransformation t;
  t.source_functor = psiphi.f;
  t.target_functor = fincat::identity_functor(fc.cat->base);
  t.component.resize(fc.algebras.size());
  for (size_t a = 0; a < fc.algebras.size(); ++a) {
    FactMorphism h = counit_components(fc.algebras[a], fc.operad);
    t.component[a] = fc.morphism_id(psiphi.f.object_map[a], static_cast<int>(a), h);
  }
  return t;
}

Report check_counit(const FactFamily& fam, int n, const relcat::RelProduct& cn) {
  Report rep;
  rep.check = "factop/counit";
  rep.bounds = "n=" + std::to_string(n);
  fincat::NatTransformation t = counit_transformation(fam, n, cn);
  for (size_t a = 0; a < t.component.size(); ++a) {
    if (t.component[a] < 0) {
      rep.fail("counit component missing at algebra " + std::to_string(a));
      return rep;
    }
    if (!fam.level[n].cat->is_weq(t.component[a]))
      rep.fail("counit component at algebra " + std::to_string(a) + " is not a weq");
  }
  Report nat = fincat::check_nat_trans(t);
  if (!nat.pass) {
    rep.fail("counit is not natural");
    for (auto& d : nat.details) rep.note(d);
  }
  return rep;
}

relcat::RelFunctor power_functor(const FactFamily& fam, const PointedMap& u,
                                 const relcat::RelProduct& cn, const relcat::RelProduct& cm) {
  const permcat::PermRelCategory& c = *fam.ambient;
  const int nobj = cn.cat->base->objects();
  const int nmor = cn.cat->base->morphisms();
  std::vector<ObjId> om(nobj);
  std::vector<MorId> mm(nmor);
  for (ObjId x = 0; x < nobj; ++x) {
    std::vector<ObjId> xs = u.n == 0 ? std::vector<ObjId>{} : cn.prod.obj_tuple(x);
    std::vector<ObjId> out(u.m);
    for (int j = 1; j <= u.m; ++j) {
      std::vector<ObjId> block;
      for (int i = 1; i <= u.n; ++i)
        if (u(i) == j) block.push_back(xs[i - 1]);
      out[j - 1] = permcat::iterated_tensor(c, block);
    }
    om[x] = u.m == 0 ? 0 : cm.prod.obj_id(out);
  }
  for (MorId f = 0; f < nmor; ++f) {
    std::vector<MorId> fs = u.n == 0 ? std::vector<MorId>{} : cn.prod.mor_tuple(f);
    std::vector<MorId> out(u.m);
    for (int j = 1; j <= u.m; ++j) {
      std::vector<MorId> block;
      for (int i = 1; i <= u.n; ++i)
        if (u(i) == j) block.push_back(fs[i - 1]);
      out[j - 1] = permcat::iterated_tensor_mor(c, block);
    }
    mm[f] = u.m == 0 ? 0 : cm.prod.mor_id(out);
  }
  return relcat::make_rel_functor(cn.cat, cm.cat, std::move(om), std::move(mm));
}

// Components of the comparison square for u at algebra A: per slot j, the
// structure map assembling tensors of singletons of u^{-1}(j).
static std::vector<MorId> lax_component(const FactFamily& fam, const PointedMap& u, int alg) {
  const FactCategory& fc = fam.level[u.n];
  const FactAlgebra& a = fc.algebras[alg];
  std::vector<MorId> out(u.m);
  for (int j = 1; j <= u.m; ++j) {
    std::vector<Subset> singles;
    for (int i = 1; i <= u.n; ++i)
      if (u(i) == j) singles.push_back(1u << (i - 1));
    out[j - 1] = derived_struct(a, fc.operad, singles);
  }
  return out;
}

Report lax_square_check(const FactFamily& fam, const PointedMap& u) {
  Report rep;
  rep.check = "factop/lax-square";
  rep.bounds = "u=" + finstar::to_text(u);
  relcat::RelProduct cn = relcat::rel_product(
      std::vector<relcat::RelPtr>(u.n, fam.ambient->base));
  relcat::RelProduct cm = relcat::rel_product(
      std::vector<relcat::RelPtr>(u.m, fam.ambient->base));
  relcat::RelFunctor phin = phi_functor(fam, u.n, cn);
  relcat::RelFunctor phim = phi_functor(fam, u.m, cm);
  relcat::RelFunctor cu = power_functor(fam, u, cn, cm);
  relcat::RelFunctor pull = pullback_rel_functor(fam, u);

  fincat::NatTransformation t;
  t.source_functor = fincat::compose(cu.f, phin.f);
  t.target_functor = fincat::compose(phim.f, pull.f);
  t.component.resize(fam.level[u.n].algebras.size());
  for (size_t a = 0; a < t.component.size(); ++a) {
    std::vector<MorId> comp = lax_component(fam, u, static_cast<int>(a));
    t.component[a] = u.m == 0 ? 0 : cm.prod.mor_id(comp);
    if (!cm.cat->is_weq(t.component[a]))
      rep.fail("component at algebra " + std::to_string(a) + " is not a weq");
  }
  Report nat = fincat::check_nat_trans(t);
  if (!nat.pass) {
    rep.fail("square is not natural");
    for (auto& d : nat.details) rep.note(d);
  }
  return rep;
}

Report lax_square_pasting(const FactFamily& fam, const PointedMap& u1, const PointedMap& u2) {
  Report rep;
  rep.check = "factop/lax-square-pasting";
  rep.bounds = "u1=" + finstar::to_text(u1) + " u2=" + finstar::to_text(u2);
  const permcat::PermRelCategory& c = *fam.ambient;
  PointedMap u21 = finstar::compose(u2, u1);
  relcat::RelFunctor pull1 = pullback_rel_functor(fam, u1);

  for (size_t a = 0; a < fam.level[u1.n].algebras.size(); ++a) {
    std::vector<MorId> l1 = lax_component(fam, u1, static_cast<int>(a));
    std::vector<MorId> l2 = lax_component(fam, u2, pull1.f.object_map[a]);
    std::vector<MorId> l21 = lax_component(fam, u21, static_cast<int>(a));
    // C^{u2} applied to the u1 component, then the u2 component
    std::vector<MorId> lhs(u2.m), rhs(u2.m);
    std::vector<ObjId> xs = phi(fam.level[u1.n].algebras[a]);
    for (int j = 1; j <= u2.m; ++j) {
      std::vector<MorId> block;
      for (int i = 1; i <= u2.n; ++i)
        if (u2(i) == j) block.push_back(l1[i - 1]);
      MorId cu2_l1 = permcat::iterated_tensor_mor(c, block);
      lhs[j - 1] = c.cat().compose(l2[j - 1], cu2_l1);

      // gamma: grouped fold -> ascending fold on the preimage of j under u21
      std::vector<ObjId> domain;
      std::vector<int> grouped_elems;
      for (int i2 = 1; i2 <= u2.n; ++i2) {
        if (u2(i2) != j) continue;
        for (int i = 1; i <= u1.n; ++i)
          if (u1(i) == i2) grouped_elems.push_back(i);
      }
      std::vector<int> asc(grouped_elems);
      std::sort(asc.begin(), asc.end());
      std::vector<int> dest;
      for (int e : grouped_elems) {
        domain.push_back(xs[e - 1]);
        dest.push_back(static_cast<int>(std::lower_bound(asc.begin(), asc.end(), e) -
                                        asc.begin()));
      }
      MorId gamma = permcat::reorder_symmetry(c, domain, dest);
      rhs[j - 1] = c.cat().compose(l21[j - 1], gamma);
    }
    if (lhs != rhs) rep.fail("pasting fails at algebra " + std::to_string(a));
  }
  return rep;
}

SegalWitnessResult segal_witness(const FactFamily& fam, int n) {
  SegalWitnessResult out;
  out.report.check = "factop/segal-witness";
  out.report.bounds = "n=" + std::to_string(n);
  const FactCategory& fcn = fam.level[n];
  const FactCategory& fc1 = fam.level[1];

  out.product = relcat::rel_product(std::vector<relcat::RelPtr>(n, fc1.cat));
  relcat::RelProduct cn =
      relcat::rel_product(std::vector<relcat::RelPtr>(n, fam.ambient->base));

  // inert-induced functor via the rho pullbacks
  if (n == 0) {
    out.inert_induced = relcat::constant_rel_functor(fcn.cat, out.product.cat, 0);
  } else {
    std::vector<relcat::RelFunctor> legs;
    for (int i = 1; i <= n; ++i)
      legs.push_back(pullback_rel_functor(fam, finstar::rho(n, 1u << (i - 1))));
    out.inert_induced = relcat::rel_pairing(out.product, legs);
  }

  // homotopy inverse: evaluate each slot at {1}, then form the tensor algebra
  relcat::RelFunctor g;
  {
    std::vector<ObjId> om(out.product.cat->base->objects());
    std::vector<MorId> mm(out.product.cat->base->morphisms());
    for (ObjId x = 0; x < out.product.cat->base->objects(); ++x) {
      std::vector<ObjId> tup = n == 0 ? std::vector<ObjId>{} : out.product.prod.obj_tuple(x);
      std::vector<ObjId> xs(n);
      for (int i = 0; i < n; ++i) xs[i] = fc1.algebras[tup[i]].obj[1];
      om[x] = fcn.algebra_id(psi(fam.ambient, fcn.operad, xs));
    }
    for (MorId f = 0; f < out.product.cat->base->morphisms(); ++f) {
      std::vector<MorId> tup = n == 0 ? std::vector<MorId>{} : out.product.prod.mor_tuple(f);
      FactMorphism h;
      h.comp.resize(1u << n);
      for (Subset s = 0; s < (1u << n); ++s) {
        std::vector<MorId> legs;
        for (int e : subset_elements(s)) legs.push_back(fc1.mor_data[tup[e - 1]].comp[1]);
        h.comp[s] = permcat::iterated_tensor_mor(*fam.ambient, legs);
      }
      mm[f] = fcn.morphism_id(om[out.product.cat->base->dom(f)],
                              om[out.product.cat->base->cod(f)], h);
    }
    g = relcat::make_rel_functor(out.product.cat, fcn.cat, std::move(om), std::move(mm));
  }

  relcat::RelFunctor gP = relcat::compose(g, out.inert_induced);
  relcat::RelFunctor Pg = relcat::compose(out.inert_induced, g);

  // g . P must be PsiPhi on the nose, so its counit applies
  fincat::NatTransformation backcounit = counit_transformation(fam, n, cn);
  if (!fincat::same_functor(gP.f, backcounit.source_functor)) {
    out.report.fail("inverse-then-forward does not agree with the tensor-algebra comparison");
    return out;
  }
  backcounit.source_functor = gP.f;
  out.witness.f = out.inert_induced;
  out.witness.g = g;
  out.witness.zz_gf =
      relcat::one_step_zigzag(gP, relcat::identity_rel_functor(fcn.cat), true, backcounit);

  // P . g is the slotwise PsiPhi; its counit is the product of slot counits
  relcat::RelProduct c1 =
      relcat::rel_product(std::vector<relcat::RelPtr>(1, fam.ambient->base));
  fincat::NatTransformation slot = counit_transformation(fam, 1, c1);
  fincat::NatTransformation fwd;
  fwd.source_functor = Pg.f;
  fwd.target_functor = fincat::identity_functor(out.product.cat->base);
  fwd.component.resize(out.product.cat->base->objects());
  for (ObjId x = 0; x < out.product.cat->base->objects(); ++x) {
    std::vector<ObjId> tup = n == 0 ? std::vector<ObjId>{} : out.product.prod.obj_tuple(x);
    std::vector<MorId> comps(n);
    std::vector<ObjId> slotwise(n);
    for (int i = 0; i < n; ++i) {
      comps[i] = slot.component[tup[i]];
      slotwise[i] = slot.source_functor.object_map[tup[i]];
    }
    if (Pg.f.object_map[x] != (n == 0 ? 0 : out.product.prod.obj_id(slotwise))) {
      out.report.fail("forward-then-inverse does not match the slotwise comparison at " +
                      std::to_string(x));
      return out;
    }
    fwd.component[x] = n == 0 ? 0 : out.product.prod.mor_id(comps);
  }
  out.witness.zz_fg = relcat::one_step_zigzag(
      Pg, relcat::identity_rel_functor(out.product.cat), true, fwd);

  Report ver = relcat::verify_homotopy_equivalence(out.witness);
  if (!ver.pass) {
    out.report.fail("witness verification failed");
    for (auto& d : ver.details) out.report.note(d);
  }
  return out;
}

std::vector<FactAlgebra> enumerate_all_algebras(PermPtr c, const FactOperad& op) {
  if (op.n > 2 || c->cat().objects() > 3) {
    Report rep;
    rep.check = "factop/enumerate-all";
    rep.fail("exhaustive enumeration is bounded to n <= 2 and <= 3 objects");
    throw ValidationError("enumeration bound exceeded", rep);
  }
  const fincat::FinCategory& k = c->cat();
  std::vector<FactAlgebra> out;
  const Subset nmask = 1u << op.n;
  std::vector<ObjId> obj(nmask, 0);
  while (true) {
    // collect candidate structure maps per arrow
    std::vector<std::vector<MorId>> cand(op.arrows.size());
    bool feasible = true;
    for (size_t i = 0; i < op.arrows.size() && feasible; ++i) {
      std::vector<ObjId> domain;
      for (Subset s : op.arrows[i].sources) domain.push_back(obj[s]);
      ObjId dom = permcat::iterated_tensor(*c, domain);
      for (MorId m = 0; m < k.morphisms(); ++m)
        if (k.dom(m) == dom && k.cod(m) == obj[op.arrows[i].target]) cand[i].push_back(m);
      if (cand[i].empty()) feasible = false;
    }
    if (feasible) {
      std::vector<size_t> choice(op.arrows.size(), 0);
      while (true) {
        FactAlgebra a;
        a.ambient = c;
        a.n = op.n;
        a.obj = obj;
        a.struct_map.resize(op.arrows.size());
        for (size_t i = 0; i < op.arrows.size(); ++i) a.struct_map[i] = cand[i][choice[i]];
        if (validate_fact_algebra(a, op).pass) out.push_back(a);
        int s = static_cast<int>(op.arrows.size()) - 1;
        while (s >= 0 && choice[s] + 1 >= cand[s].size()) choice[s--] = 0;
        if (s < 0) break;
        ++choice[s];
      }
    }
    int i = static_cast<int>(nmask) - 1;
    while (i >= 0 && obj[i] + 1 >= k.objects()) obj[i--] = 0;
    if (i < 0) break;
    ++obj[i];
  }
  return out;
}

}  // namespace factperm::factop
