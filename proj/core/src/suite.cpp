#include "factperm/suite.hpp"

#include <algorithm>

#include "factperm/factop.hpp"
#include "factperm/fincat.hpp"
#include "factperm/finstar.hpp"
#include "factperm/permconstr.hpp"
#include "factperm/sset.hpp"

namespace factperm::suite {

std::string RunConfig::note() const {
  return "max_n=" + std::to_string(max_n) + " perm_n=" + std::to_string(perm_n) +
         " pi0_n=" + std::to_string(pi0_n) + " sset_dim=" + std::to_string(sset_dim);
}

std::vector<Report> run_global_checks(const RunConfig& cfg) {
  std::vector<Report> out;

  if (cfg.selected("finstar")) {
    Report fact;
    fact.check = "finstar/factorization-unique";
    fact.bounds = "n,m<=4";
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m)
        for (const auto& f : finstar::all_maps(n, m)) {
          int count = 0;
          for (int k = 0; k <= n; ++k)
            for (const auto& h : finstar::all_strongly_inert(n, k))
              for (const auto& g : finstar::all_active(k, m))
                if (finstar::compose(g, h) == f) ++count;
          auto [inert, act] = finstar::factorize(f);
          bool returned_ok = finstar::classify(inert).strongly_inert &&
                             finstar::is_active(act) &&
                             finstar::compose(act, inert) == f;
          if (count != 1 || !returned_ok)
            fact.fail("factorization not unique or wrong at " + finstar::to_text(f));
        }
    out.push_back(fact);

    Report nab;
    nab.check = "finstar/interval-iso";
    nab.bounds = "n,m<=3";
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        auto monos = finstar::all_monotone(n, m);
        auto nabs = finstar::all_nabla(m, n);
        if (monos.size() != nabs.size())
          nab.fail("hom-set sizes differ at [" + std::to_string(n) + "]->[" +
                   std::to_string(m) + "]");
        std::set<finstar::NablaMap> seen;
        for (const auto& u : monos) {
          finstar::NablaMap img = finstar::delta_to_nabla(u);
          if (!finstar::check_nabla(img).pass)
            nab.fail("image is not an interval map");
          if (!seen.insert(img).second) nab.fail("interval assignment is not injective");
          if (finstar::nabla_inert(img) != finstar::is_subinterval_inclusion(u))
            nab.fail("inert correspondence fails");
          if (finstar::nabla_active(img) != finstar::preserves_endpoints(u))
            nab.fail("active correspondence fails");
        }
      }
    // contravariant functoriality
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 2; ++k)
          for (const auto& u : finstar::all_monotone(n, m))
            for (const auto& v : finstar::all_monotone(m, k)) {
              finstar::MonotoneMap vu;
              vu.n = n;
              vu.m = k;
              for (int i = 0; i <= n; ++i) vu.img.push_back(v.img[u.img[i]]);
              if (finstar::delta_to_nabla(vu) !=
                  finstar::compose(finstar::delta_to_nabla(u), finstar::delta_to_nabla(v)))
                nab.fail("contravariant functoriality fails");
            }
    out.push_back(nab);
  }
  return out;
}

std::vector<Report> run_suite(const permcat::PermPtr& fixture, const RunConfig& cfg) {
  std::vector<Report> out;
  const auto& c = *fixture;

  if (cfg.selected("permcat")) {
    out.push_back(permcat::validate_permutative(c));
  }

  if (cfg.selected("probe")) {
    Report probe;
    probe.check = "fincat/comma-probe";
    probe.bounds = "2-truncated nerve";
    for (int x = 0; x < c.cat().objects(); ++x) {
      fincat::CommaProbe p = fincat::comma_probe(c.base->base, x);
      if (p.component_count != 1 || p.h1_rank != 0 || !p.h1_torsion.empty())
        probe.fail("probe at " + c.cat().oname(x) + " is not (1, 0, [])");
    }
    out.push_back(probe);
  }

  factop::FactFamily fam;
  bool have_family = false;
  auto family = [&]() -> factop::FactFamily& {
    if (!have_family) {
      fam = factop::build_fact_family(fixture, cfg.max_n);
      have_family = true;
    }
    return fam;
  };

  if (cfg.selected("fact")) {
    Report laws;
    laws.check = "factop/sampled-algebra-laws";
    laws.bounds = "max_n=" + std::to_string(cfg.max_n);
    for (int n = 0; n <= cfg.max_n; ++n)
      for (const auto& a : family().level[n].algebras) {
        Report v = factop::validate_fact_algebra(a, family().level[n].operad);
        if (!v.pass) {
          laws.fail("algebra laws fail at level " + std::to_string(n));
          for (auto& d : v.details) laws.note(d);
        }
        if (!factop::is_fact_object(a, family().level[n].operad))
          laws.fail("sampled algebra has a non-weq structure map at level " + std::to_string(n));
      }
    out.push_back(laws);

    Report round;
    round.check = "factop/forget-then-build";
    round.bounds = "max_n=" + std::to_string(cfg.max_n);
    for (int n = 0; n <= cfg.max_n; ++n) {
      relcat::RelProduct cn = relcat::rel_product(
          std::vector<relcat::RelPtr>(n, fixture->base));
      relcat::RelFunctor ph = factop::phi_functor(family(), n, cn);
      relcat::RelFunctor ps = factop::psi_functor(family(), n, cn);
      relcat::RelFunctor round_trip = relcat::compose(ph, ps);
      if (!relcat::same_functor(round_trip, relcat::identity_rel_functor(cn.cat)))
        round.fail("forget-then-build is not the identity at n=" + std::to_string(n));
      Report cu = factop::check_counit(family(), n, cn);
      if (!cu.pass) {
        round.fail("comparison back to the algebra fails at n=" + std::to_string(n));
        for (auto& d : cu.details) round.note(d);
      }
    }
    out.push_back(round);

    Report lax;
    lax.check = "factop/lax-squares";
    lax.bounds = "n,m<=" + std::to_string(cfg.max_n);
    for (int n = 0; n <= cfg.max_n; ++n)
      for (int m = 0; m <= cfg.max_n; ++m)
        for (const auto& u : finstar::all_maps(n, m)) {
          Report r = factop::lax_square_check(family(), u);
          if (!r.pass) {
            lax.fail("square fails at " + finstar::to_text(u));
            for (auto& d : r.details) lax.note(d);
          }
        }
    for (int n = 0; n <= cfg.max_n && lax.pass; ++n)
      for (int m = 0; m <= cfg.max_n; ++m)
        for (int k = 0; k <= cfg.max_n; ++k)
          for (const auto& u1 : finstar::all_maps(n, m))
            for (const auto& u2 : finstar::all_maps(m, k)) {
              Report r = factop::lax_square_pasting(family(), u1, u2);
              if (!r.pass)
                lax.fail("pasting fails at " + finstar::to_text(u1) + " then " +
                         finstar::to_text(u2));
            }
    out.push_back(lax);
  }

  if (cfg.selected("segal")) {
    Report seg;
    seg.check = "factop/segal-witness";
    seg.bounds = "n<=2";
    for (int n = 0; n <= std::min(cfg.max_n, 2); ++n) {
      factop::SegalWitnessResult w = factop::segal_witness(family(), n);
      if (!w.report.pass) {
        seg.fail("witness fails at n=" + std::to_string(n));
        for (auto& d : w.report.details) seg.note(d);
      }
    }
    out.push_back(seg);
  }

  permconstr::PermBuild pb;
  bool have_pb = false;
  auto build = [&]() -> permconstr::PermBuild& {
    if (!have_pb) {
      permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(family(), false, 0);
      pb = permconstr::perm_build(f, cfg.perm_n);
      have_pb = true;
    }
    return pb;
  };

  if (cfg.selected("perm")) {
    Report groth = permconstr::check_grothendieck(build().groth);
    out.push_back(groth);
    out.push_back(permcat::validate_permutative(*build().perm));
    out.back().check = "permconstr/total-laws";
  }

  if (cfg.selected("roundtrip")) {
    permconstr::CounitResult cr = permconstr::counit_functor(family(), build());
    Report rf = relcat::check_rel_functor(cr.functor);
    rf.check = "permconstr/counit-functor";
    out.push_back(rf);
    out.push_back(cr.strict_sm);
    out.push_back(cr.triangle);
  }

  if (cfg.selected("pi0")) {
    permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(family(), false, 0);
    {
      permconstr::UnitInclusion ui = permconstr::unit_inclusion(f, build());
      Report incl = relcat::check_rel_functor(ui.incl);
      if (!incl.pass) {
        ui.pi0.fail("unit inclusion is not a relative functor");
        for (auto& d : incl.details) ui.pi0.note(d);
      }
      ui.pi0.check = "permconstr/pi0-unit-materialized";
      out.push_back(ui.pi0);
    }
    for (int n = 1; n <= cfg.pi0_n; ++n) {
      Report r = permconstr::pi0_bijection(f, n);
      r.check = "permconstr/pi0-unit-n" + std::to_string(n);
      out.push_back(r);
    }
  }

  if (cfg.selected("eta")) {
    permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(family(), false, 0);
    permconstr::EtaResult e = permconstr::eta(f, build());
    out.push_back(e.report);
    Report ab = permconstr::alpha_beta_check(f, build());
    out.push_back(ab);
  }

  if (cfg.selected("sset")) {
    sset::TruncatedSSet nv = sset::nerve_truncate(c.cat(), std::min(cfg.sset_dim, 3));
    Report ids = sset::check_simplicial_identities(nv);
    ids.check = "sset/nerve-identities";
    out.push_back(ids);
    sset::SimplexCategory sc = sset::category_of_simplices(nv, nv.dim);
    Report eps = sset::check_epsilon(nv, sc, nv.dim);
    out.push_back(eps);

    Report mark;
    mark.check = "sset/marking-monotone";
    std::vector<int> all_edges;
    for (int e = 0; e < nv.count[1]; ++e) all_edges.push_back(e);
    std::vector<int> none = sset::marking(nv, sc, {});
    std::vector<int> full = sset::marking(nv, sc, all_edges);
    if (!std::includes(full.begin(), full.end(), none.begin(), none.end()))
      mark.fail("marking is not monotone in the edge set");
    // growing chains of edge sets stay nested
    std::vector<int> grow;
    std::vector<int> prev = none;
    for (int e = 0; e < nv.count[1]; ++e) {
      grow.push_back(e);
      std::vector<int> cur = sset::marking(nv, sc, grow);
      if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()))
        mark.fail("marking shrinks when the edge set grows");
      prev = std::move(cur);
    }
    out.push_back(mark);
  }
  return out;
}

}  // namespace factperm::suite
