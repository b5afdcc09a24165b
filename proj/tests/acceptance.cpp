// Acceptance suite: runs every advertised guarantee at its stated bound and
// time budget, one line per criterion. Exit status is nonzero if any line
// fails. Criteria run against the on-disk fixture corpus end to end.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "factperm/factop.hpp"
#include "factperm/fincat.hpp"
#include "factperm/finstar.hpp"
#include "factperm/io.hpp"
#include "factperm/permconstr.hpp"
#include "factperm/sset.hpp"
#include "factperm/suite.hpp"

using namespace factperm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& run) {
  std::string detail;
  auto t0 = Clock::now();
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  bool in_budget = elapsed < budget_seconds;
  if (!ok || !in_budget) ++failures;
  std::printf("[%s] criterion %2d: %-34s %7.2fs / %gs%s%s\n",
              ok && in_budget ? "PASS" : "FAIL", number, name.c_str(), elapsed,
              budget_seconds, detail.empty() ? "" : "  -- ", detail.c_str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Fixture {
  std::string name;
  permcat::PermPtr cat;
  factop::FactFamily family;
  permconstr::TruncatedSegalFunctor functor;  // segal-flagged
  permconstr::PermBuild perm2;
};

}  // namespace

int main() {
  std::vector<Fixture> corpus;
  auto prep0 = Clock::now();
  for (const std::string& name : {"z2", "maxposet", "maxposet_full", "indiscrete2"}) {
    Fixture f;
    f.name = name;
    f.cat = io::permcat_from_json(slurp(std::string(FACTPERM_FIXTURE_DIR) + "/" + name + ".json"));
    f.family = factop::build_fact_family(f.cat, 3);
    f.functor = permconstr::fact_functor(f.family, true, 2);
    f.perm2 = permconstr::perm_build(f.functor, 2);
    corpus.push_back(std::move(f));
  }
  std::printf("fixture corpus prepared in %.2fs\n",
              std::chrono::duration<double>(Clock::now() - prep0).count());

  criterion(1, "based-map factorization unique", 1.0, [&](std::string&) {
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m)
        for (const auto& f : finstar::all_maps(n, m)) {
          int count = 0;
          for (int k = 0; k <= n; ++k)
            for (const auto& h : finstar::all_strongly_inert(n, k))
              for (const auto& g : finstar::all_active(k, m))
                if (finstar::compose(g, h) == f) ++count;
          auto [inert, act] = finstar::factorize(f);
          if (count != 1 || finstar::compose(act, inert) != f ||
              !finstar::classify(inert).strongly_inert || !finstar::is_active(act))
            return false;
        }
    return true;
  });

  criterion(2, "interval-category isomorphism", 1.0, [&](std::string&) {
    suite::RunConfig cfg;
    cfg.select = {"finstar"};
    for (const auto& r : suite::run_global_checks(cfg))
      if (r.check == "finstar/interval-iso" && !r.pass) return false;
    return true;
  });

  criterion(3, "forget/build round trip + counit", 10.0, [&](std::string& detail) {
    for (auto& f : corpus)
      for (int n = 0; n <= 3; ++n) {
        relcat::RelProduct cn =
            relcat::rel_product(std::vector<relcat::RelPtr>(n, f.cat->base));
        relcat::RelFunctor ph = factop::phi_functor(f.family, n, cn);
        relcat::RelFunctor ps = factop::psi_functor(f.family, n, cn);
        if (!relcat::same_functor(relcat::compose(ph, ps),
                                  relcat::identity_rel_functor(cn.cat))) {
          detail = f.name + " n=" + std::to_string(n) + " round trip";
          return false;
        }
        if (!factop::check_counit(f.family, n, cn).pass) {
          detail = f.name + " n=" + std::to_string(n) + " counit";
          return false;
        }
      }
    return true;
  });

  criterion(4, "comparison squares + product witness", 30.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
          for (const auto& u : finstar::all_maps(n, m))
            if (!factop::lax_square_check(f.family, u).pass) {
              detail = f.name + " square at " + finstar::to_text(u);
              return false;
            }
      for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
          for (int k = 0; k <= 3; ++k)
            for (const auto& u1 : finstar::all_maps(n, m))
              for (const auto& u2 : finstar::all_maps(m, k))
                if (!factop::lax_square_pasting(f.family, u1, u2).pass) {
                  detail = f.name + " pasting";
                  return false;
                }
      for (int n = 0; n <= 2; ++n) {
        factop::SegalWitnessResult w = factop::segal_witness(f.family, n);
        if (!w.report.pass || !relcat::verify_homotopy_equivalence(w.witness).pass) {
          detail = f.name + " witness n=" + std::to_string(n);
          return false;
        }
      }
    }
    return true;
  });

  criterion(5, "total category laws at n=2", 60.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      Report r = permcat::validate_permutative(*f.perm2.perm);
      if (!r.pass) {
        detail = f.name + (r.details.empty() ? "" : ": " + r.details[0]);
        return false;
      }
      if (!permconstr::check_grothendieck(f.perm2.groth).pass) {
        detail = f.name + " marking law";
        return false;
      }
    }
    return true;
  });

  criterion(6, "evaluation functor strict + triangle", 10.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      permconstr::CounitResult cr = permconstr::counit_functor(f.family, f.perm2);
      if (!relcat::check_rel_functor(cr.functor).pass || !cr.strict_sm.pass ||
          !cr.triangle.pass) {
        detail = f.name;
        return false;
      }
    }
    return true;
  });

  criterion(7, "component bijection onto the total", 10.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      if (!f.functor.segal_flag) {
        detail = f.name + " not flagged";
        return false;
      }
      for (int n = 1; n <= 3; ++n)
        if (!permconstr::pi0_bijection(f.functor, n).pass) {
          detail = f.name + " n=" + std::to_string(n);
          return false;
        }
      if (!permconstr::unit_inclusion(f.functor, f.perm2).pi0.pass) {
        detail = f.name + " materialized";
        return false;
      }
    }
    return true;
  });

  criterion(8, "comma probes are trivial", 10.0, [&](std::string& detail) {
    for (auto& f : corpus)
      for (fincat::ObjId c = 0; c < f.cat->cat().objects(); ++c) {
        fincat::CommaProbe p = fincat::comma_probe(f.cat->base->base, c);
        if (p.component_count != 1 || p.h1_rank != 0 || !p.h1_torsion.empty()) {
          detail = f.name + " at " + f.cat->cat().oname(c);
          return false;
        }
      }
    return true;
  });

  criterion(9, "path retraction + section equation", 10.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      if (!relcat::path_adjunction_witness(relcat::identity_rel_functor(f.cat->base))
               .report.pass) {
        detail = f.name + " identity retraction";
        return false;
      }
      if (!permconstr::alpha_beta_check(f.functor, f.perm2).pass) {
        detail = f.name + " comparison";
        return false;
      }
    }
    // the marking inclusion is a fixture functor as well
    relcat::RelFunctor up = relcat::make_rel_functor(corpus[1].cat->base, corpus[2].cat->base,
                                                     {0, 1}, {0, 1, 2});
    return relcat::path_adjunction_witness(up).report.pass;
  });

  criterion(10, "nerve counting map + markings", 5.0, [&](std::string& detail) {
    for (auto& f : corpus) {
      sset::TruncatedSSet x = sset::nerve_truncate(f.cat->cat(), 3);
      sset::SimplexCategory sc = sset::category_of_simplices(x, 3);
      if (!sset::check_epsilon(x, sc, 3).pass) {
        detail = f.name + " counting map";
        return false;
      }
      std::vector<int> edges;
      std::vector<int> prev = sset::marking(x, sc, edges);
      for (int e = 0; e < x.count[1]; ++e) {
        edges.push_back(e);
        std::vector<int> cur = sset::marking(x, sc, edges);
        if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
          detail = f.name + " marking monotonicity";
          return false;
        }
        prev = std::move(cur);
      }
    }
    return true;
  });

  criterion(11, "byte-identical reports", 600.0, [&](std::string& detail) {
    std::string out1 = "/tmp/factperm_accept_run1.json";
    std::string out2 = "/tmp/factperm_accept_run2.json";
    std::string cmd1 = std::string(FACTPERM_BIN) + " check " + FACTPERM_FIXTURE_DIR +
                       "/z2.json --format json --out " + out1 + " > /dev/null 2>&1";
    std::string cmd2 = std::string(FACTPERM_BIN) + " check " + FACTPERM_FIXTURE_DIR +
                       "/z2.json --format json --out " + out2 + " > /dev/null 2>&1";
    if (WEXITSTATUS(std::system(cmd1.c_str())) != 0 ||
        WEXITSTATUS(std::system(cmd2.c_str())) != 0) {
      detail = "suite run failed";
      return false;
    }
    bool same = slurp(out1) == slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (!same) detail = "reports differ";
    return same;
  });

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
