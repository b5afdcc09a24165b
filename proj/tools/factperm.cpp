// factperm: law checking and exports for finite permutative relative
// categories, their subset-factorization algebras, and the truncated
// permutative total category built over twisted arrows of based maps.
//
// Exit status: 0 all selected checks pass, 1 a check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <set>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "factperm/factop.hpp"
#include "factperm/fincat.hpp"
#include "factperm/finstar.hpp"
#include "factperm/io.hpp"
#include "factperm/permconstr.hpp"
#include "factperm/sset.hpp"
#include "factperm/suite.hpp"

namespace {

using namespace factperm;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  out << text;
}

int finish(const std::string& format, const std::string& out_path, const std::string& note,
           const std::vector<Report>& reports) {
  emit(out_path, format == "json" ? io::reports_to_json(note, reports)
                                  : io::reports_to_text(reports));
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category engine for permutative relative categories"};
  app.require_subcommand(1);

  int max_n = 3;
  if (const char* env = std::getenv("FACTPERM_MAX_N")) max_n = std::atoi(env);
  std::string format = "text";
  std::string out_path;
  app.add_option("--max-n", max_n, "algebra level bound")->capture_default_str();
  app.add_option("--format", format, "text|json|dot")->capture_default_str();
  app.add_option("--out", out_path, "write output to a file");

  std::string fixture;
  std::vector<std::string> select;
  auto* check = app.add_subcommand("check", "run the full suite on a fixture")->fallthrough();
  check->add_option("fixture", fixture, "permutative fixture (JSON)")->required();
  check->add_option("--select", select,
                    "check groups (permcat, probe, fact, segal, perm, roundtrip, pi0, eta, sset)")
      ->delimiter(',');

  auto* fact = app.add_subcommand("fact", "algebra levels: laws, comparisons, squares")->fallthrough();
  fact->add_option("fixture", fixture)->required();

  auto* segal = app.add_subcommand("segal", "assemble and verify the product comparison")->fallthrough();
  int segal_n = 2;
  segal->add_option("fixture", fixture)->required();
  segal->add_option("--n", segal_n, "level")->capture_default_str();

  auto* perm = app.add_subcommand("perm", "build the truncated total category and check it")->fallthrough();
  int truncate = 2;
  perm->add_option("fixture", fixture)->required();
  perm->add_option("--truncate", truncate, "wedge bound")->capture_default_str();

  auto* roundtrip = app.add_subcommand("roundtrip", "total category back to the base")->fallthrough();
  int rt_n = 2;
  roundtrip->add_option("fixture", fixture)->required();
  roundtrip->add_option("--n", rt_n, "wedge bound")->capture_default_str();

  auto* etacheck = app.add_subcommand("eta-check", "unit family and path comparison")->fallthrough();
  etacheck->add_option("fixture", fixture)->required();

  auto* probe = app.add_subcommand("probe-initial", "comma probes under twisted arrows")->fallthrough();
  probe->add_option("fixture", fixture)->required();

  auto* fs = app.add_subcommand("finstar", "based-map utilities")->fallthrough();
  std::string fs_op = "classify";
  std::string fs_map;
  int fs_bound = 2;
  fs->add_option("op", fs_op, "classify|factorize|enumerate")->required();
  fs->add_option("--map", fs_map, "pointed map, e.g. \"2 1 : 1 0\"");
  fs->add_option("--bound", fs_bound, "enumeration bound")->capture_default_str();

  auto* ss = app.add_subcommand("sset", "nerve utilities")->fallthrough();
  std::string ss_op = "homology";
  int ss_dim = 2;
  ss->add_option("op", ss_op, "nerve|homology|epsilon")->required();
  ss->add_option("fixture", fixture)->required();
  ss->add_option("--dim", ss_dim, "truncation dimension")->capture_default_str();

  auto* ex = app.add_subcommand("export", "export a fixture or a derived category")->fallthrough();
  std::string entity = "base";
  int ex_n = 1;
  ex->add_option("fixture", fixture)->required();
  ex->add_option("--entity", entity, "base|tw|perm|algebras")->capture_default_str();
  ex->add_option("--n", ex_n, "algebra level for --entity algebras")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  suite::RunConfig cfg;
  cfg.max_n = max_n;

  try {
    if (check->parsed()) {
      const std::set<std::string> known = {"finstar", "permcat", "probe", "fact", "segal",
                                           "perm",    "roundtrip", "pi0", "eta",  "sset"};
      for (const auto& s : select)
        if (!known.count(s)) {
          std::cerr << "unknown check group " << s << "\n";
          return 2;
        }
      cfg.select.insert(select.begin(), select.end());
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      std::vector<Report> reports = suite::run_global_checks(cfg);
      std::vector<Report> fixture_reports = suite::run_suite(fx, cfg);
      reports.insert(reports.end(), fixture_reports.begin(), fixture_reports.end());
      return finish(format, out_path, cfg.note(), reports);
    }
    if (fact->parsed()) {
      cfg.select = {"fact"};
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      return finish(format, out_path, cfg.note(), suite::run_suite(fx, cfg));
    }
    if (segal->parsed()) {
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      factop::FactFamily fam = factop::build_fact_family(fx, std::max(cfg.max_n, segal_n));
      factop::SegalWitnessResult w = factop::segal_witness(fam, segal_n);
      if (format == "json" && w.report.pass) {
        emit(out_path, io::witness_to_json(w.witness));
        return 0;
      }
      return finish(format, out_path, cfg.note(), {w.report});
    }
    if (perm->parsed()) {
      cfg.perm_n = truncate;
      cfg.select = {"perm"};
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      return finish(format, out_path, cfg.note(), suite::run_suite(fx, cfg));
    }
    if (roundtrip->parsed()) {
      cfg.perm_n = rt_n;
      cfg.select = {"roundtrip"};
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      return finish(format, out_path, cfg.note(), suite::run_suite(fx, cfg));
    }
    if (etacheck->parsed()) {
      cfg.select = {"eta"};
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      return finish(format, out_path, cfg.note(), suite::run_suite(fx, cfg));
    }
    if (probe->parsed()) {
      cfg.select = {"probe"};
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      return finish(format, out_path, cfg.note(), suite::run_suite(fx, cfg));
    }
    if (fs->parsed()) {
      std::ostringstream os;
      if (fs_op == "classify" || fs_op == "factorize") {
        finstar::PointedMap f = finstar::parse_pointed_map(fs_map);
        if (fs_op == "classify") {
          auto c = finstar::classify(f);
          os << "inert=" << c.inert << " strongly_inert=" << c.strongly_inert
             << " active=" << c.active << "\n";
        } else {
          auto [inert, act] = finstar::factorize(f);
          os << "inert:  " << finstar::to_text(inert) << "\n";
          os << "active: " << finstar::to_text(act) << "\n";
        }
      } else if (fs_op == "enumerate") {
        finstar::TwActive tw = finstar::enumerate_tw_active(fs_bound);
        os << "objects " << tw.tw.cat->objects() << " morphisms " << tw.tw.cat->morphisms()
           << "\n";
        for (int o = 0; o < tw.tw.cat->objects(); ++o)
          os << "obj " << o << ": " << finstar::to_text(tw.object_map()[o]) << "\n";
      } else {
        std::cerr << "unknown finstar op " << fs_op << " (classify|factorize|enumerate)\n";
        return 2;
      }
      emit(out_path, os.str());
      return 0;
    }
    if (ss->parsed()) {
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      sset::TruncatedSSet nv = sset::nerve_truncate(fx->cat(), ss_dim);
      if (ss_op == "nerve") {
        emit(out_path, io::sset_to_json(nv));
        return 0;
      }
      if (ss_op == "homology") {
        auto [pi0, h1, tors] = sset::homology(nv);
        std::ostringstream os;
        os << "pi0=" << pi0 << " h1_rank=" << h1 << " torsion=[";
        for (size_t i = 0; i < tors.size(); ++i) os << (i ? "," : "") << tors[i];
        os << "]\n";
        emit(out_path, os.str());
        return 0;
      }
      if (ss_op == "epsilon") {
        sset::SimplexCategory sc = sset::category_of_simplices(nv, nv.dim);
        Report r = sset::check_epsilon(nv, sc, nv.dim);
        return finish(format, out_path, cfg.note(), {r});
      }
      std::cerr << "unknown sset op " << ss_op << " (nerve|homology|epsilon)\n";
      return 2;
    }
    if (ex->parsed()) {
      permcat::PermPtr fx = io::permcat_from_json(slurp(fixture));
      if (entity == "base") {
        if (format == "dot")
          emit(out_path, io::category_to_dot(fx->cat(), &fx->base->weq));
        else
          emit(out_path, io::permcat_to_json(*fx));
        return 0;
      }
      if (entity == "tw") {
        fincat::TwistedArrowCategory tw = fincat::twisted_arrow(fx->base->base);
        if (format == "dot")
          emit(out_path, io::category_to_dot(*tw.cat));
        else
          emit(out_path, io::category_to_json(*tw.cat));
        return 0;
      }
      if (entity == "perm") {
        factop::FactFamily fam = factop::build_fact_family(fx, cfg.perm_n);
        permconstr::TruncatedSegalFunctor f = permconstr::fact_functor(fam, false, 0);
        permconstr::PermBuild pb = permconstr::perm_build(f, cfg.perm_n);
        if (format == "dot")
          emit(out_path, io::category_to_dot(pb.perm->cat(), &pb.perm->base->weq));
        else
          emit(out_path, io::permcat_to_json(*pb.perm));
        return 0;
      }
      if (entity == "algebras") {
        factop::FactFamily fam = factop::build_fact_family(fx, std::max(cfg.max_n, ex_n));
        std::string out = "[\n";
        const auto& level = fam.level[ex_n];
        for (size_t a = 0; a < level.algebras.size(); ++a) {
          std::string one = io::algebra_to_json(level.algebras[a], level.operad);
          one.pop_back();
          out += one + (a + 1 < level.algebras.size() ? ",\n" : "\n");
        }
        out += "]\n";
        emit(out_path, out);
        return 0;
      }
      std::cerr << "unknown entity " << entity << " (base|tw|perm|algebras)\n";
      return 2;
    }
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    for (const auto& d : e.report().details) std::cerr << "  " << d << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
