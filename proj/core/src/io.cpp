#include "factperm/io.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace factperm::io {

using nlohmann::ordered_json;

static ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Report rep;
    rep.check = "io/parse";
    rep.fail(e.what());
    throw ValidationError(std::string("malformed JSON: ") + e.what(), rep);
  }
}

// lifts missing-key/wrong-type errors into schema validation failures
template <typename F>
static auto with_schema(F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    Report rep;
    rep.check = "io/schema";
    rep.fail(e.what());
    throw ValidationError(std::string("schema violation: ") + e.what(), rep);
  }
}

static std::string name_of(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

static fincat::RawCategory raw_category_from(const ordered_json& j) {
  fincat::RawCategory raw;
  std::map<std::string, int> obj_index, mor_index;
  for (const auto& o : j.at("objects")) {
    obj_index[name_of(o)] = static_cast<int>(raw.objects.size());
    raw.objects.push_back(name_of(o));
  }
  auto obj_of = [&](const ordered_json& v) {
    auto it = obj_index.find(name_of(v));
    if (it == obj_index.end()) {
      Report rep;
      rep.check = "io/schema";
      rep.fail("unknown object " + name_of(v));
      throw ValidationError("unknown object " + name_of(v), rep);
    }
    return it->second;
  };
  for (const auto& m : j.at("morphisms")) {
    std::string nm = name_of(m.at("id"));
    mor_index[nm] = static_cast<int>(raw.morphisms.size());
    raw.morphisms.push_back({nm, obj_of(m.at("dom")), obj_of(m.at("cod"))});
  }
  auto mor_of = [&](const ordered_json& v) {
    auto it = mor_index.find(name_of(v));
    if (it == mor_index.end()) {
      Report rep;
      rep.check = "io/schema";
      rep.fail("unknown morphism " + name_of(v));
      throw ValidationError("unknown morphism " + name_of(v), rep);
    }
    return it->second;
  };
  raw.identities.resize(raw.objects.size(), -1);
  for (const auto& [key, val] : j.at("identities").items()) {
    auto it = obj_index.find(key);
    if (it == obj_index.end()) {
      Report rep;
      rep.check = "io/schema";
      rep.fail("identity for unknown object " + key);
      throw ValidationError("identity for unknown object " + key, rep);
    }
    raw.identities[it->second] = mor_of(val);
  }
  for (const auto& row : j.at("compose"))
    raw.compose.push_back({mor_of(row.at(0)), mor_of(row.at(1)), mor_of(row.at(2))});
  return raw;
}

fincat::CatPtr category_from_json(const std::string& text) {
  ordered_json j = parse(text);
  return with_schema([&] { return fincat::make_cat(raw_category_from(j)); });
}

// export names, suffixed with their id when the stored labels collide
struct NameTables {
  std::vector<std::string> obj;
  std::vector<std::string> mor;
};

static std::vector<std::string> uniquify(const std::vector<std::string>& names) {
  std::map<std::string, int> seen;
  for (const auto& n : names) ++seen[n];
  bool clashing = false;
  for (const auto& [n, k] : seen)
    if (k > 1) clashing = true;
  if (!clashing) return names;
  std::vector<std::string> out(names.size());
  for (size_t i = 0; i < names.size(); ++i) out[i] = names[i] + "#" + std::to_string(i);
  return out;
}

static NameTables name_tables(const fincat::FinCategory& c) {
  return {uniquify(c.object_names), uniquify(c.morphism_names)};
}

static ordered_json category_json(const fincat::FinCategory& c, const NameTables& names) {
  ordered_json j;
  j["objects"] = names.obj;
  j["morphisms"] = ordered_json::array();
  for (int f = 0; f < c.morphisms(); ++f)
    j["morphisms"].push_back(
        {{"id", names.mor[f]}, {"dom", names.obj[c.dom(f)]}, {"cod", names.obj[c.cod(f)]}});
  j["identities"] = ordered_json::object();
  for (int x = 0; x < c.objects(); ++x) j["identities"][names.obj[x]] = names.mor[c.identity(x)];
  j["compose"] = ordered_json::array();
  for (int g = 0; g < c.morphisms(); ++g)
    for (int f = 0; f < c.morphisms(); ++f)
      if (c.composable(g, f))
        j["compose"].push_back({names.mor[g], names.mor[f], names.mor[c.compose(g, f)]});
  return j;
}

static ordered_json category_json(const fincat::FinCategory& c) {
  return category_json(c, name_tables(c));
}

std::string category_to_json(const fincat::FinCategory& c) {
  return category_json(c).dump(2) + "\n";
}

relcat::RelPtr relcat_from_json(const std::string& text) {
  ordered_json j = parse(text);
  return with_schema([&] {
  fincat::CatPtr base = fincat::make_cat(raw_category_from(j));
  std::map<std::string, int> mor_index;
  for (int f = 0; f < base->morphisms(); ++f) mor_index[base->mname(f)] = f;
  std::vector<int> weq;
  for (const auto& w : j.at("weq")) weq.push_back(mor_index.at(name_of(w)));
  return relcat::make_relcat(base, weq);
  });
}

static ordered_json relcat_json(const relcat::RelCategory& c, const NameTables& names) {
  ordered_json j = category_json(*c.base, names);
  j["weq"] = ordered_json::array();
  for (int f : c.weq_ids()) j["weq"].push_back(names.mor[f]);
  return j;
}

static ordered_json relcat_json(const relcat::RelCategory& c) {
  return relcat_json(c, name_tables(*c.base));
}

std::string relcat_to_json(const relcat::RelCategory& c) { return relcat_json(c).dump(2) + "\n"; }

permcat::PermPtr permcat_from_json(const std::string& text) {
  ordered_json j = parse(text);
  return with_schema([&] {
  relcat::RelPtr base;
  {
    fincat::CatPtr cat = fincat::make_cat(raw_category_from(j));
    std::map<std::string, int> mor_index;
    for (int f = 0; f < cat->morphisms(); ++f) mor_index[cat->mname(f)] = f;
    std::vector<int> weq;
    for (const auto& w : j.at("weq")) weq.push_back(mor_index.at(name_of(w)));
    base = relcat::make_relcat(cat, weq);
  }
  std::map<std::string, int> obj_index, mor_index;
  for (int x = 0; x < base->base->objects(); ++x) obj_index[base->base->oname(x)] = x;
  for (int f = 0; f < base->base->morphisms(); ++f) mor_index[base->base->mname(f)] = f;

  permcat::RawPermData raw;
  raw.unit = obj_index.at(name_of(j.at("unit")));
  for (const auto& row : j.at("tensor_obj"))
    raw.tensor_obj.push_back({obj_index.at(name_of(row.at(0))), obj_index.at(name_of(row.at(1))),
                              obj_index.at(name_of(row.at(2)))});
  for (const auto& row : j.at("tensor_mor"))
    raw.tensor_mor.push_back({mor_index.at(name_of(row.at(0))), mor_index.at(name_of(row.at(1))),
                              mor_index.at(name_of(row.at(2)))});
  for (const auto& row : j.at("braid"))
    raw.braid.push_back({obj_index.at(name_of(row.at(0))), obj_index.at(name_of(row.at(1))),
                         mor_index.at(name_of(row.at(2)))});
  return permcat::make_perm(base, raw);
  });
}

std::string permcat_to_json(const permcat::PermRelCategory& c) {
  const fincat::FinCategory& k = c.cat();
  NameTables names = name_tables(k);
  ordered_json j = relcat_json(*c.base, names);
  j["unit"] = names.obj[c.unit];
  j["tensor_obj"] = ordered_json::array();
  for (int x = 0; x < k.objects(); ++x)
    for (int y = 0; y < k.objects(); ++y)
      if (c.tob(x, y) >= 0)
        j["tensor_obj"].push_back({names.obj[x], names.obj[y], names.obj[c.tob(x, y)]});
  j["tensor_mor"] = ordered_json::array();
  for (int f = 0; f < k.morphisms(); ++f)
    for (int g = 0; g < k.morphisms(); ++g)
      if (c.tmor(f, g) >= 0)
        j["tensor_mor"].push_back({names.mor[f], names.mor[g], names.mor[c.tmor(f, g)]});
  j["braid"] = ordered_json::array();
  for (int x = 0; x < k.objects(); ++x)
    for (int y = 0; y < k.objects(); ++y)
      if (c.braiding(x, y) >= 0)
        j["braid"].push_back({names.obj[x], names.obj[y], names.mor[c.braiding(x, y)]});
  if (c.truncated) j["bound"] = c.bound_note;
  return j.dump(2) + "\n";
}

std::string algebra_to_json(const factop::FactAlgebra& a, const factop::FactOperad& op) {
  ordered_json j;
  j["n"] = a.n;
  j["obj"] = ordered_json::object();
  for (finstar::Subset s = 0; s < (1u << a.n); ++s)
    j["obj"][finstar::subset_name(s)] = a.ambient->cat().oname(a.obj[s]);
  j["struct"] = ordered_json::object();
  for (size_t i = 0; i < op.arrows.size(); ++i) {
    std::string key;
    for (finstar::Subset s : op.arrows[i].sources)
      key += "[" + finstar::subset_name(s) + "]";
    key += "->" + finstar::subset_name(op.arrows[i].target);
    j["struct"][key] = a.ambient->cat().mname(a.struct_map[i]);
  }
  return j.dump(2) + "\n";
}

static ordered_json functor_json(const fincat::Functor& f) {
  ordered_json j;
  j["object_map"] = f.object_map;
  j["morphism_map"] = f.morphism_map;
  return j;
}

static ordered_json zigzag_json(const relcat::ZigZag& z) {
  ordered_json j = ordered_json::array();
  for (const auto& st : z.steps) {
    ordered_json s;
    s["direction"] = st.forward ? "fwd" : "bwd";
    s["source"] = functor_json(st.t.source_functor);
    s["target"] = functor_json(st.t.target_functor);
    s["components"] = st.t.component;
    j.push_back(std::move(s));
  }
  return j;
}

std::string witness_to_json(const relcat::HomotopyEquivWitness& w) {
  ordered_json j;
  j["f"] = functor_json(w.f.f);
  j["g"] = functor_json(w.g.f);
  j["zz_gf"] = zigzag_json(w.zz_gf);
  j["zz_fg"] = zigzag_json(w.zz_fg);
  return j.dump(2) + "\n";
}

std::string sset_to_json(const sset::TruncatedSSet& x) {
  ordered_json j;
  j["dim"] = x.dim;
  j["count"] = x.count;
  j["face"] = x.face;
  j["degeneracy"] = x.degen;
  return j.dump(2) + "\n";
}

std::string category_to_dot(const fincat::FinCategory& c, const std::vector<char>* weq) {
  std::ostringstream os;
  os << "digraph category {\n";
  for (int x = 0; x < c.objects(); ++x)
    os << "  n" << x << " [label=\"" << c.oname(x) << "\"];\n";
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    os << "  n" << c.dom(f) << " -> n" << c.cod(f) << " [label=\"" << c.mname(f) << "\"";
    if (weq && (*weq)[f]) os << ", style=bold, color=blue";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string reports_to_json(const std::string& config_note, const std::vector<Report>& reports) {
  ordered_json j;
  j["tool"] = "factperm";
  j["config"] = config_note;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json e;
    e["check"] = r.check;
    e["bounds"] = r.bounds;
    e["pass"] = r.pass;
    e["details"] = r.details;
    j["reports"].push_back(std::move(e));
  }
  j["pass"] = all_pass(reports);
  return j.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
    if (!r.bounds.empty()) os << " (" << r.bounds << ")";
    os << "\n";
    for (const auto& d : r.details) os << "       " << d << "\n";
  }
  os << (all_pass(reports) ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

}  // namespace factperm::io
