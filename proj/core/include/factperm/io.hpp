#pragma once
// Serialization: the category/marking/tensor JSON schemas, algebra and
// witness files, DOT export with distinctly styled marked edges, and the
// byte-stable report emitter. Parsers throw ValidationError with a location
// note on malformed input.

#include <string>
#include <vector>

#include "factperm/factop.hpp"
#include "factperm/permcat.hpp"
#include "factperm/relcat.hpp"
#include "factperm/report.hpp"
#include "factperm/sset.hpp"

namespace factperm::io {

// {"objects":[...], "morphisms":[{"id","dom","cod"}...],
//  "identities":{obj:morId}, "compose":[[g,f,gf]...]}
fincat::CatPtr category_from_json(const std::string& text);
std::string category_to_json(const fincat::FinCategory& c);

// extends the category schema with "weq":[morIds]
relcat::RelPtr relcat_from_json(const std::string& text);
std::string relcat_to_json(const relcat::RelCategory& c);

// extends the relative schema with "unit", "tensor_obj", "tensor_mor",
// "braid" triple tables
permcat::PermPtr permcat_from_json(const std::string& text);
std::string permcat_to_json(const permcat::PermRelCategory& c);

// {"n":..., "obj":{"1,3":objId,...}, "struct":{"[1][2]->1,2":morId,...}}
std::string algebra_to_json(const factop::FactAlgebra& a, const factop::FactOperad& op);

// witness files: zig-zags as ordered transformation lists
std::string witness_to_json(const relcat::HomotopyEquivWitness& w);

std::string sset_to_json(const sset::TruncatedSSet& x);

// DOT: one node per object, one edge per non-identity morphism, marked edges
// styled bold/colored.
std::string category_to_dot(const fincat::FinCategory& c, const std::vector<char>* weq = nullptr);

std::string reports_to_json(const std::string& config_note, const std::vector<Report>& reports);
std::string reports_to_text(const std::vector<Report>& reports);

}  // namespace factperm::io
