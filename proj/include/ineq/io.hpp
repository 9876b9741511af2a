#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ineq/conjecture.hpp"
#include "ineq/dist.hpp"
#include "ineq/entropy.hpp"
#include "ineq/family.hpp"
#include "ineq/lattice.hpp"
#include "ineq/marking.hpp"
#include "ineq/sumset.hpp"

namespace ineq {

using Json = nlohmann::json;

// ---- parsing (all element indices in files are 1-based; group elements are
// ---- 0-based residues/indices, or coordinate arrays for Z^d) ----

// {"n": 6, "sets": [[2,3,4],[1,3,5],...]}
SetFamily parse_family(const std::string& text);

// {"n": 3, "supports": [[0,1],[0,1],[0,1]],
//  "pmf": [{"x":[0,0,0],"p":"1/2"},{"x":[1,1,1],"p":"1/2"}]}
JointDistribution parse_distribution(const std::string& text);

// {"n": 3, "points": [[0,0,0],[0,0,1],...]}
LatticeSet parse_lattice(const std::string& text);

// {"kind":"cyclic","m":13} | {"kind":"free-abelian","d":1}
// | {"kind":"cayley","order":6,"identity":0,"table":[[...]]}
GroupContext parse_group(const Json& j);
GroupContext parse_group(const std::string& text);

// {"group": <group object>, "sets": [[0,1,3,5],...]}; pass `sets_only` plus a
// separate group when the file carries only {"sets": ...}
SumsetInstance parse_instance(const std::string& text);
SumsetInstance parse_instance(const std::string& group_text, const std::string& sets_text);

struct GymrInput {
  std::vector<std::int64_t> A;
  std::vector<std::vector<std::int64_t>> Bs;
  std::vector<std::int64_t> C;
};

// {"A":[...], "B":[[...],[...]], "C":[...]}
GymrInput parse_gymr(const std::string& text);

struct CatalogEntry {
  std::string name;
  GroupContext group;
};

// {"groups":[{"name":"C2","kind":"cayley",...}, ...]}
std::vector<CatalogEntry> parse_catalog(const std::string& text);

// ---- serialization ----

Json to_json(SubsetMask m);
Json to_json(const SetFamily& fam);
Json to_json(const LatticeSet& s);
Json to_json(const EntropyReport& r);
Json to_json(const MadimanTetaliReport& r);
Json to_json(const BoxCertificate& cert, const BoxCheckReport& check);
Json to_json(const LatticeCoverReport& r);
Json to_json(const ProjectionCounterexample& ce);
Json to_json(const SumsetCoverReport& r);
Json to_json(const GymrReport& r);
Json to_json(const CauchyDavenportReport& r);
Json to_json(const MarkingWitness& w);
Json to_json(const ConjectureReport& r);
Json elem_json(const Elem& e, const GroupContext& ctx);

// FNV-1a over raw bytes, rendered as 16 hex digits; used for input digests
std::string digest(const std::string& bytes);
std::string digest(const std::vector<std::string>& parts);

}  // namespace ineq
