#include "ineq/io.hpp"

#include <algorithm>
#include <cstdio>

namespace ineq {

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Err::parse, std::string("invalid JSON: ") + e.what());
  }
}

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    fail(Err::parse, std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

const Json& get_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(Err::parse, std::string("missing or non-array field \"") + key + "\"");
  return j[key];
}

Rat parse_prob(const Json& v) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
  fail(Err::parse, "probabilities must be rational strings like \"1/2\"");
}

Elem parse_elem(const Json& v, int dim) {
  if (v.is_number_integer()) {
    if (dim != 1) fail(Err::parse, "scalar element in a multi-dimensional context");
    return {v.get<std::int64_t>()};
  }
  if (v.is_array()) {
    Elem e;
    for (const auto& c : v) {
      if (!c.is_number_integer()) fail(Err::parse, "element coordinates must be integers");
      e.push_back(c.get<std::int64_t>());
    }
    if (static_cast<int>(e.size()) != dim) fail(Err::parse, "element arity mismatch");
    return e;
  }
  fail(Err::parse, "group elements must be integers or integer arrays");
}

}  // namespace

SetFamily parse_family(const std::string& text) {
  Json j = parse_text(text);
  int n = get_int(j, "n");
  std::vector<SubsetMask> members;
  for (const auto& set : get_array(j, "sets")) {
    if (!set.is_array()) fail(Err::parse, "family members must be arrays of elements");
    std::vector<int> elems;
    for (const auto& e : set) {
      if (!e.is_number_integer()) fail(Err::parse, "family elements must be integers");
      elems.push_back(e.get<int>());
    }
    members.push_back(SubsetMask::from_elements(elems, n));
  }
  return SetFamily(n, std::move(members));
}

JointDistribution parse_distribution(const std::string& text) {
  Json j = parse_text(text);
  int n = get_int(j, "n");
  std::vector<std::vector<std::int64_t>> supports;
  for (const auto& sup : get_array(j, "supports")) {
    if (!sup.is_array()) fail(Err::parse, "supports must be arrays");
    std::vector<std::int64_t> values;
    for (const auto& v : sup) {
      if (!v.is_number_integer()) fail(Err::parse, "support values must be integers");
      values.push_back(v.get<std::int64_t>());
    }
    supports.push_back(std::move(values));
  }
  if (static_cast<int>(supports.size()) != n) fail(Err::parse, "supports count differs from n");
  std::vector<std::pair<Tuple, Rat>> entries;
  for (const auto& row : get_array(j, "pmf")) {
    if (!row.is_object() || !row.contains("x") || !row.contains("p") || !row["x"].is_array())
      fail(Err::parse, "pmf rows must be {\"x\":[...],\"p\":\"a/b\"}");
    Tuple x;
    for (const auto& v : row["x"]) {
      if (!v.is_number_integer()) fail(Err::parse, "pmf tuples must hold integers");
      x.push_back(v.get<std::int64_t>());
    }
    entries.emplace_back(std::move(x), parse_prob(row["p"]));
  }
  return JointDistribution(std::move(supports), std::move(entries));
}

LatticeSet parse_lattice(const std::string& text) {
  Json j = parse_text(text);
  int n = get_int(j, "n");
  std::vector<Point> points;
  for (const auto& p : get_array(j, "points")) {
    if (!p.is_array()) fail(Err::parse, "points must be coordinate arrays");
    Point q;
    for (const auto& c : p) {
      if (!c.is_number_integer()) fail(Err::parse, "coordinates must be integers");
      q.push_back(c.get<std::int64_t>());
    }
    if (static_cast<int>(q.size()) != n) fail(Err::parse, "point arity differs from n");
    points.push_back(std::move(q));
  }
  return LatticeSet(n, std::move(points));
}

GroupContext parse_group(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Err::parse, "group needs a string \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  std::string name = j.value("name", std::string());
  if (kind == "free-abelian") return GroupContext::free_abelian(get_int(j, "d"));
  if (kind == "cyclic") return GroupContext::cyclic(get_int(j, "m"));
  if (kind == "cayley") {
    std::vector<std::vector<int>> table;
    for (const auto& row : get_array(j, "table")) {
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) fail(Err::parse, "table entries must be integers");
        r.push_back(v.get<int>());
      }
      table.push_back(std::move(r));
    }
    if (j.contains("order") && get_int(j, "order") != static_cast<int>(table.size()))
      fail(Err::parse, "declared order differs from table size");
    return GroupContext::cayley(std::move(table), get_int(j, "identity"), name);
  }
  fail(Err::parse, "unknown group kind \"" + kind + "\"");
}

GroupContext parse_group(const std::string& text) { return parse_group(parse_text(text)); }

namespace {

SumsetInstance instance_from(const GroupContext& g, const Json& sets_json) {
  std::vector<std::vector<Elem>> sets;
  for (const auto& set : sets_json) {
    if (!set.is_array()) fail(Err::parse, "instance sets must be arrays");
    std::vector<Elem> s;
    for (const auto& v : set) s.push_back(parse_elem(v, g.dim()));
    sets.push_back(std::move(s));
  }
  return SumsetInstance(g, std::move(sets));
}

}  // namespace

SumsetInstance parse_instance(const std::string& text) {
  Json j = parse_text(text);
  if (!j.contains("group")) fail(Err::parse, "instance needs a \"group\" object");
  GroupContext g = parse_group(j["group"]);
  return instance_from(g, get_array(j, "sets"));
}

SumsetInstance parse_instance(const std::string& group_text, const std::string& sets_text) {
  GroupContext g = parse_group(group_text);
  Json j = parse_text(sets_text);
  return instance_from(g, get_array(j, "sets"));
}

GymrInput parse_gymr(const std::string& text) {
  Json j = parse_text(text);
  GymrInput in;
  auto ints = [](const Json& arr) {
    std::vector<std::int64_t> out;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) fail(Err::parse, "set values must be integers");
      out.push_back(v.get<std::int64_t>());
    }
    return out;
  };
  in.A = ints(get_array(j, "A"));
  for (const auto& b : get_array(j, "B")) {
    if (!b.is_array()) fail(Err::parse, "\"B\" must be an array of sets");
    in.Bs.push_back(ints(b));
  }
  in.C = ints(get_array(j, "C"));
  return in;
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  Json j = parse_text(text);
  std::vector<CatalogEntry> out;
  for (const auto& g : get_array(j, "groups")) {
    CatalogEntry e{g.value("name", std::string()), parse_group(g)};
    if (e.name.empty()) e.name = e.group.name();
    out.push_back(std::move(e));
  }
  if (out.empty()) fail(Err::parse, "catalog holds no groups");
  return out;
}

// ---- serialization ----

Json to_json(SubsetMask m) { return Json(m.elements()); }

Json to_json(const SetFamily& fam) {
  Json sets = Json::array();
  for (const auto& m : fam.members()) sets.push_back(to_json(m));
  return Json{{"n", fam.n()}, {"sets", sets}};
}

Json to_json(const LatticeSet& s) {
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back(p);
  return Json{{"n", s.n()}, {"points", pts}};
}

Json to_json(const EntropyReport& r) {
  return Json{{"lhs", r.lhs},
              {"rhs", r.rhs},
              {"slack", r.slack()},
              {"tol", r.tol},
              {"verdict", verdict_name(r.verdict())}};
}

Json to_json(const MadimanTetaliReport& r) {
  return Json{{"lower", to_json(r.lower)},
              {"upper", to_json(r.upper)},
              {"verdict", r.holds() ? "holds" : "violated"}};
}

Json to_json(const BoxCertificate& cert, const BoxCheckReport& check) {
  return Json{{"h", cert.h},
              {"min_lower_slack", check.min_lower_slack},
              {"min_upper_slack", check.min_upper_slack},
              {"sum_error", check.sum_error},
              {"worst_subset", to_json(check.worst)},
              {"tol", check.tol},
              {"verdict", check.holds ? "holds" : "violated"}};
}

Json to_json(const LatticeCoverReport& r) {
  return Json{{"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()},
              {"projection_sizes", r.projection_sizes},
              {"verdict", r.holds ? "holds" : "violated"}};
}

Json to_json(const ProjectionCounterexample& ce) {
  return Json{{"set", to_json(ce.set)},
              {"family", to_json(ce.original)},
              {"compressed_family", to_json(ce.compressed)},
              {"sizes",
               Json{{"full", ce.full_size},
                    {"p1", ce.size_1},
                    {"p12", ce.size_12},
                    {"p13", ce.size_13}}},
              {"compressed_product", ce.compressed_product},
              {"original_product", ce.original_product},
              {"violates_compressed_bound", ce.compressed_product > ce.original_product}};
}

Json to_json(const SumsetCoverReport& r) {
  return Json{{"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()},
              {"full_size", r.full_size},
              {"member_sizes", r.member_sizes},
              {"embedded", to_json(r.embedded)},
              {"embedding_consistent", r.embedding_consistent},
              {"lambda",
               Json{{"feasible", r.lambda.feasible},
                    {"witness", r.lambda.lambda},
                    {"reverified", r.lambda.reverified},
                    {"max_rel_violation", r.lambda.max_rel_violation}}},
              {"verdict", r.holds ? "holds" : "violated"}};
}

Json to_json(const GymrReport& r) {
  return Json{{"k", r.k},
              {"lhs", r.lhs.to_string()},
              {"rhs", r.rhs.to_string()},
              {"ac_size", r.ac_size},
              {"c_size", r.c_size},
              {"ab_sizes", r.ab_sizes},
              {"equality", r.equality},
              {"embedded", to_json(r.embedded)},
              {"embedded_size", r.embedded_size},
              {"embedded_c_projection", r.embedded_c_proj},
              {"verdict", r.holds ? "holds" : "violated"}};
}

Json to_json(const CauchyDavenportReport& r) {
  Json j{{"sum_size", r.sum_size},
         {"excess_sum", r.excess_sum},
         {"p", r.p},
         {"verdict", r.holds ? "holds" : "violated"}};
  if (r.pair_cover) {
    j["additive_cover"] = Json{{"k", r.pair_cover->k},
                               {"lhs", r.pair_cover->lhs},
                               {"rhs", r.pair_cover->rhs},
                               {"holds", r.pair_cover->holds}};
  }
  return j;
}

Json elem_json(const Elem& e, const GroupContext& ctx) {
  if (ctx.dim() == 1) return Json(e[0]);
  return Json(e);
}

Json to_json(const MarkingWitness& w) {
  Json marks = Json::array();
  for (int r = 0; r < w.k; ++r) {
    Json row = Json::array();
    for (const auto& cell : w.cell_marks[r]) {
      Json c = Json::array();
      for (const auto& e : cell) c.push_back(e.size() == 1 ? Json(e[0]) : Json(e));
      row.push_back(c);
    }
    marks.push_back(row);
  }
  Json grid = Json::array();
  for (const auto& row : w.grid) grid.push_back(row);
  return Json{{"k", w.k},
              {"grid", grid},
              {"marks", marks},
              {"full_size", w.full_size},
              {"restricted_size", w.restricted_size},
              {"total_marks", w.total_marks},
              {"cover_sum", w.cover_sum},
              {"audits",
               Json{{"grid_partitions", w.grid_partitions},
                    {"marks_distinct", w.marks_distinct},
                    {"marks_in_restricted", w.marks_in_restricted},
                    {"marks_complete", w.marks_complete},
                    {"chain_holds", w.chain_holds}}},
              {"verdict", (w.grid_partitions && w.marks_distinct && w.marks_in_restricted &&
                           w.marks_complete && w.chain_holds)
                              ? "holds"
                              : "violated"}};
}

Json to_json(const ConjectureReport& r) {
  Json j{{"conjecture", conjecture_name(r.which)},
         {"feasible", r.feasible},
         {"reverified", r.reverified},
         {"full_size", r.full_size}};
  Json sizes = Json::object();
  for (const auto& [mask, sz] : r.sizes) sizes[SubsetMask{mask}.to_string()] = sz;
  j["sizes"] = sizes;
  if (r.feasible) {
    if (r.which == Conjecture::product_box) {
      j["witness"] = r.lambda;
    } else {
      Json w = Json::array();
      for (const auto& s : r.sigma) w.push_back(s.to_string());
      j["witness"] = w;
    }
  } else {
    Json cert = Json::array();
    if (r.which == Conjecture::product_box) {
      for (const auto& [mask, mult] : r.certificate_log)
        cert.push_back(Json{{"subset", to_json(SubsetMask{mask})}, {"multiplier", mult}});
    } else {
      for (const auto& [mask, mult] : r.certificate_exact)
        cert.push_back(Json{{"subset", to_json(SubsetMask{mask})}, {"multiplier", mult.to_string()}});
    }
    j["violation"] = Json{{"certificate", cert}};
  }
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const std::vector<std::string>& parts) {
  std::string all;
  for (const auto& p : parts) {
    all += p;
    all += '\x1f';
  }
  return digest(all);
}

}  // namespace ineq
