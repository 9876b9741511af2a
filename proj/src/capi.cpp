#include "ineq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "ineq/io.hpp"
#include "ineq/search.hpp"

using namespace ineq;

struct ineq_family {
  SetFamily fam;
};
struct ineq_dist {
  JointDistribution dist;
};
struct ineq_lattice {
  LatticeSet set;
};
struct ineq_instance {
  SumsetInstance inst;
};

namespace {

thread_local std::string g_last_error;

ineq_status status_of(Err code) {
  switch (code) {
    case Err::parse: return INEQ_ERR_PARSE;
    case Err::invalid_argument: return INEQ_ERR_INVALID_ARGUMENT;
    case Err::empty_set: return INEQ_ERR_EMPTY_SET;
    case Err::nested_pair: return INEQ_ERR_NESTED_PAIR;
    case Err::not_a_cover: return INEQ_ERR_NOT_A_COVER;
    case Err::not_uniform_cover: return INEQ_ERR_NOT_UNIFORM_COVER;
    case Err::not_comparable: return INEQ_ERR_NOT_COMPARABLE;
    case Err::not_in_sumset: return INEQ_ERR_NOT_IN_SUMSET;
    case Err::c_not_contained: return INEQ_ERR_C_NOT_CONTAINED;
    case Err::unordered_context: return INEQ_ERR_UNORDERED_CONTEXT;
    case Err::instance_too_large: return INEQ_ERR_INSTANCE_TOO_LARGE;
    case Err::overflow: return INEQ_ERR_OVERFLOW;
    case Err::io: return INEQ_ERR_IO;
  }
  return INEQ_ERR_UNKNOWN;
}

template <class Fn>
ineq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return INEQ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return INEQ_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return INEQ_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** out_json, const Json& j) { *out_json = dup_string(j.dump()); }

SubsetMask mask_arg(uint32_t bits) { return SubsetMask{bits}; }

const char* relation_name(CompressionRelation r) {
  switch (r) {
    case CompressionRelation::equal: return "equal";
    case CompressionRelation::strictly_compresses: return "strictly_compresses";
    case CompressionRelation::incomparable: return "incomparable";
  }
  return "?";
}

}  // namespace

extern "C" {

const char* ineq_version(void) { return "0.1.0"; }

const char* ineq_last_error(void) { return g_last_error.c_str(); }

void ineq_string_free(char* s) { std::free(s); }

/* ---- families ---- */

ineq_status ineq_family_parse(const char* json, ineq_family** out) {
  return guarded([&] { *out = new ineq_family{parse_family(json)}; });
}

void ineq_family_free(ineq_family* fam) { delete fam; }

ineq_status ineq_family_to_json(const ineq_family* fam, char** out_json) {
  return guarded([&] { set_out(out_json, to_json(fam->fam)); });
}

ineq_status ineq_family_check(const ineq_family* fam, int k, char** out_json) {
  return guarded([&] {
    Json j{{"n", fam->fam.n()},
           {"members", fam->fam.size()},
           {"total_elements", fam->fam.total_elements()},
           {"profile", cover_profile(fam->fam)},
           {"k", k},
           {"k_cover", is_k_cover(fam->fam, k)},
           {"uniform", is_uniform_k_cover(fam->fam, k)}};
    set_out(out_json, j);
  });
}

ineq_status ineq_family_sharp(const ineq_family* fam, char** out_json) {
  return guarded([&] {
    SetFamily sharp = minimal_compression(fam->fam);
    Json j{{"family", to_json(fam->fam)},
           {"sharp", to_json(sharp)},
           {"potential", potential(fam->fam)},
           {"sharp_potential", potential(sharp)},
           {"already_chain", sharp == fam->fam}};
    set_out(out_json, j);
  });
}

ineq_status ineq_family_compress(const ineq_family* fam, int i, int j, char** out_json) {
  return guarded([&] {
    SetFamily next = elementary_compression(fam->fam, i - 1, j - 1);
    Json out{{"family", to_json(fam->fam)},
             {"compressed", to_json(next)},
             {"potential", potential(fam->fam)},
             {"compressed_potential", potential(next)}};
    set_out(out_json, out);
  });
}

ineq_status ineq_family_relation(const ineq_family* from, const ineq_family* to,
                                 char** out_json) {
  return guarded([&] {
    CompressionRelation rel = compression_relation(from->fam, to->fam);
    Json j{{"relation", relation_name(rel)},
           {"comparable", rel != CompressionRelation::incomparable}};
    set_out(out_json, j);
  });
}

/* ---- entropy ---- */

ineq_status ineq_dist_parse(const char* json, ineq_dist** out) {
  return guarded([&] { *out = new ineq_dist{parse_distribution(json)}; });
}

void ineq_dist_free(ineq_dist* d) { delete d; }

ineq_status ineq_entropy_value(const ineq_dist* d, uint32_t subset, double* out_bits) {
  return guarded([&] { *out_bits = subset_entropy(d->dist, mask_arg(subset)); });
}

ineq_status ineq_entropy_submodularity(const ineq_dist* d, uint32_t a, uint32_t b, double tol,
                                       char** out_json) {
  return guarded([&] {
    set_out(out_json, to_json(check_submodularity(d->dist, mask_arg(a), mask_arg(b), tol)));
  });
}

ineq_status ineq_entropy_shearer(const ineq_dist* d, const ineq_family* fam, int k, double tol,
                                 char** out_json) {
  return guarded([&] { set_out(out_json, to_json(verify_shearer(d->dist, fam->fam, k, tol))); });
}

ineq_status ineq_entropy_madiman_tetali(const ineq_dist* d, const ineq_family* fam, int k,
                                        double tol, char** out_json) {
  return guarded(
      [&] { set_out(out_json, to_json(verify_madiman_tetali(d->dist, fam->fam, k, tol))); });
}

ineq_status ineq_entropy_gen1(const ineq_dist* d, const ineq_family* from, const ineq_family* to,
                              double tol, char** out_json) {
  return guarded([&] {
    CompressionRelation rel = compression_relation(from->fam, to->fam);
    Json j = to_json(verify_gen1(d->dist, from->fam, to->fam, tol));
    j["relation"] = relation_name(rel);
    set_out(out_json, j);
  });
}

ineq_status ineq_entropy_gen2(const ineq_dist* d, const ineq_family* fam, double tol,
                              char** out_json) {
  return guarded([&] {
    Json j = to_json(verify_gen2(d->dist, fam->fam, tol));
    j["sharp"] = to_json(minimal_compression(fam->fam));
    set_out(out_json, j);
  });
}

ineq_status ineq_entropy_box(const ineq_dist* d, double tol, char** out_json) {
  return guarded([&] {
    BoxCertificate cert = box_certificate(d->dist);
    set_out(out_json, to_json(cert, verify_box_certificate(d->dist, cert, tol)));
  });
}

/* ---- lattice ---- */

ineq_status ineq_lattice_parse(const char* json, ineq_lattice** out) {
  return guarded([&] { *out = new ineq_lattice{parse_lattice(json)}; });
}

void ineq_lattice_free(ineq_lattice* s) { delete s; }

ineq_status ineq_lattice_project(const ineq_lattice* s, uint32_t subset, char** out_json) {
  return guarded([&] {
    LatticeSet proj = project(s->set, mask_arg(subset));
    Json j{{"subset", to_json(mask_arg(subset))},
           {"projection", to_json(proj)},
           {"size", proj.size()}};
    set_out(out_json, j);
  });
}

ineq_status ineq_lattice_cover(const ineq_lattice* s, const ineq_family* fam, int k,
                               char** out_json) {
  return guarded([&] { set_out(out_json, to_json(verify_uniform_cover(s->set, fam->fam, k))); });
}

ineq_status ineq_lattice_counterexample(char** out_json) {
  return guarded([&] { set_out(out_json, to_json(projection_counterexample())); });
}

/* ---- sumsets ---- */

ineq_status ineq_instance_parse(const char* json, ineq_instance** out) {
  return guarded([&] { *out = new ineq_instance{parse_instance(json)}; });
}

ineq_status ineq_instance_parse_parts(const char* group_json, const char* sets_json,
                                      ineq_instance** out) {
  return guarded(
      [&] { *out = new ineq_instance{parse_instance(std::string(group_json), sets_json)}; });
}

void ineq_instance_free(ineq_instance* inst) { delete inst; }

ineq_status ineq_sumset_cover(const ineq_instance* inst, const ineq_family* fam, int k,
                              double tol, char** out_json) {
  return guarded(
      [&] { set_out(out_json, to_json(verify_sumset_cover(inst->inst, fam->fam, k, tol))); });
}

ineq_status ineq_sumset_gymr(const char* gymr_json, char** out_json) {
  return guarded([&] {
    GymrInput in = parse_gymr(gymr_json);
    set_out(out_json, to_json(verify_gymr(in.A, in.Bs, in.C)));
  });
}

ineq_status ineq_sumset_marking(const ineq_instance* inst, const ineq_family* fam, int k,
                                char** out_json) {
  return guarded(
      [&] { set_out(out_json, to_json(marking_algorithm(inst->inst, fam->fam, k))); });
}

ineq_status ineq_sumset_cd(const ineq_instance* inst, char** out_json) {
  return guarded([&] { set_out(out_json, to_json(verify_cauchy_davenport(inst->inst))); });
}

ineq_status ineq_conjecture_check(const ineq_instance* inst, const char* conjecture, double tol,
                                  char** out_json) {
  return guarded([&] {
    set_out(out_json,
            to_json(conjecture_feasibility(inst->inst, conjecture_from_name(conjecture), tol)));
  });
}

/* ---- search ---- */

ineq_status ineq_search_run(const char* conjecture, const char* catalog_json, int n,
                            int set_size_max, uint64_t seed, uint64_t budget, int sample,
                            ineq_emit_fn emit, void* user, char** out_summary_json) {
  return guarded([&] {
    SearchOptions opt;
    opt.which = conjecture_from_name(conjecture);
    opt.n = n;
    opt.set_size_max = set_size_max;
    opt.seed = seed;
    opt.budget = budget;  // 0 really means zero instances; UINT64_MAX is unlimited
    opt.sample = sample != 0;
    auto catalog = parse_catalog(catalog_json);
    SearchSummary summary = run_search(catalog, opt, [&](const std::string& line) {
      if (emit) emit(line.c_str(), user);
    });
    set_out(out_summary_json, to_json(summary));
  });
}

}  // extern "C"
