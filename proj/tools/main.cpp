// ineq CLI. Thin shell over the C API: reads JSON files, calls the library,
// prints one verdict object per line on stdout and a human summary on stderr.
//
// Exit codes: 0 when every checked statement holds / is feasible, 1 when a
// violation or infeasibility is the result, 2 on usage, parse or precondition
// errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ineq.h"

using nlohmann::json;

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool json_only = false;  // suppress the human summary
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// fnv-1a, matching the library's digest rendering
std::string digest(const std::vector<std::string>& parts) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0x1f;
    h *= 1099511628211ULL;
  };
  for (const auto& p : parts) mix(p);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

[[noreturn]] void die(ineq_status st, const std::string& context) {
  std::cerr << "error (" << context << "): " << ineq_last_error() << " [code " << st << "]\n";
  std::exit(2);
}

json take_json(ineq_status st, char* out, const std::string& context) {
  if (st != INEQ_OK) die(st, context);
  json j = json::parse(out);
  ineq_string_free(out);
  return j;
}

// sequences the C call before consuming its output buffer
template <class Fn>
json run_api(Fn&& fn, const std::string& context) {
  char* out = nullptr;
  ineq_status st = fn(&out);
  return take_json(st, out, context);
}

std::uint32_t parse_subset_flag(const std::string& csv) {
  std::uint32_t bits = 0;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int v = std::stoi(tok);
    if (v < 1 || v > 30) throw CLI::ValidationError("subset elements must be in 1..30");
    bits |= 1u << (v - 1);
  }
  if (!bits) throw CLI::ValidationError("subset flag must list at least one element");
  return bits;
}

// Verdict envelope; exits with the code implied by the verdict string.
int emit_verdict(const Options& opt, const std::string& command,
                 const std::vector<std::string>& inputs, json payload) {
  std::string verdict = "holds";
  if (payload.contains("verdict")) {
    verdict = payload["verdict"].get<std::string>();
  } else if (payload.contains("feasible")) {
    verdict = payload["feasible"].get<bool>() ? "feasible" : "infeasible";
  }
  json envelope{{"command", command}, {"inputs", digest(inputs)}, {"seed", opt.seed},
                {"tol", opt.tol},     {"version", ineq_version()}, {"verdict", verdict},
                {"payload", payload}};
  std::cout << envelope.dump() << "\n";
  if (!opt.json_only) std::cerr << command << ": " << verdict << "\n";
  return verdict == "holds" || verdict == "feasible" ? 0 : 1;
}

struct FamilyHandle {
  ineq_family* p = nullptr;
  explicit FamilyHandle(const std::string& text) {
    if (auto st = ineq_family_parse(text.c_str(), &p); st != INEQ_OK) die(st, "family");
  }
  ~FamilyHandle() { ineq_family_free(p); }
};

struct DistHandle {
  ineq_dist* p = nullptr;
  explicit DistHandle(const std::string& text) {
    if (auto st = ineq_dist_parse(text.c_str(), &p); st != INEQ_OK) die(st, "distribution");
  }
  ~DistHandle() { ineq_dist_free(p); }
};

struct LatticeHandle {
  ineq_lattice* p = nullptr;
  explicit LatticeHandle(const std::string& text) {
    if (auto st = ineq_lattice_parse(text.c_str(), &p); st != INEQ_OK) die(st, "lattice set");
  }
  ~LatticeHandle() { ineq_lattice_free(p); }
};

struct InstanceHandle {
  ineq_instance* p = nullptr;
  InstanceHandle(const std::string& text, const std::string& group_text) {
    ineq_status st = group_text.empty()
                         ? ineq_instance_parse(text.c_str(), &p)
                         : ineq_instance_parse_parts(group_text.c_str(), text.c_str(), &p);
    if (st != INEQ_OK) die(st, "instance");
  }
  ~InstanceHandle() { ineq_instance_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover, entropy and sumset inequality toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "comparison tolerance in bits")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed echoed in output and used by --sample");
  app.add_flag("--json", opt.json_only, "machine output only, no stderr summary");

  int rc = 2;

  // ---- family ----
  auto* family = app.add_subcommand("family", "set-family operations")->fallthrough();
  family->require_subcommand(1);
  {
    auto* sharp = family->add_subcommand("sharp", "minimal compression")->fallthrough();
    static std::string file;
    sharp->add_option("family", file, "family JSON file")->required();
    sharp->callback([&] {
      std::string text = slurp(file);
      FamilyHandle fam(text);
      rc = emit_verdict(opt, "family sharp", {text},
                        run_api([&](char** o) { return ineq_family_sharp(fam.p, o); }, "sharp"));
    });

    auto* compress = family->add_subcommand("compress", "one elementary compression")->fallthrough();
    static std::string cfile;
    static int ci = 0, cj = 0;
    compress->add_option("--i", ci, "first member (1-based, canonical order)")->required();
    compress->add_option("--j", cj, "second member (1-based, canonical order)")->required();
    compress->add_option("family", cfile, "family JSON file")->required();
    compress->callback([&] {
      std::string text = slurp(cfile);
      FamilyHandle fam(text);
      rc = emit_verdict(opt, "family compress", {text},
                        run_api([&](char** o) { return ineq_family_compress(fam.p, ci, cj, o); }, "compress"));
    });

    auto* check = family->add_subcommand("check", "cover profile and k-cover flags")->fallthrough();
    static std::string kfile;
    static int k = 1;
    check->add_option("--k", k, "cover multiplicity")->required();
    check->add_option("family", kfile, "family JSON file")->required();
    check->callback([&] {
      std::string text = slurp(kfile);
      FamilyHandle fam(text);
      json payload = run_api([&](char** o) { return ineq_family_check(fam.p, k, o); }, "check");
      payload["verdict"] = payload["k_cover"].get<bool>() ? "holds" : "violated";
      rc = emit_verdict(opt, "family check", {text}, payload);
    });
  }

  // ---- entropy ----
  auto* entropy = app.add_subcommand("entropy", "entropy inequality verifiers")->fallthrough();
  entropy->require_subcommand(1);
  {
    auto* submod = entropy->add_subcommand("submod", "submodularity of H")->fallthrough();
    static std::string dfile, aset, bset;
    submod->add_option("dist", dfile, "distribution JSON file")->required();
    submod->add_option("--A", aset, "subset, e.g. 1,2")->required();
    submod->add_option("--B", bset, "subset, e.g. 2,3")->required();
    submod->callback([&] {
      std::string text = slurp(dfile);
      DistHandle d(text);
      rc = emit_verdict(opt, "entropy submod", {text, aset, bset},
                        run_api([&](char** o) { return ineq_entropy_submodularity(d.p, parse_subset_flag(aset),
                                                             parse_subset_flag(bset), opt.tol, o); }, "submod"));
    });

    auto* shearer = entropy->add_subcommand("shearer", "k-cover entropy bound")->fallthrough();
    static std::string sdist, sfam;
    static int sk = 1;
    shearer->add_option("--k", sk, "cover multiplicity")->required();
    shearer->add_option("dist", sdist, "distribution JSON file")->required();
    shearer->add_option("family", sfam, "family JSON file")->required();
    shearer->callback([&] {
      std::string dtext = slurp(sdist), ftext = slurp(sfam);
      DistHandle d(dtext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "entropy shearer", {dtext, ftext},
                        run_api([&](char** o) { return ineq_entropy_shearer(d.p, fam.p, sk, opt.tol, o); }, "shearer"));
    });

    auto* mt = entropy->add_subcommand("mt", "two-sided conditional bound")->fallthrough();
    static std::string mdist, mfam;
    static int mk = 1;
    mt->add_option("--k", mk, "cover multiplicity")->required();
    mt->add_option("dist", mdist, "distribution JSON file")->required();
    mt->add_option("family", mfam, "family JSON file")->required();
    mt->callback([&] {
      std::string dtext = slurp(mdist), ftext = slurp(mfam);
      DistHandle d(dtext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "entropy mt", {dtext, ftext},
                        run_api([&](char** o) { return ineq_entropy_madiman_tetali(d.p, fam.p, mk, opt.tol, o); }, "mt"));
    });

    auto* gen1 = entropy->add_subcommand("gen1", "compression-order sum bound")->fallthrough();
    static std::string g1dist, g1a, g1b;
    gen1->add_option("dist", g1dist, "distribution JSON file")->required();
    gen1->add_option("from", g1a, "family JSON file")->required();
    gen1->add_option("to", g1b, "compressed family JSON file")->required();
    gen1->callback([&] {
      std::string dtext = slurp(g1dist), atext = slurp(g1a), btext = slurp(g1b);
      DistHandle d(dtext);
      FamilyHandle famA(atext), famB(btext);
      rc = emit_verdict(opt, "entropy gen1", {dtext, atext, btext},
                        run_api([&](char** o) { return ineq_entropy_gen1(d.p, famA.p, famB.p, opt.tol, o); }, "gen1"));
    });

    auto* gen2 = entropy->add_subcommand("gen2", "minimal-compression sum bound")->fallthrough();
    static std::string g2dist, g2fam;
    gen2->add_option("dist", g2dist, "distribution JSON file")->required();
    gen2->add_option("family", g2fam, "family JSON file")->required();
    gen2->callback([&] {
      std::string dtext = slurp(g2dist), ftext = slurp(g2fam);
      DistHandle d(dtext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "entropy gen2", {dtext, ftext},
                        run_api([&](char** o) { return ineq_entropy_gen2(d.p, fam.p, opt.tol, o); }, "gen2"));
    });

    auto* box = entropy->add_subcommand("box", "chain-rule certificate and sandwich sweep")->fallthrough();
    static std::string bdist;
    box->add_option("dist", bdist, "distribution JSON file")->required();
    box->callback([&] {
      std::string text = slurp(bdist);
      DistHandle d(text);
      rc = emit_verdict(opt, "entropy box", {text},
                        run_api([&](char** o) { return ineq_entropy_box(d.p, opt.tol, o); }, "box"));
    });
  }

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "lattice projection bounds")->fallthrough();
  lattice->require_subcommand(1);
  {
    auto* proj = lattice->add_subcommand("project", "coordinate projection")->fallthrough();
    static std::string pfile, pset;
    proj->add_option("set", pfile, "lattice set JSON file")->required();
    proj->add_option("--A", pset, "coordinates, e.g. 1,2")->required();
    proj->callback([&] {
      std::string text = slurp(pfile);
      LatticeHandle s(text);
      json payload = run_api([&](char** o) { return ineq_lattice_project(s.p, parse_subset_flag(pset), o); }, "project");
      payload["verdict"] = "holds";
      rc = emit_verdict(opt, "lattice project", {text, pset}, payload);
    });

    auto* cover = lattice->add_subcommand("cover", "|S|^k <= prod |S_A| over a k-cover")->fallthrough();
    static std::string cfile, cfam;
    static int ck = 1;
    cover->add_option("--k", ck, "cover multiplicity")->required();
    cover->add_option("set", cfile, "lattice set JSON file")->required();
    cover->add_option("family", cfam, "family JSON file")->required();
    cover->callback([&] {
      std::string stext = slurp(cfile), ftext = slurp(cfam);
      LatticeHandle s(stext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "lattice cover", {stext, ftext},
                        run_api([&](char** o) { return ineq_lattice_cover(s.p, fam.p, ck, o); }, "cover"));
    });

    auto* fig2 = lattice->add_subcommand(
        "fig2", "five-point violation of the compressed-family product bound")->fallthrough();
    fig2->callback([&] {
      json payload = run_api([&](char** o) { return ineq_lattice_counterexample(o); }, "fig2");
      payload["verdict"] =
          payload["violates_compressed_bound"].get<bool>() ? "violated" : "holds";
      rc = emit_verdict(opt, "lattice fig2", {}, payload);
    });
  }

  // ---- sumset ----
  auto* sumset = app.add_subcommand("sumset", "sumset inequality verifiers")->fallthrough();
  sumset->require_subcommand(1);
  static std::string group_file;
  sumset->add_option("--group", group_file, "group JSON file (when the instance file has none)");
  {
    auto* cover = sumset->add_subcommand("cover", "|S|^k <= prod |S_A| for sumsets")->fallthrough();
    static std::string ifile, ffam;
    static int sk2 = 1;
    cover->add_option("--k", sk2, "cover multiplicity")->required();
    cover->add_option("instance", ifile, "instance JSON file")->required();
    cover->add_option("family", ffam, "family JSON file")->required();
    cover->callback([&] {
      std::string itext = slurp(ifile), ftext = slurp(ffam);
      std::string gtext = group_file.empty() ? "" : slurp(group_file);
      InstanceHandle inst(itext, gtext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "sumset cover", {itext, ftext, gtext},
                        run_api([&](char** o) { return ineq_sumset_cover(inst.p, fam.p, sk2, opt.tol, o); }, "cover"));
    });

    auto* gymr = sumset->add_subcommand("gymr", "|A+C|^k <= |C|^{k-1} prod |A+B_i|")->fallthrough();
    static std::string gfile;
    gymr->add_option("spec", gfile, "JSON file with A, B (list of sets), C")->required();
    gymr->callback([&] {
      std::string text = slurp(gfile);
      rc = emit_verdict(opt, "sumset gymr", {text},
                        run_api([&](char** o) { return ineq_sumset_gymr(text.c_str(), o); },
                                "gymr"));
    });

    auto* marking = sumset->add_subcommand("marking", "additive cover bound witness")->fallthrough();
    static std::string mifile, mffile;
    static int mk2 = 1;
    marking->add_option("--k", mk2, "cover multiplicity")->required();
    marking->add_option("instance", mifile, "instance JSON file")->required();
    marking->add_option("family", mffile, "family JSON file")->required();
    marking->callback([&] {
      std::string itext = slurp(mifile), ftext = slurp(mffile);
      std::string gtext = group_file.empty() ? "" : slurp(group_file);
      InstanceHandle inst(itext, gtext);
      FamilyHandle fam(ftext);
      rc = emit_verdict(opt, "sumset marking", {itext, ftext, gtext},
                        run_api([&](char** o) { return ineq_sumset_marking(inst.p, fam.p, mk2, o); }, "marking"));
    });

    auto* cd = sumset->add_subcommand("cd", "Cauchy-Davenport bound")->fallthrough();
    static std::string cdfile;
    cd->add_option("instance", cdfile, "instance JSON file (sets only with --group)")->required();
    cd->callback([&] {
      std::string itext = slurp(cdfile);
      std::string gtext = group_file.empty() ? "" : slurp(group_file);
      InstanceHandle inst(itext, gtext);
      rc = emit_verdict(opt, "sumset cd", {itext, gtext},
                        run_api([&](char** o) { return ineq_sumset_cd(inst.p, o); }, "cd"));
    });
  }

  // ---- search ----
  auto* search = app.add_subcommand("search", "conjecture counterexample search")->fallthrough();
  {
    static std::string which, catalog_file;
    static int n = 2, set_size_max = 3;
    static std::uint64_t budget = UINT64_MAX;
    static bool sample = false;
    search->add_option("conjecture", which, "6.1 or 6.2")->required();
    search->add_option("--groups", catalog_file, "group catalog JSON file")->required();
    search->add_option("--n", n, "number of sets per instance")->capture_default_str();
    search->add_option("--set-size-max", set_size_max, "max set size")->capture_default_str();
    search->add_option("--budget", budget, "max instances (default: full enumeration)");
    search->add_flag("--sample", sample, "seeded random instances instead of enumeration");
    search->callback([&] {
      std::string ctext = slurp(catalog_file);
      struct Ctx {
        std::uint64_t lines = 0;
      } cctx;
      auto emit = [](const char* line, void* user) {
        static_cast<Ctx*>(user)->lines++;
        std::cout << line << "\n";
      };
      char* out = nullptr;
      ineq_status st = ineq_search_run(which.c_str(), ctext.c_str(), n, set_size_max, opt.seed,
                                       budget, sample ? 1 : 0, emit, &cctx, &out);
      json summary = take_json(st, out, "search");
      json envelope{{"command", "search " + which},
                    {"inputs", digest({ctext})},
                    {"seed", opt.seed},
                    {"tol", opt.tol},
                    {"version", ineq_version()},
                    {"summary", summary}};
      std::cout << envelope.dump() << "\n";
      if (!opt.json_only)
        std::cerr << "search " << which << ": " << summary["instances"] << " instances, "
                  << summary["feasible"] << " feasible, " << summary["infeasible"]
                  << " infeasible, " << summary["errors"] << " errors\n";
      rc = summary["infeasible"].get<std::uint64_t>() > 0 ? 1 : 0;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int app_rc = app.exit(e);
    return app_rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
