// Command-line front end. Links only the public C API (gf4dna.h).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gf4dna.h"
#include "json.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CString {
  char* s = nullptr;
  ~CString() { gf4dna_string_free(s); }
};

struct Matrix {
  gf4dna_matrix* m = nullptr;
  ~Matrix() { gf4dna_matrix_free(m); }
};

struct Code {
  gf4dna_code* c = nullptr;
  ~Code() { gf4dna_code_free(c); }
};

int cmd_build(const std::string& spec_path, const std::string& spec_inline,
              const std::string& family, const std::string& coeffs,
              const std::string& out_path, bool info, bool dna_out, bool enumerators) {
  std::string spec;
  if (!spec_path.empty()) {
    spec = slurp(spec_path);
  } else if (!spec_inline.empty()) {
    spec = spec_inline;
  } else if (!family.empty() && !coeffs.empty()) {
    nlohmann::json j;
    j["family"] = family;
    j["n"] = coeffs.size();
    j["coeffs"] = coeffs;
    spec = j.dump();
  } else {
    std::cerr << "build: provide --spec, --json, or --family with --coeffs\n";
    return 2;
  }

  char err[256] = {};
  Matrix m{gf4dna_build_from_json(spec.c_str(), err, sizeof err)};
  if (!m.m) {
    std::cerr << "build failed: " << err << "\n";
    return 1;
  }
  CString text{gf4dna_matrix_to_text(m.m)};
  if (out_path.empty()) {
    std::cout << text.s;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text.s;
    if (!out) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return 1;
    }
  }
  if (info || dna_out || enumerators) {
    Code c{gf4dna_code_create(m.m, err, sizeof err)};
    if (!c.c) {
      std::cerr << "code analysis failed: " << err << "\n";
      return 1;
    }
    if (info) {
      CString size{gf4dna_code_size_decimal(c.c)};
      std::cerr << "n = " << gf4dna_code_length(c.c)
                << ", k = " << gf4dna_code_dimension(c.c) << ", |code| = " << size.s
                << ", reversible = " << (gf4dna_code_is_reversible(c.c) ? "yes" : "no")
                << ", all-ones = "
                << (gf4dna_code_contains_all_ones(c.c) ? "yes" : "no") << "\n";
    }
    if (enumerators) {
      CString gcw{gf4dna_code_gcw(c.c, err, sizeof err)};
      if (!gcw.s) {
        std::cerr << "enumerator failed: " << err << "\n";
        return 1;
      }
      CString cwe{gf4dna_code_cwe_csv(c.c, err, sizeof err)};
      std::cout << gcw.s << "\n" << cwe.s;
    }
    if (dna_out) {
      const std::string path = out_path.empty() ? "code.dna" : out_path + ".dna";
      if (gf4dna_code_export_dna(c.c, path.c_str(), err, sizeof err) != GF4DNA_OK) {
        std::cerr << "DNA export failed: " << err << "\n";
        return 1;
      }
      std::cerr << "DNA words written to " << path << "\n";
    }
  }
  return 0;
}

int cmd_verify(bool full) {
  int failures = 0;
  CString report{gf4dna_verify(full ? 1 : 0, &failures)};
  std::cout << report.s;
  std::cout << (failures == 0 ? "all checks passed\n"
                              : std::to_string(failures) + " check(s) failed\n");
  return failures == 0 ? 0 : 1;
}

int cmd_search(const std::string& config_path, const std::string& family, size_t n,
               size_t d, uint64_t seed, uint64_t trials, const std::string& strategy,
               const std::string& coeffs, bool no_bias, double zero_weight,
               size_t max_weight, size_t budget_k, int threads,
               const std::string& out_path) {
  std::string config;
  if (!config_path.empty()) {
    config = slurp(config_path);
  } else {
    nlohmann::json j;
    j["family"] = family;
    j["n"] = n;
    j["d"] = d;
    j["seed"] = seed;
    j["trials"] = trials;
    j["strategy"] = strategy;
    if (!coeffs.empty()) j["coeffs"] = coeffs;
    j["bias_all_ones"] = !no_bias;
    j["zero_weight"] = zero_weight;
    if (max_weight) j["max_distance_weight"] = max_weight;
    j["enum_budget_k"] = budget_k;
    j["threads"] = threads;
    config = j.dump();
  }
  char err[256] = {};
  long long emitted = gf4dna_search_run(config.c_str(), out_path.c_str(), err, sizeof err);
  if (emitted < 0) {
    std::cerr << "search failed: " << err << "\n";
    return 1;
  }
  std::cout << emitted << " record(s) written to " << out_path << "\n";
  return 0;
}

int cmd_table(const std::string& records_path, bool csv) {
  char err[256] = {};
  CString table{gf4dna_table_render(records_path.c_str(), csv ? 1 : 0, err, sizeof err)};
  if (!table.s) {
    std::cerr << "table failed: " << err << "\n";
    return 1;
  }
  std::cout << table.s;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite group codes over GF(4) and reversible DNA codes"};
  app.require_subcommand(1);

  std::string spec_path, spec_inline, family, coeffs, out_path;
  bool info = false, dna_out = false, enumerators = false;
  auto* build = app.add_subcommand("build", "build a generator matrix from a descriptor");
  build->add_option("--spec", spec_path, "JSON descriptor file");
  build->add_option("--json", spec_inline, "inline JSON descriptor");
  build->add_option("--family", family, "family name (G12, G22, G32, Gijkl)");
  build->add_option("--coeffs", coeffs, "coefficient string over {0,1,w,W}");
  build->add_option("--out", out_path, "write the matrix here instead of stdout");
  build->add_flag("--info", info, "print n, k, size and reversibility to stderr");
  build->add_flag("--dna", dna_out, "also export the codewords as DNA words");
  build->add_flag("--enumerators", enumerators,
                  "print the GC-weight enumerator and the complete weight enumerator CSV");

  bool full = false;
  auto* verify = app.add_subcommand("verify", "self-check the bundled reference instances");
  verify->add_flag("--full", full, "include the slow enumerator and pairwise checks");

  std::string config_path, s_family = "G12", strategy = "random", s_coeffs;
  std::string records_out = "records.jsonl";
  size_t s_n = 32, s_d = 4, max_weight = 0, budget_k = 14;
  double zero_weight = 0.25;
  uint64_t seed = 1, trials = 1000;
  int threads = 1;
  bool no_bias = false;
  auto* search = app.add_subcommand("search", "search coefficient space for good codes");
  search->add_option("--config", config_path, "JSON config file (overrides flags)");
  search->add_option("--family", s_family, "family name");
  search->add_option("--n", s_n, "code length (multiple of 16)");
  search->add_option("--d", s_d, "target minimum distance");
  search->add_option("--seed", seed, "RNG seed");
  search->add_option("--trials", trials, "number of candidates");
  search->add_option("--strategy", strategy, "random | exhaustive | fixed");
  search->add_option("--coeffs", s_coeffs, "coefficients for the fixed strategy");
  search->add_flag("--no-bias", no_bias, "do not force the all-ones word into the code");
  search->add_option("--zero-weight", zero_weight,
                     "probability of a zero coefficient (default 0.25 = uniform)");
  search->add_option("--max-weight", max_weight, "information-set enumeration cap");
  search->add_option("--budget-k", budget_k, "enumeration budget (default 14)");
  search->add_option("--threads", threads, "worker threads");
  search->add_option("--out", records_out, "JSONL record output path");

  std::string records_path;
  bool csv = false;
  auto* table = app.add_subcommand("table", "best-found sizes per (family, n, d)");
  table->add_option("--records", records_path, "JSONL record file")->required();
  table->add_flag("--csv", csv, "CSV output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed())
      return cmd_build(spec_path, spec_inline, family, coeffs, out_path, info, dna_out,
                       enumerators);
    if (verify->parsed()) return cmd_verify(full);
    if (search->parsed())
      return cmd_search(config_path, s_family, s_n, s_d, seed, trials, strategy, s_coeffs,
                        no_bias, zero_weight, max_weight, budget_k, threads, records_out);
    if (table->parsed()) return cmd_table(records_path, csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
