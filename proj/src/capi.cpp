#include "gf4dna.h"

#include <cstring>
#include <sstream>
#include <string>

#include "gf4dna/codes.hpp"
#include "gf4dna/dna.hpp"
#include "gf4dna/io.hpp"
#include "gf4dna/search.hpp"
#include "gf4dna/verify.hpp"

using namespace gf4dna;

namespace {

void set_err(char* err, size_t errlen, const char* msg) {
  if (!err || errlen == 0) return;
  std::strncpy(err, msg, errlen - 1);
  err[errlen - 1] = '\0';
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int code_of(const std::exception& e) {
  if (dynamic_cast<const EnumerationBudgetExceeded*>(&e)) return GF4DNA_EBUDGET;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return GF4DNA_EINVAL;
  return GF4DNA_EFAIL;
}

}  // namespace

struct gf4dna_matrix {
  Gf4Matrix m;
};
struct gf4dna_code {
  LinearCode c;
};

extern "C" {

const char* gf4dna_version(void) { return "0.1.0"; }

gf4dna_matrix* gf4dna_build_from_json(const char* spec_json, char* err, size_t errlen) {
  if (!spec_json) {
    set_err(err, errlen, "null descriptor");
    return nullptr;
  }
  try {
    return new gf4dna_matrix{build_from_json(spec_json)};
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

gf4dna_matrix* gf4dna_matrix_parse(const char* text, char* err, size_t errlen) {
  if (!text) {
    set_err(err, errlen, "null text");
    return nullptr;
  }
  try {
    return new gf4dna_matrix{matrix_from_text(text)};
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

int gf4dna_matrix_rows(const gf4dna_matrix* m) {
  return m ? static_cast<int>(m->m.rows()) : GF4DNA_EINVAL;
}

int gf4dna_matrix_cols(const gf4dna_matrix* m) {
  return m ? static_cast<int>(m->m.cols()) : GF4DNA_EINVAL;
}

int gf4dna_matrix_entry(const gf4dna_matrix* m, int row, int col) {
  if (!m || row < 0 || col < 0 || static_cast<size_t>(row) >= m->m.rows() ||
      static_cast<size_t>(col) >= m->m.cols())
    return -1;
  return static_cast<int>(m->m(row, col).bits());
}

char* gf4dna_matrix_to_text(const gf4dna_matrix* m) {
  return m ? dup_string(matrix_to_text(m->m)) : nullptr;
}

void gf4dna_matrix_free(gf4dna_matrix* m) { delete m; }

gf4dna_code* gf4dna_code_create(const gf4dna_matrix* generator, char* err, size_t errlen) {
  if (!generator) {
    set_err(err, errlen, "null generator");
    return nullptr;
  }
  try {
    return new gf4dna_code{LinearCode::from_generator(generator->m)};
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

int gf4dna_code_length(const gf4dna_code* c) {
  return c ? static_cast<int>(c->c.length()) : GF4DNA_EINVAL;
}

int gf4dna_code_dimension(const gf4dna_code* c) {
  return c ? static_cast<int>(c->c.dimension()) : GF4DNA_EINVAL;
}

char* gf4dna_code_size_decimal(const gf4dna_code* c) {
  return c ? dup_string(c->c.size_decimal()) : nullptr;
}

int gf4dna_code_is_reversible(const gf4dna_code* c) {
  if (!c) return GF4DNA_EINVAL;
  return is_reversible(c->c) ? 1 : 0;
}

int gf4dna_code_contains_all_ones(const gf4dna_code* c) {
  if (!c) return GF4DNA_EINVAL;
  return c->c.contains(Gf4Vector(c->c.length(), gf1)) ? 1 : 0;
}

int gf4dna_code_min_distance(const gf4dna_code* c, int method, int* out_distance,
                             int* out_certified, char* err, size_t errlen) {
  if (!c || !out_distance) {
    set_err(err, errlen, "null argument");
    return GF4DNA_EINVAL;
  }
  try {
    DistanceResult r = min_distance(
        c->c, method == GF4DNA_DIST_INFOSET ? DistanceMethod::information_set
                                            : DistanceMethod::brute);
    *out_distance = static_cast<int>(r.distance);
    if (out_certified) *out_certified = r.certified ? 1 : 0;
    return GF4DNA_OK;
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return code_of(e);
  }
}

char* gf4dna_code_gcw(const gf4dna_code* c, char* err, size_t errlen) {
  if (!c) {
    set_err(err, errlen, "null code");
    return nullptr;
  }
  try {
    return dup_string(weight_enumerators(c->c).gcw_string());
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

char* gf4dna_code_cwe_csv(const gf4dna_code* c, char* err, size_t errlen) {
  if (!c) {
    set_err(err, errlen, "null code");
    return nullptr;
  }
  try {
    return dup_string(weight_enumerators(c->c).cwe_csv());
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

char* gf4dna_code_constraint_count(const gf4dna_code* c, int d, int constraints,
                                   int allow_shortcut, int* out_satisfied,
                                   char* err, size_t errlen) {
  if (!c || d < 0) {
    set_err(err, errlen, "bad arguments");
    return nullptr;
  }
  try {
    CheckOptions opts;
    opts.allow_shortcut = allow_shortcut != 0;
    ConstraintReport rep = check_constraints(c->c, static_cast<size_t>(d),
                                             static_cast<ConstraintSet>(constraints), opts);
    if (out_satisfied) *out_satisfied = rep.satisfied ? 1 : 0;
    return dup_string(rep.count.to_string());
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

int gf4dna_code_export_dna(const gf4dna_code* c, const char* path, char* err, size_t errlen) {
  if (!c || !path) {
    set_err(err, errlen, "bad arguments");
    return GF4DNA_EINVAL;
  }
  try {
    write_dna_file(path, enumerate_codewords(c->c));
    return GF4DNA_OK;
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return code_of(e);
  }
}

void gf4dna_code_free(gf4dna_code* c) { delete c; }

char* gf4dna_verify(int full, int* out_failures) {
  std::ostringstream os;
  int failures = 0;
  try {
    for (const CheckOutcome& chk : verify_checks(full != 0)) {
      os << (chk.pass ? "[PASS] " : "[FAIL] ") << chk.name;
      if (!chk.detail.empty()) os << "  (" << chk.detail << ")";
      os << '\n';
      failures += chk.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    os << "[FAIL] verify aborted: " << e.what() << '\n';
    ++failures;
  }
  if (out_failures) *out_failures = failures;
  return dup_string(os.str());
}

long long gf4dna_search_run(const char* config_json, const char* out_path,
                            char* err, size_t errlen) {
  if (!config_json || !out_path) {
    set_err(err, errlen, "bad arguments");
    return GF4DNA_EINVAL;
  }
  try {
    SearchConfig cfg = SearchConfig::from_json(config_json);
    SearchStats stats = run_search_to_file(cfg, out_path);
    return static_cast<long long>(stats.emitted);
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return code_of(e);
  }
}

char* gf4dna_table_render(const char* records_path, int csv, char* err, size_t errlen) {
  if (!records_path) {
    set_err(err, errlen, "bad arguments");
    return nullptr;
  }
  try {
    TableReport rep = render_table(read_records(records_path));
    return dup_string(csv ? rep.csv : rep.text);
  } catch (const std::exception& e) {
    set_err(err, errlen, e.what());
    return nullptr;
  }
}

void gf4dna_string_free(char* s) { delete[] s; }

}  // extern "C"
