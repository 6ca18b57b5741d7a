#ifndef GF4DNA_SEARCH_HPP
#define GF4DNA_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gf4dna/codes.hpp"
#include "gf4dna/composite.hpp"

namespace gf4dna {

enum class Strategy { exhaustive, random, fixed };

struct SearchConfig {
  std::string family = "G12";
  size_t n = 32;
  size_t target_d = 4;
  Strategy strategy = Strategy::random;
  uint64_t seed = 0;
  uint64_t trials = 0;          // random: sample count; exhaustive: cap (0 = all)
  std::string fixed_coeffs;     // fixed strategy only
  bool bias_all_ones = true;    // only keep candidates whose code contains the
                                // all-ones word (the scalable RC route needs it)
  double zero_weight = 0.25;    // probability mass on the zero coefficient; 0.25 = uniform
                                // (rank-deficient codes need sparser vectors)
  size_t enum_budget_k = kDefaultEnumBudgetK;
  size_t max_distance_weight = 0;  // information-set pass cap; 0 = target_d
  int threads = 1;

  std::string to_json() const;
  static SearchConfig from_json(const std::string& text);
};

struct SearchRecord {
  std::string family;
  size_t n = 0;
  size_t target_d = 0;
  uint64_t seed = 0;
  uint64_t candidate = 0;  // logical timestamp; deterministic tie-break key
  std::string coeffs;
  size_t k = 0;
  size_t d = 0;             // lightest weight seen (the distance when certified)
  size_t d_lower_bound = 0;
  bool d_certified = false;
  std::string d_method;
  bool reversible = false;
  bool all_ones = false;
  bool rc_established = false;  // the HD+RV+RC count below is proven
  std::string rc_count;         // decimal
  long long gc_count = -1;      // words at the GC target; -1 when out of budget
  std::string size_decimal;     // 4^k
  uint64_t wall_ms = 0;         // informational only, not covered by determinism

  std::string to_json() const;
  static SearchRecord from_json(const std::string& line);
};

struct SearchStats {
  uint64_t candidates = 0;
  uint64_t emitted = 0;
  uint64_t skipped_collision = 0;  // coefficient collisions merging symbols
  uint64_t skipped_rank = 0;       // zero-dimension candidates
  uint64_t skipped_no_all_ones = 0;  // bias filter rejections
  uint64_t below_target = 0;
};

// Evaluates candidate coefficient vectors for the configured family and
// emits a record for every candidate whose code certifies minimum distance
// at least target_d. Deterministic for a fixed (config, seed): candidates are
// generated up front and records are sunk in candidate order even when
// evaluated on several threads.
SearchStats run_search(const SearchConfig& cfg,
                       const std::function<void(const SearchRecord&)>& sink);

// Convenience: run and write one JSON record per line.
SearchStats run_search_to_file(const SearchConfig& cfg, const std::string& out_path);

std::vector<SearchRecord> read_records(const std::string& path);
void append_records(const std::string& path, const std::vector<SearchRecord>& records);

// Per (family, n, target_d): the largest code found, exact decimal size,
// ties broken by earliest candidate. text = aligned report, csv = raw rows.
struct TableReport {
  std::string text;
  std::string csv;
};
TableReport render_table(const std::vector<SearchRecord>& records);

}  // namespace gf4dna

#endif
