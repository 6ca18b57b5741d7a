#ifndef GF4DNA_DNA_HPP
#define GF4DNA_DNA_HPP

#include <optional>
#include <string>

#include "gf4dna/codes.hpp"

namespace gf4dna {

// GF(4) <-> DNA correspondence: 0 <-> A, 1 <-> T, w <-> C, w^2 <-> G.
// Watson-Crick complement is A<->T, C<->G, i.e. adding 1 on the GF(4) side.
using DnaWord = std::string;

DnaWord eta(const Gf4Vector& v);
Gf4Vector eta_inverse(const DnaWord& w);

DnaWord reverse_word(const DnaWord& w);
DnaWord complement_word(const DnaWord& w);
DnaWord reverse_complement_word(const DnaWord& w);

size_t gc_weight(const DnaWord& w);
size_t gc_weight(const Gf4Vector& v);

size_t gc_target(size_t n);  // floor(n/2)

// Constraint selection flags.
enum Constraint : unsigned {
  HD = 1u,  // pairwise Hamming distance >= d
  RV = 2u,  // d(reverse(x), y) >= d over pairs with reverse(x) != y
  RC = 4u,  // d(reverse_complement(x), y) >= d likewise
  GC = 8u,  // fixed GC weight floor(n/2)
};
using ConstraintSet = unsigned;

struct ConstraintReport {
  size_t n = 0;
  size_t d = 0;
  size_t gc_target = 0;
  ConstraintSet which = 0;
  bool satisfied = false;   // the evaluated word set meets the pairwise constraints
  BigUint count;            // words jointly satisfying the selection (0 when violated)
  BigUint subset_size;      // size of the evaluated set (gc-filtered when GC selected)
  bool used_shortcut = false;
  std::optional<std::pair<Gf4Vector, Gf4Vector>> witness;  // a violating pair
};

struct CheckOptions {
  size_t budget_k = kDefaultEnumBudgetK;
  bool allow_shortcut = true;  // reversible + all-ones + min distance route
  size_t min_distance_hint = 0;  // already-certified minimum distance, 0 = unknown
};

// Counts codewords of the code (as a DNA code through eta) that jointly meet
// the selected constraints at distance d. With GC selected the pairwise
// constraints are evaluated on the subset of target-GC-weight words. The
// scalable path for HD+RV+RC on large codes is the reversibility shortcut:
// a certified-reversible code containing the all-ones vector with minimum
// distance >= d satisfies all three, so the count is the full code size.
ConstraintReport check_constraints(const LinearCode& code, size_t d,
                                   ConstraintSet which, CheckOptions opts = {});

// Plain-text export/import: one ATCG word per line.
void write_dna_file(const std::string& path, const std::vector<Gf4Vector>& words);
std::vector<Gf4Vector> read_dna_file(const std::string& path);

}  // namespace gf4dna

#endif
