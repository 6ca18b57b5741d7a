#ifndef GF4DNA_VERIFY_HPP
#define GF4DNA_VERIFY_HPP

#include <string>
#include <vector>

#include "gf4dna/composite.hpp"

namespace gf4dna {

// Bundled reference instances with independently known-good results, used by
// the self-check command and the test suites.
namespace refdata {

// 12x12 composite matrix over C_6 x C_2 built with a mixed per-position
// assignment (dihedral on blocks 1 and 3, reversible-listed C_6 on blocks 2
// and 4). The assignment breaks the same-group pairing rule, and the
// resulting code is certifiably not reversible.
const char* mixed_assignment_matrix_text();
Gf4Vector mixed_assignment_coeffs();
// A codeword of that code whose reversal lies outside it.
Gf4Vector mixed_assignment_witness();

// 16x16 G1111 instance over C_4 x C_4: dimension 8, minimum distance 6,
// reversible, contains the all-ones word.
const char* g1111_sample_matrix_text();
Gf4Vector g1111_sample_coeffs();
// GC-weight enumerator coefficients of that code, index = GC weight.
std::vector<uint64_t> g1111_sample_gcw();

}  // namespace refdata

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Self-checks over the bundled reference instances. The quick set rebuilds
// both matrices bit-exactly and certifies (non-)reversibility; the full set
// adds minimum distance, the enumerators and the quadratic constraint counts
// (a few minutes of work).
std::vector<CheckOutcome> verify_checks(bool full);

}  // namespace gf4dna

#endif
