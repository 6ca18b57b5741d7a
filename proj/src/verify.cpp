#include "gf4dna/verify.hpp"

#include <sstream>

#include "gf4dna/dna.hpp"

namespace gf4dna {
namespace refdata {

const char* mixed_assignment_matrix_text() {
  return "1 0 0 w 0 0 w W w 1 w W\n"
         "0 1 0 0 w 0 w w W w W 1\n"
         "0 0 1 0 0 w W w w W 1 w\n"
         "w 0 0 1 0 0 w 1 W w w W\n"
         "0 w 0 0 1 0 1 W w W w w\n"
         "0 0 w 0 0 1 W w 1 w W w\n"
         "w W w 1 w W 1 0 0 w 0 0\n"
         "w w W W 1 w 0 1 0 0 0 w\n"
         "W w w w W 1 0 0 1 0 w 0\n"
         "1 W w w w W 0 w 0 1 0 0\n"
         "w 1 W W w w w 0 0 0 1 0\n"
         "W w 1 w W w 0 0 w 0 0 1\n";
}

Gf4Vector mixed_assignment_coeffs() { return vector_from_string("100w00wWw1wW"); }

Gf4Vector mixed_assignment_witness() { return vector_from_string("000000000w0w"); }

const char* g1111_sample_matrix_text() {
  return "1 1 W 0 0 W W W w w W 0 w w 1 w\n"
         "1 1 0 W W 0 W W w w 0 W w w w 1\n"
         "W 0 1 1 W W 0 W W 0 w w 1 w w w\n"
         "0 W 1 1 W W W 0 0 W w w w 1 w w\n"
         "w w W 0 1 1 W 0 w w 1 w 0 W W W\n"
         "w w 0 W 1 1 0 W w w w 1 W 0 W W\n"
         "W 0 w w W 0 1 1 1 w w w W W 0 W\n"
         "0 W w w 0 W 1 1 w 1 w w W W W 0\n"
         "0 W W W w w 1 w 1 1 W 0 w w W 0\n"
         "W 0 W W w w w 1 1 1 0 W w w 0 W\n"
         "W W 0 W 1 w w w W 0 1 1 W 0 w w\n"
         "W W W 0 w 1 w w 0 W 1 1 0 W w w\n"
         "w w 1 w w w W 0 0 W W W 1 1 W 0\n"
         "w w w 1 w w 0 W W 0 W W 1 1 0 W\n"
         "1 w w w W 0 w w W W 0 W W 0 1 1\n"
         "w 1 w w 0 W w w W W W 0 0 W 1 1\n";
}

Gf4Vector g1111_sample_coeffs() { return vector_from_string("11W00WWWwwW0ww1w"); }

std::vector<uint64_t> g1111_sample_gcw() {
  return {32, 0, 0, 0, 4480, 0, 14336, 0, 27840, 0, 14336, 0, 4480, 0, 0, 0, 32};
}

}  // namespace refdata

namespace {

void add(std::vector<CheckOutcome>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

Gf4Matrix build_mixed_assignment() {
  GroupPtr base_group = direct_product(6, 2, ProductListing::block_reversible);
  GroupRingElement base = make_element(base_group, refdata::mixed_assignment_coeffs());
  GroupPtr h1 = block_group(1, 6);
  GroupPtr h2 = block_group(3, 6);
  return omega_unchecked_assignment(base, 6, {h1, h2, h1, h2});
}

}  // namespace

std::vector<CheckOutcome> verify_checks(bool full) {
  std::vector<CheckOutcome> out;

  {
    Gf4Matrix built = build_mixed_assignment();
    Gf4Matrix expected = matrix_from_text(refdata::mixed_assignment_matrix_text());
    add(out, "mixed-assignment 12x12 matrix reproduces bit-exactly", built == expected);

    LinearCode code = LinearCode::from_generator(built);
    const Gf4Vector w = refdata::mixed_assignment_witness();
    const bool in = code.contains(w);
    const bool rev_in = code.contains(reversed(w));
    add(out, "mixed-assignment witness word lies in the code", in);
    add(out, "witness reversal lies outside the code", !rev_in);
    add(out, "mixed-assignment code is not reversible", !is_reversible(code));
  }

  {
    CompositeSpec spec = family_spec("G1111", 16, refdata::g1111_sample_coeffs());
    Gf4Matrix built = omega(spec);
    Gf4Matrix expected = matrix_from_text(refdata::g1111_sample_matrix_text());
    add(out, "G1111 sample 16x16 matrix reproduces bit-exactly", built == expected);

    LinearCode code = LinearCode::from_generator(built);
    add(out, "G1111 sample dimension is 8", code.dimension() == 8,
        "k = " + std::to_string(code.dimension()));
    add(out, "G1111 sample code size is 65536", code.size_decimal() == "65536");
    add(out, "G1111 sample code is reversible", is_reversible(code));
    add(out, "G1111 sample code contains the all-ones word",
        code.contains(Gf4Vector(16, gf1)));

    if (full) {
      DistanceResult d = min_distance(code, DistanceMethod::brute);
      add(out, "G1111 sample minimum distance is 6", d.distance == 6,
          "d = " + std::to_string(d.distance));

      WeightEnumerator we = weight_enumerators(code);
      add(out, "G1111 sample GC-weight enumerator matches",
          we.gcw == refdata::g1111_sample_gcw(), we.gcw_string());

      CheckOptions no_shortcut;
      no_shortcut.allow_shortcut = false;
      ConstraintReport rep = check_constraints(code, 6, HD | RV | RC, no_shortcut);
      add(out, "G1111 sample meets HD+RV+RC at d=6 with 65536 words",
          rep.satisfied && rep.count.to_string() == "65536",
          "count = " + rep.count.to_string());
      ConstraintReport gc = check_constraints(code, 6, HD | RV | RC | GC, no_shortcut);
      add(out, "G1111 sample meets HD+RV+RC+GC at d=6 with 27840 words",
          gc.satisfied && gc.count.to_string() == "27840",
          "count = " + gc.count.to_string());
      ConstraintReport rv = check_constraints(code, 6, HD | RV, no_shortcut);
      ConstraintReport rc = check_constraints(code, 6, HD | RC, no_shortcut);
      add(out, "reverse and reverse-complement counts agree at d=6",
          rv.count == rc.count,
          rv.count.to_string() + " vs " + rc.count.to_string());
    }
  }

  {
    // Closed forms against the block-substitution route.
    const Gf4Vector coeffs = vector_from_string("01wW10WwW10wwW01");
    bool ok12 = closed_form_g12(coeffs) == omega(family_spec("G12", 16, coeffs));
    bool ok22 = closed_form_g22(coeffs) == omega(family_spec("G22", 16, coeffs));
    bool ok32 = closed_form_g32(coeffs) == omega(family_spec("G32", 16, coeffs));
    add(out, "closed-form G12 equals block substitution at n=16", ok12);
    add(out, "closed-form G22 equals block substitution at n=16", ok22);
    add(out, "closed-form G32 equals block substitution at n=16", ok32);
  }

  return out;
}

}  // namespace gf4dna
