// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// nonzero exit on any failure. Runs against the core library directly.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gf4dna/dna.hpp"
#include "gf4dna/search.hpp"
#include "gf4dna/verify.hpp"

using namespace gf4dna;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("unmet: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

Gf4Vector random_coeffs(std::mt19937_64& rng, size_t n, bool sparse = false) {
  Gf4Vector v(n);
  for (auto& x : v) {
    if (sparse && (rng() & 1u))
      x = gf0;
    else
      x = Gf4(static_cast<unsigned>(rng() & 3u));
  }
  return v;
}

// Samples until the family accepts the coefficients (content collisions can
// merge symbols assigned to different auxiliary groups).
CompositeSpec sample_family(std::mt19937_64& rng, const std::string& family, size_t n,
                            bool sparse = false) {
  for (;;) {
    try {
      return family_spec(family, n, random_coeffs(rng, n, sparse));
    } catch (const std::invalid_argument&) {
    }
  }
}

std::string gcw_str(const std::vector<uint64_t>& gcw) {
  std::ostringstream os;
  for (size_t i = 0; i < gcw.size(); ++i) os << (i ? "," : "") << gcw[i];
  return os.str();
}

// --- criterion 1: sample instance reproduction, bit exact ----------------

Criterion criterion1() {
  Criterion c{"criterion 1: order-16 sample instance reproduces bit-exactly"};

  CompositeSpec spec = family_spec("G1111", 16, refdata::g1111_sample_coeffs());
  Gf4Matrix built = omega(spec);
  const Gf4Matrix printed = matrix_from_text(refdata::g1111_sample_matrix_text());
  c.require(built == printed, "composite matrix equals the printed 16x16 entry for entry");

  LinearCode code = LinearCode::from_generator(built);
  c.require(code.size_decimal() == "65536", "code has exactly 65536 codewords");

  CheckOptions brute;
  brute.allow_shortcut = false;
  ConstraintReport rep = check_constraints(code, 6, HD | RV | RC, brute);
  c.require(rep.satisfied && rep.count.to_string() == "65536",
            "all 65536 codewords satisfy HD+RV+RC at d=6 (brute-force pairwise)");

  // stated polynomial at its printed exponents 0,2,4,6,8,10,12,14,16
  std::vector<uint64_t> stated_gcw(17, 0);
  stated_gcw[0] = 16;
  stated_gcw[2] = 128;
  stated_gcw[4] = 4032;
  stated_gcw[6] = 15232;
  stated_gcw[8] = 26720;
  stated_gcw[10] = 15232;
  stated_gcw[12] = 4032;
  stated_gcw[14] = 128;
  stated_gcw[16] = 16;
  WeightEnumerator we = weight_enumerators(code);
  c.require(we.gcw == stated_gcw, "GC-weight enumerator equals the stated polynomial");
  ConstraintReport gc = check_constraints(code, 6, HD | RV | RC | GC, brute);
  c.require(gc.satisfied && gc.count.to_string() == "26720",
            "26720 codewords meet the GC target 8");
  if (we.gcw != stated_gcw) {
    c.note("computed GCW: [" + gcw_str(we.gcw) + "]");
    c.note("stated   GCW: [" + gcw_str(stated_gcw) + "]");
    c.note("the stated enumerator and the printed matrix are mutually inconsistent: the");
    c.note("printed matrix provably generates the computed enumerator (cross-checked by an");
    c.note("independent implementation), while the stated polynomial is generated by the");
    c.note("two-symbol variant 00W00WWWwwW0ww1w (k=8, d=6, reversible, all-ones present,");
    c.note("26720 words at GC weight 8), so the stated results belong to a different");
    c.note("instance than the printed matrix");
  }
  return c;
}

// --- criterion 2: mixed-assignment counterexample ------------------------

Criterion criterion2() {
  Criterion c{"criterion 2: mixed per-position assignment breaks reversibility"};
  GroupPtr g = direct_product(6, 2, ProductListing::block_reversible);
  GroupRingElement base = make_element(g, refdata::mixed_assignment_coeffs());
  GroupPtr h1 = block_group(1, 6), h2 = block_group(3, 6);
  Gf4Matrix built = omega_unchecked_assignment(base, 6, {h1, h2, h1, h2});
  c.require(built == matrix_from_text(refdata::mixed_assignment_matrix_text()),
            "per-position composite equals the printed 12x12 entry for entry");
  LinearCode code = LinearCode::from_generator(built);
  const Gf4Vector w = refdata::mixed_assignment_witness();
  c.require(code.contains(w), "witness word 000000000w0w lies in the code");
  c.require(!code.contains(reversed(w)), "its reversal lies outside the code");
  c.require(!is_reversible(code), "the code is not reversible");
  return c;
}

// --- criterion 3: block reversibility property suite ----------------------

Criterion criterion3() {
  Criterion c{"criterion 3: images of block-listed elements are block reversible"};
  std::mt19937_64 rng(303);
  for (size_t n : {16u, 32u})
    for (size_t r : {4u, 8u}) {
      if ((n / r) % 2 != 0) continue;
      GroupPtr g = direct_product(r, n / r, ProductListing::block_reversible);
      int ok = 0;
      for (int trial = 0; trial < 200; ++trial) {
        GroupRingElement v = make_block_reversible_element(random_coeffs(rng, n), r, g);
        ok += is_block_reversible(partition(sigma(v), r)).reversible;
      }
      c.require(ok == 200, "all 200 random vectors at n=" + std::to_string(n) +
                               ", r=" + std::to_string(r) + " (got " + std::to_string(ok) +
                               ")");
    }
  return c;
}

// --- criterion 4: reversibility of composite codes + reversal permutation --

Criterion criterion4() {
  Criterion c{"criterion 4: composite codes certify reversible; reversal permutation uniform"};
  std::mt19937_64 rng(404);

  for (size_t n : {16u, 32u})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const std::string family = "G" + std::to_string(i) + std::to_string(j);
        int ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
          CompositeSpec spec = sample_family(rng, family, n);
          ok += is_reversible(LinearCode::from_generator(omega(spec)));
        }
        c.require(ok == 100, family + " at n=" + std::to_string(n) +
                                 ": 100/100 reversible (got " + std::to_string(ok) + ")");
      }

  // four-block families: every digit choice valid at the given order
  for (size_t n : {16u, 32u}) {
    const size_t r = n / 4;
    std::vector<int> digits;
    for (int d = 1; d <= 3; ++d) {
      if (d == 2 && r % 8 != 0) continue;
      digits.push_back(d);
    }
    int ok = 0, total = 0;
    for (int a : digits)
      for (int b : digits)
        for (int e : digits)
          for (int f : digits) {
            const std::string family = "G" + std::to_string(a) + std::to_string(b) +
                                       std::to_string(e) + std::to_string(f);
            for (int trial = 0; trial < 3; ++trial) {
              CompositeSpec spec = sample_family(rng, family, n);
              ok += is_reversible(LinearCode::from_generator(omega(spec)));
              ++total;
            }
          }
    c.require(ok == total, "four-block families at n=" + std::to_string(n) + ": " +
                               std::to_string(ok) + "/" + std::to_string(total) +
                               " reversible");
  }

  // reversal-permutation identity: 1000 random vectors per block size
  for (size_t r : {4u, 6u, 8u}) {
    GroupPtr g = direct_product(r, 2, ProductListing::block_reversible);
    Gf4Matrix p_ref;
    bool have_ref = false;
    for (int family = 1; family <= 3; ++family) {
      if (family == 2 && r % 8 != 0) continue;
      GroupPtr h = block_group(family, r);
      Gf4Matrix p = row_reversal_permutation(*h);
      if (have_ref)
        c.require(p == p_ref, "permutation identical across groups of order " +
                                  std::to_string(r));
      p_ref = p;
      have_ref = true;

      int ok = 0;
      Gf4Matrix block;
      for (int trial = 0; trial < 1000; ++trial) {
        if (trial % 50 == 0)
          block = substituted_block(block_map(*g, r, 1), *h, random_coeffs(rng, 2 * r));
        Gf4Vector a = random_coeffs(rng, r);
        ok += reversed(vecmat(a, block)) == vecmat(vecmat(a, p), block);
      }
      c.require(ok == 1000, "reverse(a*B) = (a*P)*B for 1000 vectors, order " +
                                std::to_string(r) + " family " + std::to_string(family) +
                                " (got " + std::to_string(ok) + ")");
    }
  }
  return c;
}

// --- criterion 5: oracle equivalence --------------------------------------

Criterion criterion5() {
  Criterion c{"criterion 5: closed forms match block substitution; distance methods agree"};
  std::mt19937_64 rng(505);

  for (size_t n : {16u, 32u}) {
    int ok12 = 0, ok22 = 0, ok32 = 0;
    for (int trial = 0; trial < 50; ++trial) {
      Gf4Vector coeffs;
      CompositeSpec s12, s22, s32;
      for (;;) {  // resample on symbol collisions
        coeffs = random_coeffs(rng, n);
        try {
          s12 = family_spec("G12", n, coeffs);
          s22 = family_spec("G22", n, coeffs);
          s32 = family_spec("G32", n, coeffs);
          break;
        } catch (const std::invalid_argument&) {
        }
      }
      ok12 += closed_form_g12(coeffs) == omega(s12);
      ok22 += closed_form_g22(coeffs) == omega(s22);
      ok32 += closed_form_g32(coeffs) == omega(s32);
    }
    c.require(ok12 == 50 && ok22 == 50 && ok32 == 50,
              "50 random vectors at n=" + std::to_string(n) + " for G12/G22/G32 (got " +
                  std::to_string(ok12) + "/" + std::to_string(ok22) + "/" +
                  std::to_string(ok32) + ")");
  }

  int agree = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 12 + rng() % 21;
    const size_t rows = 2 + rng() % 9;
    Gf4Matrix gen(rows, n);
    for (size_t i = 0; i < rows; ++i) gen.set_row(i, random_coeffs(rng, n));
    LinearCode code = LinearCode::from_generator(gen);
    if (code.dimension() == 0 || code.dimension() > 10) {
      --trial;
      continue;
    }
    DistanceResult b = min_distance(code, DistanceMethod::brute);
    DistanceResult i = min_distance(code, DistanceMethod::information_set);
    agree += (b.distance == i.distance && i.certified);
  }
  c.require(agree == 50, "brute equals information-set on 50 random codes (got " +
                             std::to_string(agree) + ")");
  return c;
}

// --- criterion 6: table row reproduction + dimension-only checks ----------

Criterion criterion6() {
  Criterion c{"criterion 6: random search reproduces the n=32 table row"};

  SearchConfig cfg;
  cfg.family = "G12";
  cfg.n = 32;
  cfg.target_d = 4;
  cfg.strategy = Strategy::random;
  cfg.seed = 11;        // documented seed
  cfg.trials = 2000;    // well under the 1e5 budget
  cfg.zero_weight = 0.5;
  cfg.bias_all_ones = true;
  cfg.threads = 2;

  std::vector<SearchRecord> records;
  run_search(cfg, [&](const SearchRecord& r) { records.push_back(r); });

  const SearchRecord* hit = nullptr;
  for (const auto& r : records)
    if (r.k == 24 && r.d_lower_bound >= 4 && (!hit || r.candidate < hit->candidate)) hit = &r;
  c.require(hit != nullptr, "a k=24 code with certified d >= 4 within 2000 trials");
  if (hit) {
    c.require(hit->size_decimal == "281474976710656", "size renders as 281474976710656");
    c.require(hit->reversible && hit->all_ones,
              "winning code is reversible and contains the all-ones word");
    c.note("certificate: candidate " + std::to_string(hit->candidate) + ", coeffs " +
           hit->coeffs + ", d=" + std::to_string(hit->d) +
           " (lower bound " + std::to_string(hit->d_lower_bound) +
           (hit->d_certified ? ", exact" : ", bounded") + ", " + hit->d_method + ")");
    TableReport table = render_table(records);
    c.require(table.text.find("281474976710656") != std::string::npos,
              "rendered table contains 281474976710656");
  }

  // larger lengths: minimum-distance certification is out of desk-scale reach,
  // covered by achievable-rank assertions instead
  struct Row {
    const char* family;
    size_t n;
    size_t want_k;
  };
  for (const Row& row : {Row{"G12", 48, 40}, Row{"G22", 48, 30}, Row{"G12", 64, 52},
                         Row{"G1111", 48, 40}}) {
    std::mt19937_64 rng(606);
    size_t best = 0;
    for (int trial = 0; trial < 300; ++trial) {
      try {
        best = std::max(best, LinearCode::from_generator(
                                  omega(family_spec(row.family, row.n,
                                                    random_coeffs(rng, row.n, true))))
                                  .dimension());
      } catch (const std::invalid_argument&) {
      }
      if (best >= row.want_k) break;
    }
    c.require(best >= row.want_k, std::string(row.family) + " at n=" +
                                      std::to_string(row.n) + " achieves rank >= " +
                                      std::to_string(row.want_k) + " (got " +
                                      std::to_string(best) + ")");
  }
  return c;
}

// --- criterion 7: reverse and reverse-complement counts agree -------------

Criterion criterion7() {
  Criterion c{"criterion 7: RV count equals RC count on the order-16 sample at d=6"};
  LinearCode code = LinearCode::from_generator(
      matrix_from_text(refdata::g1111_sample_matrix_text()));
  CheckOptions brute;
  brute.allow_shortcut = false;
  ConstraintReport rv = check_constraints(code, 6, HD | RV, brute);
  ConstraintReport rc = check_constraints(code, 6, HD | RC, brute);
  c.require(rv.count == rc.count, "counts equal (" + rv.count.to_string() + " vs " +
                                      rc.count.to_string() + ")");
  c.require(rv.satisfied && rv.count.to_string() == "65536", "RV count is 65536");
  c.require(rc.satisfied && rc.count.to_string() == "65536", "RC count is 65536");
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<Criterion (*)()> criteria = {criterion1, criterion2, criterion3, criterion4,
                                           criterion5, criterion6, criterion7};
  int failures = 0;
  for (auto* fn : criteria) {
    const auto t0 = clock::now();
    Criterion c = fn();
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::printf("[%s] %s (%lld ms)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                static_cast<long long>(ms));
    for (const auto& note : c.notes) std::printf("       %s\n", note.c_str());
    failures += c.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
