#include "gf4dna/dna.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace gf4dna {

namespace {
constexpr char kBaseOf[4] = {'A', 'T', 'C', 'G'};

unsigned bits_of_base(char b) {
  switch (b) {
    case 'A': return 0;
    case 'T': return 1;
    case 'C': return 2;
    case 'G': return 3;
    default: throw std::invalid_argument(std::string("bad DNA base '") + b + "'");
  }
}
}  // namespace

DnaWord eta(const Gf4Vector& v) {
  DnaWord w;
  w.reserve(v.size());
  for (Gf4 x : v) w.push_back(kBaseOf[x.bits()]);
  return w;
}

Gf4Vector eta_inverse(const DnaWord& w) {
  Gf4Vector v;
  v.reserve(w.size());
  for (char b : w) v.push_back(Gf4(bits_of_base(b)));
  return v;
}

DnaWord reverse_word(const DnaWord& w) { return DnaWord(w.rbegin(), w.rend()); }

DnaWord complement_word(const DnaWord& w) {
  DnaWord c;
  c.reserve(w.size());
  for (char b : w) c.push_back(kBaseOf[bits_of_base(b) ^ 1u]);
  return c;
}

DnaWord reverse_complement_word(const DnaWord& w) {
  return complement_word(reverse_word(w));
}

size_t gc_weight(const DnaWord& w) {
  size_t c = 0;
  for (char b : w) c += (b == 'C' || b == 'G');
  return c;
}

size_t gc_weight(const Gf4Vector& v) {
  size_t c = 0;
  for (Gf4 x : v) c += (x == gfw || x == gfw2);
  return c;
}

size_t gc_target(size_t n) { return n / 2; }

namespace {

// Codewords packed two bits per symbol, 32 symbols per limb, for the
// quadratic pairwise stage.
struct Packed {
  std::vector<uint64_t> limb;
  bool operator==(const Packed& o) const { return limb == o.limb; }
};

Packed pack(const Gf4Vector& v) {
  Packed p;
  p.limb.assign((v.size() + 31) / 32, 0);
  for (size_t i = 0; i < v.size(); ++i)
    p.limb[i / 32] |= static_cast<uint64_t>(v[i].bits()) << (2 * (i % 32));
  return p;
}

Gf4Vector unpack(const Packed& p, size_t n) {
  Gf4Vector v(n);
  for (size_t i = 0; i < n; ++i)
    v[i] = Gf4(static_cast<unsigned>((p.limb[i / 32] >> (2 * (i % 32))) & 3u));
  return v;
}

size_t packed_distance(const Packed& a, const Packed& b) {
  size_t d = 0;
  for (size_t i = 0; i < a.limb.size(); ++i) {
    const uint64_t x = a.limb[i] ^ b.limb[i];
    d += static_cast<size_t>(std::popcount((x | (x >> 1)) & 0x5555555555555555ull));
  }
  return d;
}

Packed packed_reverse(const Gf4Vector& v) { return pack(reversed(v)); }

Packed packed_reverse_complement(const Gf4Vector& v) {
  Gf4Vector rc = reversed(v);
  for (Gf4& x : rc) x += gf1;
  return pack(rc);
}

}  // namespace

ConstraintReport check_constraints(const LinearCode& code, size_t d,
                                   ConstraintSet which, CheckOptions opts) {
  const size_t n = code.length();
  ConstraintReport rep;
  rep.n = n;
  rep.d = d;
  rep.gc_target = gc_target(n);
  rep.which = which;

  const bool want_hd = which & HD, want_rv = which & RV, want_rc = which & RC;
  const bool want_gc = which & GC;

  // Shortcut: certified minimum distance covers HD; reversibility extends it
  // to RV; together with the all-ones codeword it extends to RC. Only usable
  // without the GC filter (that count needs the enumerator anyway).
  if (opts.allow_shortcut && !want_gc && (want_hd || want_rv || want_rc)) {
    size_t dmin = opts.min_distance_hint;
    if (dmin == 0 && code.dimension() > 0 && code.dimension() <= opts.budget_k)
      dmin = min_distance(code, DistanceMethod::brute, {opts.budget_k}).distance;
    if (dmin >= d && dmin > 0) {
      bool ok = true;
      if (want_rv || want_rc) ok = is_reversible(code);
      if (ok && want_rc) ok = code.contains(Gf4Vector(n, gf1));
      if (ok) {
        rep.satisfied = true;
        rep.used_shortcut = true;
        rep.subset_size = code.size();
        rep.count = code.size();
        return rep;
      }
    }
  }

  std::vector<Gf4Vector> words = enumerate_codewords(code, opts.budget_k);
  if (want_gc) {
    std::vector<Gf4Vector> filtered;
    for (auto& w : words)
      if (gc_weight(w) == rep.gc_target) filtered.push_back(std::move(w));
    words.swap(filtered);
  }
  rep.subset_size = BigUint(words.size());

  const size_t m = words.size();
  std::vector<Packed> pw(m), prev, prc;
  for (size_t i = 0; i < m; ++i) pw[i] = pack(words[i]);
  if (want_rv) {
    prev.resize(m);
    for (size_t i = 0; i < m; ++i) prev[i] = packed_reverse(words[i]);
  }
  if (want_rc) {
    prc.resize(m);
    for (size_t i = 0; i < m; ++i) prc[i] = packed_reverse_complement(words[i]);
  }

  rep.satisfied = true;
  for (size_t i = 0; i < m && rep.satisfied; ++i) {
    for (size_t j = i; j < m; ++j) {
      if (want_hd && i != j && packed_distance(pw[i], pw[j]) < d) {
        rep.witness = {words[i], words[j]};
        rep.satisfied = false;
        break;
      }
      if (want_rv && !(prev[i] == pw[j]) && packed_distance(prev[i], pw[j]) < d) {
        rep.witness = {unpack(prev[i], n), words[j]};
        rep.satisfied = false;
        break;
      }
      if (want_rc && !(prc[i] == pw[j]) && packed_distance(prc[i], pw[j]) < d) {
        rep.witness = {unpack(prc[i], n), words[j]};
        rep.satisfied = false;
        break;
      }
    }
  }
  rep.count = rep.satisfied ? rep.subset_size : BigUint(0);
  return rep;
}

void write_dna_file(const std::string& path, const std::vector<Gf4Vector>& words) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  for (const auto& w : words) out << eta(w) << '\n';
}

std::vector<Gf4Vector> read_dna_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<Gf4Vector> words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    words.push_back(eta_inverse(line));
  }
  return words;
}

}  // namespace gf4dna
