#include "gf4dna/io.hpp"

#include <fstream>
#include <sstream>

#include "gf4dna/groupring.hpp"
#include "json.hpp"

namespace gf4dna {

using nlohmann::json;

GroupPtr group_from_json(const std::string& text) {
  json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") return cyclic(j.at("m").get<size_t>());
  if (kind == "dihedral") return dihedral(j.at("half").get<size_t>());
  if (kind == "quasidihedral") return quasidihedral(j.at("half").get<size_t>());
  if (kind == "product") {
    const std::string listing = j.value("listing", "natural");
    ProductListing pl;
    if (listing == "natural") pl = ProductListing::natural;
    else if (listing == "block_reversible") pl = ProductListing::block_reversible;
    else throw std::invalid_argument("unknown product listing '" + listing + "'");
    return direct_product(j.at("r").get<size_t>(), j.at("m").get<size_t>(), pl);
  }
  if (kind == "block_group")
    return block_group(j.at("family").get<int>(), j.at("r").get<size_t>());
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

std::string group_descriptor_json(const std::string& kind, size_t a, size_t b,
                                  const std::string& listing) {
  json j;
  j["kind"] = kind;
  if (kind == "cyclic") j["m"] = a;
  else if (kind == "dihedral" || kind == "quasidihedral") j["half"] = a;
  else if (kind == "product") {
    j["r"] = a;
    j["m"] = b;
    j["listing"] = listing;
  } else if (kind == "block_group") {
    j["family"] = static_cast<int>(a);
    j["r"] = b;
  }
  return j.dump();
}

Gf4Matrix build_from_json(const std::string& text) {
  json j = json::parse(text);
  const Gf4Vector coeffs = vector_from_string(j.at("coeffs").get<std::string>());
  if (j.contains("family")) {
    std::string family = j.at("family").get<std::string>();
    if (j.contains("indices")) {
      // alternative spelling: family "Gij"/"Gijkl" with an explicit index array
      family = "G";
      for (int d : j.at("indices").get<std::vector<int>>()) family += std::to_string(d);
    }
    const size_t n = j.value("n", coeffs.size());
    if (n != coeffs.size())
      throw std::invalid_argument("build: n does not match the coefficient count");
    if (j.contains("r") && j.at("r").get<size_t>() != n / family_grid(family))
      throw std::invalid_argument("build: r does not match the family's block size");
    return omega(family_spec(family, n, coeffs));
  }
  if (j.contains("group")) {
    GroupPtr g = group_from_json(j.at("group").dump());
    return sigma(make_element(g, coeffs));
  }
  throw std::invalid_argument("build: descriptor needs either \"family\" or \"group\"");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

}  // namespace gf4dna
