#ifndef GF4DNA_IO_HPP
#define GF4DNA_IO_HPP

#include <string>

#include "gf4dna/composite.hpp"

namespace gf4dna {

// Group descriptors, JSON:
//   {"kind":"cyclic","m":6}
//   {"kind":"dihedral","half":3}
//   {"kind":"quasidihedral","half":4}
//   {"kind":"product","r":6,"m":2,"listing":"natural"|"block_reversible"}
//   {"kind":"block_group","family":3,"r":8}
GroupPtr group_from_json(const std::string& json);
std::string group_descriptor_json(const std::string& kind, size_t a, size_t b,
                                  const std::string& listing);

// Build descriptors, JSON:
//   {"family":"G12","n":32,"coeffs":"...32 symbols..."}       -> composite matrix
//   {"group":{...},"coeffs":"..."}                            -> sigma image
// Symbols are {0,1,w,W}.
Gf4Matrix build_from_json(const std::string& json);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gf4dna

#endif
