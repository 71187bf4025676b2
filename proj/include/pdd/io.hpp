#pragma once

#include <stdexcept>
#include <string>

#include "pdd/extension.hpp"
#include "pdd/foodweb.hpp"
#include "pdd/reduction.hpp"
#include "pdd/species_set.hpp"

namespace pdd::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Instance file: "pdd 1" header; budget/target lines; "species <name> <d>";
// "arc <prey> <predator> <p>/<q>". '#' comments and blank lines ignored.
InstanceData parse_instance_data(const std::string& text);
PddInstance parse_instance(const std::string& text);
std::string serialize_instance(const PddInstance& inst);

// Extension file: "ext 1"; "root <name>"; "parent <child> <parent>".
TreeExtension parse_extension(const std::string& text, const FoodWeb& web);
std::string serialize_extension(const TreeExtension& t, const FoodWeb& web);

// Set file: "set 1"; "member <name>" lines.
SpeciesSet parse_set(const std::string& text, const FoodWeb& web);
std::string serialize_set(const SpeciesSet& s, const FoodWeb& web);

// CDS file: "cds 1"; "k <int>"; "vertex <name> <capacity>"; "edge <u> <v>".
CdsInstance parse_cds(const std::string& text);
std::string serialize_cds(const CdsInstance& cds);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pdd::io
