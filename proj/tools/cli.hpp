#pragma once

#include <iosfwd>
#include <string>

#include "hecke/eisenstein.hpp"

namespace hecke::cli {

/// Parses "p" or "p:q" (p + q omega) with rational entries.
QuadElement parse_element(const FieldDescriptor& F, const std::string& text, const std::string& what);
/// Parses "a,z,b". z is "x+y" or "x:y" at a real place, "xr:xi:yr:yi" at a complex one.
OFLattice parse_lattice(const FieldDescriptor& F, const std::string& text);
/// "re" or "re,im".
cplx parse_complex(const std::string& text, const std::string& what);

/// Entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
