#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdisk/core.hpp"

namespace pdisk {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verification_failed = 1;
inline constexpr int usage = 2;
inline constexpr int inadmissible = 3;
}  // namespace exit_code

/// Raised for malformed collection documents; the message names the field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"disks": [{"center": [re, im], "radius": r}, ...], "metadata": {...}}.
/// Numbers may be JSON numbers (a double is read as the exact binary
/// rational it stores) or strings "p/q", "-3", "0.125".
struct CollectionDocument {
  RationalDiskCollection exact;
  DiskCollection<double> floating;
  std::map<std::string, std::string> metadata;
};

CollectionDocument parse_collection_document(const std::string& text);
/// Exact rational from "p/q", an integer, or a plain decimal string.
mpq_class parse_rational(const std::string& s);

/// Entry point of the `pdisk` executable. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pdisk
