#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "densesum/multiset.hpp"

namespace densesum {

struct Instance {
    MultiSet x;
    std::uint64_t t;
};

// Shared text format: line 1 = "n t"; then n lines, one positive decimal
// integer each (repetition encodes multiplicity). '#' starts a comment line.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const MultiSet& x, std::uint64_t t);
void write_instance_file(const std::string& path, const MultiSet& x, std::uint64_t t);

// One positive integer per line, '#' comments allowed (factorize input).
std::vector<std::uint64_t> read_integers(std::istream& in);
std::vector<std::uint64_t> read_integers_file(const std::string& path);

} // namespace densesum
