#pragma once

#include <stdexcept>
#include <string>

namespace gdt {

// Thrown when an input violates a domain invariant (bad probabilities,
// ragged trees, support mismatches, ...). Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input file or JSON document cannot be decoded into the
// expected shape. Maps to CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gdt
