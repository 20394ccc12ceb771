#ifndef SAC_ERROR_HPP
#define SAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sac {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An arrow term or Gentzen term violates a typing premise.
struct TypeError : Error {
  explicit TypeError(const std::string& what) : Error(what) {}
};

// Textual input does not conform to the grammar.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

}  // namespace sac

#endif
