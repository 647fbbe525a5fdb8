#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgereg {

/// Malformed input text. `position` is a byte offset (graph6) or a 1-based
/// line number (edge lists), as named by `unit`.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, const char* unit = "byte offset")
      : std::runtime_error(what + " (" + unit + " " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured size limit was exceeded. `cap_name` names the limit.
class CapError : public std::runtime_error {
 public:
  CapError(const std::string& cap_name, std::size_t cap)
      : std::runtime_error("resource cap exceeded: " + cap_name + " = " + std::to_string(cap)),
        cap_name_(cap_name),
        cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
};

/// Operation called on an input outside its domain (non-bipartite graph,
/// zero ideal, factor that is not an edge, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace edgereg
