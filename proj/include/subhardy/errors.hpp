#pragma once

#include <stdexcept>
#include <string>

namespace subhardy {

// A symbol could not be inverted: its numerator vanishes somewhere on the
// closed unit disk.
class NotInvertibleError : public std::domain_error {
 public:
  explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// A sampled range assumption (|phi| > 1, 1 < |phi| < sqrt(2)) failed on the
// operation's point set.
class FlagError : public std::runtime_error {
 public:
  explicit FlagError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling could not satisfy the separation constraint.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// Symbol-expression syntax or semantic error, with the byte offset of the
// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace subhardy
