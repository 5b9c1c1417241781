// error.hpp
//
// Exception types shared by all modules. The CLI maps them to exit codes:
// ArgumentError / DomainError -> 2 (usage), CapacityError -> 3.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcircle {

// A precondition on an argument was violated (gcd condition, empty input...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A query fell outside the range covered by a table or profile.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A table is too small for the requested computation, or could not be
// allocated. `required()` names the sieve limit that would have sufficed.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace gcircle
