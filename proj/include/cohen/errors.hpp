#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cohen {

/// Operands live over different generator alphabets.
class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A strand or generator index lies outside its declared range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structural precondition was violated (non-Brunnian input to a lift,
/// strand-count mismatch, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An intermediate word outgrew the configured letter budget.
class ResourceError : public std::length_error {
 public:
  ResourceError(const std::string& what, std::size_t size, std::size_t budget)
      : std::length_error(what + ": " + std::to_string(size) +
                          " syllables exceeds budget " +
                          std::to_string(budget)),
        size_(size),
        budget_(budget) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t size_;
  std::size_t budget_;
};

/// Inline oracle assertion failed in verification mode.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cohen
