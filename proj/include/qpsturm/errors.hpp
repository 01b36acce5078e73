#ifndef QPSTURM_ERRORS_HPP_
#define QPSTURM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpsturm {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes: ResourceError -> 3, everything else -> 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured budget or cap was exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvalidCharacter : public InputError {
 public:
  InvalidCharacter(std::size_t position, char c)
      : InputError("invalid character '" + std::string(1, c) + "' at position " +
                   std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EmptyPattern : public InputError {
 public:
  EmptyPattern() : InputError("pattern must be nonempty") {}
};

class EmptyInput : public InputError {
 public:
  explicit EmptyInput(const std::string& what) : InputError(what) {}
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

class NotProlongable : public InputError {
 public:
  using InputError::InputError;
};

class InvalidDirective : public InputError {
 public:
  InvalidDirective(std::size_t block_index, const std::string& what)
      : InputError("block " + std::to_string(block_index) + ": " + what),
        block_index_(block_index) {}

  // 1-based index k of the offending block in the flattened sequence.
  std::size_t block_index() const noexcept { return block_index_; }

 private:
  std::size_t block_index_;
};

class TooFewBs : public InputError {
 public:
  TooFewBs() : InputError("shape analysis needs at least two occurrences of b") {}
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class GenerationStalled : public ResourceError {
 public:
  explicit GenerationStalled(std::size_t budget)
      : ResourceError("stable prefix did not reach the requested length within " +
                      std::to_string(budget) + " block pairs"),
        budget_(budget) {}

  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class ClosureCapExceeded : public ResourceError {
 public:
  explicit ClosureCapExceeded(std::size_t cap)
      : ResourceError("relation closure exceeded " + std::to_string(cap) + " words"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace qpsturm

#endif  // QPSTURM_ERRORS_HPP_
