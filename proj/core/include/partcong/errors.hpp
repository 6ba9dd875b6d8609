#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partcong {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class NonzeroValuation : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  InsufficientPrecision(const std::string& what, std::size_t needed, std::size_t available)
      : Error(what + " (need " + std::to_string(needed) + ", have " + std::to_string(available) + ")"),
        needed_(needed),
        available_(available) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t needed_;
  std::size_t available_;
};

// T_{l^2} f left the span of the basis: a Hecke image that is not in the
// invariant subspace means the computation is wrong, so this is never recoverable.
class SpanViolation : public Error {
 public:
  SpanViolation(std::size_t form, std::size_t slot)
      : Error("Hecke image of form " + std::to_string(form) + " leaves the basis span at slot " +
              std::to_string(slot)),
        form_(form),
        slot_(slot) {}

  std::size_t form() const noexcept { return form_; }
  std::size_t slot() const noexcept { return slot_; }

 private:
  std::size_t form_;
  std::size_t slot_;
};

class OverflowBudget : public Error {
 public:
  using Error::Error;
};

class MatchFailure : public Error {
 public:
  explicit MatchFailure(std::size_t slot)
      : Error("series does not match the basis combination at slot " + std::to_string(slot)), slot_(slot) {}

  std::size_t slot() const noexcept { return slot_; }

 private:
  std::size_t slot_;
};

class InadmissibleN : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class MismatchWithTheorem : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace partcong
