#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cutlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A table or permutation set that violates the group axioms.
class NotAGroup : public Error {
public:
  using Error::Error;
};

class NotAPermutation : public Error {
public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
public:
  OrderCapExceeded(std::size_t order, std::size_t cap)
      : Error("group order " + std::to_string(order) + " exceeds the configured maximum " +
              std::to_string(cap)),
        order_(order), cap_(cap) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t order_;
  std::size_t cap_;
};

class NotNormal : public Error {
public:
  using Error::Error;
};

class InvalidParameters : public Error {
public:
  using Error::Error;
};

class InvalidMetacyclicParameters : public InvalidParameters {
public:
  using InvalidParameters::InvalidParameters;
};

class NotAPrime : public InvalidParameters {
public:
  using InvalidParameters::InvalidParameters;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at byte " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class CenterTooLarge : public Error {
public:
  using Error::Error;
};

class HypothesisViolated : public Error {
public:
  using Error::Error;
};

}  // namespace cutlab
