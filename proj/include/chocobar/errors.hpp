#pragma once

#include <stdexcept>
#include <string>

namespace chocobar {

using Value = unsigned long long;

// Argument lies past a width function's domain_max.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Position lies outside the rectangle a table or search was built for.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed or invalid function specification / argument.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A closed form was requested outside the hypotheses that make it a theorem.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Closed-form shifted value would be negative.
class UnderflowError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// Persisted table belongs to a different width function.
class FingerprintMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chocobar
