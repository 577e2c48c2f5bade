#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "zst/int.hpp"

namespace zst {

// Invalid argument, violated precondition, or malformed pattern.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed document or non-canonical integer text.
class ParseError : public InputError {
  public:
    using InputError::InputError;
};

enum class ParityNeed { Even, Odd, Any };

std::string to_string(ParityNeed p);

// The involutory solve a_{2m} = -(a0/2) * sum hit an odd sum: the requested
// odd-indexed entries do not admit an integer triangle at step m.
class ParityError : public std::runtime_error {
  public:
    ParityError(std::size_t m, ParityNeed required, Int odd_sum);

    std::size_t step() const { return m_; }            // failing m (solves a_{2m})
    ParityNeed required() const { return required_; }  // parity a_{2m-1} needed
    const Int& odd_sum() const { return sum_; }

  private:
    std::size_t m_;
    ParityNeed required_;
    Int sum_;
};

// 2I - S inverts S only when (S - I)^2 == 0.
class UnipotentIndexError : public std::runtime_error {
  public:
    // violating_power == 0 means S - I is not nilpotent at all.
    explicit UnipotentIndexError(std::size_t violating_power);

    std::size_t violating_power() const { return power_; }

  private:
    std::size_t power_;
};

}  // namespace zst
