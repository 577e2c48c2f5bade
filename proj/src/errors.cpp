#include "zst/errors.hpp"

namespace zst {

std::string to_string(ParityNeed p) {
    switch (p) {
        case ParityNeed::Even: return "even";
        case ParityNeed::Odd: return "odd";
        case ParityNeed::Any: return "any";
    }
    return "any";
}

namespace {

std::string parity_message(std::size_t m, ParityNeed required, const Int& sum) {
    std::string msg = "parity error at m=" + std::to_string(m) + ": a_" +
                      std::to_string(2 * m) + " = -(a0/2)*" + sum.get_str() +
                      " is not an integer";
    if (required != ParityNeed::Any)
        msg += "; a_" + std::to_string(2 * m - 1) + " must be " + to_string(required);
    return msg;
}

}  // namespace

ParityError::ParityError(std::size_t m, ParityNeed required, Int odd_sum)
    : std::runtime_error(parity_message(m, required, odd_sum)),
      m_(m),
      required_(required),
      sum_(std::move(odd_sum)) {}

UnipotentIndexError::UnipotentIndexError(std::size_t violating_power)
    : std::runtime_error(violating_power == 0
                             ? std::string("matrix minus identity is not nilpotent")
                             : "unipotent index exceeds 2: (S - I)^" +
                                   std::to_string(violating_power) + " != 0"),
      power_(violating_power) {}

}  // namespace zst
