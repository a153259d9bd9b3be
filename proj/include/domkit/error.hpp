#ifndef DOMKIT_ERROR_HPP_
#define DOMKIT_ERROR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace domkit {

  // Base class of every error thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: a table that is not a group, a bad element index,
  // a catalog member outside its variety, ...
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  // A syntax error in a word, with the 0-based offending column.
  class ParseError : public ValidationError {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : ValidationError(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
  };

  // An operation was called outside its hypotheses.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Resource guardrails; the CLI maps these to exit code 2.
  class LimitError : public Error {
   public:
    using Error::Error;
  };

  class CapExceeded : public LimitError {
   public:
    using LimitError::LimitError;
  };

  class BudgetExhausted : public LimitError {
   public:
    using LimitError::LimitError;
  };

  struct Limits {
    // Largest group order any construction may materialize.
    std::size_t order_cap = 20000;
    // Backtracking nodes per homomorphism search.
    std::uint64_t node_budget = 10'000'000;
    // Tuples evaluated per law when computing a verbal subgroup.
    std::uint64_t tuple_budget = 200'000'000;
    // Worker threads; 1 runs everything on the calling thread.
    unsigned jobs = 1;
  };

  inline void check_order_cap(std::uint64_t order,
                              Limits const& limits,
                              std::string const& what) {
    if (order > limits.order_cap) {
      throw CapExceeded(what + ": order " + std::to_string(order)
                        + " exceeds the order cap "
                        + std::to_string(limits.order_cap));
    }
  }

}  // namespace domkit

#endif  // DOMKIT_ERROR_HPP_
