#ifndef GHYPER_ERRORS_HPP_
#define GHYPER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ghyper {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed documents, out-of-range indices, mismatched carriers.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  //! A carrier is larger than the operation supports.
  class SizeLimitError : public Error {
   public:
    using Error::Error;
  };

  //! A bounded search visited more nodes than allowed.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace ghyper

#endif  // GHYPER_ERRORS_HPP_
