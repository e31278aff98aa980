#ifndef GARSIDE_ERRORS_HPP_
#define GARSIDE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace garside {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text (presentation files, words, group names, tables).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration would exceed the configured budget; the caller should
  // shrink the problem.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // A data file or other environment resource is unavailable.
  class InputError : public Error {
   public:
    using Error::Error;
  };

}  // namespace garside

#endif  // GARSIDE_ERRORS_HPP_
