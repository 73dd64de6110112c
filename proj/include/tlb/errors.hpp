#pragma once

#include <stdexcept>
#include <string>

namespace tlb {

  // Raised when an argument violates an operation's precondition.
  class domain_error : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // Raised when a requested computation would exceed a configured budget.
  class resource_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when a construction that must succeed on valid input fails.
  class internal_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace tlb
