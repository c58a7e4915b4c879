#ifndef HYPERSEQ_ERRORS_HPP
#define HYPERSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperseq {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (poles, zero factors, unsupported orders).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed value construction, e.g. a zero denominator or unparsable text.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent evaluation routes disagreed. Always a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace hyperseq

#endif  // HYPERSEQ_ERRORS_HPP
