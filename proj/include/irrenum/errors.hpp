#pragma once

#include <stdexcept>
#include <string>

namespace irrenum {

// Caller broke a documented precondition (bad index, wrong length, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input data (bad symbols, malformed compressed word, bad sentinel).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Conjugates of an extension-field element are not pairwise distinct.
class DegreeCollapse : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An arithmetic result that must hold by construction did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized search exceeded its iteration cap.
class SearchFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irrenum
