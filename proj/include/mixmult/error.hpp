#ifndef MIXMULT_ERROR_HPP
#define MIXMULT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mixmult {

// Malformed or inconsistent input: ring mismatch, non m-primary J,
// window deficits, element outside its declared ideal.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that refuses to answer (unstable fit, undefined value).
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two exact routes disagree, or an integer intermediate overflowed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mixmult

#endif  // MIXMULT_ERROR_HPP
