//
// cat0lab - Copyright 2026 The cat0lab Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CAT0LAB_ERROR_HPP_
#define CAT0LAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cat0lab {

enum class ErrorKind {
  kPrecondition,   // bad input to an operation
  kSize,           // input exceeds the desk-scale budget
  kUnsupported,    // space/point combination not implemented
  kConvergence,    // iterative method did not converge
  kDiscrepancy,    // a closed-form cross-check failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kPrecondition, what);
}

}  // namespace cat0lab

#endif  // CAT0LAB_ERROR_HPP_
