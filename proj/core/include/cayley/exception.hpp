/*
 * Copyright 2026 The cayleycpp authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CAYLEY_EXCEPTION_HPP_
#define CAYLEY_EXCEPTION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cayley {

//! Base class of every error thrown by this library.
class CayleyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! A candidate multiplication table violates the associative law.  Carries the
//! first violating triple, i.e. (i * j) * k != i * (j * k).
class NotAssociativeError : public CayleyError {
 public:
  NotAssociativeError(int i, int j, int k)
      : CayleyError("not associative: (" + std::to_string(i) + " * "
                    + std::to_string(j) + ") * " + std::to_string(k)
                    + " != " + std::to_string(i) + " * (" + std::to_string(j)
                    + " * " + std::to_string(k) + ")"),
        i(i),
        j(j),
        k(k) {}
  int i, j, k;
};

//! A set claimed to be an ideal is not one.  Carries a witness product s * x
//! that escapes the set.
class NotAnIdealError : public CayleyError {
 public:
  NotAnIdealError(int s, int x)
      : CayleyError("not an ideal: " + std::to_string(s) + " * "
                    + std::to_string(x) + " falls outside the set"),
        s(s),
        x(x) {}
  int s, x;
};

//! A word contains a letter outside the declared input alphabet, or two
//! machine elements over different alphabets were combined.
class AlphabetMismatchError : public CayleyError {
 public:
  using CayleyError::CayleyError;
};

//! A machine construction exceeded the configured state cap.
class StateBudgetExceededError : public CayleyError {
 public:
  explicit StateBudgetExceededError(std::size_t budget)
      : CayleyError("state budget exceeded (cap " + std::to_string(budget)
                    + " states)"),
        budget(budget) {}
  std::size_t budget;
};

//! A sequence passed to the expansion arithmetic is not a product chain.
class NotAChainError : public CayleyError {
 public:
  using CayleyError::CayleyError;
};

//! An operation requiring a complete enumeration was given a truncated one.
class IncompleteEnumerationError : public CayleyError {
 public:
  using CayleyError::CayleyError;
};

//! Catch-all for named precondition failures (NoZero, NotAperiodic,
//! BoundExceeded, ...).  The kind string is stable and machine-checkable.
class PreconditionError : public CayleyError {
 public:
  PreconditionError(std::string kind, std::string const& what)
      : CayleyError(kind + ": " + what), kind(std::move(kind)) {}
  std::string kind;
};

}  // namespace cayley

#endif  // CAYLEY_EXCEPTION_HPP_
