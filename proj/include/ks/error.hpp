// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Base for every error the toolkit raises. The CLI maps subclasses to exit
// codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument or violated precondition (exit code 2).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A construction was asked for something its hypotheses rule out, e.g. a
// completion to N*I of a system whose frame bound already exceeds N.
class Infeasible : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Enumeration or point budget would be exceeded (exit code 3).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Postcondition of a constructive algorithm failed; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ks
