// Copyright 2026 The Grounded Arithmetic Authors.
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

#ifndef GA_ERRORS_HPP_
#define GA_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ga {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CaptureError : public Error {
 public:
  using Error::Error;
};

class PathError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// Evaluating a term that still contains quantifier nodes.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A kernel rule application was rejected.
class RuleError : public Error {
 public:
  RuleError(const std::string& rule, const std::string& msg)
      : Error(rule + ": " + msg), rule_(rule) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

class ProofError : public Error {
 public:
  ProofError(std::size_t step, const std::string& msg)
      : Error("step " + std::to_string(step) + ": " + msg), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

class TacticError : public Error {
 public:
  using Error::Error;
};

class NotValue : public Error {
 public:
  using Error::Error;
};

class Uncertifiable : public Error {
 public:
  using Error::Error;
};

class NotEncodable : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

}  // namespace ga

#endif  // GA_ERRORS_HPP_
