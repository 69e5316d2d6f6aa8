// Copyright 2026 The kec Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoopRejected : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class UnknownEdge : public Error {
 public:
  using Error::Error;
};

class SameVertex : public Error {
 public:
  using Error::Error;
};

class TooFewVertices : public Error {
 public:
  using Error::Error;
};

class BadK : public Error {
 public:
  using Error::Error;
};

class NotKConnected : public Error {
 public:
  using Error::Error;
};

class NotExactlyKConnected : public Error {
 public:
  using Error::Error;
};

class NotEdgeMinimal : public Error {
 public:
  using Error::Error;
};

class OverlappingSets : public Error {
 public:
  using Error::Error;
};

class PartitionNotCover : public Error {
 public:
  using Error::Error;
};

class InvalidCut : public Error {
 public:
  using Error::Error;
};

class TrivialCut : public Error {
 public:
  using Error::Error;
};

class NotMinCut : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Malformed MGRAPH input. Carries the 1-based line number of the offending
/// line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A claim the library relies on (and re-checks at runtime) failed on a
/// concrete graph. Carries a stable claim identifier so batch verification
/// can attribute the counterexample.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string claim, const std::string& what)
      : Error(claim + ": " + what), claim_(std::move(claim)) {}

  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

}  // namespace kec
