// sasvkit/errors.hpp

// Copyright 2026 sasvkit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SASVKIT_ERRORS_HPP_
#define SASVKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sasvkit {

// Invalid value fed to an operation (non-finite score, zero probability,
// non-SPD covariance, rho outside [0,1], ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string &msg) : std::runtime_error(msg) {}
};

// Model estimation cannot proceed or produced an unusable model
// (single-class training data, degenerate covariance, ...).
class FitError : public std::runtime_error {
 public:
  explicit FitError(const std::string &msg) : std::runtime_error(msg) {}
};

// Metric undefined for the given trial collection (missing class, ...).
class MetricError : public std::runtime_error {
 public:
  explicit MetricError(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input file or configuration document.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace sasvkit

#endif  // SASVKIT_ERRORS_HPP_
