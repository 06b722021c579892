// Copyright 2026 The polydist Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace polydist {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric argument violates a precondition (non-finite r, bad config, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A polygon violates a construction invariant; the message names the rule.
class PolygonValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file (syntax, missing keys, unreadable path).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A request exceeds a documented resource limit (e.g. sample count).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polydist
