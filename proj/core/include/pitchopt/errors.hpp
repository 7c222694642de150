// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_ERRORS_HPP_
#define PITCHOPT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pitchopt {

// Commanded thrust/power exceeds what the plant can deliver at the
// configured speed ceiling.
class UnachievableError : public std::runtime_error {
 public:
  explicit UnachievableError(const std::string& what)
      : std::runtime_error(what) {}
};

// The map being inverted is not monotone on the search bracket
// (e.g. negative-thrust stall regime).
class NonMonotonicError : public std::runtime_error {
 public:
  explicit NonMonotonicError(const std::string& what)
      : std::runtime_error(what) {}
};

class BetaOutOfRangeError : public std::out_of_range {
 public:
  explicit BetaOutOfRangeError(const std::string& what)
      : std::out_of_range(what) {}
};

// The closed loop timed out without either settling or saturating;
// usually a sign of mis-tuned PID gains.
class NoSettleError : public std::runtime_error {
 public:
  explicit NoSettleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Non-finite state reached during integration.
class DivergedError : public std::runtime_error {
 public:
  explicit DivergedError(const std::string& what)
      : std::runtime_error(what) {}
};

// Every grid point of an exhaustive search saturated.
class NowhereAchievableError : public std::runtime_error {
 public:
  explicit NowhereAchievableError(const std::string& what)
      : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pitchopt

#endif  // PITCHOPT_ERRORS_HPP_
