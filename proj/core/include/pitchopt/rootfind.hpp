// Copyright 2026 The Pitchopt Authors. All rights reserved.
// Use of this source code is governed by the Apache License 2.0
// that can be found in the LICENSE file.

#ifndef PITCHOPT_ROOTFIND_HPP_
#define PITCHOPT_ROOTFIND_HPP_

#include <functional>

namespace pitchopt {

// Brent's method on a bracketing interval [a, b] with f(a)*f(b) <= 0.
// Returns x with |f(x)| <= f_tol or bracket width <= x_tol, whichever
// comes first. Throws std::invalid_argument if [a, b] does not bracket
// a sign change.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double x_tol, double f_tol);

}  // namespace pitchopt

#endif  // PITCHOPT_ROOTFIND_HPP_
