// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZOLOEIG_WINDOW_HPP
#define ZOLOEIG_WINDOW_HPP

#include <cmath>
#include <limits>

#include "zoloeig/error.hpp"

namespace zoloeig {

/// Target interval (a,b) together with the eigengaps (a_minus, a_plus) and
/// (b_minus, b_plus) around its endpoints: open intervals known to contain no
/// eigenvalue. a_minus may be -inf and b_plus may be +inf.
struct SpectralWindow {
  double a = 0.0;
  double b = 0.0;
  double a_minus = 0.0;
  double a_plus = 0.0;
  double b_minus = 0.0;
  double b_plus = 0.0;

  bool left_open() const { return std::isinf(a_minus); }
  bool right_open() const { return std::isinf(b_plus); }

  void validate() const {
    if (std::isnan(a_minus) || std::isnan(a_plus) || std::isnan(b_minus) || std::isnan(b_plus) ||
        std::isnan(a) || std::isnan(b))
      throw DomainError("SpectralWindow: NaN endpoint");
    if (std::isinf(a_plus) || std::isinf(b_minus))
      throw DomainError("SpectralWindow: interior gap endpoints must be finite");
    if (std::isinf(a_minus) && a_minus > 0) throw DomainError("SpectralWindow: a_minus must be -inf");
    if (std::isinf(b_plus) && b_plus < 0) throw DomainError("SpectralWindow: b_plus must be +inf");
    if (!(a_minus < a && a < a_plus && a_plus <= b_minus && b_minus < b && b < b_plus))
      throw DomainError("SpectralWindow: endpoints must satisfy a- < a < a+ <= b- < b < b+");
    if (std::isinf(a_minus) && std::isinf(b_plus))
      throw DomainError("SpectralWindow: at most one endpoint may be infinite");
  }
};

/// Window from the four gap endpoints alone; a and b default to gap midpoints
/// (one interior width inside when the gap is unbounded).
inline SpectralWindow window_from_gaps(double a_minus, double a_plus, double b_minus,
                                       double b_plus) {
  SpectralWindow w;
  w.a_minus = a_minus;
  w.a_plus = a_plus;
  w.b_minus = b_minus;
  w.b_plus = b_plus;
  const double span = (b_minus > a_plus) ? (b_minus - a_plus) : 1.0;
  w.a = std::isinf(a_minus) ? a_plus - span : 0.5 * (a_minus + a_plus);
  w.b = std::isinf(b_plus) ? b_minus + span : 0.5 * (b_minus + b_plus);
  w.validate();
  return w;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_WINDOW_HPP
