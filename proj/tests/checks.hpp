#pragma once

#include "doctest.h"

// pure relative comparison (doctest Approx defaults mix in an absolute term)
inline doctest::Approx rel(double want, double rtol) {
  return doctest::Approx(want).epsilon(rtol).scale(0.0);
}
