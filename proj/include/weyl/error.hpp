#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Base class for every failure the library reports on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation would exceed a hard numeric or memory bound (integer
// overflow, state counts past the configured ceiling, rank above the
// compiled maximum).  The input may well be legal; the build is not
// willing to process it.
struct capacity_error : error {
  using error::error;
};

// Malformed user input: unparsable root file, bad word syntax, options
// that contradict each other.
struct input_error : error {
  using error::error;
};

// The data describes something that is not a finite root system of the
// kind handled here: reflections leave the set, axioms fail, generation
// from the given positive roots does not close up.
struct root_system_error : error {
  using error::error;
};

// Generation kept producing new roots or objects past the bound that any
// finite instance of the given size could need.
struct divergence_error : error {
  using error::error;
};

// An internal invariant failed.  Always a bug in this library.
struct internal_error : error {
  using error::error;
};

}  // namespace weyl
