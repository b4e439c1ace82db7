#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace secnet {

// Exact rational arithmetic is used end-to-end: every capacity, flow value,
// LP coefficient and reported rate is a Rat unless a module explicitly opts
// into floating point (the large-entropy LP path).
using Rat = mpq_class;

// Malformed input: parse errors, invalid networks, bad CLI arguments.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration (wiretap sets, oracle state space) exceeded its cap.
struct EnumerationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A floating-point solve failed to reach the requested tolerance.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "3", "-3/4" or "0.25" (decimals are converted exactly, 0.25 -> 1/4).
Rat parse_rational(const std::string& text);

// Canonical rendering: "p/q", or just "p" for integers.
std::string rat_string(const Rat& r);

double rat_double(const Rat& r);

}  // namespace secnet
