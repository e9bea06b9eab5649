#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

// Base for all recoverable engine errors. Suite drivers convert these into
// "error" report records instead of crashing.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation hit a pole (kernel, rational function, coincident set elements).
struct pole_error : error {
  using error::error;
};

// Malformed or inconsistent input: bad parse, cardinality mismatch, missing
// r-table entry, repeated interpolation abscissa.
struct input_error : error {
  using error::error;
};

// Operation invoked outside its validity domain: off-shell configuration,
// wrong twist ratio, kappa_i = 1 in a twisted form factor.
struct contract_error : error {
  using error::error;
};

// Residue requested at a pole of order > 1.
struct pole_order_error : error {
  using error::error;
};

}  // namespace qsp
