#pragma once

#include <stdexcept>

#include "rotsum/params.hpp"

namespace rotsum {

// Thrown when an orbit lands exactly on the singularity of phi.
struct singular_hit : std::domain_error {
  singular_hit() : std::domain_error("observable: orbit point hit the singularity at 0") {}
};

// phi(x) = x^(-a) - 1/(1-a) on (0,1]; unbounded as x -> 0+, throws at x == 0.
double phi(double x, double a);

// Truncated observable: the constant cap (N^a/eps^a - 1)/(1-a) on [0, eps/N),
// phi(x) from eps/N on.  Bounded everywhere.
double phi_trunc(double x, const Params& p);

// (1/N^a) * sum_{n=0}^{N-1} f({x + n alpha}) with f = phi or phi_trunc.
//
// The first orbit point is the caller's x as given (so x = 1 evaluates
// phi(1)); later points are reduced into [0,1), and a reduced point of
// exactly 0 raises singular_hit in the untruncated case.
double birkhoff_norm(double alpha, double x, const Params& p, bool truncated);

}  // namespace rotsum
