#pragma once

// Umbrella header for the biharm library: arithmetic in the commutative
// biharmonic algebra, Schwartz-type integrals for the half-plane and the
// unit disk, explicit solvers for the (1-3) boundary value problem, the main
// biharmonic problem, and independent verification checkers.

#include "biharm/algebra.hpp"
#include "biharm/boundary_data.hpp"
#include "biharm/disk.hpp"
#include "biharm/errors.hpp"
#include "biharm/halfplane.hpp"
#include "biharm/holomorphic.hpp"
#include "biharm/io.hpp"
#include "biharm/quadrature.hpp"
#include "biharm/verify.hpp"
