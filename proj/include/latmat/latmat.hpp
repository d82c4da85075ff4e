#pragma once

// Exact-arithmetic toolkit for meet/join (GCD/LCM) matrices on posets and
// lattices: incidence algebra, semimultiplicative factorization, inductive
// invertibility conditions, meet-semilattice enumeration, and the singular
// LCM-matrix counterexamples on gcd-closed sets.

#include "canonical.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "incidence.hpp"
#include "invertibility.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "meet_join.hpp"
#include "numtheory.hpp"
#include "poset.hpp"
#include "rational.hpp"
