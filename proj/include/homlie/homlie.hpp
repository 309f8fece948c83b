#pragma once

// Exact-arithmetic toolkit for finite-dimensional n-Hom-Lie color algebras:
// structure constants with Koszul-sign bookkeeping, definitional checkers,
// constructions (reductions, twists, tensor products), structural
// invariants, modules, and derivation-type solution spaces.

#include "algebra.hpp"
#include "constructions.hpp"
#include "derivations.hpp"
#include "errors.hpp"
#include "grading.hpp"
#include "hommodules.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "rational.hpp"
#include "structure.hpp"
#include "subspace.hpp"
