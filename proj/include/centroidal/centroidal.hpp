#pragma once

// Umbrella header for the centroidal calculus library.

#include "centroidal/algebra.hpp"
#include "centroidal/corpus.hpp"
#include "centroidal/errors.hpp"
#include "centroidal/field.hpp"
#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"
#include "centroidal/recipes.hpp"
#include "centroidal/synthesis.hpp"
#include "centroidal/term.hpp"
#include "centroidal/term_io.hpp"
#include "centroidal/totality.hpp"
