/** Umbrella header: the whole library. */

#pragma once

#include "relap/bounds.hpp"
#include "relap/chains.hpp"
#include "relap/errors.hpp"
#include "relap/exact.hpp"
#include "relap/face.hpp"
#include "relap/generators.hpp"
#include "relap/homology.hpp"
#include "relap/integer_matrix.hpp"
#include "relap/io.hpp"
#include "relap/random_complex.hpp"
#include "relap/simplicial_complex.hpp"
#include "relap/spanning.hpp"
#include "relap/spectra.hpp"
