#pragma once

// Umbrella header: self-dual codes over five commutative Frobenius ring
// alphabets from lambda-circulant constructions, with Gray maps to binary,
// weight-distribution machinery and the embedded reference catalog.

#include "sdcirc/bitmatrix.hpp"
#include "sdcirc/catalog.hpp"
#include "sdcirc/circulant.hpp"
#include "sdcirc/construct.hpp"
#include "sdcirc/gray.hpp"
#include "sdcirc/ring.hpp"
#include "sdcirc/search.hpp"
#include "sdcirc/wdist.hpp"
