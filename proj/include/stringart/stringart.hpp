#pragma once

// Umbrella header for the whole library.

#include "stringart/conic.hpp"
#include "stringart/elimination.hpp"
#include "stringart/envelope.hpp"
#include "stringart/errors.hpp"
#include "stringart/family.hpp"
#include "stringart/parse.hpp"
#include "stringart/polynomial.hpp"
#include "stringart/proofs.hpp"
#include "stringart/rational.hpp"
#include "stringart/render.hpp"
