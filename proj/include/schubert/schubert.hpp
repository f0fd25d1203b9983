#pragma once

// Umbrella header for the whole library.

#include "schubert/enumeration.hpp"
#include "schubert/io.hpp"
#include "schubert/labeled_path.hpp"
#include "schubert/monomial.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"
