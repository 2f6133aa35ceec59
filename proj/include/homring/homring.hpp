#pragma once

/// Umbrella header for the homring library.

#include "automorphism.hpp"
#include "character.hpp"
#include "closed_form.hpp"
#include "code.hpp"
#include "code_function.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "galois_ring.hpp"
#include "graph.hpp"
#include "hom_weight.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "teichmuller.hpp"
#include "trace.hpp"
