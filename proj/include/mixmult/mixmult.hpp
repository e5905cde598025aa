#ifndef MIXMULT_MIXMULT_HPP
#define MIXMULT_MIXMULT_HPP

#include "mixmult/checked.hpp"
#include "mixmult/error.hpp"
#include "mixmult/field.hpp"
#include "mixmult/harness.hpp"
#include "mixmult/hilbert_fit.hpp"
#include "mixmult/koszul.hpp"
#include "mixmult/length.hpp"
#include "mixmult/linalg.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/poly.hpp"
#include "mixmult/reductions.hpp"
#include "mixmult/truncation.hpp"

#endif  // MIXMULT_MIXMULT_HPP
