#pragma once

#include "hilbert/integer.hpp"
#include "hilbert/macaulay.hpp"
#include "hilbert/polynomial.hpp"
#include "hilbert/gotzmann.hpp"
#include "hilbert/admissibility.hpp"
#include "hilbert/segment_ideal.hpp"
#include "hilbert/bounds.hpp"
