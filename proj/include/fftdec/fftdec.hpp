// Umbrella header for the whole library.
#pragma once

#include "fftdec/basis.hpp"
#include "fftdec/bench.hpp"
#include "fftdec/bitmat.hpp"
#include "fftdec/code.hpp"
#include "fftdec/decode.hpp"
#include "fftdec/gf.hpp"
#include "fftdec/io.hpp"
#include "fftdec/opcount.hpp"
#include "fftdec/oracle.hpp"
#include "fftdec/poly.hpp"
