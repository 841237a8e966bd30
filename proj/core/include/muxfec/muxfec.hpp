#pragma once

#include "muxfec/analysis.hpp"
#include "muxfec/channel.hpp"
#include "muxfec/decoder.hpp"
#include "muxfec/galois.hpp"
#include "muxfec/matrix.hpp"
#include "muxfec/mux_code.hpp"
#include "muxfec/serialize.hpp"
#include "muxfec/single_code.hpp"
#include "muxfec/stream.hpp"
