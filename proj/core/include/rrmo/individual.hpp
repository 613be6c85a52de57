#pragma once

#include "rrmo/bitstring.hpp"
#include "rrmo/fitness.hpp"

namespace rrmo {

struct Individual {
    BitString genes;
    FitnessVector fitness;
};

}  // namespace rrmo
