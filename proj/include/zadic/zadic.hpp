#pragma once

// Umbrella header.

#include "complements.hpp"
#include "gadic.hpp"
#include "json_io.hpp"
#include "map23.hpp"
#include "nets.hpp"
#include "types.hpp"
#include "wordlen.hpp"
