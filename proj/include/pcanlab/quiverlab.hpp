#pragma once

// Graded quivers with relations, their modules, homological algebra and
// highest weight structures.

#include "pcanlab/gmodule.hpp"
#include "pcanlab/highest_weight.hpp"
#include "pcanlab/homalg.hpp"
#include "pcanlab/quiver.hpp"
