#pragma once

// Umbrella header.

#include "flatknot/geom.hpp"
#include "flatknot/ribbon.hpp"
#include "flatknot/constructions.hpp"
#include "flatknot/unfold.hpp"
#include "flatknot/optimize.hpp"
#include "flatknot/core_file.hpp"
#include "flatknot/svg.hpp"
