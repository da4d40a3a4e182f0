// Umbrella header.
#pragma once

#include "toric_hodge/core.hpp"
#include "toric_hodge/lattice.hpp"
#include "toric_hodge/double_description.hpp"
#include "toric_hodge/polyhedra.hpp"
#include "toric_hodge/fan.hpp"
#include "toric_hodge/hilbert.hpp"
#include "toric_hodge/series.hpp"
#include "toric_hodge/forms_euler.hpp"
#include "toric_hodge/rational_function.hpp"
#include "toric_hodge/epq_table.hpp"
#include "toric_hodge/wps.hpp"
#include "toric_hodge/dk_hodge.hpp"
