#pragma once

#include "nclorentz/bialgebra.hpp"
#include "nclorentz/classify.hpp"
#include "nclorentz/contract.hpp"
#include "nclorentz/group_geom.hpp"
#include "nclorentz/invariants.hpp"
#include "nclorentz/phs_reference.hpp"
#include "nclorentz/poisson_poly.hpp"
#include "nclorentz/quantize.hpp"
#include "nclorentz/reference_tables.hpp"
#include "nclorentz/scaling.hpp"
#include "nclorentz/suites.hpp"
