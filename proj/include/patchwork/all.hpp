#pragma once

#include "patchwork/error.hpp"
#include "patchwork/lattice.hpp"
#include "patchwork/triangulation.hpp"
#include "patchwork/catalog.hpp"
#include "patchwork/regularity.hpp"
#include "patchwork/signs.hpp"
#include "patchwork/scheme.hpp"
#include "patchwork/patchwork.hpp"
#include "patchwork/evaluator.hpp"
#include "patchwork/families.hpp"
#include "patchwork/census.hpp"
#include "patchwork/polynomial.hpp"
#include "patchwork/io.hpp"
#include "patchwork/svg.hpp"
#include "patchwork/service.hpp"
