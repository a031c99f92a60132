#pragma once

// Umbrella header.

#include "bigint.hpp"
#include "bigraded.hpp"
#include "chromatic_complex.hpp"
#include "chromatic_reduce.hpp"
#include "chrompoly.hpp"
#include "closedform.hpp"
#include "cube.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "graph_dsl.hpp"
#include "graph_enum.hpp"
#include "khovanov.hpp"
#include "link_diagram.hpp"
#include "pattern.hpp"
#include "polynomial.hpp"
#include "render.hpp"
#include "snf.hpp"
#include "verify.hpp"
