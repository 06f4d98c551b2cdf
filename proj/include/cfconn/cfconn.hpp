#pragma once

#include "cfconn/coloring.hpp"
#include "cfconn/generators.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/io.hpp"
#include "cfconn/oracles.hpp"
#include "cfconn/reductions.hpp"
#include "cfconn/solvers.hpp"
#include "cfconn/verifiers.hpp"
