#pragma once

#include "catalog.hpp"
#include "coloring.hpp"
#include "colorings.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "patterns.hpp"
