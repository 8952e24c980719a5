#pragma once

#include "colorings/dominating_sink.hpp"
#include "colorings/hero_oracle.hpp"
#include "colorings/locally_complete.hpp"
#include "colorings/out_transitive.hpp"
#include "colorings/p111.hpp"
#include "colorings/w3_minus.hpp"
