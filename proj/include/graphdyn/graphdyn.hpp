#pragma once

#include "graphdyn/dynamics.hpp"
#include "graphdyn/enumeration.hpp"
#include "graphdyn/generators.hpp"
#include "graphdyn/graph.hpp"
#include "graphdyn/io.hpp"
#include "graphdyn/iso.hpp"
#include "graphdyn/operators.hpp"
#include "graphdyn/theorems.hpp"
