#pragma once

#include "nestlab/ratlin/matrix.hpp"
#include "nestlab/ratlin/rational.hpp"
#include "nestlab/ratlin/subspace.hpp"
