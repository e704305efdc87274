#pragma once

#include "nestlab/opspace/decompose.hpp"
#include "nestlab/opspace/operator_space.hpp"
#include "nestlab/opspace/rank_one.hpp"
#include "nestlab/opspace/support_fn.hpp"
