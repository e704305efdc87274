#pragma once

#include "nestlab/chaincalc/chain.hpp"
#include "nestlab/chaincalc/predict.hpp"
#include "nestlab/chaincalc/support_fn.hpp"
