#pragma once

#include "keyfactor/analytics.hpp"
#include "keyfactor/chain_dsl.hpp"
#include "keyfactor/csv.hpp"
#include "keyfactor/emit.hpp"
#include "keyfactor/matrix.hpp"
#include "keyfactor/model.hpp"
#include "keyfactor/rapex.hpp"
#include "keyfactor/sums_csv.hpp"
