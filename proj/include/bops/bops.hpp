#pragma once

#include "bops/consumer.hpp"
#include "bops/dynsim.hpp"
#include "bops/equilibrium.hpp"
#include "bops/format.hpp"
#include "bops/inventory.hpp"
#include "bops/oracle.hpp"
#include "bops/params.hpp"
#include "bops/scenario.hpp"
