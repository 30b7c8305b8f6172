#pragma once

// Umbrella header.

#include "zzflow/cache.hpp"
#include "zzflow/clique.hpp"
#include "zzflow/dual_graph.hpp"
#include "zzflow/ehrhart.hpp"
#include "zzflow/error.hpp"
#include "zzflow/flow.hpp"
#include "zzflow/graph.hpp"
#include "zzflow/grove.hpp"
#include "zzflow/hstar.hpp"
#include "zzflow/oracles.hpp"
#include "zzflow/permutations.hpp"
#include "zzflow/serialize.hpp"
#include "zzflow/shelling.hpp"
#include "zzflow/verify.hpp"
