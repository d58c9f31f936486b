#pragma once

#include "antidim/anonymity.hpp"
#include "antidim/closure_search.hpp"
#include "antidim/edge_list_io.hpp"
#include "antidim/exact_oracle.hpp"
#include "antidim/experiments.hpp"
#include "antidim/generators.hpp"
#include "antidim/graph.hpp"
#include "antidim/metric_partition.hpp"
#include "antidim/structural_theory.hpp"
#include "antidim/tree_theory.hpp"
#include "antidim/vertex_set.hpp"
