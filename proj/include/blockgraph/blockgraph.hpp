#pragma once

#include "blockgraph/block_decomposition.hpp"
#include "blockgraph/determinant.hpp"
#include "blockgraph/families.hpp"
#include "blockgraph/graph_io.hpp"
#include "blockgraph/rational.hpp"
#include "blockgraph/reduction.hpp"
#include "blockgraph/verify.hpp"
#include "blockgraph/weighted_graph.hpp"
