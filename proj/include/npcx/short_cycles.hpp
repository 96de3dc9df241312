#pragma once

// Exhaustive enumeration of short injective cycles in a link graph.
//
// A cycle is injective when it repeats no node and no edge instance;
// self-loops (length 1) and pairs of parallel edges (length 2) count.
// Each cycle is reported once, rooted at its smallest node index, with
// a canonical direction, and the list is sorted by (length, edge
// sequence) so runs are reproducible.

#include <vector>

#include "npcx/spine.hpp"

namespace npcx {

std::vector<LinkCycle> enumerate_short_cycles(const LinkGraph& lk,
                                              int max_len);

}  // namespace npcx
