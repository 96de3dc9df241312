#pragma once
// Stallings folding for subgroups of free groups. A list of generator
// words is turned into a wedge of labelled circles and folded until the
// labelling is locally injective; the rank of the folded graph equals
// the rank of the generated subgroup, which certifies whether the words
// form a free basis of that subgroup.
#include <npcx/words.hpp>

#include <vector>

namespace npcx {

struct FoldResult {
  long long vertices = 0;
  long long edges = 0;
  long long rank = 0;   // edges - vertices + 1 of the folded graph
  bool basis = false;   // rank equals the number of generator words
};

FoldResult fold_subgroup(int ambient_rank, const std::vector<FreeWord>& words);

}  // namespace npcx
