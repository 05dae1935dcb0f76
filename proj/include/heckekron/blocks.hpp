#pragma once

// 2-blocks of symmetric groups: defect, 2-adic valuations of dimensions and
// the characters of height zero.

#include <vector>

#include "heckekron/bigint.hpp"
#include "heckekron/partitions.hpp"

namespace heckekron {

/// d(B) = 2w - s(w) for a 2-block of weight w.
int defect(const BlockId& block);

/// 2-adic valuation of n!/prod(hooks), without forming either number.
int dimension_2adic(const Partition& lam);

struct HeightProfile {
  Partition lam;
  int block_defect = 0;
  int dim2adic = 0;
  int height = 0;
};

HeightProfile height(const Partition& lam);

/// Labels reached from the 2-core by adding rim hooks of sizes 2^{j+1}, one
/// for each 2^j in the binary expansion of the weight, smallest first.
std::vector<Partition> enumerate_height0(const BlockId& block);

/// prod over the binary digits 2^j of the weight of 2^{j+1}.
BigInt k0(const BlockId& block);

}  // namespace heckekron
