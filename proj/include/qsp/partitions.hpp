#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qsp/kernel.hpp"

namespace qsp {

// Blocks of a set partition, each block a list of element indices in natural
// (increasing) order.
using Blocks = std::vector<std::vector<int>>;

// Enumerates all ways to split {0,...,n-1} into ordered blocks of the given
// sizes, lexicographically on the index subsets. Sizes must sum to n.
void for_each_partition(int n, std::span<const int> sizes,
                        const std::function<void(const Blocks&)>& fn);

std::vector<Blocks> enum_partitions(int n, std::span<const int> sizes);

long multinomial(int n, std::span<const int> sizes);

// Parity (+1/-1) of the permutation mapping the concatenation (first, second)
// onto the naturally ordered full index set.
int split_parity(std::span<const int> first, std::span<const int> second);

// (-1)^{[P]} computed from the kernel identity
// g(second, first) * Delta(first) * Delta(second) / Delta(origin);
// guaranteed to be +-1 for nondegenerate origin.
template <class F>
F partition_sign(const VarSet<F>& first, const VarSet<F>& second, const VarSet<F>& origin,
                 const QContext<F>& ctx) {
  return kfun_prod(Kern::g, second, first, ctx) * delta(DeltaKind::Plain, first, ctx) *
         delta(DeltaKind::Plain, second, ctx) / delta(DeltaKind::Plain, origin, ctx);
}

}  // namespace qsp
