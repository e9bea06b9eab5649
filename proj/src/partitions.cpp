#include "qsp/partitions.hpp"

#include "qsp/errors.hpp"

namespace qsp {

namespace {

void recurse(const std::vector<int>& remaining, std::span<const int> sizes, std::size_t level,
             Blocks& acc, const std::function<void(const Blocks&)>& fn) {
  if (level == sizes.size()) {
    fn(acc);
    return;
  }
  const int k = sizes[level];
  const int m = static_cast<int>(remaining.size());
  // lexicographic combinations of `remaining` taken k at a time
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<int> block, rest;
    block.reserve(static_cast<std::size_t>(k));
    std::size_t ci = 0;
    for (int i = 0; i < m; ++i) {
      if (ci < comb.size() && comb[ci] == i) {
        block.push_back(remaining[static_cast<std::size_t>(i)]);
        ++ci;
      } else {
        rest.push_back(remaining[static_cast<std::size_t>(i)]);
      }
    }
    acc.push_back(std::move(block));
    recurse(rest, sizes, level + 1, acc, fn);
    acc.pop_back();

    // next combination
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

void for_each_partition(int n, std::span<const int> sizes,
                        const std::function<void(const Blocks&)>& fn) {
  long total = 0;
  for (int s : sizes) {
    if (s < 0) throw input_error("for_each_partition: negative block size");
    total += s;
  }
  if (total != n)
    throw input_error("for_each_partition: block sizes sum to " + std::to_string(total) +
                      ", expected " + std::to_string(n));
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  Blocks acc;
  recurse(all, sizes, 0, acc, fn);
}

std::vector<Blocks> enum_partitions(int n, std::span<const int> sizes) {
  std::vector<Blocks> out;
  for_each_partition(n, sizes, [&](const Blocks& b) { out.push_back(b); });
  return out;
}

long multinomial(int n, std::span<const int> sizes) {
  // n! / prod sizes_i!  via incremental binomials to stay in range
  long result = 1;
  int rem = n;
  for (int s : sizes) {
    // result *= C(rem, s)
    long c = 1;
    for (int i = 1; i <= s; ++i) c = c * (rem - s + i) / i;
    result *= c;
    rem -= s;
  }
  return result;
}

int split_parity(std::span<const int> first, std::span<const int> second) {
  std::vector<int> seq(first.begin(), first.end());
  seq.insert(seq.end(), second.begin(), second.end());
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace qsp
