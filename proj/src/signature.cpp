#include "clifun/signature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "clifun/errors.hpp"

namespace clifun {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0)
    throw InvalidArgument("signature counts must be non-negative");
  if (p + q < 1 || p + q > kMaxDimension)
    throw InvalidArgument("signature dimension n = " + std::to_string(p + q) +
                          " outside 1.." + std::to_string(kMaxDimension));
}

std::span<const std::int8_t> sign_table(const Signature& sig) {
  if (sig.n() > kSignTableMaxDimension) return {};

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<std::int8_t>> cache;

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({sig.p(), sig.q()});
  if (inserted) {
    const std::size_t size = sig.size();
    auto& table = it->second;
    table.resize(size * size);
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b)
        table[a * size + b] =
            static_cast<std::int8_t>(blade_product(sig, {a}, {b}).sign);
  }
  // std::map nodes are stable, so the span outlives the lock.
  return it->second;
}

std::vector<std::uint32_t> grade_lex_order(int n) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ga = std::popcount(a), gb = std::popcount(b);
    if (ga != gb) return ga < gb;
    return blade_indices({a}) < blade_indices({b});
  });
  return masks;
}

std::vector<std::size_t> grade_lex_positions(int n) {
  const auto order = grade_lex_order(n);
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (b.mask >> i & 1u) idx.push_back(i + 1);
  return idx;
}

std::string blade_name(Blade b, int n) {
  if (b.mask == 0) return "1";
  const auto idx = blade_indices(b);
  std::string name = "e";
  if (n <= 9) {
    for (int i : idx) name += static_cast<char>('0' + i);
    return name;
  }
  name += '[';
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) name += ',';
    name += std::to_string(idx[k]);
  }
  return name + ']';
}

SignedBlade blade_from_indices(const Signature& sig, std::span<const int> idx) {
  std::uint32_t mask = 0;
  for (int i : idx) {
    if (i < 1 || i > sig.n())
      throw InvalidArgument("generator index " + std::to_string(i) +
                            " outside 1.." + std::to_string(sig.n()));
    if (mask >> (i - 1) & 1u)
      throw InvalidArgument("repeated generator index " + std::to_string(i));
    mask |= 1u << (i - 1);
  }
  // Bubble sort parity of the index sequence.
  int inversions = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) ++inversions;
  return {(inversions & 1) ? -1 : 1, Blade{mask}};
}

}  // namespace clifun
