#include "cgeom/kernels.hpp"

#include "cgeom/setfam.hpp"

namespace cgeom::serial {

std::vector<SubsetMask> filter_masks(std::size_t n, const MaskPredicate& keep) {
  std::vector<SubsetMask> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    const SubsetMask m(static_cast<std::uint32_t>(b));
    if (keep(m)) out.push_back(m);
  }
  return out;
}

std::vector<SubsetMask> closure_table(std::size_t n, std::span<const SubsetMask> closed) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<SubsetMask> table(count);
  for (std::uint64_t b = 0; b < count; ++b) {
    const SubsetMask a(static_cast<std::uint32_t>(b));
    SubsetMask acc = SubsetMask::full(n);
    for (SubsetMask x : closed)
      if (a.subset_of(x)) acc &= x;
    table[b] = acc;
  }
  return table;
}

std::optional<AntiexchangeCounterexample> find_antiexchange_violation(std::size_t n,
                                                                      std::span<const SubsetMask> closure) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    const SubsetMask a(static_cast<std::uint32_t>(b));
    const SubsetMask cl_a = closure[b];
    for (std::size_t x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const SubsetMask cl_ax = closure[(a | SubsetMask::singleton(x)).bits];
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || !cl_ax.contains(y) || cl_a.contains(y)) continue;
        if (closure[(a | SubsetMask::singleton(y)).bits].contains(x)) return AntiexchangeCounterexample{a, x, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_intersection_violation(
    std::span<const SubsetMask> family, std::span<const std::uint8_t> member) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!member[(family[i] & family[j]).bits]) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace cgeom::serial
