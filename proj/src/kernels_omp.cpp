#include "cgeom/kernels.hpp"

#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgeom/setfam.hpp"

namespace cgeom::parallel {

namespace {
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SubsetMask> filter_masks(std::size_t n, const MaskPredicate& keep) {
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<std::uint8_t> flag(static_cast<std::size_t>(count), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t b = 0; b < count; ++b) flag[b] = keep(SubsetMask(static_cast<std::uint32_t>(b))) ? 1 : 0;

  std::vector<SubsetMask> out;
  for (std::int64_t b = 0; b < count; ++b)
    if (flag[b]) out.emplace_back(static_cast<std::uint32_t>(b));
  return out;
}

std::vector<SubsetMask> closure_table(std::size_t n, std::span<const SubsetMask> closed) {
  const std::int64_t count = std::int64_t{1} << n;
  const SubsetMask full = SubsetMask::full(n);
  std::vector<SubsetMask> table(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < count; ++b) {
    const SubsetMask a(static_cast<std::uint32_t>(b));
    SubsetMask acc = full;
    for (SubsetMask x : closed)
      if (a.subset_of(x)) acc &= x;
    table[b] = acc;
  }
  return table;
}

std::optional<AntiexchangeCounterexample> find_antiexchange_violation(std::size_t n,
                                                                      std::span<const SubsetMask> closure) {
  const std::int64_t count = std::int64_t{1} << n;
  // Encoded as (base << 16 | x << 8 | y) so that min() picks the serial witness.
  std::uint64_t best = kNone;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t b = 0; b < count; ++b) {
    const SubsetMask a(static_cast<std::uint32_t>(b));
    const SubsetMask cl_a = closure[b];
    bool found = false;
    for (std::size_t x = 0; x < n && !found; ++x) {
      if (a.contains(x)) continue;
      const SubsetMask cl_ax = closure[(a | SubsetMask::singleton(x)).bits];
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || !cl_ax.contains(y) || cl_a.contains(y)) continue;
        if (closure[(a | SubsetMask::singleton(y)).bits].contains(x)) {
          const std::uint64_t code = (static_cast<std::uint64_t>(b) << 16) | (x << 8) | y;
          if (code < best) best = code;
          found = true;
          break;
        }
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return AntiexchangeCounterexample{SubsetMask(static_cast<std::uint32_t>(best >> 16)),
                                    static_cast<std::size_t>((best >> 8) & 0xff),
                                    static_cast<std::size_t>(best & 0xff)};
}

std::optional<std::pair<std::size_t, std::size_t>> find_intersection_violation(
    std::span<const SubsetMask> family, std::span<const std::uint8_t> member) {
  const std::int64_t m = static_cast<std::int64_t>(family.size());
  std::uint64_t best = kNone;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = i + 1; j < m; ++j) {
      if (!member[(family[i] & family[j]).bits]) {
        const std::uint64_t code = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(m) + j;
        if (code < best) best = code;
        break;
      }
    }
  }
  if (best == kNone) return std::nullopt;
  const auto mm = static_cast<std::uint64_t>(m);
  return std::pair{static_cast<std::size_t>(best / mm), static_cast<std::size_t>(best % mm)};
}

}  // namespace cgeom::parallel
