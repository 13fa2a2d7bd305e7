#pragma once

// Data-parallel subset scans.
//
// Every kernel has an OpenMP version in `cgeom::parallel` and a plain loop in
// `cgeom::serial`. The library calls the parallel ones; the serial ones are
// the reference the tests and benchmarks compare against. Both return
// identical results, including which witness is reported.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cgeom/subset.hpp"

namespace cgeom {

struct AntiexchangeCounterexample;

/// Predicate over subset masks; must be safe to call concurrently.
using MaskPredicate = std::function<bool(SubsetMask)>;

namespace serial {

/// Masks 0 .. 2^n - 1 accepted by `keep`, in increasing numeric order.
std::vector<SubsetMask> filter_masks(std::size_t n, const MaskPredicate& keep);

/// Smallest closed superset of every mask. `closed` must contain the full set.
std::vector<SubsetMask> closure_table(std::size_t n, std::span<const SubsetMask> closed);

/// Least (base, x, y) in numeric order violating antiexchange.
std::optional<AntiexchangeCounterexample> find_antiexchange_violation(std::size_t n,
                                                                      std::span<const SubsetMask> closure);

/// Least index pair (i, j), i < j, whose intersection is not a member.
std::optional<std::pair<std::size_t, std::size_t>> find_intersection_violation(
    std::span<const SubsetMask> family, std::span<const std::uint8_t> member);

}  // namespace serial

namespace parallel {

std::vector<SubsetMask> filter_masks(std::size_t n, const MaskPredicate& keep);
std::vector<SubsetMask> closure_table(std::size_t n, std::span<const SubsetMask> closed);
std::optional<AntiexchangeCounterexample> find_antiexchange_violation(std::size_t n,
                                                                      std::span<const SubsetMask> closure);
std::optional<std::pair<std::size_t, std::size_t>> find_intersection_violation(
    std::span<const SubsetMask> family, std::span<const std::uint8_t> member);

/// Worker threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

}  // namespace parallel

}  // namespace cgeom
