#include "cgeom/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cgeom/errors.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom {

namespace {

// Fixed-width bit row over lattice elements.
class BitRow {
public:
  explicit BitRow(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  BitRow operator&(const BitRow& o) const {
    BitRow r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool operator==(const BitRow&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t b = words_[w]; b != 0; b &= b - 1) f(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
  }

private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

FiniteLattice FiniteLattice::from_order(std::size_t n, std::vector<std::uint8_t> leq, std::vector<std::string> labels,
                                        std::vector<SubsetMask> origin) {
  if (n == 0) throw NotALattice("a lattice needs at least one element");
  if (leq.size() != n * n) throw InputError("order matrix has wrong size");
  if (!labels.empty() && labels.size() != n) throw InputError("label count does not match element count");
  if (!origin.empty() && origin.size() != n) throw InputError("origin count does not match element count");

  std::vector<BitRow> below(n, BitRow(n)), above(n, BitRow(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x * n + x]) throw NotALattice("order is not reflexive at element " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq[x * n + y]) continue;
      if (x != y && leq[y * n + x])
        throw NotALattice("order is not antisymmetric: " + std::to_string(x) + " and " + std::to_string(y));
      below[y].set(x);
      above[x].set(y);
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x * n + y])
        above[y].for_each([&](std::size_t z) {
          if (!leq[x * n + z]) throw NotALattice("order is not transitive");
        });

  FiniteLattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);

  // Meet of x, y: the common lower bound whose down-set is the whole set of
  // common lower bounds. Join dually.
  std::vector<std::size_t> down_size(n), up_size(n);
  for (std::size_t x = 0; x < n; ++x) {
    down_size[x] = below[x].count();
    up_size[x] = above[x].count();
  }
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const BitRow lower = below[x] & below[y];
      std::size_t best = n;
      lower.for_each([&](std::size_t z) {
        if (best == n || down_size[z] > down_size[best]) best = z;
      });
      if (best == n || !(below[best] == lower))
        throw NotALattice("elements " + std::to_string(x) + " and " + std::to_string(y) + " have no meet");
      const BitRow upper = above[x] & above[y];
      std::size_t best_up = n;
      upper.for_each([&](std::size_t z) {
        if (best_up == n || up_size[z] > up_size[best_up]) best_up = z;
      });
      if (best_up == n || !(above[best_up] == upper))
        throw NotALattice("elements " + std::to_string(x) + " and " + std::to_string(y) + " have no join");
      l.meet_[x * n + y] = l.meet_[y * n + x] = static_cast<std::uint32_t>(best);
      l.join_[x * n + y] = l.join_[y * n + x] = static_cast<std::uint32_t>(best_up);
    }
  }

  l.bottom_ = n;
  l.top_ = n;
  for (std::size_t x = 0; x < n; ++x) {
    if (up_size[x] == n) l.bottom_ = x;
    if (down_size[x] == n) l.top_ = x;
  }

  l.up_.assign(n, {});
  l.down_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x)
    above[x].for_each([&](std::size_t y) {
      if (y != x && (above[x] & below[y]).count() == 2) {
        l.up_[x].push_back(y);
        l.down_[y].push_back(x);
      }
    });

  // Longest chain from bottom, processing elements by down-set size (a linear
  // extension of the order).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return down_size[a] < down_size[b]; });
  l.height_.assign(n, 0);
  for (std::size_t x : order)
    for (std::size_t y : l.up_[x]) l.height_[y] = std::max(l.height_[y], l.height_[x] + 1);

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  }
  l.labels_ = std::move(labels);
  l.origin_ = std::move(origin);
  return l;
}

FiniteLattice FiniteLattice::from_covers(std::size_t n, std::span<const std::pair<Element, Element>> pairs) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) leq[x * n + x] = 1;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("cover pair references element outside 0.." + std::to_string(n - 1));
    if (x == y) throw NotALattice("cover pair " + std::to_string(x) + " < " + std::to_string(x) + " is reflexive");
    leq[x * n + y] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return from_order(n, std::move(leq));
}

std::vector<std::pair<FiniteLattice::Element, FiniteLattice::Element>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y : up_[x]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FiniteLattice::rank_sizes() const {
  std::vector<std::size_t> out(height_[top_] + 1, 0);
  for (auto h : height_) ++out[h];
  return out;
}

std::optional<FiniteLattice::Element> FiniteLattice::find_origin(SubsetMask m) const {
  auto it = std::find(origin_.begin(), origin_.end(), m);
  if (it == origin_.end()) return std::nullopt;
  return static_cast<Element>(it - origin_.begin());
}

FiniteLattice lattice_of_closed_sets(const ConvexGeometry& g) {
  const auto& closed = g.closed();
  const std::size_t n = closed.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(g.ground().format_set(closed[i]));
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = closed[i].subset_of(closed[j]) ? 1 : 0;
  }
  return FiniteLattice::from_order(n, std::move(leq), std::move(labels), closed);
}

FiniteLattice interval(const FiniteLattice& l, FiniteLattice::Element a, FiniteLattice::Element b) {
  if (a >= l.size() || b >= l.size()) throw InputError("interval endpoint out of range");
  if (!l.leq(a, b))
    throw NotComparable("interval endpoints " + l.label(a) + " and " + l.label(b) + " are not ordered");
  std::vector<FiniteLattice::Element> members;
  for (FiniteLattice::Element x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) members.push_back(x);

  const std::size_t m = members.size();
  std::vector<std::uint8_t> leq(m * m);
  std::vector<std::string> labels;
  std::vector<SubsetMask> origin;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(l.label(members[i]));
    if (l.has_origin()) origin.push_back(l.origin(members[i]));
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = l.leq(members[i], members[j]) ? 1 : 0;
  }
  return FiniteLattice::from_order(m, std::move(leq), std::move(labels), std::move(origin));
}

FiniteLattice direct_product(const FiniteLattice& l1, const FiniteLattice& l2) {
  // Every table is componentwise, so nothing needs re-deriving.
  const std::size_t n1 = l1.size(), n2 = l2.size(), n = n1 * n2;
  FiniteLattice l;
  l.n_ = n;
  l.bottom_ = l1.bottom() * n2 + l2.bottom();
  l.top_ = l1.top() * n2 + l2.top();
  l.leq_.assign(n * n, 0);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  l.up_.assign(n, {});
  l.down_.assign(n, {});
  l.height_.assign(n, 0);
  l.labels_.reserve(n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const std::size_t x = i * n2 + j;
      l.labels_.push_back("(" + l1.label(i) + "," + l2.label(j) + ")");
      l.height_[x] = l1.height(i) + l2.height(j);
      for (auto k : l1.upper_covers(i)) l.up_[x].push_back(k * n2 + j);
      for (auto m : l2.upper_covers(j)) l.up_[x].push_back(i * n2 + m);
      for (auto k : l1.lower_covers(i)) l.down_[x].push_back(k * n2 + j);
      for (auto m : l2.lower_covers(j)) l.down_[x].push_back(i * n2 + m);
      std::sort(l.up_[x].begin(), l.up_[x].end());
      std::sort(l.down_[x].begin(), l.down_[x].end());
      for (std::size_t k = 0; k < n1; ++k)
        for (std::size_t m = 0; m < n2; ++m) {
          const std::size_t y = k * n2 + m;
          l.leq_[x * n + y] = l1.leq(i, k) && l2.leq(j, m);
          l.meet_[x * n + y] = static_cast<std::uint32_t>(l1.meet(i, k) * n2 + l2.meet(j, m));
          l.join_[x * n + y] = static_cast<std::uint32_t>(l1.join(i, k) * n2 + l2.join(j, m));
        }
    }
  return l;
}

FiniteLattice chain_lattice(std::size_t n) {
  if (n == 0) throw InputError("a chain lattice needs at least one element");
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  return FiniteLattice::from_order(n, std::move(leq));
}

FiniteLattice::Element meet_all(const FiniteLattice& l, std::span<const FiniteLattice::Element> xs) {
  FiniteLattice::Element acc = l.top();
  for (auto x : xs) acc = l.meet(acc, x);
  return acc;
}

bool is_boolean(const FiniteLattice& l) {
  const auto& atoms = l.upper_covers(l.bottom());
  const std::size_t k = atoms.size();
  if (k >= 63 || l.size() != (std::size_t{1} << k)) return false;
  std::vector<std::uint8_t> hit(l.size(), 0);
  for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
    FiniteLattice::Element acc = l.bottom();
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1u) acc = l.join(acc, atoms[i]);
    if (hit[acc]) return false;
    hit[acc] = 1;
  }
  return true;
}

namespace {

// is_boolean(interval(l, a, b)) without building the interval.
bool interval_is_boolean(const FiniteLattice& l, FiniteLattice::Element a, FiniteLattice::Element b) {
  std::vector<FiniteLattice::Element> atoms;
  for (auto y : l.upper_covers(a))
    if (l.leq(y, b)) atoms.push_back(y);
  const std::size_t k = atoms.size();
  std::size_t size = 0;
  for (FiniteLattice::Element x = 0; x < l.size(); ++x) size += l.leq(a, x) && l.leq(x, b);
  if (k >= 63 || size != (std::size_t{1} << k)) return false;
  std::vector<std::uint8_t> hit(l.size(), 0);
  for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
    FiniteLattice::Element acc = a;
    for (std::size_t i = 0; i < k; ++i)
      if ((s >> i) & 1u) acc = l.join(acc, atoms[i]);
    if (hit[acc]) return false;
    hit[acc] = 1;
  }
  return true;
}

}  // namespace

bool is_meet_distributive(const FiniteLattice& l) {
  for (FiniteLattice::Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    if (!interval_is_boolean(l, meet_all(l, l.lower_covers(x)), x)) return false;
  }
  return true;
}

bool is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

}  // namespace cgeom
