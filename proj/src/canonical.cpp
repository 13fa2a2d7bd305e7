// Canonical labeling of finite lattices.
//
// Colors start from (height, depth, up-degree, down-degree) and are refined
// until every element's color is determined by the multisets of colors of its
// upper and lower covers. When cells remain, the first non-singleton cell is
// individualized one element at a time and the search recurses. Each leaf is a
// labeling; the key is the cover matrix of the lexicographically least leaf.
// Refinement and the choice of cell depend only on colors, so the leaf set is
// isomorphism-invariant and so is its minimum.

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

#include "cgeom/lattice.hpp"

namespace cgeom {

namespace {

using Color = std::uint32_t;

class CanonicalSearch {
public:
  explicit CanonicalSearch(const FiniteLattice& l) : l_(l), n_(l.size()) {}

  CanonicalKey run() {
    std::vector<std::size_t> depth(n_, 0);
    std::vector<FiniteLattice::Element> by_height(n_);
    for (std::size_t x = 0; x < n_; ++x) by_height[x] = x;
    std::stable_sort(by_height.begin(), by_height.end(),
                     [&](auto a, auto b) { return l_.height(a) > l_.height(b); });
    for (auto x : by_height)
      for (auto y : l_.upper_covers(x)) depth[x] = std::max(depth[x], depth[y] + 1);

    using Inv = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
    std::vector<Inv> inv(n_);
    for (std::size_t x = 0; x < n_; ++x)
      inv[x] = {l_.height(x), depth[x], l_.upper_covers(x).size(), l_.lower_covers(x).size()};
    std::vector<Inv> distinct = inv;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<Color> colors(n_);
    for (std::size_t x = 0; x < n_; ++x)
      colors[x] = static_cast<Color>(std::lower_bound(distinct.begin(), distinct.end(), inv[x]) - distinct.begin());

    search(std::move(colors));

    std::string text = "L" + std::to_string(n_) + "[";
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (i) text += ',';
      text += std::to_string(best_[i] / n_) + "<" + std::to_string(best_[i] % n_);
    }
    text += "]";
    return CanonicalKey{std::move(text), n_};
  }

private:
  // Returns the number of colors after refinement to a stable partition.
  std::size_t refine(std::vector<Color>& colors) const {
    std::size_t count = std::set<Color>(colors.begin(), colors.end()).size();
    using Signature = std::tuple<Color, std::vector<Color>, std::vector<Color>>;
    std::vector<Signature> sig(n_);
    while (true) {
      for (std::size_t x = 0; x < n_; ++x) {
        auto& [own, ups, downs] = sig[x];
        own = colors[x];
        ups.clear();
        downs.clear();
        for (auto y : l_.upper_covers(x)) ups.push_back(colors[y]);
        for (auto y : l_.lower_covers(x)) downs.push_back(colors[y]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
      }
      std::vector<const Signature*> sorted(n_);
      for (std::size_t x = 0; x < n_; ++x) sorted[x] = &sig[x];
      std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
      sorted.erase(std::unique(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a == *b; }),
                   sorted.end());
      for (std::size_t x = 0; x < n_; ++x)
        colors[x] = static_cast<Color>(
            std::lower_bound(sorted.begin(), sorted.end(), &sig[x], [](auto* a, auto* b) { return *a < *b; }) -
            sorted.begin());
      if (sorted.size() == count) return count;
      count = sorted.size();
    }
  }

  void search(std::vector<Color> colors) {
    if (refine(colors) == n_) {
      leaf(colors);
      return;
    }
    std::vector<std::size_t> cell_size(n_, 0);
    for (auto c : colors) ++cell_size[c];
    Color target = 0;
    while (cell_size[target] < 2) ++target;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<Color> next(n_);
      for (std::size_t x = 0; x < n_; ++x) next[x] = 2 * colors[x] + 1;
      next[v] = 2 * target;
      search(std::move(next));
    }
  }

  void leaf(const std::vector<Color>& perm) {
    std::vector<std::size_t> edges;
    for (std::size_t x = 0; x < n_; ++x)
      for (auto y : l_.upper_covers(x)) edges.push_back(perm[x] * n_ + perm[y]);
    std::sort(edges.begin(), edges.end());
    if (!have_best_ || matrix_less(edges, best_)) {
      best_ = std::move(edges);
      have_best_ = true;
    }
  }

  // Row-major 0/1 matrices given as sorted positions of their ones, with the
  // same number of ones. At the first differing position the matrix with the
  // smaller position holds a 1 where the other holds 0, so it is larger.
  static bool matrix_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }

  const FiniteLattice& l_;
  std::size_t n_;
  std::vector<std::size_t> best_;
  bool have_best_ = false;
};

std::string labelled_signature(const FiniteLattice& l) {
  std::string s = std::to_string(l.size()) + ":";
  for (auto [x, y] : l.cover_pairs()) {
    s += std::to_string(x);
    s += '<';
    s += std::to_string(y);
    s += ',';
  }
  return s;
}

}  // namespace

namespace detail {
CanonicalKey canonical_key_uncached(const FiniteLattice& l) { return CanonicalSearch(l).run(); }
}  // namespace detail

CanonicalKey canonical_key(const FiniteLattice& l) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::string, CanonicalKey> cache;

  const std::string sig = labelled_signature(l);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(sig); it != cache.end()) return it->second;
  }
  CanonicalKey key = detail::canonical_key_uncached(l);
  std::unique_lock lock(mutex);
  cache.emplace(sig, key);
  return key;
}

}  // namespace cgeom
