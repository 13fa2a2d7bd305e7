#include "cgeom/hopf.hpp"

#include <exception>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "cgeom/geomops.hpp"
#include "cgeom/lattice.hpp"

namespace cgeom {

ClassId class_of(const ConvexGeometry& g) {
  return ClassId{g.ground_size(), canonical_key(lattice_of_closed_sets(g)).text};
}

// ---------------------------------------------------------------------------
// HopfVector

HopfVector HopfVector::basis(const ConvexGeometry& g, const Rational& coeff) {
  return basis(class_of(g), std::make_shared<const ConvexGeometry>(g), coeff);
}

HopfVector HopfVector::basis(const ClassId& id, GeometryPtr rep, const Rational& coeff) {
  HopfVector v;
  v.add_term(id, rep, coeff);
  return v;
}

void HopfVector::add_term(const ClassId& id, const GeometryPtr& rep, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(id, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
      registry_.erase(id);
      return;
    }
  }
  registry_.try_emplace(id, rep);
}

HopfVector& HopfVector::operator+=(const HopfVector& o) {
  for (const auto& [id, c] : o.terms_) add_term(id, o.registry_.at(id), c);
  return *this;
}

HopfVector& HopfVector::operator-=(const HopfVector& o) {
  for (const auto& [id, c] : o.terms_) add_term(id, o.registry_.at(id), -c);
  return *this;
}

HopfVector& HopfVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    registry_.clear();
    return *this;
  }
  for (auto& [id, coeff] : terms_) coeff *= c;
  return *this;
}

Rational HopfVector::coefficient(const ClassId& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string HopfVector::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [id, c] : terms_) out += format_rational(c) + " * " + id.key + "\n";
  return out;
}

template <std::size_t N>
std::string BasicTensor<N>::to_string() const {
  if (terms_.empty()) return "0\n";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    out += format_rational(c) + " *";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += " (x)";
      out += " " + idx[i].key;
    }
    out += "\n";
  }
  return out;
}

template class BasicTensor<2>;
template class BasicTensor<3>;

// ---------------------------------------------------------------------------
// Structure maps

ClassProduct multiply_classes(const ClassId& a, const GeometryPtr& ra, const ClassId& b, const GeometryPtr& rb) {
  static std::shared_mutex mutex;
  static std::map<std::pair<ClassId, ClassId>, ClassProduct> cache;

  auto key = std::pair{a, b};
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rep = std::make_shared<const ConvexGeometry>(product_geometry(*ra, *rb));
  ClassProduct result{class_of(*rep), rep};
  std::unique_lock lock(mutex);
  return cache.try_emplace(std::move(key), std::move(result)).first->second;
}

namespace {

struct ClassRef {
  ClassId id;
  GeometryPtr rep;
};

ClassRef class_ref(ConvexGeometry g) {
  auto rep = std::make_shared<const ConvexGeometry>(std::move(g));
  return ClassRef{class_of(*rep), rep};
}

}  // namespace

TensorVector coproduct(const ConvexGeometry& g) {
  TensorVector out;
  const SubsetMask full = g.full();
  for (SubsetMask x : g.closed()) {
    auto left = class_ref(minor(g, SubsetMask{}, x));
    auto right = class_ref(minor(g, x, full));
    out.add_term({left.id, right.id}, {left.rep, right.rep}, 1);
  }
  return out;
}

TensorVector coproduct(const HopfVector& v) {
  TensorVector out;
  for (const auto& [id, c] : v.terms()) {
    const auto part = coproduct(*v.representative(id));
    for (const auto& [idx, d] : part.terms()) out.add_term(idx, part.representatives(idx), c * d);
  }
  return out;
}

Rational counit(const HopfVector& v) {
  Rational sum = 0;
  for (const auto& [id, c] : v.terms())
    if (id.grade == 0) sum += c;
  return sum;
}

HopfVector multiply(const HopfVector& a, const HopfVector& b) {
  HopfVector out;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      const auto p = multiply_classes(ia, a.representative(ia), ib, b.representative(ib));
      out.add_term(p.id, p.rep, ca * cb);
    }
  return out;
}

HopfVector multiply(const TensorVector& t) {
  HopfVector out;
  for (const auto& [idx, c] : t.terms()) {
    const auto p = multiply_classes(idx[0], t.representative(idx[0]), idx[1], t.representative(idx[1]));
    out.add_term(p.id, p.rep, c);
  }
  return out;
}

TensorVector multiply(const TensorVector& s, const TensorVector& t) {
  TensorVector out;
  for (const auto& [is, cs] : s.terms())
    for (const auto& [it, ct] : t.terms()) {
      const auto p0 = multiply_classes(is[0], s.representative(is[0]), it[0], t.representative(it[0]));
      const auto p1 = multiply_classes(is[1], s.representative(is[1]), it[1], t.representative(it[1]));
      out.add_term({p0.id, p1.id}, {p0.rep, p1.rep}, cs * ct);
    }
  return out;
}

HopfVector counit_left(const TensorVector& t) {
  HopfVector out;
  for (const auto& [idx, c] : t.terms())
    if (idx[0].grade == 0) out.add_term(idx[1], t.representative(idx[1]), c);
  return out;
}

HopfVector counit_right(const TensorVector& t) {
  HopfVector out;
  for (const auto& [idx, c] : t.terms())
    if (idx[1].grade == 0) out.add_term(idx[0], t.representative(idx[0]), c);
  return out;
}

TripleTensor coproduct_left(const TensorVector& t) {
  TripleTensor out;
  for (const auto& [idx, c] : t.terms()) {
    const auto split = coproduct(*t.representative(idx[0]));
    for (const auto& [s, d] : split.terms())
      out.add_term({s[0], s[1], idx[1]},
                   {split.representative(s[0]), split.representative(s[1]), t.representative(idx[1])}, c * d);
  }
  return out;
}

TripleTensor coproduct_right(const TensorVector& t) {
  TripleTensor out;
  for (const auto& [idx, c] : t.terms()) {
    const auto split = coproduct(*t.representative(idx[1]));
    for (const auto& [s, d] : split.terms())
      out.add_term({idx[0], s[0], s[1]},
                   {t.representative(idx[0]), split.representative(s[0]), split.representative(s[1])}, c * d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Antipode, chain formula

namespace {

class ChainAntipode {
public:
  explicit ChainAntipode(const ConvexGeometry& g) : g_(g), closed_(g.closed()), n_(closed_.size()) {}

  HopfVector run(bool parallel_branches) {
    if (n_ == 1) return HopfVector::basis(g_);
    build_minor_table(parallel_branches);

    // Branch j collects every chain whose first step is {} ⊂ closed[j].
    std::vector<HopfVector> branch(n_);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(n_);
#pragma omp parallel for schedule(dynamic, 1) if (parallel_branches)
    for (std::int64_t j = 1; j < count; ++j) {
      try {
        const auto& first = minors_[j];
        extend(static_cast<std::size_t>(j), first.id, first.rep, -1, branch[j]);
      } catch (...) {
#pragma omp critical(cgeom_chain_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    HopfVector total;
    for (const auto& b : branch) total += b;
    return total;
  }

private:
  // Minor classes M(closed[i], closed[j]) for every strict containment.
  void build_minor_table(bool parallel_branches) {
    minors_.assign(n_ * n_, ClassRef{});
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(n_);
#pragma omp parallel for schedule(dynamic, 1) if (parallel_branches)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        for (std::size_t j = 0; j < n_; ++j)
          if (closed_[i].proper_subset_of(closed_[j])) minors_[i * n_ + j] = class_ref(minor(g_, closed_[i], closed_[j]));
      } catch (...) {
#pragma omp critical(cgeom_chain_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  void extend(std::size_t at, const ClassId& id, const GeometryPtr& rep, int sign, HopfVector& out) const {
    if (at == n_ - 1) {
      out.add_term(id, rep, sign);
      return;
    }
    for (std::size_t j = at + 1; j < n_; ++j) {
      if (!closed_[at].proper_subset_of(closed_[j])) continue;
      const auto& step = minors_[at * n_ + j];
      const auto p = multiply_classes(id, rep, step.id, step.rep);
      extend(j, p.id, p.rep, -sign, out);
    }
  }

  const ConvexGeometry& g_;
  const std::vector<SubsetMask>& closed_;
  std::size_t n_;
  std::vector<ClassRef> minors_;
};

}  // namespace

HopfVector antipode_chain(const ConvexGeometry& g) { return ChainAntipode(g).run(true); }

namespace serial {
HopfVector antipode_chain(const ConvexGeometry& g) { return ChainAntipode(g).run(false); }
}  // namespace serial

// ---------------------------------------------------------------------------
// Antipode, graded recursion

namespace {

class RecursiveAntipode {
public:
  HopfVector operator()(const ConvexGeometry& g) { return eval(class_ref(g)); }

  HopfVector eval(const ClassRef& c) {
    if (auto it = memo_.find(c.id); it != memo_.end()) return it->second;
    const ConvexGeometry& g = *c.rep;
    HopfVector result = HopfVector::basis(c.id, c.rep);
    if (g.ground_size() != 0) {
      result = -result;
      const SubsetMask full = g.full();
      for (SubsetMask x : g.closed()) {
        if (x.empty() || x == full) continue;
        const HopfVector left = eval(class_ref(minor(g, SubsetMask{}, x)));
        const auto right = class_ref(minor(g, x, full));
        result -= multiply(left, HopfVector::basis(right.id, right.rep));
      }
    }
    return memo_.emplace(c.id, std::move(result)).first->second;
  }

private:
  std::map<ClassId, HopfVector> memo_;
};

}  // namespace

HopfVector antipode_recursive(const ConvexGeometry& g) { return RecursiveAntipode{}(g); }

HopfVector antipode(const HopfVector& v) {
  RecursiveAntipode s;
  HopfVector out;
  for (const auto& [id, c] : v.terms()) out += c * s.eval(ClassRef{id, v.representative(id)});
  return out;
}

HopfAxiomReport verify_hopf_axiom(const ConvexGeometry& g) {
  RecursiveAntipode s;
  const TensorVector delta = coproduct(g);
  HopfVector left, right;
  for (const auto& [idx, c] : delta.terms()) {
    const ClassRef a{idx[0], delta.representative(idx[0])};
    const ClassRef b{idx[1], delta.representative(idx[1])};
    left += c * multiply(s.eval(a), HopfVector::basis(b.id, b.rep));
    right += c * multiply(HopfVector::basis(a.id, a.rep), s.eval(b));
  }
  if (g.ground_size() == 0) {
    const HopfVector unit = HopfVector::basis(g);
    left -= unit;
    right -= unit;
  }
  return HopfAxiomReport{std::move(left), std::move(right)};
}

std::optional<MinorWitness> has_forbidden_minor(const ConvexGeometry& g, const ConvexGeometry& pattern) {
  const std::string target = canonical_key(lattice_of_closed_sets(pattern)).text;
  const std::size_t target_sets = pattern.closed().size();
  const std::size_t target_grade = pattern.ground_size();
  const auto& closed = g.closed();
  for (SubsetMask a : closed) {
    for (SubsetMask b : closed) {
      if (!a.subset_of(b) || (b - a).size() != target_grade) continue;
      std::size_t between = 0;
      for (SubsetMask x : closed) between += a.subset_of(x) && x.subset_of(b);
      if (between != target_sets) continue;
      if (canonical_key(lattice_of_closed_sets(minor(g, a, b))).text == target) return MinorWitness{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace cgeom
