#pragma once

// The incidence Hopf algebra of convex geometries.
//
// Basis elements are isomorphism classes of geometries, where two geometries
// are isomorphic when their lattices of closed sets are. A class is named by
// the canonical key of that lattice together with its grade (the ground-set
// size, equal to the length of the lattice). Every vector keeps one concrete
// representative geometry per class it mentions, so the structure maps can
// operate on actual closed-set families.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cgeom/rational.hpp"
#include "cgeom/setfam.hpp"

namespace cgeom {

using GeometryPtr = std::shared_ptr<const ConvexGeometry>;

/// Basis label. Ordered by (grade, key text), which is the output order of
/// every formal sum.
struct ClassId {
  std::size_t grade = 0;
  std::string key;

  auto operator<=>(const ClassId&) const = default;
};

ClassId class_of(const ConvexGeometry& g);

/// Finite rational combination of classes. Zero coefficients are never stored.
class HopfVector {
public:
  HopfVector() = default;
  static HopfVector basis(const ConvexGeometry& g, const Rational& coeff = 1);
  static HopfVector basis(const ClassId& id, GeometryPtr rep, const Rational& coeff = 1);

  void add_term(const ClassId& id, const GeometryPtr& rep, const Rational& coeff);

  HopfVector& operator+=(const HopfVector& o);
  HopfVector& operator-=(const HopfVector& o);
  HopfVector& operator*=(const Rational& c);
  friend HopfVector operator+(HopfVector a, const HopfVector& b) { return a += b; }
  friend HopfVector operator-(HopfVector a, const HopfVector& b) { return a -= b; }
  friend HopfVector operator*(const Rational& c, HopfVector v) { return v *= c; }
  HopfVector operator-() const { return Rational(-1) * *this; }

  const std::map<ClassId, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ClassId& id) const;
  const GeometryPtr& representative(const ClassId& id) const { return registry_.at(id); }

  /// One `<coefficient> * <key>` line per term; `0` for the zero vector.
  std::string to_string() const;

  bool operator==(const HopfVector& o) const { return terms_ == o.terms_; }

private:
  std::map<ClassId, Rational> terms_;
  std::map<ClassId, GeometryPtr> registry_;
};

/// Finite rational combination of N-fold tensors of classes.
template <std::size_t N>
class BasicTensor {
public:
  using Index = std::array<ClassId, N>;
  using Reps = std::array<GeometryPtr, N>;

  void add_term(const Index& idx, const Reps& reps, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(idx, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
    for (std::size_t i = 0; i < N; ++i) registry_.try_emplace(idx[i], reps[i]);
  }

  const std::map<Index, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const GeometryPtr& representative(const ClassId& id) const { return registry_.at(id); }
  Reps representatives(const Index& idx) const {
    Reps r;
    for (std::size_t i = 0; i < N; ++i) r[i] = registry_.at(idx[i]);
    return r;
  }

  BasicTensor& operator-=(const BasicTensor& o) {
    for (const auto& [idx, c] : o.terms_) add_term(idx, o.representatives(idx), -c);
    return *this;
  }

  /// One `<coefficient> * <key1> (x) <key2> ...` line per term; `0` if zero.
  std::string to_string() const;

  bool operator==(const BasicTensor& o) const { return terms_ == o.terms_; }

private:
  std::map<Index, Rational> terms_;
  std::map<ClassId, GeometryPtr> registry_;
};

using TensorVector = BasicTensor<2>;
using TripleTensor = BasicTensor<3>;

/// Class and representative of the product of two classes.
struct ClassProduct {
  ClassId id;
  GeometryPtr rep;
};

/// Product of two representatives, cached per pair of classes.
ClassProduct multiply_classes(const ClassId& a, const GeometryPtr& ra, const ClassId& b, const GeometryPtr& rb);

/// Sum over closed X of M(∅, X) ⊗ M(X, Z).
TensorVector coproduct(const ConvexGeometry& g);
TensorVector coproduct(const HopfVector& v);

/// Sum of the coefficients of the grade-0 (empty geometry) class.
Rational counit(const HopfVector& v);

/// Bilinear extension of product_geometry.
HopfVector multiply(const HopfVector& a, const HopfVector& b);

/// m : C ⊗ C -> C.
HopfVector multiply(const TensorVector& t);

/// (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
TensorVector multiply(const TensorVector& s, const TensorVector& t);

/// (ε ⊗ id) and (id ⊗ ε).
HopfVector counit_left(const TensorVector& t);
HopfVector counit_right(const TensorVector& t);

/// (Δ ⊗ id) and (id ⊗ Δ).
TripleTensor coproduct_left(const TensorVector& t);
TripleTensor coproduct_right(const TensorVector& t);

/// Signed sum over strict chains {} = X0 ⊂ X1 ⊂ ... ⊂ Xk = Z of closed sets of
/// (-1)^k M(X0, X1) ... M(Xk-1, Xk). Chains are enumerated depth first, the
/// branches below each first step in parallel.
HopfVector antipode_chain(const ConvexGeometry& g);

/// S(g) = -g - sum over {} ⊊ X ⊊ Z of S(M(∅, X)) M(X, Z), memoized per class.
HopfVector antipode_recursive(const ConvexGeometry& g);

/// Linear extension of antipode_recursive.
HopfVector antipode(const HopfVector& v);

namespace serial {
/// antipode_chain without the parallel branch loop.
HopfVector antipode_chain(const ConvexGeometry& g);
}  // namespace serial

/// Residuals of m(S ⊗ id)Δ(g) - ε(g)·1 and m(id ⊗ S)Δ(g) - ε(g)·1.
struct HopfAxiomReport {
  HopfVector left_residual;
  HopfVector right_residual;

  bool ok() const { return left_residual.is_zero() && right_residual.is_zero(); }
};

HopfAxiomReport verify_hopf_axiom(const ConvexGeometry& g);

struct MinorWitness {
  SubsetMask lower;
  SubsetMask upper;
};

/// First closed pair A ⊆ B (A in storage order, then B) whose minor has the
/// lattice of `pattern`, if any.
std::optional<MinorWitness> has_forbidden_minor(const ConvexGeometry& g, const ConvexGeometry& pattern);

}  // namespace cgeom
