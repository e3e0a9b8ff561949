#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "twv/cyclotomic.hpp"
#include "twv/matrix.hpp"
#include "twv/report.hpp"

namespace twv {

/// Ordered set of opaque labels; order is declaration order.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws Error on unknown labels.
  std::size_t index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Commutative based ring: [a][b] = sum_c N(a,b,c) [c].
class BasedRing {
 public:
  BasedRing() = default;
  BasedRing(LabelSet labels, std::size_t unit, std::vector<std::size_t> star);

  std::size_t rank() const { return labels_.size(); }
  const LabelSet& labels() const { return labels_; }
  std::size_t unit() const { return unit_; }
  std::size_t star(std::size_t a) const { return star_.at(a); }
  const std::vector<std::size_t>& star() const { return star_; }

  long N(std::size_t a, std::size_t b, std::size_t c) const { return constants_[(a * rank() + b) * rank() + c]; }
  long& N(std::size_t a, std::size_t b, std::size_t c) { return constants_[(a * rank() + b) * rank() + c]; }

 private:
  LabelSet labels_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> star_;
  std::vector<long> constants_;
};

/// Based module over a BasedRing: [c][m] = sum_n A(c,m,n) [n].
///
/// `star` maps each label to the index of its dual label in the paired module
/// (the grade -1 component); identity for synthesized duals.
class BasedModule {
 public:
  BasedModule() = default;
  BasedModule(std::shared_ptr<const BasedRing> ring, LabelSet labels, std::vector<std::size_t> star = {});

  const BasedRing& ring() const { return *ring_; }
  const std::shared_ptr<const BasedRing>& ring_ptr() const { return ring_; }
  std::size_t rank() const { return labels_.size(); }
  const LabelSet& labels() const { return labels_; }
  std::size_t star(std::size_t m) const { return star_.at(m); }
  const std::vector<std::size_t>& star() const { return star_; }

  long A(std::size_t c, std::size_t m, std::size_t n) const { return constants_[(c * rank() + m) * rank() + n]; }
  long& A(std::size_t c, std::size_t m, std::size_t n) { return constants_[(c * rank() + m) * rank() + n]; }

 private:
  std::shared_ptr<const BasedRing> ring_;
  LabelSet labels_;
  std::vector<std::size_t> star_;
  std::vector<long> constants_;
};

/// Grades 0, 1 and -1 of a Z/NZ-graded fusion datum plus the permutation F of
/// the grade-0 labels.
struct GradedFusionDatum {
  int modulus = 1;
  std::shared_ptr<const BasedRing> ring;
  BasedModule module;
  BasedModule dual;
  std::vector<std::size_t> F;
};

Report validate_based_ring(const BasedRing& ring);
Report validate_based_module(const BasedModule& module);
/// F is a structure-preserving permutation fixing the unit and commuting with
/// star, |fixed points| = module rank, and `dual` is the star-dual of `module`.
Report validate_graded_datum(const GradedFusionDatum& datum);

/// (c, b) entry N(a, b, c): the matrix of left multiplication by [a].
CycMatrix fusion_matrix(const BasedRing& ring, std::size_t a);
CycMatrix fusion_matrix(const BasedRing& ring, const std::string& a);
/// (n, m) entry A(c, m, n).
CycMatrix action_matrix(const BasedModule& module, std::size_t c);

/// K(M^-1): labels m*, A'(c, m*, n*) = A(c*, m, n).
BasedModule dual_module(const BasedModule& module);
/// The ring acting on itself.
BasedModule regular_module(std::shared_ptr<const BasedRing> ring);

/// Product in K_Qab(C) of coefficient vectors.
std::vector<CycNum> ring_multiply(const BasedRing& ring, std::span<const CycNum> x, std::span<const CycNum> y);
/// Action of a ring element on a module vector.
std::vector<CycNum> module_act(const BasedModule& module, std::span<const CycNum> x, std::span<const CycNum> v);

/// sum_i x_i conj(y_i).
CycNum hermitian_form(std::span<const CycNum> x, std::span<const CycNum> y);

/// Fixed points of a permutation, in label order.
std::vector<std::size_t> fixed_points(std::span<const std::size_t> perm);

}  // namespace twv
