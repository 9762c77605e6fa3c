#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkm/rational.hpp"

namespace bkm {

struct AxiomError : std::runtime_error {
  explicit AxiomError(const std::string& what) : std::runtime_error(what) {}
};

struct SymmetrizabilityError : std::runtime_error {
  explicit SymmetrizabilityError(const std::string& what) : std::runtime_error(what) {}
};

// A validated Borcherds-Cartan matrix together with a symmetrizer d
// (d_i a_ij = d_j a_ji, d_i > 0) and the real/imaginary index split.
// Immutable after construction.
class BorcherdsCartanMatrix {
 public:
  static BorcherdsCartanMatrix validate(
      std::vector<std::vector<Rational>> entries,
      std::vector<std::string> labels = {},
      std::optional<std::vector<Rational>> symmetrizer = std::nullopt);

  // Requires the axioms on off-diagonal entries to hold already.
  // Normalized so the minimum within each Dynkin-graph component is 1.
  static std::vector<Rational> compute_symmetrizer(
      const std::vector<std::vector<Rational>>& entries);

  int rank() const { return n_; }
  const Rational& entry(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<Rational>>& entries() const { return a_; }
  const Rational& d(int i) const { return d_[i]; }
  const std::vector<Rational>& symmetrizer() const { return d_; }

  // (alpha_i, alpha_j) = d_i a_ij
  Rational bilinear(int i, int j) const { return d_[i] * a_[i][j]; }

  bool is_real(int i) const { return a_[i][i] == 2; }
  const std::vector<int>& real_indices() const { return real_idx_; }
  const std::vector<int>& imaginary_indices() const { return im_idx_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  BorcherdsCartanMatrix() = default;

  int n_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> d_;
  std::vector<int> real_idx_;
  std::vector<int> im_idx_;
  std::vector<std::string> labels_;
};

}  // namespace bkm
