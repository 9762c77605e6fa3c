#pragma once

#include <map>
#include <vector>

#include "bkm/cartan.hpp"
#include "bkm/weights.hpp"

namespace bkm {

struct BraidConsistencyError : std::runtime_error {
  explicit BraidConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroValueError : std::runtime_error {
  explicit ZeroValueError(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitEpsError : std::runtime_error {
  explicit NonUnitEpsError(const std::string& what) : std::runtime_error(what) {}
};

// Homomorphism chi on W x Q^im_+ given by its values on generators:
// eps_i = chi(s_i, 0) in {+1,-1} for real i, imval_j = chi(e, alpha_j) != 0
// for imaginary j.
struct CharacterHom {
  std::map<int, int> eps;
  std::map<int, Rational> imval;

  int eps_at(int i) const { return eps.at(i); }
  const Rational& imval_at(int j) const { return imval.at(j); }
};

CharacterHom make_chi_sign(const BorcherdsCartanMatrix& A);
CharacterHom make_chi_trivial(const BorcherdsCartanMatrix& A);

// Validates unit eps values, nonzero imaginary values, and consistency of eps
// across odd braid relations (order 3, i.e. a_ij a_ji = 1).
CharacterHom make_chi_custom(const BorcherdsCartanMatrix& A, std::map<int, int> eps,
                             std::map<int, Rational> imval);

// One Weyl-group element w in the orbit of lambda+rho-gamma:
// (lambda+rho) - w(lambda+rho-gamma) = sum_a b_a alpha_a.
struct OrbitTerm {
  std::vector<long long> b;
  int length;  // l(w)
  int chi_w;   // chi(w, 0), +1 or -1
};

// All orbit terms of height <= H, each Weyl element exactly once, BFS by
// length. Reflections are restricted to `allowed_real` when non-null (its
// order fixes the generator scan order). Requires gamma in Omega(lambda).
std::vector<OrbitTerm> orbit_terms(const BorcherdsCartanMatrix& A, const Weight& lam,
                                   const std::vector<long long>& gamma, int H,
                                   const CharacterHom& chi,
                                   const std::vector<int>* allowed_real = nullptr);

}  // namespace bkm
