#pragma once

#include <stdexcept>
#include <vector>

#include "bkm/cartan.hpp"
#include "bkm/graphs.hpp"

namespace bkm {

struct DominanceError : std::domain_error {
  DominanceError() : std::domain_error("weight is not dominant") {}
};

// Dominant integral weight in coroot coordinates h_i = lambda(h_i), with an
// optional derivation part e_i = lambda(D_i) (empty means zero). Everything
// combinatorial depends only on h; e enters only global sum comparisons.
struct Weight {
  std::vector<long long> h;
  std::vector<Rational> e;

  bool dominant() const {
    for (long long v : h)
      if (v < 0) return false;
    return true;
  }

  Rational e_at(int i) const {
    return i < static_cast<int>(e.size()) ? e[i] : Rational(0);
  }

  bool operator==(const Weight& o) const;
};

Weight operator+(const Weight& a, const Weight& b);

// gamma in Omega(lambda): coefficient vector (0/1 on the support) plus the
// supporting set of imaginary indices.
struct OmegaElement {
  std::vector<long long> gamma;
  std::vector<int> support;

  int height() const { return static_cast<int>(support.size()); }
};

// {i imaginary : lambda(h_i) = 0}
std::vector<int> lambda_perp_im(const BorcherdsCartanMatrix& A, const Weight& lam);

// Pi(lambda) = real indices union lambda_perp_im
std::vector<int> pi_lambda(const BorcherdsCartanMatrix& A, const Weight& lam);

// Connected components of the subgraph spanned by Pi(lambda).
std::vector<std::vector<int>> mc_lambda(const BorcherdsCartanMatrix& A, const Weight& lam);

// All sums of distinct pairwise-orthogonal imaginary simple roots orthogonal
// to lambda, 0 included. Restricting to `within` (when non-null) keeps only
// roots from that index set.
std::vector<OmegaElement> omega_lambda(const BorcherdsCartanMatrix& A, const Weight& lam,
                                       const std::vector<int>* within = nullptr);

bool is_special(const BorcherdsCartanMatrix& A, const Weight& lam);
bool is_one_dimensional(const BorcherdsCartanMatrix& A, const Weight& lam);

}  // namespace bkm
