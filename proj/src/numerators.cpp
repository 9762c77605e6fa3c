#include "bkm/numerators.hpp"

#include <algorithm>

namespace bkm {

namespace {

// Shared by the full numerator (all reflections, all of Omega(lambda)) and a
// component factor (both restricted to C).
TruncatedSeries numerator_impl(const BorcherdsCartanMatrix& A, const Weight& lam,
                               const CharacterHom& chi, int H,
                               const std::vector<int>* restrict_to) {
  const int n = A.rank();
  TruncatedSeries U(n, H);

  std::vector<int> real_gens;
  if (restrict_to) {
    for (int i : *restrict_to)
      if (A.is_real(i)) real_gens.push_back(i);
  } else {
    real_gens = A.real_indices();
  }

  std::vector<int> m(n);
  for (const OmegaElement& om : omega_lambda(A, lam, restrict_to)) {
    Rational gamma_factor = 1;
    for (int j : om.support) gamma_factor *= chi.imval_at(j);
    for (const OrbitTerm& t : orbit_terms(A, lam, om.gamma, H, chi, &real_gens)) {
      for (int i = 0; i < n; ++i) m[i] = static_cast<int>(t.b[i]);
      U.add_term(m, gamma_factor * t.chi_w);
    }
  }
  return U;
}

}  // namespace

TruncatedSeries numerator(const BorcherdsCartanMatrix& A, const Weight& lam,
                          const CharacterHom& chi, int H) {
  return numerator_impl(A, lam, chi, H, nullptr);
}

TruncatedSeries component_numerator(const BorcherdsCartanMatrix& A, const Weight& lam,
                                    const CharacterHom& chi, const std::vector<int>& C,
                                    int H) {
  auto comps = mc_lambda(A, lam);
  std::vector<int> sorted = C;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(comps.begin(), comps.end(), sorted) == comps.end())
    throw NotAComponent();
  return numerator_impl(A, lam, chi, H, &sorted);
}

NumeratorBundle numerator_bundle(const BorcherdsCartanMatrix& A, const Weight& lam,
                                 const CharacterHom& chi, int H) {
  NumeratorBundle bundle{lam, H, numerator(A, lam, chi, H), {}};
  for (const auto& C : mc_lambda(A, lam))
    bundle.factors.emplace_back(C, component_numerator(A, lam, chi, C, H));
  return bundle;
}

std::vector<int> x_lambda_c(const BorcherdsCartanMatrix& A, const Weight& lam,
                            const std::vector<int>& C) {
  std::vector<int> m(A.rank(), 0);
  for (int i : C)
    m[i] = A.is_real(i) ? static_cast<int>(lam.h[i]) + 1 : 1;
  return m;
}

Rational chi_of_set(const BorcherdsCartanMatrix& A, const CharacterHom& chi,
                    const std::vector<int>& C) {
  Rational v = 1;
  for (int i : C)
    v *= A.is_real(i) ? Rational(chi.eps_at(i)) : chi.imval_at(i);
  return v;
}

std::pair<Rational, Rational> log_coefficient_check(const BorcherdsCartanMatrix& A,
                                                    const Weight& lam,
                                                    const CharacterHom& chi,
                                                    const std::vector<int>& C, int H) {
  std::vector<int> m = x_lambda_c(A, lam, C);
  if (total_degree(m) > H) throw HeightTooSmall();
  Rational computed = numerator(A, lam, chi, H).neg_log().coefficient(m);
  Rational predicted =
      chi_of_set(A, chi, C) * Rational(c_of_graph(dynkin_graph(A, C)));
  if (C.size() % 2 != 0) predicted = -predicted;
  return {computed, predicted};
}

TruncatedSeries normalized_character(const BorcherdsCartanMatrix& A, const Weight& lam,
                                     int H) {
  CharacterHom sgn = make_chi_sign(A);
  Weight zero{std::vector<long long>(A.rank(), 0), {}};
  return numerator(A, lam, sgn, H) * numerator(A, zero, sgn, H).inverse();
}

TruncatedSeries tensor_character(const BorcherdsCartanMatrix& A,
                                 const std::vector<Weight>& weights, int H) {
  TruncatedSeries prod = TruncatedSeries::constant(A.rank(), H, 1);
  for (const Weight& lam : weights) prod = prod * normalized_character(A, lam, H);
  return prod;
}

}  // namespace bkm
