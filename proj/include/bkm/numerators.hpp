#pragma once

#include <vector>

#include "bkm/series.hpp"
#include "bkm/weyl.hpp"

namespace bkm {

struct NotAComponent : std::runtime_error {
  NotAComponent() : std::runtime_error("set is not a connected component of Pi(lambda)") {}
};

struct HeightTooSmall : std::runtime_error {
  HeightTooSmall() : std::runtime_error("truncation height below the degree of X^lambda(C)") {}
};

// U(lambda, chi) = sum over W x Omega(lambda) of chi(w,gamma) X^b, truncated
// at height H. Constant term 1.
TruncatedSeries numerator(const BorcherdsCartanMatrix& A, const Weight& lam,
                          const CharacterHom& chi, int H);

// Factor attached to one connected component C of Pi(lambda): W restricted to
// reflections inside C, Omega to imaginary roots inside C.
TruncatedSeries component_numerator(const BorcherdsCartanMatrix& A, const Weight& lam,
                                    const CharacterHom& chi, const std::vector<int>& C,
                                    int H);

struct NumeratorBundle {
  Weight lambda;
  int H;
  TruncatedSeries U;
  std::vector<std::pair<std::vector<int>, TruncatedSeries>> factors;
};

NumeratorBundle numerator_bundle(const BorcherdsCartanMatrix& A, const Weight& lam,
                                 const CharacterHom& chi, int H);

// Exponent vector of X^lambda(C): lambda(h_a)+1 on real a in C, 1 on
// imaginary a in C, 0 elsewhere.
std::vector<int> x_lambda_c(const BorcherdsCartanMatrix& A, const Weight& lam,
                            const std::vector<int>& C);

// chi(C) = prod eps over real members, prod imval over imaginary members.
Rational chi_of_set(const BorcherdsCartanMatrix& A, const CharacterHom& chi,
                    const std::vector<int>& C);

// (coefficient of X^lambda(C) in -log U(lambda,chi),
//  (-1)^|C| chi(C) c(G(C)))  -- the two must agree; zero iff C disconnected.
std::pair<Rational, Rational> log_coefficient_check(const BorcherdsCartanMatrix& A,
                                                    const Weight& lam,
                                                    const CharacterHom& chi,
                                                    const std::vector<int>& C, int H);

// ch L(lambda) e^{-lambda} = U_lambda / U_0 truncated at H; nonnegative
// integer coefficients, constant term 1.
TruncatedSeries normalized_character(const BorcherdsCartanMatrix& A, const Weight& lam,
                                     int H);

// Product of normalized characters; empty list gives 1.
TruncatedSeries tensor_character(const BorcherdsCartanMatrix& A,
                                 const std::vector<Weight>& weights, int H);

}  // namespace bkm
