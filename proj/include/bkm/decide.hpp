#pragma once

#include <optional>
#include <vector>

#include "bkm/numerators.hpp"

namespace bkm {

// Connected component C of some Pi(lambda) tagged with the restriction of
// lambda to the real coroots inside C. The matching token for both decision
// procedures.
struct ComponentKey {
  std::vector<int> C;                                   // sorted
  std::vector<std::pair<int, long long>> re_values;     // (index, lambda(h_index)), sorted

  auto operator<=>(const ComponentKey&) const = default;
};

ComponentKey make_component_key(const BorcherdsCartanMatrix& A, const Weight& lam,
                                const std::vector<int>& C);

// Sorted multiset of component keys over all weights.
std::vector<ComponentKey> component_multiset(const BorcherdsCartanMatrix& A,
                                             const std::vector<Weight>& weights);

struct Verdict {
  enum class Failure { None, SumMismatch, ComponentMultisetMismatch };

  struct Match {
    int left_weight;        // index into the (padded) left side
    int right_weight;       // index into the (padded) right side
    ComponentKey key;
  };

  bool isomorphic = false;
  std::vector<Match> witness;
  Failure failure = Failure::None;
  std::optional<ComponentKey> offending_key;
  std::string detail;
};

// Combinatorial test for U(l_1,chi)...U(l_r,chi) = U(m_1,chi)...U(m_s,chi):
// equality of component-key multisets. chi-independent.
Verdict decide_numerator_equality(const BorcherdsCartanMatrix& A,
                                  const std::vector<Weight>& left,
                                  const std::vector<Weight>& right);

// Tensor-product isomorphism: sum of weights must match (h and derivation
// parts) and, after padding the shorter side with zero weights, the
// component-key multisets must match.
Verdict decide_tensor_isomorphism(const BorcherdsCartanMatrix& A,
                                  const std::vector<Weight>& left,
                                  const std::vector<Weight>& right);

struct FactorReport {
  enum class Status { Ok, NotApplicable, NotIsomorphic };

  struct Pairing {
    int left;
    int right;
    bool twist_special;      // lambda_i - mu_sigma(i) vanishes on imaginary coroots
    bool twist_trivial;      // lambda_i == mu_sigma(i)
  };

  Status status;
  std::string detail;
  std::vector<Pairing> pairs;
};

// Unique-factorization pairing when every Pi(lambda_i), Pi(mu_j) is connected
// (and nonempty) and the sides are isomorphic with r == s.
FactorReport unique_factorization_report(const BorcherdsCartanMatrix& A,
                                         const std::vector<Weight>& left,
                                         const std::vector<Weight>& right);

struct OracleResult {
  bool sums_equal;
  bool series_equal;                          // truncated tensor characters at H
  bool equal_to_H;                            // sums_equal && series_equal
  std::optional<std::vector<int>> first_difference;  // graded-lex least
};

// Independent truncated-character comparison. Equality up to H is necessary,
// not sufficient, for isomorphism.
OracleResult oracle_equal_characters(const BorcherdsCartanMatrix& A,
                                     const std::vector<Weight>& left,
                                     const std::vector<Weight>& right, int H);

}  // namespace bkm
