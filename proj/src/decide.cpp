#include "bkm/decide.hpp"

#include <algorithm>

namespace bkm {

ComponentKey make_component_key(const BorcherdsCartanMatrix& A, const Weight& lam,
                                const std::vector<int>& C) {
  ComponentKey key;
  key.C = C;
  std::sort(key.C.begin(), key.C.end());
  for (int i : key.C)
    if (A.is_real(i)) key.re_values.emplace_back(i, lam.h[i]);
  return key;
}

std::vector<ComponentKey> component_multiset(const BorcherdsCartanMatrix& A,
                                             const std::vector<Weight>& weights) {
  std::vector<ComponentKey> keys;
  for (const Weight& lam : weights)
    for (const auto& C : mc_lambda(A, lam))
      keys.push_back(make_component_key(A, lam, C));
  std::sort(keys.begin(), keys.end());
  return keys;
}

namespace {

struct AnnotatedKey {
  ComponentKey key;
  int weight_index;
  bool operator<(const AnnotatedKey& o) const {
    return key != o.key ? key < o.key : weight_index < o.weight_index;
  }
};

std::vector<AnnotatedKey> annotated_multiset(const BorcherdsCartanMatrix& A,
                                             const std::vector<Weight>& weights) {
  std::vector<AnnotatedKey> keys;
  for (size_t w = 0; w < weights.size(); ++w)
    for (const auto& C : mc_lambda(A, weights[w]))
      keys.push_back({make_component_key(A, weights[w], C), static_cast<int>(w)});
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Multiset comparison with a deterministic witness (match sorted key lists
// position by position).
Verdict match_multisets(const BorcherdsCartanMatrix& A,
                        const std::vector<Weight>& left,
                        const std::vector<Weight>& right) {
  auto lk = annotated_multiset(A, left);
  auto rk = annotated_multiset(A, right);
  Verdict v;
  if (lk.size() != rk.size()) {
    v.failure = Verdict::Failure::ComponentMultisetMismatch;
    v.detail = "component counts differ: " + std::to_string(lk.size()) + " vs " +
               std::to_string(rk.size());
    return v;
  }
  for (size_t p = 0; p < lk.size(); ++p) {
    if (lk[p].key != rk[p].key) {
      v.failure = Verdict::Failure::ComponentMultisetMismatch;
      v.offending_key = lk[p].key < rk[p].key ? lk[p].key : rk[p].key;
      v.detail = "component multisets differ";
      return v;
    }
  }
  v.isomorphic = true;
  for (size_t p = 0; p < lk.size(); ++p)
    v.witness.push_back({lk[p].weight_index, rk[p].weight_index, lk[p].key});
  return v;
}

Weight zero_weight(int n) { return Weight{std::vector<long long>(n, 0), {}}; }

Weight sum_weights(int n, const std::vector<Weight>& ws) {
  Weight s = zero_weight(n);
  for (const Weight& w : ws) s = s + w;
  return s;
}

}  // namespace

Verdict decide_numerator_equality(const BorcherdsCartanMatrix& A,
                                  const std::vector<Weight>& left,
                                  const std::vector<Weight>& right) {
  return match_multisets(A, left, right);
}

Verdict decide_tensor_isomorphism(const BorcherdsCartanMatrix& A,
                                  const std::vector<Weight>& left,
                                  const std::vector<Weight>& right) {
  const int n = A.rank();
  Weight ls = sum_weights(n, left), rs = sum_weights(n, right);
  if (!(ls == rs)) {
    Verdict v;
    v.failure = Verdict::Failure::SumMismatch;
    v.detail = "weight sums differ";
    return v;
  }
  // Pad the shorter side with zero weights (L(0) is trivial).
  std::vector<Weight> lp = left, rp = right;
  while (lp.size() < rp.size()) lp.push_back(zero_weight(n));
  while (rp.size() < lp.size()) rp.push_back(zero_weight(n));
  return match_multisets(A, lp, rp);
}

FactorReport unique_factorization_report(const BorcherdsCartanMatrix& A,
                                         const std::vector<Weight>& left,
                                         const std::vector<Weight>& right) {
  FactorReport report;
  if (left.size() != right.size()) {
    report.status = FactorReport::Status::NotApplicable;
    report.detail = "sides have different factor counts";
    return report;
  }
  auto connected_pi = [&](const Weight& lam) {
    return is_connected(dynkin_graph(A, pi_lambda(A, lam)));
  };
  for (const Weight& lam : left)
    if (!connected_pi(lam)) {
      report.status = FactorReport::Status::NotApplicable;
      report.detail = "Pi(lambda) is not connected for a left factor";
      return report;
    }
  for (const Weight& mu : right)
    if (!connected_pi(mu)) {
      report.status = FactorReport::Status::NotApplicable;
      report.detail = "Pi(mu) is not connected for a right factor";
      return report;
    }
  Verdict v = decide_tensor_isomorphism(A, left, right);
  if (!v.isomorphic) {
    report.status = FactorReport::Status::NotIsomorphic;
    report.detail = v.detail;
    return report;
  }
  // Connected Pi means one component per weight, so the witness is already a
  // permutation of the factors.
  report.status = FactorReport::Status::Ok;
  for (const auto& m : v.witness) {
    const Weight& lam = left[m.left_weight];
    const Weight& mu = right[m.right_weight];
    bool special = true;
    for (int j : A.imaginary_indices())
      if (lam.h[j] != mu.h[j]) special = false;
    report.pairs.push_back({m.left_weight, m.right_weight, special, lam == mu});
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const auto& a, const auto& b) { return a.left < b.left; });
  return report;
}

OracleResult oracle_equal_characters(const BorcherdsCartanMatrix& A,
                                     const std::vector<Weight>& left,
                                     const std::vector<Weight>& right, int H) {
  const int n = A.rank();
  OracleResult res;
  res.sums_equal = sum_weights(n, left) == sum_weights(n, right);
  TruncatedSeries lch = tensor_character(A, left, H);
  TruncatedSeries rch = tensor_character(A, right, H);
  res.series_equal = lch == rch;
  if (!res.series_equal) {
    TruncatedSeries diff = lch - rch;
    res.first_difference = diff.terms().begin()->first;
  }
  res.equal_to_H = res.sums_equal && res.series_equal;
  return res;
}

}  // namespace bkm
