#include "bkm/weyl.hpp"

#include <deque>
#include <set>

namespace bkm {

namespace {

CharacterHom uniform_chi(const BorcherdsCartanMatrix& A, int e, const Rational& v) {
  CharacterHom chi;
  for (int i : A.real_indices()) chi.eps[i] = e;
  for (int j : A.imaginary_indices()) chi.imval[j] = v;
  return chi;
}

}  // namespace

CharacterHom make_chi_sign(const BorcherdsCartanMatrix& A) {
  return uniform_chi(A, -1, Rational(-1));
}

CharacterHom make_chi_trivial(const BorcherdsCartanMatrix& A) {
  return uniform_chi(A, 1, Rational(1));
}

CharacterHom make_chi_custom(const BorcherdsCartanMatrix& A, std::map<int, int> eps,
                             std::map<int, Rational> imval) {
  for (int i : A.real_indices()) {
    auto it = eps.find(i);
    if (it == eps.end())
      throw NonUnitEpsError("missing eps value for real index " + std::to_string(i));
    if (it->second != 1 && it->second != -1)
      throw NonUnitEpsError("eps[" + std::to_string(i) + "] must be +1 or -1");
  }
  for (int j : A.imaginary_indices()) {
    auto it = imval.find(j);
    if (it == imval.end())
      throw ZeroValueError("missing value for imaginary index " + std::to_string(j));
    if (it->second == 0)
      throw ZeroValueError("chi value on imaginary index " + std::to_string(j) +
                           " must be nonzero");
  }
  // s_i s_j has order 3 exactly when a_ij a_ji = 1; odd order forces the two
  // generators to be conjugate, hence equal eps.
  const auto& real = A.real_indices();
  for (size_t p = 0; p < real.size(); ++p)
    for (size_t q = p + 1; q < real.size(); ++q) {
      int i = real[p], j = real[q];
      if (A.entry(i, j) * A.entry(j, i) == 1 && eps[i] != eps[j])
        throw BraidConsistencyError("eps[" + std::to_string(i) + "] and eps[" +
                                    std::to_string(j) +
                                    "] must agree (odd braid relation)");
    }
  CharacterHom chi;
  chi.eps = std::move(eps);
  chi.imval = std::move(imval);
  return chi;
}

std::vector<OrbitTerm> orbit_terms(const BorcherdsCartanMatrix& A, const Weight& lam,
                                   const std::vector<long long>& gamma, int H,
                                   const CharacterHom& chi,
                                   const std::vector<int>* allowed_real) {
  const int n = A.rank();
  if (static_cast<int>(gamma.size()) != n)
    throw std::invalid_argument("gamma rank mismatch");
  const std::vector<int>& gens = allowed_real ? *allowed_real : A.real_indices();

  std::vector<OrbitTerm> out;
  long long ht0 = 0;
  for (long long g : gamma) ht0 += g;
  if (ht0 > H) return out;

  struct Node {
    std::vector<long long> b;
    int length;
    int chi_w;
  };
  std::set<std::vector<long long>> seen;
  std::deque<Node> queue;
  std::vector<long long> b0(gamma.begin(), gamma.end());
  seen.insert(b0);
  queue.push_back({std::move(b0), 0, 1});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    out.push_back({node.b, node.length, node.chi_w});

    for (int j : gens) {
      // mu = (lambda+rho) - sum b_i alpha_i evaluated on h_j; the step
      // s_j mu = mu - mu(h_j) alpha_j raises height exactly when mu(h_j) > 0.
      Rational m = Rational(lam.h[j] + 1);
      for (int i = 0; i < n; ++i)
        if (node.b[i] != 0) m -= Rational(node.b[i]) * A.entry(j, i);
      if (m <= 0) continue;
      long long step = to_integer(m);
      std::vector<long long> nb = node.b;
      nb[j] += step;
      long long ht = 0;
      for (long long v : nb) ht += v;
      if (ht > H) continue;
      if (seen.insert(nb).second)
        queue.push_back({std::move(nb), node.length + 1,
                         node.chi_w * chi.eps_at(j)});
    }
  }
  return out;
}

}  // namespace bkm
