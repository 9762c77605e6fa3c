#include "bkm/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkm {

bool Weight::operator==(const Weight& o) const {
  if (h != o.h) return false;
  size_t n = std::max(e.size(), o.e.size());
  for (size_t i = 0; i < n; ++i)
    if (e_at(static_cast<int>(i)) != o.e_at(static_cast<int>(i))) return false;
  return true;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.h.size() != b.h.size())
    throw std::invalid_argument("weight rank mismatch");
  Weight s;
  s.h.resize(a.h.size());
  for (size_t i = 0; i < a.h.size(); ++i) s.h[i] = a.h[i] + b.h[i];
  if (!a.e.empty() || !b.e.empty()) {
    s.e.resize(a.h.size());
    for (size_t i = 0; i < s.e.size(); ++i)
      s.e[i] = a.e_at(static_cast<int>(i)) + b.e_at(static_cast<int>(i));
  }
  return s;
}

namespace {

void require_fit(const BorcherdsCartanMatrix& A, const Weight& lam) {
  if (static_cast<int>(lam.h.size()) != A.rank())
    throw std::invalid_argument("weight rank does not match matrix rank");
  if (!lam.dominant()) throw std::invalid_argument("weight is not dominant");
}

}  // namespace

std::vector<int> lambda_perp_im(const BorcherdsCartanMatrix& A, const Weight& lam) {
  require_fit(A, lam);
  std::vector<int> out;
  for (int i : A.imaginary_indices())
    if (lam.h[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> pi_lambda(const BorcherdsCartanMatrix& A, const Weight& lam) {
  std::vector<int> out = A.real_indices();
  for (int i : lambda_perp_im(A, lam)) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> mc_lambda(const BorcherdsCartanMatrix& A, const Weight& lam) {
  return connected_components(dynkin_graph(A, pi_lambda(A, lam)));
}

std::vector<OmegaElement> omega_lambda(const BorcherdsCartanMatrix& A, const Weight& lam,
                                       const std::vector<int>* within) {
  std::vector<int> pool = lambda_perp_im(A, lam);
  if (within) {
    std::vector<int> filtered;
    for (int i : pool)
      if (std::find(within->begin(), within->end(), i) != within->end())
        filtered.push_back(i);
    pool = std::move(filtered);
  }

  std::vector<OmegaElement> out;
  std::vector<int> chosen;
  // Subsets of the pool whose members are pairwise orthogonal.
  auto emit = [&]() {
    OmegaElement el;
    el.gamma.assign(A.rank(), 0);
    el.support = chosen;
    for (int i : chosen) el.gamma[i] = 1;
    out.push_back(std::move(el));
  };
  auto rec = [&](auto&& self, size_t from) -> void {
    emit();
    for (size_t p = from; p < pool.size(); ++p) {
      int cand = pool[p];
      bool ok = true;
      for (int i : chosen)
        if (A.bilinear(i, cand) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(cand);
      self(self, p + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool is_special(const BorcherdsCartanMatrix& A, const Weight& lam) {
  require_fit(A, lam);
  for (int i : A.imaginary_indices())
    if (lam.h[i] != 0) return false;
  return true;
}

bool is_one_dimensional(const BorcherdsCartanMatrix& A, const Weight& lam) {
  require_fit(A, lam);
  for (long long v : lam.h)
    if (v != 0) return false;
  return true;
}

}  // namespace bkm
