// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Everything is exact rational arithmetic; no tolerances.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "test_util.hpp"

using namespace bkm;
using namespace bkm::test;

namespace {

int g_failures = 0;

void report(int crit, const char* what, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", crit, what);
  if (!ok) ++g_failures;
}

SimpleGraph graph_from_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask & (1u << bit)) edges.emplace_back(i, j);
  return SimpleGraph::from_edges(n, edges);
}

// Independent reference for c(G): count surjective assignments V -> {1..k}
// with independent fibers by direct enumeration, then alternate.
long long oracle_c(const SimpleGraph& g) {
  const int n = g.size();
  if (n == 0) return 0;
  Rational acc = 0;
  for (int k = 1; k <= n; ++k) {
    long long count = 0;
    std::vector<int> assign(n, 0);
    while (true) {
      bool ok = true;
      std::vector<bool> used(k, false);
      for (int v = 0; v < n && ok; ++v) {
        used[assign[v]] = true;
        for (int u = 0; u < v && ok; ++u)
          if (assign[u] == assign[v] && g.adj[u][v]) ok = false;
      }
      if (ok)
        ok = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
      if (ok) ++count;
      int i = 0;
      for (; i < n; ++i) {
        if (assign[i] < k - 1) {
          ++assign[i];
          break;
        }
        assign[i] = 0;
      }
      if (i == n) break;
    }
    Rational term(count, k);
    acc += (k % 2 == 0) ? term : -term;
  }
  if (n % 2 != 0) acc = -acc;
  return to_integer(acc);
}

std::vector<BorcherdsCartanMatrix> curated() {
  return {a1(), a1a1(), a2(), heisenberg(), free2(), mixed2(), example1()};
}

CharacterHom custom_chi(const BorcherdsCartanMatrix& A) {
  std::map<int, int> eps;
  std::map<int, Rational> imval;
  for (int i : A.real_indices()) eps[i] = -1;
  for (int j : A.imaginary_indices()) imval[j] = Rational(7, 2);
  return make_chi_custom(A, std::move(eps), std::move(imval));
}

void criterion1() {
  bool ok = true;
  for (int n = 1; n <= 6 && ok; ++n) {
    int bits = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << bits) && ok; ++mask) {
      auto g = graph_from_mask(n, mask);
      long long c = c_of_graph(g);  // throws if not an integer
      if (c < 0) ok = false;
      if ((c > 0) != is_connected(g)) ok = false;
    }
  }
  report(1, "c(G) nonnegative integer, positive iff connected, all graphs on <= 6 vertices", ok);
}

void criterion2() {
  bool ok = true;
  {
    auto A = a1();
    auto sgn = make_chi_sign(A);
    for (int m = 0; m <= 5; ++m) {
      TruncatedSeries expect = TruncatedSeries::constant(1, 10, 1);
      expect.add_term({m + 1}, -1);
      if (!(numerator(A, wt({m}), sgn, 10) == expect)) ok = false;
    }
  }
  {
    auto A = a2();
    TruncatedSeries expect(2, 10);
    expect.add_term({0, 0}, 1);
    expect.add_term({1, 0}, -1);
    expect.add_term({0, 1}, -1);
    expect.add_term({2, 1}, 1);
    expect.add_term({1, 2}, 1);
    expect.add_term({2, 2}, -1);
    if (!(numerator(A, wt({0, 0}), make_chi_sign(A), 10) == expect)) ok = false;
  }
  {
    TruncatedSeries expect(1, 10);
    for (int k = 0; k <= 10; ++k) expect.add_term({k}, 1);
    if (!(normalized_character(heisenberg(), wt({1}), 10) == expect)) ok = false;
  }
  report(2, "closed forms for the A1, A2 and rank-1 imaginary cases at H=10", ok);
}

void criterion3() {
  bool ok = true;
  for (const auto& A : curated()) {
    std::vector<CharacterHom> chis{make_chi_sign(A), make_chi_trivial(A),
                                   custom_chi(A)};
    for (const auto& chi : chis) {
      for (const auto& lam : weight_grid(A.rank(), 2)) {
        auto bundle = numerator_bundle(A, lam, chi, 8);
        TruncatedSeries prod = TruncatedSeries::constant(A.rank(), 8, 1);
        for (const auto& [C, f] : bundle.factors) prod = prod * f;
        if (!(prod == bundle.U)) ok = false;
      }
    }
  }
  report(3, "numerator factors over the components of Pi(lambda), H=8, three chi", ok);
}

void criterion4() {
  bool ok = true;
  std::vector<BorcherdsCartanMatrix> algebras{
      a1(), heisenberg(), a1a1(), free2(), mixed2(), a2(), example1(),
      make({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 0, -1}, {0, 0, -1, 0}})};
  for (const auto& A : algebras) {
    auto chi = make_chi_sign(A);
    int hmax = A.rank() <= 2 ? 2 : 1;
    for (const auto& lam : weight_grid(A.rank(), hmax)) {
      auto pi = pi_lambda(A, lam);
      for (unsigned mask = 0; mask < (1u << pi.size()); ++mask) {
        std::vector<int> C;
        for (size_t p = 0; p < pi.size(); ++p)
          if (mask & (1u << p)) C.push_back(pi[p]);
        int deg = total_degree(x_lambda_c(A, lam, C));
        auto [computed, predicted] =
            log_coefficient_check(A, lam, chi, C, deg + 2);
        if (computed != predicted) ok = false;
        // independent reference for the predicted value
        auto g = dynkin_graph(A, C);
        Rational ref = chi_of_set(A, chi, C) * oracle_c(g);
        if (C.size() % 2 != 0) ref = -ref;
        if (computed != ref) ok = false;
        if ((computed != 0) != is_connected(g)) ok = false;
      }
    }
  }
  report(4, "log-coefficient law against the brute-force partition reference, rank <= 4", ok);
}

void criterion5() {
  bool ok = true;
  for (const auto& A : curated()) {
    for (const auto& lam : weight_grid(A.rank(), 2)) {
      auto ch = normalized_character(A, lam, 10);
      if (!(ch.constant_term() == 1)) ok = false;
      for (const auto& [m, c] : ch.terms())
        if (!is_integer(c) || c <= 0) ok = false;
    }
  }
  report(5, "normalized characters have positive integer coefficients, H=10", ok);
}

// One side of a tensor comparison: a multiset of <= 2 weights.
struct Side {
  std::vector<Weight> ws;
  Weight sum;
  std::vector<ComponentKey> keys;
};

std::vector<Side> make_sides(const BorcherdsCartanMatrix& A, int hmax) {
  auto grid = weight_grid(A.rank(), hmax);
  std::vector<Side> sides;
  auto add = [&](std::vector<Weight> ws) {
    Side s;
    s.sum = Weight{std::vector<long long>(A.rank(), 0), {}};
    for (const auto& w : ws) s.sum = s.sum + w;
    s.keys = component_multiset(A, ws);
    s.ws = std::move(ws);
    sides.push_back(std::move(s));
  };
  for (size_t a = 0; a < grid.size(); ++a) {
    add({grid[a]});
    for (size_t b = a; b < grid.size(); ++b) add({grid[a], grid[b]});
  }
  return sides;
}

void criterion6() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::vector<BorcherdsCartanMatrix> algebras{a1(),         a1a1(),   a2(),
                                              heisenberg(), mixed2(), example1()};
  for (const auto& A : algebras) {
    auto sides = make_sides(A, 2);
    // padded key multiset + sum is the decision signature for sides of any
    // length; pad every side to two factors so signatures are comparable
    Weight zero{std::vector<long long>(A.rank(), 0), {}};
    auto zero_keys = component_multiset(A, {zero});
    struct Sig {
      Weight sum;
      std::vector<ComponentKey> keys;
      bool operator<(const Sig& o) const {
        if (sum.h != o.sum.h) return sum.h < o.sum.h;
        return keys < o.keys;
      }
    };
    std::map<Sig, std::vector<size_t>> groups;
    for (size_t i = 0; i < sides.size(); ++i) {
      Sig sig{sides[i].sum, sides[i].keys};
      if (sides[i].ws.size() == 1) {
        sig.keys.insert(sig.keys.end(), zero_keys.begin(), zero_keys.end());
        std::sort(sig.keys.begin(), sig.keys.end());
      }
      groups[sig].push_back(i);
    }
    // decide=true within a group: sanity-check against the direct call, then
    // require equal truncated characters at H=10
    std::map<Sig, TruncatedSeries> char12;
    for (const auto& [sig, members] : groups) {
      auto rep10 = tensor_character(A, sides[members[0]].ws, 10);
      for (size_t k = 1; k < members.size(); ++k) {
        auto v = decide_tensor_isomorphism(A, sides[members[0]].ws,
                                           sides[members[k]].ws);
        if (!v.isomorphic) ok = false;
        if (!(tensor_character(A, sides[members[k]].ws, 10) == rep10))
          ok = false;
      }
      char12.emplace(sig, tensor_character(A, sides[members[0]].ws, 12));
    }
    // decide=false across groups: an explicit discrepancy must exist by
    // H=12, either in the weight sum or in a series coefficient
    for (auto it = groups.begin(); it != groups.end(); ++it)
      for (auto jt = std::next(it); jt != groups.end(); ++jt) {
        if (it->first.sum.h == jt->first.sum.h &&
            char12.at(it->first) == char12.at(jt->first))
          ok = false;  // decide=false pair with no visible discrepancy
      }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (secs >= 600) ok = false;
  report(6, "decision soundness sweep across the fixed algebra grid", ok);
}

void criterion7() {
  bool ok = true;
  {
    // the rank-3 mixed-matrix tensor identity; weight labels follow the
    // fixtures README mapping
    auto A = example1();
    std::vector<Weight> left{wt({1, 1, 1}), wt({2, 2, 2})};
    std::vector<Weight> right{wt({1, 1, 2}), wt({2, 2, 1})};
    if (!decide_tensor_isomorphism(A, left, right).isomorphic) ok = false;
    auto o = oracle_equal_characters(A, left, right, 10);
    if (!o.equal_to_H) ok = false;
  }
  {
    // rank-1 imaginary case: products with r factors each are isomorphic
    // exactly when the weight sums agree
    auto A = heisenberg();
    for (int r = 1; r <= 3; ++r) {
      std::vector<std::vector<Weight>> tuples;
      std::vector<long long> vals{1, 2, 3};
      std::vector<int> idx(r, 0);
      while (true) {
        std::vector<Weight> t;
        bool sorted = true;
        for (int p = 0; p < r; ++p) {
          t.push_back(wt({vals[idx[p]]}));
          if (p > 0 && idx[p] < idx[p - 1]) sorted = false;
        }
        if (sorted) tuples.push_back(t);
        int p = 0;
        for (; p < r; ++p) {
          if (idx[p] + 1 < static_cast<int>(vals.size())) {
            ++idx[p];
            break;
          }
          idx[p] = 0;
        }
        if (p == r) break;
      }
      for (const auto& L : tuples)
        for (const auto& R : tuples) {
          long long sl = 0, sr = 0;
          for (const auto& w : L) sl += w.h[0];
          for (const auto& w : R) sr += w.h[0];
          bool verdict = decide_tensor_isomorphism(A, L, R).isomorphic;
          if (verdict != (sl == sr)) ok = false;
          if (verdict && !oracle_equal_characters(A, L, R, 10).equal_to_H)
            ok = false;
        }
    }
  }
  {
    // all-real A2: truncated character products coincide exactly for
    // permuted multisets (after dropping zero weights)
    auto A = a2();
    auto sides = make_sides(A, 2);
    auto strip = [](const std::vector<Weight>& ws) {
      std::vector<std::vector<long long>> keep;
      for (const auto& w : ws)
        if (std::any_of(w.h.begin(), w.h.end(), [](long long v) { return v != 0; }))
          keep.push_back(w.h);
      std::sort(keep.begin(), keep.end());
      return keep;
    };
    std::vector<TruncatedSeries> chars;
    chars.reserve(sides.size());
    for (const auto& s : sides) chars.push_back(tensor_character(A, s.ws, 10));
    for (size_t i = 0; i < sides.size(); ++i)
      for (size_t j = i + 1; j < sides.size(); ++j) {
        bool same = strip(sides[i].ws) == strip(sides[j].ws);
        if ((chars[i] == chars[j]) != same) ok = false;
      }
  }
  report(7, "worked identities: rank-3 tensor swap, rank-1 equal sums, all-real uniqueness", ok);
}

void criterion8() {
  bool ok = true;
  auto special_diff = [](const BorcherdsCartanMatrix& A, const Weight& a,
                         const Weight& b) {
    for (int j : A.imaginary_indices())
      if (a.h[j] != b.h[j]) return false;
    return true;
  };
  {
    // weights vanishing on the imaginary node, with derivation twists
    auto A = example1();
    std::vector<Weight> left{
        wt({1, 0, 2}, {Rational(1), Rational(0), Rational(0)}), wt({2, 0, 1})};
    std::vector<Weight> right{
        wt({1, 0, 2}), wt({2, 0, 1}, {Rational(1), Rational(0), Rational(0)})};
    auto rep = unique_factorization_report(A, left, right);
    if (rep.status != FactorReport::Status::Ok || rep.pairs.size() != 2)
      ok = false;
    else
      for (const auto& p : rep.pairs) {
        if (p.twist_special != special_diff(A, left[p.left], right[p.right]))
          ok = false;
        if (!p.twist_special || p.twist_trivial) ok = false;
      }
    // grid of special weights: every reported twist must be special
    std::vector<Weight> gamma_grid;
    for (const auto& w : weight_grid(3, 2))
      if (w.h[1] == 0) gamma_grid.push_back(w);
    for (const auto& u : gamma_grid)
      for (const auto& v : gamma_grid) {
        auto r = unique_factorization_report(A, {u, v}, {v, u});
        if (r.status != FactorReport::Status::Ok) {
          ok = false;
          continue;
        }
        for (const auto& p : r.pairs) {
          std::vector<Weight> L{u, v}, R{v, u};
          if (p.twist_special != special_diff(A, L[p.left], R[p.right]))
            ok = false;
        }
      }
  }
  {
    // non-special twists must be flagged as such
    auto A = mixed2();
    auto rep = unique_factorization_report(A, {wt({1, 1}), wt({2, 2})},
                                           {wt({1, 2}), wt({2, 1})});
    if (rep.status != FactorReport::Status::Ok) ok = false;
    bool any_nonspecial = false;
    for (const auto& p : rep.pairs) {
      std::vector<Weight> L{wt({1, 1}), wt({2, 2})}, R{wt({1, 2}), wt({2, 1})};
      if (p.twist_special != special_diff(A, L[p.left], R[p.right])) ok = false;
      if (!p.twist_special) any_nonspecial = true;
    }
    if (!any_nonspecial) ok = false;
  }
  report(8, "factor pairing reports one-dimensional twists exactly for special differences", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
