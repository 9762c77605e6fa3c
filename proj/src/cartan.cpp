#include "bkm/cartan.hpp"

#include <queue>
#include <sstream>

namespace bkm {

namespace {

std::string pos(int i, int j) {
  std::ostringstream os;
  os << "a[" << i << "][" << j << "]";
  return os.str();
}

void check_axioms(const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw AxiomError("matrix must have rank >= 1");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw AxiomError("matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    // (2) a_ii = 2 or a_ii <= 0
    if (a[i][i] != 2 && a[i][i] > 0)
      throw AxiomError("condition (2) violated at " + pos(i, i) + " = " +
                       format_rational(a[i][i]) + " (must be 2 or <= 0)");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // (3) a_ij <= 0 off diagonal; integral entries on real rows
      if (a[i][j] > 0)
        throw AxiomError("condition (3) violated at " + pos(i, j) + " = " +
                         format_rational(a[i][j]) + " (must be <= 0)");
      if (a[i][i] == 2 && !is_integer(a[i][j]))
        throw AxiomError("condition (3) violated at " + pos(i, j) + " = " +
                         format_rational(a[i][j]) +
                         " (must be an integer since a[" + std::to_string(i) +
                         "][" + std::to_string(i) + "] = 2)");
      // (4) a_ij = 0 iff a_ji = 0
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw AxiomError("condition (4) violated: " + pos(i, j) + " = " +
                         format_rational(a[i][j]) + " but " + pos(j, i) +
                         " = " + format_rational(a[j][i]));
    }
  }
}

}  // namespace

std::vector<Rational> BorcherdsCartanMatrix::compute_symmetrizer(
    const std::vector<std::vector<Rational>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Rational> d(n, 0);
  std::vector<int> comp(n, -1);
  // BFS over the Dynkin graph propagating d_j = d_i a_ij / a_ji, then check
  // consistency across every edge (cycles included).
  for (int start = 0, c = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    comp[start] = c;
    d[start] = 1;
    std::vector<int> members{start};
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        Rational dj = d[i] * a[i][j] / a[j][i];
        if (comp[j] == -1) {
          comp[j] = c;
          d[j] = dj;
          members.push_back(j);
          q.push(j);
        } else if (d[j] != dj) {
          throw SymmetrizabilityError(
              "inconsistent symmetrizer constraint along edge (" +
              std::to_string(i) + "," + std::to_string(j) + ")");
        }
      }
    }
    Rational m = d[members[0]];
    for (int v : members) m = std::min(m, d[v]);
    for (int v : members) d[v] /= m;
    ++c;
  }
  for (int i = 0; i < n; ++i) {
    if (d[i] <= 0)
      throw SymmetrizabilityError("no positive symmetrizer exists (d[" +
                                  std::to_string(i) + "] = " +
                                  format_rational(d[i]) + ")");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * a[i][j] != d[j] * a[j][i])
        throw SymmetrizabilityError("DA is not symmetric at (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
  return d;
}

BorcherdsCartanMatrix BorcherdsCartanMatrix::validate(
    std::vector<std::vector<Rational>> entries, std::vector<std::string> labels,
    std::optional<std::vector<Rational>> symmetrizer) {
  check_axioms(entries);
  const int n = static_cast<int>(entries.size());

  std::vector<Rational> d;
  if (symmetrizer) {
    d = *symmetrizer;
    if (static_cast<int>(d.size()) != n)
      throw SymmetrizabilityError("supplied symmetrizer has wrong length");
    for (int i = 0; i < n; ++i)
      if (d[i] <= 0)
        throw SymmetrizabilityError("supplied symmetrizer entry d[" +
                                    std::to_string(i) + "] is not positive");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i] * entries[i][j] != d[j] * entries[j][i])
          throw SymmetrizabilityError(
              "supplied symmetrizer does not symmetrize the matrix at (" +
              std::to_string(i) + "," + std::to_string(j) + ")");
  } else {
    d = compute_symmetrizer(entries);
  }

  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw AxiomError("labels must have one entry per row");

  BorcherdsCartanMatrix m;
  m.n_ = n;
  m.a_ = std::move(entries);
  m.d_ = std::move(d);
  m.labels_ = std::move(labels);
  for (int i = 0; i < n; ++i) {
    if (m.a_[i][i] == 2)
      m.real_idx_.push_back(i);
    else
      m.im_idx_.push_back(i);
  }
  return m;
}

}  // namespace bkm
