#pragma once

#include <string>
#include <vector>

#include "tri/subspace.hpp"

namespace tri {

// Triangularizing chain {0} = V_0 < V_1 < ... < V_n with dim V_j = j.
template <class K>
struct Chain {
  std::vector<Subspace<K>> spaces;

  int ambient_dim() const {
    return spaces.empty() ? 0 : spaces.front().ambient_dim();
  }

  static Chain standard_flag(int n) {
    Chain c;
    Subspace<K> acc(n);
    c.spaces.push_back(acc);
    for (int j = 0; j < n; ++j) {
      acc.insert(Matrix<K>::identity(n).column(j));
      c.spaces.push_back(acc);
    }
    return c;
  }

  bool well_formed() const {
    if (spaces.empty()) return false;
    const int n = spaces.front().ambient_dim();
    if (static_cast<int>(spaces.size()) != n + 1) return false;
    for (int j = 0; j <= n; ++j) {
      if (spaces[j].ambient_dim() != n || spaces[j].dim() != j) return false;
      if (j > 0 && !spaces[j].contains(spaces[j - 1])) return false;
    }
    return true;
  }

  // Transport by an invertible P: subspaces P*V_j.
  Chain conjugated(const Matrix<K>& p) const {
    Chain out;
    for (const auto& s : spaces) out.spaces.push_back(image_of(p, s));
    return out;
  }
};

struct ChainVerification {
  bool ok = true;
  int generator = -1;  // first failing generator index
  int level = -1;      // first failing chain level
  std::string message;
};

// Generator invariance suffices: products preserve common invariant
// subspaces, so no closure is needed.
template <class K>
ChainVerification verify_chain(const std::vector<Matrix<K>>& gens, const Chain<K>& chain) {
  ChainVerification v;
  if (!chain.well_formed()) {
    v.ok = false;
    v.message = "chain is not a maximal strictly increasing flag";
    return v;
  }
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t j = 1; j + 1 < chain.spaces.size(); ++j)
      if (!is_invariant(gens[g], chain.spaces[j])) {
        v.ok = false;
        v.generator = static_cast<int>(g);
        v.level = static_cast<int>(j);
        v.message = "g" + std::to_string(g + 1) + " does not leave V_" +
                    std::to_string(j) + " invariant";
        return v;
      }
  return v;
}

}  // namespace tri
