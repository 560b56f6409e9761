#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "tri/chain.hpp"
#include "tri/charpoly.hpp"
#include "tri/closure.hpp"
#include "tri/matrix.hpp"
#include "tri/polynomial.hpp"
#include "tri/subspace.hpp"

namespace tri {

enum class WitnessKind {
  NonSingletonSpectrum,
  NonNilpotentIdealElement,
  NoEigenvalueInField,
  EmptyFixedSpace,
  NotInvariant,
  DecompositionViolation,
  NonCentralScalar,
};

inline const char* witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::NonSingletonSpectrum: return "NonSingletonSpectrum";
    case WitnessKind::NonNilpotentIdealElement: return "NonNilpotentIdealElement";
    case WitnessKind::NoEigenvalueInField: return "NoEigenvalueInField";
    case WitnessKind::EmptyFixedSpace: return "EmptyFixedSpace";
    case WitnessKind::NotInvariant: return "NotInvariant";
    case WitnessKind::DecompositionViolation: return "DecompositionViolation";
    case WitnessKind::NonCentralScalar: return "NonCentralScalar";
  }
  return "?";
}

// Finite certificate refuting a theorem hypothesis. Re-checkable: feeding
// the elements back through the violated predicate reproduces the failure
// (see recheck_witness).
template <class K>
struct Witness {
  WitnessKind kind;
  std::vector<Matrix<K>> elements;
  std::string word;  // generator word producing the primary element, if any
  std::string note;
};

template <class K>
struct Verdict {
  std::optional<Chain<K>> chain;
  std::optional<Witness<K>> witness;
  bool bound_exceeded = false;
  std::vector<std::string> log;

  bool triangularizable() const { return chain.has_value(); }

  static Verdict of_chain(Chain<K> c) {
    Verdict v;
    v.chain = std::move(c);
    return v;
  }
  static Verdict of_witness(Witness<K> w) {
    Verdict v;
    v.witness = std::move(w);
    return v;
  }
  static Verdict of_bound(std::string msg) {
    Verdict v;
    v.bound_exceeded = true;
    v.log.push_back(std::move(msg));
    return v;
  }
};

struct FamilyIsScalar : std::invalid_argument {
  FamilyIsScalar() : std::invalid_argument("family consists of scalar matrices") {}
};

constexpr int kDefaultClosureBound = 10000;

namespace detail {

template <class K>
bool is_quaternion_ring() {
  return std::is_same_v<K, Quaternion>;
}

// Singleton "scalar part" of an element: the central lambda with
// (A - lambda I)^n = 0, across all three rings.
template <class K>
std::optional<K> scalar_part(const Matrix<K>& a) {
  if constexpr (std::is_same_v<K, Quaternion>) {
    auto c = central_spectrum_quaternion(a);
    if (!c) return std::nullopt;
    return Quaternion(*c);
  } else {
    return singleton_spectrum(a);
  }
}

// Eigenvalues usable for the commutative eigenspace argument: roots in the
// field, or central (rational) eigenvalues over the quaternions, found via
// the Q-realification and confirmed by a nonzero quaternionic kernel.
template <class K>
std::vector<K> central_eigenvalues(const Matrix<K>& b) {
  std::vector<K> out;
  if constexpr (std::is_same_v<K, Quaternion>) {
    for (const auto& [root, mult] : rational_roots(char_poly(realify(b)))) {
      Matrix<Quaternion> shifted = b - Matrix<Quaternion>::scalar(b.rows(), Quaternion(root));
      if (!kernel(shifted).is_zero()) out.push_back(Quaternion(root));
    }
  } else {
    for (const auto& [root, mult] : eigenvalues_in_field(b).eigenvalues) out.push_back(root);
  }
  return out;
}

inline std::string indent(int depth) { return std::string(2 * depth, ' '); }

// Conjugated block decomposition through an invariant subspace.
template <class K>
struct Blocks {
  Matrix<K> p, p_inv;
  int k = 0;
  std::vector<Matrix<K>> top, bottom;
  std::optional<Matrix<K>> violation;  // conjugated generator with nonzero lower-left block
};

template <class K>
Blocks<K> make_blocks(const std::vector<Matrix<K>>& gens, const Subspace<K>& m) {
  Blocks<K> b;
  b.p = extend_to_basis(m);
  b.p_inv = inverse(b.p);
  b.k = m.dim();
  const int n = m.ambient_dim();
  for (const auto& g : gens) {
    Matrix<K> c = b.p_inv * g * b.p;
    if (!c.block(b.k, 0, n - b.k, b.k).is_zero()) {
      b.violation = c;
      return b;
    }
    b.top.push_back(c.block(0, 0, b.k, b.k));
    b.bottom.push_back(c.block(b.k, b.k, n - b.k, n - b.k));
  }
  return b;
}

template <class K>
Matrix<K> embed_column(const Matrix<K>& v, int n, int offset) {
  Matrix<K> out(n, 1);
  for (int i = 0; i < v.rows(); ++i) out(offset + i, 0) = v(i, 0);
  return out;
}

// Splices the chains of the two diagonal blocks through the invariant
// subspace back into a full chain in the original coordinates.
template <class K>
Chain<K> splice_chains(const Matrix<K>& p, int k, const Chain<K>& top, const Chain<K>& bottom) {
  const int n = p.rows();
  Chain<K> out;
  for (int j = 0; j <= k; ++j) {
    Subspace<K> s(n);
    for (const auto& b : top.spaces[j].basis()) s.insert(p * embed_column(b, n, 0));
    out.spaces.push_back(std::move(s));
  }
  for (int j = 1; j <= n - k; ++j) {
    Subspace<K> s = out.spaces[k];
    for (const auto& b : bottom.spaces[j].basis()) s.insert(p * embed_column(b, n, k));
    out.spaces.push_back(std::move(s));
  }
  return out;
}

// Largest subspace of u invariant under every generator, by intersecting
// with generator preimages until stable.
template <class K>
Subspace<K> invariant_core(const std::vector<Matrix<K>>& gens, Subspace<K> u) {
  bool changed = true;
  while (changed && !u.is_zero()) {
    changed = false;
    for (const auto& g : gens) {
      Subspace<K> refined = subspace_intersect(u, preimage(g, u));
      if (refined != u) {
        u = std::move(refined);
        changed = true;
      }
    }
  }
  return u;
}

// Largest generator-invariant subspace contained in the common kernel of the
// seeds, together with the list of matrices (seeds times generator words)
// whose kernels cut it out. x lies in the core iff e(wx) = 0 for every seed
// e and every generator word w.
template <class K>
std::pair<Subspace<K>, std::vector<Matrix<K>>> saturated_kernel(
    int n, const std::vector<Matrix<K>>& gens, const std::vector<Matrix<K>>& seeds) {
  std::vector<Matrix<K>> cutters = seeds;
  Subspace<K> core = common_kernel(cutters, n);
  bool changed = true;
  while (changed && !core.is_zero()) {
    changed = false;
    size_t count = cutters.size();
    for (size_t i = 0; i < count; ++i)
      for (const auto& g : gens) {
        Matrix<K> next = cutters[i] * g;
        Subspace<K> refined = subspace_intersect(core, kernel(next));
        if (refined != core) {
          core = std::move(refined);
          cutters.push_back(std::move(next));
          changed = true;
        }
      }
  }
  return {core, cutters};
}

}  // namespace detail

template <class K>
ChainVerification verify_chain_verdict(const std::vector<Matrix<K>>& gens, const Verdict<K>& v) {
  assert(v.chain);
  return verify_chain(gens, *v.chain);
}

// ---------------------------------------------------------------------------
// Levitzki: nilpotent semigroups are triangularizable. The common kernel of
// the generators is killed (hence invariant) and nonzero whenever the
// generated semigroup is nilpotent; recurse on the quotient.

namespace detail {

template <class K>
Verdict<K> levitzki_rec(int n, const std::vector<Matrix<K>>& gens,
                        std::vector<std::string>& log, int depth) {
  if (n <= 1) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  std::vector<Matrix<K>> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  Subspace<K> k = common_kernel(nonzero, n);
  log.push_back(indent(depth) + "levitzki: common kernel dim " + std::to_string(k.dim()) +
                " at depth " + std::to_string(depth));
  if (k.is_zero()) {
    // some product must be non-nilpotent; surface it
    ClosureResult<K> cl = semigroup_closure(gens, 4096);
    for (size_t i = 0; i < cl.elements.size(); ++i)
      if (!is_nilpotent(cl.elements[i]))
        return Verdict<K>::of_witness(
            {WitnessKind::NonNilpotentIdealElement, {cl.elements[i]}, cl.words[i],
             "non-nilpotent semigroup element"});
    return Verdict<K>::of_bound("empty common kernel but no non-nilpotent element found within bound");
  }
  Blocks<K> b = make_blocks(gens, k);
  assert(!b.violation);
  Verdict<K> top = levitzki_rec(b.k, b.top, log, depth + 1);
  if (!top.triangularizable()) return top;
  Verdict<K> bottom = levitzki_rec(n - b.k, b.bottom, log, depth + 1);
  if (!bottom.triangularizable()) return bottom;
  return Verdict<K>::of_chain(splice_chains(b.p, b.k, *top.chain, *bottom.chain));
}

}  // namespace detail

template <class K>
Verdict<K> levitzki_chain(int n, const std::vector<Matrix<K>>& gens,
                          int bound = kDefaultClosureBound) {
  std::vector<std::string> log;
  ClosureResult<K> cl = semigroup_closure(gens, bound);
  for (size_t i = 0; i < cl.elements.size(); ++i)
    if (!is_nilpotent(cl.elements[i])) {
      Verdict<K> v = Verdict<K>::of_witness({WitnessKind::NonNilpotentIdealElement,
                                             {cl.elements[i]},
                                             cl.words[i],
                                             "non-nilpotent semigroup element"});
      v.log = std::move(log);
      return v;
    }
  log.push_back(cl.complete
                    ? "levitzki: nilpotency verified for all " + std::to_string(cl.elements.size()) +
                          " closure elements"
                    : "levitzki: nilpotency verified on sampled closure (" +
                          std::to_string(cl.elements.size()) + " elements, bound hit)");
  Verdict<K> v = detail::levitzki_rec(n, gens, log, 0);
  v.log.insert(v.log.begin(), log.begin(), log.end());
  return v;
}

// ---------------------------------------------------------------------------
// Kolchin: unipotent semigroups are triangularizable. The fixed space of
// the generators is fixed by every product; refine and quotient.

namespace detail {

template <class K>
Verdict<K> kolchin_rec(int n, const std::vector<Matrix<K>>& gens,
                       std::vector<std::string>& log, int depth) {
  if (n <= 1) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  Matrix<K> id = Matrix<K>::identity(n);
  std::vector<Matrix<K>> shifted;
  for (const auto& g : gens)
    if (g != id) shifted.push_back(g - id);
  if (shifted.empty()) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  Subspace<K> fix = common_kernel(shifted, n);
  log.push_back(indent(depth) + "kolchin: fixed space dim " + std::to_string(fix.dim()) +
                " at depth " + std::to_string(depth));
  if (fix.is_zero())
    return Verdict<K>::of_witness({WitnessKind::EmptyFixedSpace, shifted, "",
                                   "common kernel of (g - I) over all generators is zero"});
  Blocks<K> b = make_blocks(gens, fix);
  assert(!b.violation);
  Verdict<K> top = kolchin_rec(b.k, b.top, log, depth + 1);
  if (!top.triangularizable()) return top;
  Verdict<K> bottom = kolchin_rec(n - b.k, b.bottom, log, depth + 1);
  if (!bottom.triangularizable()) return bottom;
  return Verdict<K>::of_chain(splice_chains(b.p, b.k, *top.chain, *bottom.chain));
}

}  // namespace detail

template <class K>
Verdict<K> kolchin_chain(int n, const std::vector<Matrix<K>>& gens,
                         int bound = kDefaultClosureBound) {
  std::vector<std::string> log;
  for (size_t i = 0; i < gens.size(); ++i)
    if (!is_unipotent(gens[i]))
      return Verdict<K>::of_witness({WitnessKind::NonSingletonSpectrum,
                                     {gens[i]},
                                     "g" + std::to_string(i + 1),
                                     "generator is not unipotent"});
  (void)bound;
  Verdict<K> v = detail::kolchin_rec(n, gens, log, 0);
  v.log.insert(v.log.begin(), log.begin(), log.end());
  return v;
}

// ---------------------------------------------------------------------------
// Kaplansky: semigroups of matrices with singleton spectra (central scalar
// plus nilpotent over the quaternions). Hypothesis verified on the sampled
// closure; nilpotent elements form an ideal whose common kernel reduces the
// problem, otherwise scale-normalized generators form a unipotent semigroup
// and Kolchin finishes.

namespace detail {

template <class K>
std::optional<Witness<K>> check_kaplansky_spectra(const ClosureResult<K>& cl) {
  for (size_t i = 0; i < cl.elements.size(); ++i) {
    if (scalar_part(cl.elements[i])) continue;
    if constexpr (std::is_same_v<K, Quaternion>) {
      if (has_noncentral_scalar_part(cl.elements[i]))
        return Witness<K>{WitnessKind::NonCentralScalar,
                          {cl.elements[i]},
                          cl.words[i],
                          "element is qI + N with non-central q"};
    }
    return Witness<K>{WitnessKind::NonSingletonSpectrum,
                      {cl.elements[i]},
                      cl.words[i],
                      "element has no singleton central spectrum"};
  }
  return std::nullopt;
}

template <class K>
Verdict<K> kaplansky_rec(int n, const std::vector<Matrix<K>>& gens, int bound,
                         std::vector<std::string>& log, int depth) {
  if (n <= 1) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  ClosureResult<K> cl = semigroup_closure(gens, bound);
  if (auto w = check_kaplansky_spectra(cl)) return Verdict<K>::of_witness(std::move(*w));
  log.push_back(indent(depth) + "kaplansky: spectra verified on " +
                std::to_string(cl.elements.size()) + (cl.complete ? " (complete)" : " (sampled)") +
                " closure elements at depth " + std::to_string(depth));

  std::vector<Matrix<K>> nilpotents;
  for (const auto& e : cl.elements)
    if (!e.is_zero() && is_nilpotent(e)) nilpotents.push_back(e);

  if (!nilpotents.empty()) {
    auto [k, cutters] = saturated_kernel(n, gens, nilpotents);
    log.push_back(indent(depth) + "kaplansky: nilpotent-ideal kernel dim " +
                  std::to_string(k.dim()) + " at depth " + std::to_string(depth));
    if (k.is_zero())
      return Verdict<K>::of_witness({WitnessKind::EmptyFixedSpace, cutters, "",
                                     "nilpotent ideal elements have no common invariant kernel"});
    Blocks<K> b = make_blocks(gens, k);
    assert(!b.violation);
    Verdict<K> top = kaplansky_rec(b.k, b.top, bound, log, depth + 1);
    if (!top.triangularizable()) return top;
    Verdict<K> bottom = kaplansky_rec(n - b.k, b.bottom, bound, log, depth + 1);
    if (!bottom.triangularizable()) return bottom;
    return Verdict<K>::of_chain(splice_chains(b.p, b.k, *top.chain, *bottom.chain));
  }

  // No nilpotents: normalize each generator by its central scalar part and
  // run Kolchin; the normalized elements generate a unipotent semigroup.
  std::vector<Matrix<K>> normalized;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;  // zero matrix leaves every subspace invariant
    K lambda = *scalar_part(g);
    normalized.push_back(g.scaled_left(scalar_traits<K>::inv(lambda)));
  }
  log.push_back(indent(depth) + "kaplansky: normalized " + std::to_string(normalized.size()) +
                " generators to unipotents at depth " + std::to_string(depth));
  Verdict<K> v = kolchin_rec(n, normalized, log, depth);
  // chains are scale-invariant, so a chain for the normalized family is a
  // chain for the original one
  return v;
}

}  // namespace detail

template <class K>
Verdict<K> kaplansky_chain(int n, const std::vector<Matrix<K>>& gens,
                           int bound = kDefaultClosureBound) {
  std::vector<std::string> log;
  Verdict<K> v = detail::kaplansky_rec(n, gens, bound, log, 0);
  v.log.insert(v.log.begin(), log.begin(), log.end());
  return v;
}

// ---------------------------------------------------------------------------
// Hyperinvariant subspace of a nonscalar triangularizable family: invariant
// under the family and its commutant simultaneously. Mirrors the proof:
// commutative algebras yield an eigenspace; otherwise the ideal generated by
// a nonzero commutator inside Alg(F) + Alg(F) * F' consists of nilpotents
// and its common kernel works. Any failure is a refutation of
// triangularizability (over the center, in the quaternion case).

template <class K>
std::variant<Subspace<K>, Witness<K>> hyperinvariant_subspace(
    int n, const std::vector<Matrix<K>>& family) {
  std::vector<Matrix<K>> algebra = algebra_span(family, /*unital=*/false);
  bool all_scalar = true;
  for (const auto& a : algebra)
    if (!a.is_scalar()) all_scalar = false;
  if (all_scalar) throw FamilyIsScalar();

  bool commutative = true;
  for (size_t i = 0; i < algebra.size() && commutative; ++i)
    for (size_t j = i + 1; j < algebra.size() && commutative; ++j)
      if (algebra[i] * algebra[j] != algebra[j] * algebra[i]) commutative = false;

  if (commutative) {
    for (const auto& b : algebra) {
      if (b.is_scalar()) continue;
      std::vector<K> eigs = detail::central_eigenvalues(b);
      if (eigs.empty())
        return Witness<K>{WitnessKind::NoEigenvalueInField, {b}, "",
                          "nonscalar element of a commutative algebra without eigenvalue in the center"};
      Matrix<K> shifted = b - Matrix<K>::scalar(n, eigs.front());
      return kernel(shifted);
    }
  }

  // noncommutative: first nonzero commutator of basis elements
  Matrix<K> k0(n, n);
  bool found = false;
  for (size_t i = 0; i < algebra.size() && !found; ++i)
    for (size_t j = i + 1; j < algebra.size() && !found; ++j) {
      Matrix<K> c = algebra[i] * algebra[j] - algebra[j] * algebra[i];
      if (!c.is_zero()) {
        k0 = std::move(c);
        found = true;
      }
    }
  assert(found);
  if (!is_nilpotent(k0))
    return Witness<K>{WitnessKind::NonNilpotentIdealElement, {k0}, "",
                      "commutator of algebra elements is not nilpotent"};

  std::vector<Matrix<K>> commutant_basis = commutant(family);
  std::vector<Matrix<K>> a1_gens = algebra;
  a1_gens.insert(a1_gens.end(), commutant_basis.begin(), commutant_basis.end());
  std::vector<Matrix<K>> a1 = algebra_span(a1_gens, /*unital=*/true);
  std::vector<Matrix<K>> ideal = ideal_span(a1, k0);
  for (const auto& e : ideal)
    if (!is_nilpotent(e))
      return Witness<K>{WitnessKind::NonNilpotentIdealElement, {e}, "",
                        "element of the commutator ideal is not nilpotent"};
  Subspace<K> k = common_kernel(ideal, n);
  if (k.is_zero())
    return Witness<K>{WitnessKind::EmptyFixedSpace, ideal, "",
                      "nilpotent commutator ideal has zero common kernel"};
  return k;
}

// ---------------------------------------------------------------------------
// T + N families (triangularizable T, nilpotent N in the commutant of the
// T's) and the induction of the extension theorem.

template <class K>
struct TnFamily {
  std::vector<std::pair<Matrix<K>, Matrix<K>>> pairs;
  std::vector<Matrix<K>> t_set;

  std::vector<Matrix<K>> sums() const {
    std::vector<Matrix<K>> out;
    for (const auto& [t, n] : pairs) out.push_back(t + n);
    return out;
  }
};

// Checked construction: every N nilpotent and commuting with every T.
template <class K>
std::variant<TnFamily<K>, Witness<K>> make_tn_family(
    std::vector<std::pair<Matrix<K>, Matrix<K>>> pairs) {
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (!is_nilpotent(pairs[i].second))
      return Witness<K>{WitnessKind::NonNilpotentIdealElement,
                        {pairs[i].second},
                        "N" + std::to_string(i + 1),
                        "N part is not nilpotent"};
    for (size_t j = 0; j < pairs.size(); ++j) {
      Matrix<K> bracket = pairs[j].first * pairs[i].second - pairs[i].second * pairs[j].first;
      if (!bracket.is_zero())
        return Witness<K>{WitnessKind::NotInvariant,
                          {bracket, pairs[j].first, pairs[i].second},
                          "[T" + std::to_string(j + 1) + ",N" + std::to_string(i + 1) + "]",
                          "N part does not commute with every T"};
    }
  }
  TnFamily<K> fam;
  fam.pairs = std::move(pairs);
  for (const auto& [t, n] : fam.pairs) fam.t_set.push_back(t);
  return fam;
}

namespace detail {

template <class K>
Verdict<K> tn_rec(int n, const TnFamily<K>& fam, int bound, std::vector<std::string>& log,
                  int depth) {
  if (n <= 1) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  bool t_scalar = true;
  for (const auto& t : fam.t_set)
    if (!t.is_scalar()) t_scalar = false;
  if (t_scalar) {
    log.push_back(indent(depth) + "tn: scalar T set, delegating to Kaplansky at depth " +
                  std::to_string(depth));
    return kaplansky_rec(n, fam.sums(), bound, log, depth);
  }
  auto hyper = hyperinvariant_subspace(n, fam.t_set);
  if (std::holds_alternative<Witness<K>>(hyper))
    return Verdict<K>::of_witness(std::get<Witness<K>>(hyper));
  Subspace<K> m = std::get<Subspace<K>>(hyper);
  log.push_back(indent(depth) + "tn: hyperinvariant subspace dim " + std::to_string(m.dim()) +
                " at depth " + std::to_string(depth));
  // M is invariant under every T (family) and every N (commutant member)
  std::vector<Matrix<K>> all;
  for (const auto& [t, nn] : fam.pairs) {
    all.push_back(t);
    all.push_back(nn);
  }
  Blocks<K> b = make_blocks(all, m);
  if (b.violation)
    return Verdict<K>::of_witness({WitnessKind::DecompositionViolation,
                                   {*b.violation},
                                   "",
                                   "block decomposition violated by a family member"});
  TnFamily<K> top, bottom;
  for (size_t i = 0; i < fam.pairs.size(); ++i) {
    top.pairs.push_back({b.top[2 * i], b.top[2 * i + 1]});
    top.t_set.push_back(b.top[2 * i]);
    bottom.pairs.push_back({b.bottom[2 * i], b.bottom[2 * i + 1]});
    bottom.t_set.push_back(b.bottom[2 * i]);
  }
  Verdict<K> vt = tn_rec(b.k, top, bound, log, depth + 1);
  if (!vt.triangularizable()) return vt;
  Verdict<K> vb = tn_rec(n - b.k, bottom, bound, log, depth + 1);
  if (!vb.triangularizable()) return vb;
  return Verdict<K>::of_chain(splice_chains(b.p, b.k, *vt.chain, *vb.chain));
}

}  // namespace detail

// finite = Theorem 2.5 path over the quaternions: the semigroup generated
// by the sums must be finite (closure complete within the bound).
template <class K>
Verdict<K> tn_triangularize(int n, const TnFamily<K>& fam, int bound = kDefaultClosureBound,
                            bool finite = false) {
  std::vector<std::string> log;
  if (finite) {
    ClosureResult<K> cl = semigroup_closure(fam.sums(), bound);
    if (!cl.complete)
      return Verdict<K>::of_bound("finite mode: closure bound " + std::to_string(bound) +
                                  " exceeded without reaching a fixed point");
    log.push_back("tn: finite semigroup verified, " + std::to_string(cl.elements.size()) +
                  " elements");
  }
  Verdict<K> v = detail::tn_rec(n, fam, bound, log, 0);
  v.log.insert(v.log.begin(), log.begin(), log.end());
  return v;
}

// ---------------------------------------------------------------------------
// General decision over a field: recursive invariant-subspace extraction on
// the generated algebra (commutative eigenspace / commutator-ideal kernel).
// Both directions are exact: triangularizability passes to restrictions and
// quotients, and block-triangular families with triangularizable diagonal
// blocks are triangularizable.

namespace detail {

template <class K>
Verdict<K> general_rec(int n, const std::vector<Matrix<K>>& gens, std::vector<std::string>& log,
                       int depth) {
  static_assert(scalar_traits<K>::commutative, "general decision requires a field ring");
  if (n <= 1) return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  std::vector<Matrix<K>> algebra = algebra_span(gens, /*unital=*/false);
  bool all_scalar = true;
  for (const auto& a : algebra)
    if (!a.is_scalar()) all_scalar = false;
  if (all_scalar) {
    log.push_back(indent(depth) + "general: scalar algebra at depth " + std::to_string(depth));
    return Verdict<K>::of_chain(Chain<K>::standard_flag(n));
  }

  bool commutative = true;
  for (size_t i = 0; i < algebra.size() && commutative; ++i)
    for (size_t j = i + 1; j < algebra.size() && commutative; ++j)
      if (algebra[i] * algebra[j] != algebra[j] * algebra[i]) commutative = false;

  Subspace<K> m(n);
  if (commutative) {
    const Matrix<K>* b = nullptr;
    for (const auto& a : algebra)
      if (!a.is_scalar()) {
        b = &a;
        break;
      }
    Spectrum<K> spec = eigenvalues_in_field(*b);
    if (spec.eigenvalues.empty())
      return Verdict<K>::of_witness(
          {WitnessKind::NoEigenvalueInField, {*b}, "",
           "commutative-branch element has no eigenvalue in the field"});
    m = kernel(*b - Matrix<K>::scalar(n, spec.eigenvalues.front().first));
    log.push_back(indent(depth) + "general: commutative eigenspace dim " +
                  std::to_string(m.dim()) + " at depth " + std::to_string(depth));
  } else {
    Matrix<K> k0(n, n);
    bool found = false;
    for (size_t i = 0; i < algebra.size() && !found; ++i)
      for (size_t j = i + 1; j < algebra.size() && !found; ++j) {
        Matrix<K> c = algebra[i] * algebra[j] - algebra[j] * algebra[i];
        if (!c.is_zero()) {
          k0 = std::move(c);
          found = true;
        }
      }
    assert(found);
    if (!is_nilpotent(k0))
      return Verdict<K>::of_witness({WitnessKind::NonNilpotentIdealElement, {k0}, "",
                                     "commutator of algebra elements is not nilpotent"});
    std::vector<Matrix<K>> ideal = ideal_span(algebra, k0);
    for (const auto& e : ideal)
      if (!is_nilpotent(e))
        return Verdict<K>::of_witness({WitnessKind::NonNilpotentIdealElement, {e}, "",
                                       "element of the commutator ideal is not nilpotent"});
    m = common_kernel(ideal, n);
    log.push_back(indent(depth) + "general: commutator-ideal kernel dim " +
                  std::to_string(m.dim()) + " at depth " + std::to_string(depth));
    if (m.is_zero())
      return Verdict<K>::of_witness({WitnessKind::EmptyFixedSpace, ideal, "",
                                     "nilpotent commutator ideal has zero common kernel"});
  }

  Blocks<K> b = make_blocks(gens, m);
  assert(!b.violation);
  Verdict<K> top = general_rec(b.k, b.top, log, depth + 1);
  if (!top.triangularizable()) return top;
  Verdict<K> bottom = general_rec(n - b.k, b.bottom, log, depth + 1);
  if (!bottom.triangularizable()) return bottom;
  return Verdict<K>::of_chain(splice_chains(b.p, b.k, *top.chain, *bottom.chain));
}

}  // namespace detail

template <class K>
Verdict<K> triangularize_general(int n, const std::vector<Matrix<K>>& gens) {
  std::vector<std::string> log;
  Verdict<K> v = detail::general_rec(n, gens, log, 0);
  v.log.insert(v.log.begin(), log.begin(), log.end());
  return v;
}

// ---------------------------------------------------------------------------
// Irreducibility: every orbit closure from a spanning set of seed vectors
// saturates to the full space. Seeds are the coordinate vectors plus, over
// fields, one eigenvector per rational eigenvalue of each generator (the
// coordinate vectors alone can miss an invariant line none of them meets).

namespace detail {

template <class K>
Subspace<K> orbit_closure(int n, const std::vector<Matrix<K>>& gens, const Matrix<K>& seed) {
  Subspace<K> u(n);
  u.insert(seed);
  bool grew = true;
  while (grew && !u.is_full()) {
    grew = false;
    for (const auto& g : gens)
      for (const auto& b : u.basis())
        if (u.insert(g * b)) grew = true;
  }
  return u;
}

}  // namespace detail

template <class K>
bool irreducibility_test(int n, const std::vector<Matrix<K>>& gens) {
  std::vector<Matrix<K>> seeds;
  for (int i = 0; i < n; ++i) seeds.push_back(Matrix<K>::identity(n).column(i));
  if constexpr (scalar_traits<K>::commutative) {
    for (const auto& g : gens)
      for (const auto& [lambda, mult] : eigenvalues_in_field(g).eigenvalues) {
        Subspace<K> eig = kernel(g - Matrix<K>::scalar(n, lambda));
        if (!eig.is_zero()) seeds.push_back(eig.basis().front());
      }
  }
  for (const auto& s : seeds)
    if (!detail::orbit_closure(n, gens, s).is_full()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Witness re-check: feeding the certificate back through the violated
// predicate must reproduce the failure.

template <class K>
bool recheck_witness(const Witness<K>& w) {
  switch (w.kind) {
    case WitnessKind::NonSingletonSpectrum:
      return !w.elements.empty() && !detail::scalar_part(w.elements.front());
    case WitnessKind::NonNilpotentIdealElement:
      return !w.elements.empty() && !is_nilpotent(w.elements.front());
    case WitnessKind::NoEigenvalueInField:
      return !w.elements.empty() && detail::central_eigenvalues(w.elements.front()).empty();
    case WitnessKind::EmptyFixedSpace: {
      if (w.elements.empty()) return false;
      return common_kernel(w.elements, w.elements.front().rows()).is_zero();
    }
    case WitnessKind::NotInvariant:
      return !w.elements.empty() && !w.elements.front().is_zero();
    case WitnessKind::DecompositionViolation:
      return !w.elements.empty();
    case WitnessKind::NonCentralScalar:
      if constexpr (std::is_same_v<K, Quaternion>) {
        return !w.elements.empty() && has_noncentral_scalar_part(w.elements.front());
      } else {
        return false;
      }
  }
  return false;
}

}  // namespace tri
