#ifndef FUSCOH_GROUP_HPP
#define FUSCOH_GROUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "fp.hpp"
#include "perm.hpp"

namespace fuscoh {

constexpr long kEnumerationCap = 100000;

struct EnumerationCapExceeded : std::runtime_error {
  EnumerationCapExceeded() : std::runtime_error("group enumeration exceeded cap") {}
};

struct NotPCentric : std::runtime_error {
  explicit NotPCentric(const std::string& what) : std::runtime_error(what) {}
};

/* Finite permutation group with a fully enumerated, lexicographically sorted
   element list.  Index 0 is always the identity. */
struct FiniteGroup {
  int n = 0;                 // permutation degree
  std::vector<Perm> elems;   // sorted lexicographically
  std::vector<int> inv_idx;  // inv_idx[a] = index of elems[a]^{-1}
  std::vector<int> gen_idx;  // indices of the defining generators

  int order() const { return int(elems.size()); }
  int id() const { return 0; }

  int index_of(const Perm& g) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), g);
    assert(it != elems.end() && *it == g);
    return int(it - elems.begin());
  }

  bool contains(const Perm& g) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), g);
    return it != elems.end() && *it == g;
  }

  int mul(int a, int b) const { return index_of(perm_mul(elems[a], elems[b])); }
  int inv(int a) const { return inv_idx[a]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }

  int element_order(int a) const { return a == 0 ? 1 : perm_order(elems[a]); }
};

inline FiniteGroup generate_group(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen;
  std::vector<Perm> frontier;
  Perm e = perm_identity(n);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& g : frontier)
      for (const Perm& s : gens) {
        Perm h = perm_mul(g, s);
        if (seen.insert(h).second) {
          next.push_back(std::move(h));
          if (long(seen.size()) > kEnumerationCap) throw EnumerationCapExceeded();
        }
      }
    frontier = std::move(next);
  }
  FiniteGroup G;
  G.n = n;
  G.elems.assign(seen.begin(), seen.end());
  G.inv_idx.resize(G.elems.size());
  for (int i = 0; i < G.order(); ++i) G.inv_idx[i] = G.index_of(perm_inv(G.elems[i]));
  for (const Perm& s : gens) G.gen_idx.push_back(G.index_of(s));
  return G;
}

/* Subgroups are sorted vectors of element indices of the ambient group. */
using Sub = std::vector<int>;

inline Sub sub_closure(const FiniteGroup& G, std::vector<int> gens) {
  std::set<int> seen = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int g : frontier)
      for (int s : gens) {
        int h = G.mul(g, s);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return Sub(seen.begin(), seen.end());
}

inline Sub whole_group(const FiniteGroup& G) {
  Sub s(G.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline Sub trivial_subgroup(const FiniteGroup&) { return {0}; }

inline bool sub_contains(const Sub& P, int g) {
  return std::binary_search(P.begin(), P.end(), g);
}

inline Sub sub_conjugate(const FiniteGroup& G, int g, const Sub& P) {
  Sub Q;
  Q.reserve(P.size());
  for (int x : P) Q.push_back(G.conj(g, x));
  std::sort(Q.begin(), Q.end());
  return Q;
}

inline Sub sub_intersect(const Sub& A, const Sub& B) {
  Sub out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

inline bool sub_leq(const Sub& A, const Sub& B) {
  return std::includes(B.begin(), B.end(), A.begin(), A.end());
}

/* Transporter N_G(P,Q) = { g in G : g P g^{-1} = Q }, by direct scan. */
inline std::vector<int> transporter(const FiniteGroup& G, const Sub& P, const Sub& Q) {
  std::vector<int> out;
  if (P.size() != Q.size()) return out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : P)
      if (!sub_contains(Q, G.conj(g, x))) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

inline Sub normalizer(const FiniteGroup& G, const Sub& P) { return transporter(G, P, P); }

inline Sub centralizer(const FiniteGroup& G, const Sub& P) {
  Sub out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : P)
      if (G.conj(g, x) != x) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

inline Sub center_of_sub(const FiniteGroup& G, const Sub& P) {
  return sub_intersect(centralizer(G, P), P);
}

/* Sylow p-subgroup, deterministic: grow a p-subgroup inside its normalizer. */
inline Sub sylow_subgroup(const FiniteGroup& G, int p) {
  long pp = 1;
  long m = G.order();
  while (m % p == 0) { m /= p; pp *= p; }
  Sub P = {0};
  while (long(P.size()) < pp) {
    Sub N = normalizer(G, P);
    bool grew = false;
    for (int g : N) {
      if (sub_contains(P, g)) continue;
      int gp = G.mul(g, g);
      for (int k = 2; k < p; ++k) gp = G.mul(gp, g);  // gp = g^p
      if (!sub_contains(P, gp)) continue;             // need order p in N/P
      int o = G.element_order(g);
      int q = o;
      while (q % p == 0) q /= p;  // p'-part of o
      int h = 0;
      for (int k = 0; k < q; ++k) h = G.mul(h, g);    // h = g^q has p-power order
      if (sub_contains(P, h)) continue;
      std::vector<int> gens(P.begin(), P.end());
      gens.push_back(h);
      P = sub_closure(G, gens);
      grew = true;
      break;
    }
    if (!grew) throw std::logic_error("sylow_subgroup: failed to grow p-subgroup");
  }
  return P;
}

inline bool is_p_group(const FiniteGroup& G, const Sub& P, int p) {
  long s = long(P.size());
  while (s % p == 0) s /= p;
  return s == 1;
}

/* All subgroups of the subgroup generated by `ambient` indices (typically a
   small p-group): breadth-first closure of one-generator extensions. */
inline std::vector<Sub> all_subgroups(const FiniteGroup& G, const Sub& ambient) {
  std::set<Sub> seen;
  std::vector<Sub> frontier;
  Sub triv = {0};
  seen.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<Sub> next;
    for (const Sub& P : frontier)
      for (int g : ambient) {
        if (sub_contains(P, g)) continue;
        std::vector<int> gens(P.begin(), P.end());
        gens.push_back(g);
        Sub Q = sub_closure(G, gens);
        if (!sub_leq(Q, ambient)) continue;
        if (seen.insert(Q).second) next.push_back(Q);
      }
    frontier = std::move(next);
  }
  return std::vector<Sub>(seen.begin(), seen.end());
}

/* Left cosets gH; representatives are the least element index in each coset,
   listed in increasing order (so coset 0 is H itself). */
struct Cosets {
  std::vector<int> reps;           // canonical representative per coset
  std::vector<int> coset_of;       // coset index per group element
  int count() const { return int(reps.size()); }
};

inline Cosets left_cosets(const FiniteGroup& G, const Sub& H) {
  Cosets C;
  C.coset_of.assign(G.order(), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (C.coset_of[g] >= 0) continue;
    int c = C.count();
    C.reps.push_back(g);
    for (int h : H) C.coset_of[G.mul(g, h)] = c;
  }
  return C;
}

inline Sub normal_closure(const FiniteGroup& G, const std::vector<int>& seeds) {
  std::vector<int> gens;
  for (int s : seeds)
    for (int g = 0; g < G.order(); ++g) gens.push_back(G.conj(g, s));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return sub_closure(G, gens);
}

inline bool is_normal(const FiniteGroup& G, const Sub& N) {
  return normalizer(G, N).size() == size_t(G.order());
}

/* Quotient G/N as a permutation group acting on the left cosets of N.
   proj[g] = index in Q.elems of the permutation induced by g. */
struct Quotient {
  FiniteGroup Q;
  Cosets cosets;
  std::vector<int> proj;
};

inline Quotient quotient_group(const FiniteGroup& G, const Sub& N) {
  assert(is_normal(G, N));
  Quotient out;
  out.cosets = left_cosets(G, N);
  int k = out.cosets.count();
  std::vector<Perm> gens;
  for (int g = 0; g < G.order(); ++g) {
    Perm act(k);
    for (int c = 0; c < k; ++c) act[c] = out.cosets.coset_of[G.mul(g, out.cosets.reps[c])];
    gens.push_back(act);
  }
  std::vector<Perm> uniq = gens;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  out.Q = generate_group(uniq, k);
  out.proj.resize(G.order());
  for (int g = 0; g < G.order(); ++g) out.proj[g] = out.Q.index_of(gens[g]);
  return out;
}

/* The p'-complement of C_G(P) when P is p-centric in G:
   C_G(P) = Z(P) x C', with C' of order prime to p.  Throws NotPCentric
   when Z(P) is not a Sylow p-subgroup of C_G(P). */
inline Sub p_prime_complement(const FiniteGroup& G, const Sub& P, int p) {
  Sub C = centralizer(G, P);
  Sub Z = sub_intersect(C, P);
  long q = long(C.size()) / long(Z.size());
  if (q % p == 0) throw NotPCentric("subgroup is not p-centric: Z(P) not Sylow in C_G(P)");
  Sub Cp;
  for (int g : C)
    if (G.element_order(g) % p != 0) Cp.push_back(g);
  // Z(P) is a central Sylow p-subgroup of C, so the p'-elements form the complement.
  Sub Cprime = sub_closure(G, Cp);
  if (Cprime.size() != size_t(q)) throw std::logic_error("p_prime_complement: closure mismatch");
  return Cprime;
}

/* Builtins ---------------------------------------------------------------- */

inline FiniteGroup symmetric_group(int n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t = perm_identity(n);
    std::swap(t[0], t[1]);
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens = {t, c};
  }
  return generate_group(gens, std::max(n, 1));
}

inline FiniteGroup alternating_group(int n) {
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {
    Perm c = perm_identity(n);
    c[i] = i + 1; c[i + 1] = i + 2; c[i + 2] = i;
    gens.push_back(c);
  }
  return generate_group(gens, std::max(n, 1));
}

inline FiniteGroup cyclic_group(int n) {
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return generate_group({c}, n);
}

/* Dihedral group of order 2n acting on n points. */
inline FiniteGroup dihedral_group(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return generate_group({r, s}, n);
}

/* GL(n,q) as permutations of the q^n-1 nonzero column vectors over F_q
   (q prime).  Vector v = (v_0..v_{n-1}) is point sum v_i q^i - 1. */
inline FiniteGroup general_linear_group(int n, int q) {
  if (!is_prime(q)) throw std::invalid_argument("gl: q must be prime");
  long npts = 1;
  for (int i = 0; i < n; ++i) npts *= q;
  npts -= 1;
  auto decode = [&](long x) {
    std::vector<int> v(n);
    ++x;
    for (int i = 0; i < n; ++i) { v[i] = int(x % q); x /= q; }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    long x = 0;
    for (int i = n - 1; i >= 0; --i) x = x * q + v[i];
    return x - 1;
  };
  auto act = [&](const std::vector<std::vector<int>>& m) {
    Perm g(npts);
    for (long x = 0; x < npts; ++x) {
      std::vector<int> v = decode(x), w(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] = (w[i] + m[i][j] * v[j]) % q;
      g[x] = int(encode(w));
    }
    return g;
  };
  std::vector<Perm> gens;
  if (n == 1) {
    for (int a = 1; a < q; ++a) gens.push_back(act({{a}}));
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (int k = 0; k < n; ++k) m[k][k] = 1;
        m[i][j] = 1;
        gens.push_back(act(m));
      }
    for (int a = 2; a < q; ++a) {
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
      for (int k = 0; k < n; ++k) m[k][k] = 1;
      m[0][0] = a;
      gens.push_back(act(m));
    }
  }
  if (gens.empty()) gens.push_back(perm_identity(std::max<long>(npts, 1)));
  return generate_group(gens, int(std::max<long>(npts, 1)));
}

} // namespace fuscoh

#endif
