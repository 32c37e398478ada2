#ifndef FUSCOH_PRESENTATION_HPP
#define FUSCOH_PRESENTATION_HPP

#include <deque>

#include "group.hpp"

namespace fuscoh {

/* Finitely presented group.  Letters of a word are 2k (generator k) and
   2k+1 (its inverse). */
struct PresentedGroup {
  int ngens = 0;
  std::vector<std::vector<int>> relators;
};

inline int letter_inv(int x) { return x ^ 1; }

inline std::vector<int> word_inverse(const std::vector<int>& w) {
  std::vector<int> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(letter_inv(*it));
  return out;
}

struct CosetCapExceeded : std::runtime_error {
  CosetCapExceeded() : std::runtime_error("coset enumeration exceeded cap") {}
};

/* Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy with
   coincidence handling), returning the regular permutation representation.
   `gen_perms` receives, per generator, its action on the final coset set. */
inline FiniteGroup todd_coxeter(const PresentedGroup& P, std::vector<Perm>* gen_perms = nullptr,
                                long cap = kEnumerationCap) {
  if (P.ngens == 0) {
    if (gen_perms) gen_perms->clear();
    return generate_group({perm_identity(1)}, 1);
  }
  int ncols = 2 * P.ngens;
  std::vector<std::vector<long>> tab;
  std::vector<long> uf;  // union-find parent; uf[a]==a means live
  std::deque<long> merged;

  auto rep = [&](long a) {
    while (uf[a] != a) a = uf[a];
    return a;
  };
  auto new_coset = [&]() {
    if (long(tab.size()) >= cap) throw CosetCapExceeded();
    tab.emplace_back(ncols, -1);
    uf.push_back(long(uf.size()));
    return long(tab.size()) - 1;
  };
  auto merge = [&](long a, long b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf[b] = a;
    merged.push_back(b);
  };
  auto coincidence = [&](long a, long b) {
    merge(a, b);
    while (!merged.empty()) {
      long e = merged.front();
      merged.pop_front();
      for (int x = 0; x < ncols; ++x) {
        long d = tab[e][x];
        if (d < 0) continue;
        tab[e][x] = -1;
        if (tab[d][letter_inv(x)] == e) tab[d][letter_inv(x)] = -1;
        long mu = rep(e), nu = rep(d);
        if (tab[mu][x] >= 0) merge(nu, tab[mu][x]);
        else if (tab[nu][letter_inv(x)] >= 0) merge(mu, tab[nu][letter_inv(x)]);
        else {
          tab[mu][x] = nu;
          tab[nu][letter_inv(x)] = mu;
        }
      }
    }
  };
  auto scan_and_fill = [&](long a, const std::vector<int>& w) {
    if (w.empty()) return;
    long f = a, b = a;
    int i = 0, j = int(w.size()) - 1;
    for (;;) {
      while (i <= j && tab[f][w[i]] >= 0) f = tab[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][letter_inv(w[j])] >= 0) b = tab[b][letter_inv(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        tab[f][w[i]] = b;
        tab[b][letter_inv(w[i])] = f;
        return;
      }
      long c = new_coset();
      tab[f][w[i]] = c;
      tab[c][letter_inv(w[i])] = f;
      f = c;
      ++i;
    }
  };

  new_coset();  // coset 0 = the subgroup (trivial)
  for (long a = 0; a < long(tab.size()); ++a) {
    if (rep(a) != a) continue;
    for (const auto& w : P.relators) {
      scan_and_fill(a, w);
      if (rep(a) != a) break;
    }
    if (rep(a) != a) continue;
    for (int x = 0; x < ncols && rep(a) == a; ++x) {
      if (tab[a][x] >= 0) continue;
      long c = new_coset();
      tab[a][x] = c;
      tab[c][letter_inv(x)] = a;
    }
  }

  // Compress live cosets.
  std::vector<long> live;
  std::vector<long> newidx(tab.size(), -1);
  for (long a = 0; a < long(tab.size()); ++a)
    if (rep(a) == a) {
      newidx[a] = long(live.size());
      live.push_back(a);
    }
  int n = int(live.size());
  std::vector<Perm> gens;
  for (int k = 0; k < P.ngens; ++k) {
    Perm g(n);
    for (int i = 0; i < n; ++i) {
      long t = tab[live[i]][2 * k];
      assert(t >= 0);
      g[i] = int(newidx[rep(t)]);
    }
    gens.push_back(g);
  }
  if (gen_perms) *gen_perms = gens;
  if (gens.empty()) gens.push_back(perm_identity(std::max(n, 1)));
  FiniteGroup G = generate_group(gens, std::max(n, 1));
  if (G.order() != n && P.ngens > 0)
    throw std::logic_error("todd_coxeter: representation is not regular");
  return G;
}

/* Evaluate a word in the regular representation. */
inline Perm word_eval(const std::vector<Perm>& gens, const std::vector<int>& w, int n) {
  Perm out = perm_identity(n);
  for (int x : w) {
    const Perm& g = gens[x / 2];
    out = perm_mul(out, x % 2 ? perm_inv(g) : g);
  }
  return out;
}

/* Enumerate and verify: every relator evaluates to the identity. */
inline FiniteGroup todd_coxeter_checked(const PresentedGroup& P,
                                        std::vector<Perm>* gen_perms = nullptr,
                                        long cap = kEnumerationCap) {
  std::vector<Perm> gens;
  FiniteGroup G = todd_coxeter(P, &gens, cap);
  for (const auto& w : P.relators)
    if (!perm_is_identity(word_eval(gens, w, G.n)))
      throw std::logic_error("todd_coxeter: relator not satisfied");
  if (gen_perms) *gen_perms = gens;
  return G;
}

} // namespace fuscoh

#endif
