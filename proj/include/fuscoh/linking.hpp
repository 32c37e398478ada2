#ifndef FUSCOH_LINKING_HPP
#define FUSCOH_LINKING_HPP

#include "category.hpp"
#include "fusion.hpp"

namespace fuscoh {

struct ImageNotContained : std::runtime_error {
  ImageNotContained() : std::runtime_error("restriction: image not contained in target") {}
};
struct NotAnObject : std::runtime_error {
  NotAnObject() : std::runtime_error("restriction: subgroup is not an object of L") {}
};
struct LinkingAxiomFailure : std::runtime_error {
  explicit LinkingAxiomFailure(const std::string& w) : std::runtime_error(w) {}
};

/* Centric linking system: objects are the F-centric subgroups of S, morphisms
   Mor(P,Q) are cosets g·C'_G(P) of transporter elements, with canonical (least
   group-element) representatives.  Inclusions are the identity-element cosets. */
struct LinkingSystem {
  const FusionSystem* F = nullptr;
  Category cat;
  std::vector<int> objects;  // fusion object indices, ascending
  int s_obj = -1;            // cat index of S
  std::vector<int> rep;      // canonical representative per cat morphism
  std::vector<Sub> cprime;   // C'_G(P) per cat object
  std::vector<std::map<int, int>> mor_lookup;  // per morphism-pair-key: canonical rep -> mor idx

  const FiniteGroup& G() const { return *F->G; }
  const Sub& grp(int c) const { return F->objects[objects[c]]; }

  int pair_key(int a, int b) const { return a * cat.nobj + b; }

  /* Least element of the coset g·C'_G(P) for cat object a. */
  int canon_cprime(int a, int g) const {
    int best = -1;
    for (int c : cprime[a]) {
      int h = G().mul(g, c);
      if (best < 0 || h < best) best = h;
    }
    return best;
  }

  /* Morphism a->b whose coset contains g; -1 if none. */
  int find_morphism(int a, int b, int g) const {
    auto& tab = mor_lookup[pair_key(a, b)];
    auto it = tab.find(canon_cprime(a, g));
    return it == tab.end() ? -1 : it->second;
  }

  int inclusion(int a, int b) const {  // ι_P^Q for P ≤ Q
    assert(sub_leq(grp(a), grp(b)));
    int f = find_morphism(a, b, 0);
    assert(f >= 0);
    return f;
  }

  int delta(int c, int x) const {  // δ_P(x) for x ∈ P (G element index)
    assert(sub_contains(grp(c), x));
    int f = find_morphism(c, c, x);
    assert(f >= 0);
    return f;
  }

  /* π(f) as a fusion hom representative (coset g·C_G(P)). */
  int pi_canon(int f) const {
    return F->canon_rep(objects[cat.msrc[f]], rep[f]);
  }

  /* Conjugation action of π(f) on an element x of the source. */
  int pi_apply(int f, int x) const { return G().conj(rep[f], x); }

  int restrict(int f, int a2, int b2) const {
    const Sub& P2 = grp(a2);
    const Sub& Q2 = grp(b2);
    assert(sub_leq(P2, grp(cat.msrc[f])) && sub_leq(Q2, grp(cat.mtgt[f])));
    if (!sub_leq(sub_conjugate(G(), rep[f], P2), Q2)) throw ImageNotContained();
    int r = find_morphism(a2, b2, rep[f]);
    assert(r >= 0);
    return r;
  }

  int obj_of_fusion(int fidx) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), fidx);
    if (it == objects.end() || *it != fidx) throw NotAnObject();
    return int(it - objects.begin());
  }
};

inline int restrict_morphism(const LinkingSystem& L, int f, const Sub& P2, const Sub& Q2) {
  int a2, b2;
  try {
    a2 = L.obj_of_fusion(L.F->obj_index(P2));
    b2 = L.obj_of_fusion(L.F->obj_index(Q2));
  } catch (...) {
    throw NotAnObject();
  }
  return L.restrict(f, a2, b2);
}

inline void check_linking_axioms(const LinkingSystem& L) {
  const FiniteGroup& G = L.G();
  const FusionSystem& F = *L.F;
  int n = L.cat.nobj;
  for (int a = 0; a < n; ++a) {
    Sub Z = sub_intersect(F.centralizer_cache[L.objects[a]], L.grp(a));
    for (int b = 0; b < n; ++b) {
      size_t nmor = L.cat.hom(a, b).size();
      size_t nhom = F.homset(L.objects[a], L.objects[b]).size();
      // Axiom (A): |Mor_L(P,Q)| = |Z(P)|·|Hom_F(P,Q)| and Z(P) acts freely.
      if (nmor != Z.size() * nhom)
        throw LinkingAxiomFailure("axiom A: morphism count mismatch");
      for (int f : L.cat.hom(a, b))
        for (int z : Z) {
          if (z == 0) continue;
          if (L.cat.compose(f, L.delta(a, z)) == f)
            throw LinkingAxiomFailure("axiom A: Z(P) action not free");
        }
    }
    // Axiom (B): π(δ_P(x)) = c_x.
    for (int x : L.grp(a))
      if (F.canon_rep(L.objects[a], L.rep[L.delta(a, x)]) != F.canon_rep(L.objects[a], x))
        throw LinkingAxiomFailure("axiom B: projection of delta is not conjugation");
  }
  // Axiom (C): f ∘ δ_P(x) = δ_Q(π(f)(x)) ∘ f.
  for (int f = 0; f < L.cat.nmor(); ++f) {
    int a = L.cat.msrc[f], b = L.cat.mtgt[f];
    for (int x : L.grp(a)) {
      int lhs = L.cat.compose(f, L.delta(a, x));
      int rhs = L.cat.compose(L.delta(b, L.pi_apply(f, x)), f);
      if (lhs != rhs) throw LinkingAxiomFailure("axiom C failed");
    }
  }
  // π functorial, inclusions compose.
  for (int f = 0; f < L.cat.nmor(); ++f)
    for (int g = 0; g < L.cat.nmor(); ++g) {
      if (L.cat.mtgt[f] != L.cat.msrc[g]) continue;
      int gf = L.cat.compose(g, f);
      int a = L.cat.msrc[f];
      if (F.canon_rep(L.objects[a], L.rep[gf]) !=
          F.canon_rep(L.objects[a], G.mul(L.rep[g], L.rep[f])))
        throw LinkingAxiomFailure("projection not functorial");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!sub_leq(L.grp(a), L.grp(b))) continue;
      for (int c = 0; c < n; ++c) {
        if (!sub_leq(L.grp(b), L.grp(c))) continue;
        if (L.cat.compose(L.inclusion(b, c), L.inclusion(a, b)) != L.inclusion(a, c))
          throw LinkingAxiomFailure("inclusions do not compose");
      }
    }
}

inline LinkingSystem build_linking(const FusionSystem& F) {
  const FiniteGroup& G = *F.G;
  LinkingSystem L;
  L.F = &F;
  // Objects: F-centric subgroups; cross-checked against p-centricity in G.
  for (int a = 0; a < int(F.objects.size()); ++a) {
    bool centric = classify_subgroup(F, a).centric;
    bool pcentric = true;
    try {
      p_prime_complement(G, F.objects[a], F.p);
    } catch (const NotPCentric&) {
      pcentric = false;
    }
    if (centric != pcentric)
      throw NotPCentric("F-centric and p-centric disagree (internal bug guard)");
    if (centric) L.objects.push_back(a);
  }
  int n = int(L.objects.size());
  L.cat.nobj = n;
  L.cprime.resize(n);
  for (int c = 0; c < n; ++c) L.cprime[c] = p_prime_complement(G, L.grp(c), F.p);
  L.s_obj = L.obj_of_fusion(F.obj_index(F.S));
  L.mor_lookup.assign(size_t(n) * n, {});
  L.cat.id_of.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> T = transporter_into(G, L.grp(a), L.grp(b));
      std::vector<int> reps = canonical_coset_reps(G, T, L.cprime[a]);
      for (int g : reps) {
        int idx = L.cat.nmor();
        L.cat.msrc.push_back(a);
        L.cat.mtgt.push_back(b);
        L.rep.push_back(g);
        L.mor_lookup[L.pair_key(a, b)][g] = idx;
        if (a == b && g == 0) L.cat.id_of[a] = idx;
      }
    }
  L.cat.comp_table.assign(size_t(L.cat.nmor()) * L.cat.nmor(), -1);
  for (int f = 0; f < L.cat.nmor(); ++f)
    for (int g = 0; g < L.cat.nmor(); ++g) {
      if (L.cat.mtgt[f] != L.cat.msrc[g]) continue;
      int h = L.find_morphism(L.cat.msrc[f], L.cat.mtgt[g], G.mul(L.rep[g], L.rep[f]));
      assert(h >= 0);
      L.cat.comp_table[size_t(g) * L.cat.nmor() + f] = h;
    }
  L.cat.finalize();
  check_linking_axioms(L);
  return L;
}

} // namespace fuscoh

#endif
