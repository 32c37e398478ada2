#ifndef FUSCOH_GAMMA_HPP
#define FUSCOH_GAMMA_HPP

#include <memory>
#include <random>

#include "linking.hpp"
#include "presentation.hpp"

namespace fuscoh {

struct CategoryNotConnected : std::runtime_error {
  CategoryNotConnected() : std::runtime_error("category not connected") {}
};
struct SurjectivityFailure : std::runtime_error {
  explicit SurjectivityFailure(const std::string& w) : std::runtime_error(w) {}
};

/* The full subcategory F^c of F on the F-centric objects, with extra data. */
struct CentricFusionCategory {
  Category cat;
  std::vector<int> objects;  // fusion object indices (same list as L.objects)
  std::vector<int> rep;      // canonical C_G(P)-coset representative per morphism
  int s_obj = -1;
  std::vector<std::map<int, int>> mor_lookup;

  int pair_key(int a, int b) const { return a * cat.nobj + b; }
  int find_morphism(const FusionSystem& F, int a, int b, int g) const {
    auto& tab = mor_lookup[pair_key(a, b)];
    auto it = tab.find(F.canon_rep(objects[a], g));
    return it == tab.end() ? -1 : it->second;
  }
};

inline CentricFusionCategory fusion_centric_category(const FusionSystem& F,
                                                     const std::vector<int>& centric_objects) {
  CentricFusionCategory C;
  C.objects = centric_objects;
  int n = int(C.objects.size());
  C.cat.nobj = n;
  C.cat.id_of.assign(n, -1);
  C.mor_lookup.assign(size_t(n) * n, {});
  C.s_obj = -1;
  for (int a = 0; a < n; ++a)
    if (F.objects[C.objects[a]] == F.S) C.s_obj = a;
  assert(C.s_obj >= 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int g : F.homset(C.objects[a], C.objects[b])) {
        int idx = C.cat.nmor();
        C.cat.msrc.push_back(a);
        C.cat.mtgt.push_back(b);
        C.rep.push_back(g);
        C.mor_lookup[C.pair_key(a, b)][g] = idx;
        if (a == b && g == F.canon_rep(C.objects[a], 0)) C.cat.id_of[a] = idx;
      }
  const FiniteGroup& G = *F.G;
  C.cat.comp_table.assign(size_t(C.cat.nmor()) * C.cat.nmor(), -1);
  for (int f = 0; f < C.cat.nmor(); ++f)
    for (int g = 0; g < C.cat.nmor(); ++g) {
      if (C.cat.mtgt[f] != C.cat.msrc[g]) continue;
      int h = C.find_morphism(F, C.cat.msrc[f], C.cat.mtgt[g], G.mul(C.rep[g], C.rep[f]));
      assert(h >= 0);
      C.cat.comp_table[size_t(g) * C.cat.nmor() + f] = h;
    }
  C.cat.finalize();
  return C;
}

/* Fundamental group presentation of |C| at a basepoint, with the given
   spanning tree (tree[obj] = a morphism obj -> basepoint; id at basepoint).
   Returns the presentation plus the word of every morphism. */
struct Pi1Result {
  PresentedGroup pg;
  std::vector<std::vector<int>> word_of;  // per morphism
};

inline Pi1Result pi1_presentation(const Category& C, int basepoint, const std::vector<int>& tree) {
  if (!C.connected()) throw CategoryNotConnected();
  Pi1Result out;
  std::vector<int> gen_of(C.nmor(), -1);
  for (int f = 0; f < C.nmor(); ++f) {
    if (C.is_id(f)) continue;
    if (C.msrc[f] != basepoint && tree[C.msrc[f]] == f) continue;  // tree edge
    gen_of[f] = out.pg.ngens++;
  }
  out.word_of.assign(C.nmor(), {});
  for (int f = 0; f < C.nmor(); ++f)
    if (gen_of[f] >= 0) out.word_of[f] = {2 * gen_of[f]};
  std::set<std::vector<int>> rels;
  for (int f = 0; f < C.nmor(); ++f)
    for (int g = 0; g < C.nmor(); ++g) {
      if (C.mtgt[f] != C.msrc[g]) continue;
      int gf = C.compose(g, f);
      std::vector<int> w = word_inverse(out.word_of[gf]);
      w.insert(w.end(), out.word_of[g].begin(), out.word_of[g].end());
      w.insert(w.end(), out.word_of[f].begin(), out.word_of[f].end());
      if (!w.empty()) rels.insert(w);
    }
  out.pg.relators.assign(rels.begin(), rels.end());
  return out;
}

struct GammaData {
  FiniteGroup gamma;
  std::vector<Perm> gen_perms;
  std::vector<int> theta_hat;  // per L morphism: gamma element index
};

inline GammaData gamma_p_prime(const FusionSystem& F, const LinkingSystem& L,
                               long cap = kEnumerationCap) {
  CentricFusionCategory C = fusion_centric_category(F, L.objects);
  // Spanning tree: the canonical inclusions P -> S (identity-element cosets).
  std::vector<int> tree(C.cat.nobj, -1);
  for (int a = 0; a < C.cat.nobj; ++a) {
    int f = C.find_morphism(F, a, C.s_obj, 0);
    assert(f >= 0);
    tree[a] = f;
  }
  Pi1Result pi = pi1_presentation(C.cat, C.s_obj, tree);
  GammaData gd;
  gd.gamma = todd_coxeter_checked(pi.pg, &gd.gen_perms, cap);
  int n = gd.gamma.n;
  gd.theta_hat.assign(L.cat.nmor(), -1);
  for (int f = 0; f < L.cat.nmor(); ++f) {
    int fc = C.find_morphism(F, L.cat.msrc[f], L.cat.mtgt[f], L.rep[f]);
    assert(fc >= 0);
    gd.theta_hat[f] = gd.gamma.index_of(word_eval(gd.gen_perms, pi.word_of[fc], n));
  }
  // Θ̂ functorial; inclusions (and δ_S images) die; Aut_L(S) surjects.
  for (int f = 0; f < L.cat.nmor(); ++f)
    for (int g = 0; g < L.cat.nmor(); ++g) {
      if (L.cat.mtgt[f] != L.cat.msrc[g]) continue;
      if (gd.theta_hat[L.cat.compose(g, f)] !=
          gd.gamma.mul(gd.theta_hat[g], gd.theta_hat[f]))
        throw SurjectivityFailure("theta_hat not functorial");
    }
  for (int a = 0; a < L.cat.nobj; ++a)
    for (int b = 0; b < L.cat.nobj; ++b) {
      if (!sub_leq(L.grp(a), L.grp(b))) continue;
      if (gd.theta_hat[L.inclusion(a, b)] != 0)
        throw SurjectivityFailure("theta_hat does not kill inclusions");
    }
  for (int x : F.S)
    if (gd.theta_hat[L.delta(L.s_obj, x)] != 0)
      throw SurjectivityFailure("theta = theta_hat∘delta_S not trivial");
  std::set<int> img;
  for (int f : L.cat.hom(L.s_obj, L.s_obj)) img.insert(gd.theta_hat[f]);
  if (int(img.size()) != gd.gamma.order())
    throw SurjectivityFailure("Aut_L(S) does not surject onto gamma");
  if (gd.gamma.order() % F.p == 0)
    throw SurjectivityFailure("gamma is not a p'-group");
  return gd;
}

/* Γ_p(F) = S/O^p_F(S), the hyperfocal quotient. */
inline Quotient gamma_p(const FusionSystem& F) {
  const FiniteGroup& G = *F.G;
  FiniteGroup Sg = sub_to_group(G, F.S);
  std::vector<int> gens;  // indices in Sg
  for (int a = 0; a < int(F.objects.size()); ++a) {
    const Sub& P = F.objects[a];
    AutGroup A = fusion_aut_group(F, a);
    // Aut_F(P) inside the quotient A.q.Q:
    std::set<int> autF_set;
    for (int g : F.homset(a, a)) autF_set.insert(A.q.proj[A.amb_of_G[g]]);
    Sub autF = sub_closure(A.q.Q, std::vector<int>(autF_set.begin(), autF_set.end()));
    // O^p(Aut_F(P)): generated by its p'-order elements.
    std::vector<int> op_gens;
    for (int e : autF)
      if (A.q.Q.element_order(e) % F.p != 0) op_gens.push_back(e);
    Sub Op = sub_closure(A.q.Q, op_gens);
    for (int e : Op) {
      // choose an ambient representative g with proj(g) = e
      int gamb = -1;
      for (int i = 0; i < A.amb.order(); ++i)
        if (A.q.proj[i] == e) { gamb = i; break; }
      assert(gamb >= 0);
      int gG = G.index_of(A.amb.elems[gamb]);
      for (int x : P) {
        int y = G.mul(G.inv(x), G.conj(gG, x));  // x^{-1} α(x)
        gens.push_back(Sg.index_of(G.elems[y]));
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Sub hyper = normal_closure(Sg, gens);
  return quotient_group(Sg, hyper);
}

/* p'-index subsystem (F_H, L_H) for H ≤ Γ. */
struct Subsystem {
  std::unique_ptr<FusionSystem> FH;
  LinkingSystem LH;
  std::vector<int> to_parent;  // LH morphism -> L morphism
  Sub H;
};

inline Subsystem build_p_prime_subsystem(const LinkingSystem& L, const GammaData& gd,
                                         const Sub& H) {
  const FusionSystem& F = *L.F;
  const FiniteGroup& G = *F.G;
  Subsystem S;
  S.H = H;
  S.FH = std::make_unique<FusionSystem>();
  FusionSystem& FH = *S.FH;
  FH.G = F.G;
  FH.p = F.p;
  FH.S = F.S;
  FH.objects = F.objects;
  FH.centralizer_cache = F.centralizer_cache;

  // Generate F_H: restrictions of π(L_H)-morphisms, closed under composition.
  std::map<std::pair<int, int>, std::set<int>> hom;
  int nf = int(F.objects.size());
  for (int f = 0; f < L.cat.nmor(); ++f) {
    if (!sub_contains(H, gd.theta_hat[f])) continue;
    int g = L.rep[f];
    int asrc = L.objects[L.cat.msrc[f]];
    for (int a2 = 0; a2 < nf; ++a2) {
      if (!sub_leq(F.objects[a2], F.objects[asrc])) continue;
      Sub img = sub_conjugate(G, g, F.objects[a2]);
      for (int b2 = 0; b2 < nf; ++b2)
        if (sub_leq(img, F.objects[b2]))
          hom[{a2, b2}].insert(F.canon_rep(a2, g));
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    // composition closure
    for (auto& [k1, s1] : hom)
      for (auto& [k2, s2] : hom) {
        if (k1.second != k2.first) continue;
        for (int g : s1) {
          if (!sub_leq(sub_conjugate(G, g, F.objects[k1.first]), F.objects[k1.second]))
            throw std::logic_error("subsystem hom inconsistency");
          for (int h : s2) {
            int hg = F.canon_rep(k1.first, G.mul(h, g));
            if (hom[{k1.first, k2.second}].insert(hg).second) changed = true;
          }
        }
      }
    // restriction closure
    for (auto& [k, s] : hom)
      for (int g : s)
        for (int a2 = 0; a2 < nf; ++a2) {
          if (!sub_leq(F.objects[a2], F.objects[k.first])) continue;
          Sub img = sub_conjugate(G, g, F.objects[a2]);
          for (int b2 = 0; b2 < nf; ++b2)
            if (sub_leq(img, F.objects[b2]))
              if (hom[{a2, b2}].insert(F.canon_rep(a2, g)).second) changed = true;
        }
  }
  for (auto& [k, s] : hom) FH.hom[k] = std::vector<int>(s.begin(), s.end());

  // L_H: same objects, morphisms Θ̂^{-1}(H).
  LinkingSystem& LH = S.LH;
  LH.F = &FH;
  LH.objects = L.objects;
  LH.cprime = L.cprime;
  int n = L.cat.nobj;
  LH.cat.nobj = n;
  LH.cat.id_of.assign(n, -1);
  LH.mor_lookup.assign(size_t(n) * n, {});
  for (int f = 0; f < L.cat.nmor(); ++f) {
    if (!sub_contains(H, gd.theta_hat[f])) continue;
    int idx = LH.cat.nmor();
    LH.cat.msrc.push_back(L.cat.msrc[f]);
    LH.cat.mtgt.push_back(L.cat.mtgt[f]);
    LH.rep.push_back(L.rep[f]);
    LH.mor_lookup[LH.pair_key(L.cat.msrc[f], L.cat.mtgt[f])][L.rep[f]] = idx;
    S.to_parent.push_back(f);
    if (L.cat.is_id(f)) LH.cat.id_of[L.cat.msrc[f]] = idx;
  }
  LH.s_obj = L.s_obj;
  LH.cat.comp_table.assign(size_t(LH.cat.nmor()) * LH.cat.nmor(), -1);
  for (int f = 0; f < LH.cat.nmor(); ++f)
    for (int g = 0; g < LH.cat.nmor(); ++g) {
      if (LH.cat.mtgt[f] != LH.cat.msrc[g]) continue;
      int h = LH.find_morphism(LH.cat.msrc[f], LH.cat.mtgt[g], G.mul(LH.rep[g], LH.rep[f]));
      assert(h >= 0);  // Θ̂ multiplicative, so the composite stays in H
      LH.cat.comp_table[size_t(g) * LH.cat.nmor() + f] = h;
    }
  LH.cat.finalize();

  // Theorem-backed verifications: saturation, same centric objects, axioms.
  check_linking_axioms(LH);
  SaturationReport rep = check_saturation(FH);
  if (!rep.ok()) throw std::logic_error("subsystem F_H failed saturation: " + rep.failures[0]);
  for (int a = 0; a < nf; ++a) {
    bool cF = std::binary_search(L.objects.begin(), L.objects.end(), a);
    bool cH = classify_subgroup(FH, a).centric;
    if (cF != cH) throw std::logic_error("subsystem centric objects differ from parent");
  }
  return S;
}

/* Section Γ/H -> Aut_L(S). */
struct Section {
  Sub H;
  Cosets cosets;             // left cosets of H in gamma
  std::vector<int> sigma;    // per coset: Aut_L(S) morphism index (in L)
};

inline Section make_section(const LinkingSystem& L, const GammaData& gd, const Sub& H) {
  Section s;
  s.H = H;
  s.cosets = left_cosets(gd.gamma, H);
  s.sigma.assign(s.cosets.count(), -1);
  for (int f : L.cat.hom(L.s_obj, L.s_obj)) {
    int c = s.cosets.coset_of[gd.theta_hat[f]];
    if (s.sigma[c] < 0) s.sigma[c] = f;  // hom lists ascending: first hit is least
  }
  for (int c = 0; c < s.cosets.count(); ++c)
    if (s.sigma[c] < 0) throw SurjectivityFailure("section unavailable");
  s.sigma[s.cosets.coset_of[0]] = L.cat.id_of[L.s_obj];
  return s;
}

inline Section make_random_section(const LinkingSystem& L, const GammaData& gd, const Sub& H,
                                   uint64_t seed) {
  Section s;
  s.H = H;
  s.cosets = left_cosets(gd.gamma, H);
  std::vector<std::vector<int>> cands(s.cosets.count());
  for (int f : L.cat.hom(L.s_obj, L.s_obj))
    cands[s.cosets.coset_of[gd.theta_hat[f]]].push_back(f);
  std::mt19937_64 rng(seed);
  s.sigma.assign(s.cosets.count(), -1);
  for (int c = 0; c < s.cosets.count(); ++c) {
    if (cands[c].empty()) throw SurjectivityFailure("section unavailable");
    s.sigma[c] = cands[c][rng() % cands[c].size()];
  }
  s.sigma[s.cosets.coset_of[0]] = L.cat.id_of[L.s_obj];
  return s;
}

/* The discrete groupoid G_H(P): objects α ∈ Mor_L(P,S) grouped into components
   by δ_P(P^α, α) = Θ̂(α)^{-1}H.  Returns the component lists indexed by coset. */
inline std::vector<std::vector<int>> enumerate_GH(const LinkingSystem& L, const GammaData& gd,
                                                  const Sub& H, int p_obj) {
  Cosets C = left_cosets(gd.gamma, H);
  std::vector<std::vector<int>> comps(C.count());
  for (int al : L.cat.hom(p_obj, L.s_obj))
    comps[C.coset_of[gd.gamma.inv(gd.theta_hat[al])]].push_back(al);
  for (auto& comp : comps)
    if (comp.empty()) throw SurjectivityFailure("G_H(P) component missing");
  return comps;
}

} // namespace fuscoh

#endif
