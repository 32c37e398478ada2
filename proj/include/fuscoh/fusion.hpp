#ifndef FUSCOH_FUSION_HPP
#define FUSCOH_FUSION_HPP

#include <map>
#include <string>

#include "group.hpp"

namespace fuscoh {

/* Transporter with containment: { g : g P g^{-1} <= Q }. */
inline std::vector<int> transporter_into(const FiniteGroup& G, const Sub& P, const Sub& Q) {
  std::vector<int> out;
  if (P.size() > Q.size()) return out;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : P)
      if (!sub_contains(Q, G.conj(g, x))) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

inline FiniteGroup sub_to_group(const FiniteGroup& G, const Sub& H) {
  std::vector<Perm> gens;
  for (int h : H) gens.push_back(G.elems[h]);
  return generate_group(gens, G.n);
}

/* Fusion system over a Sylow p-subgroup S.  Objects are all subgroups of S.
   Hom(P,Q) is stored as the sorted list of canonical coset representatives
   g·C_G(P) (least group-element index per coset); the morphism is x -> gxg^{-1}. */
struct FusionSystem {
  const FiniteGroup* G = nullptr;
  int p = 0;
  Sub S;
  std::vector<Sub> objects;  // sorted; all subgroups of S
  std::map<std::pair<int, int>, std::vector<int>> hom;

  int obj_index(const Sub& P) const {
    auto it = std::lower_bound(objects.begin(), objects.end(), P);
    assert(it != objects.end() && *it == P);
    return int(it - objects.begin());
  }

  const std::vector<int>& homset(int a, int b) const {
    static const std::vector<int> empty;
    auto it = hom.find({a, b});
    return it == hom.end() ? empty : it->second;
  }

  /* Canonical representative of the coset g·C_G(P) for object index a. */
  int canon_rep(int a, int g) const {
    int best = -1;
    for (int c : centralizer_cache[a]) {
      int h = G->mul(g, c);
      if (best < 0 || h < best) best = h;
    }
    return best;
  }

  std::vector<Sub> centralizer_cache;  // C_G(P) per object
};

inline std::vector<int> canonical_coset_reps(const FiniteGroup& G, const std::vector<int>& T,
                                             const Sub& C) {
  std::set<int> reps;
  std::set<int> seen;
  for (int g : T) {
    if (seen.count(g)) continue;
    int best = g;
    for (int c : C) {
      int h = G.mul(g, c);
      seen.insert(h);
      if (h < best) best = h;
    }
    reps.insert(best);
  }
  return std::vector<int>(reps.begin(), reps.end());
}

inline FusionSystem build_fusion(const FiniteGroup& G, int p) {
  if (G.order() % p != 0 || !is_prime(p))
    throw std::invalid_argument("build_fusion: p must be a prime dividing |G|");
  FusionSystem F;
  F.G = &G;
  F.p = p;
  F.S = sylow_subgroup(G, p);
  F.objects = all_subgroups(G, F.S);
  int n = int(F.objects.size());
  F.centralizer_cache.resize(n);
  for (int a = 0; a < n; ++a) F.centralizer_cache[a] = centralizer(G, F.objects[a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> T = transporter_into(G, F.objects[a], F.objects[b]);
      if (T.empty()) continue;
      F.hom[{a, b}] = canonical_coset_reps(G, T, F.centralizer_cache[a]);
    }
  return F;
}

/* The F-conjugacy class of object a: all objects g P g^{-1} for morphisms out of P. */
inline std::vector<int> fusion_class(const FusionSystem& F, int a) {
  const FiniteGroup& G = *F.G;
  std::set<int> cls = {a};
  std::vector<int> frontier = {a};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (auto& [key, reps] : F.hom) {
        if (key.first != x) continue;
        for (int g : reps) {
          int img = F.obj_index(sub_conjugate(G, g, F.objects[x]));
          if (cls.insert(img).second) next.push_back(img);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<int>(cls.begin(), cls.end());
}

/* Aut_F(P) as an abstract quotient: ambient = <reps, C_G(P)>, modulo C_G(P). */
struct AutGroup {
  FiniteGroup amb;   // subgroup of G containing the automizer representatives
  Quotient q;        // amb / C_amb where C_amb = C_G(P) ∩ amb (= C_G(P) here)
  std::vector<int> amb_of_G;  // partial map: G element index -> amb element index (-1)
};

inline AutGroup fusion_aut_group(const FusionSystem& F, int a) {
  const FiniteGroup& G = *F.G;
  AutGroup A;
  std::vector<Perm> gens;
  for (int g : F.homset(a, a)) gens.push_back(G.elems[g]);
  for (int c : F.centralizer_cache[a]) gens.push_back(G.elems[c]);
  A.amb = generate_group(gens, G.n);
  Sub C;
  for (int c : F.centralizer_cache[a]) C.push_back(A.amb.index_of(G.elems[c]));
  std::sort(C.begin(), C.end());
  A.q = quotient_group(A.amb, C);
  A.amb_of_G.assign(G.order(), -1);
  for (int i = 0; i < A.amb.order(); ++i) A.amb_of_G[G.index_of(A.amb.elems[i])] = i;
  return A;
}

/* Image of a set of G-elements (normalizing P) in Aut_F(P). */
inline Sub aut_image(const AutGroup& A, const std::vector<int>& gs, const FiniteGroup& G) {
  std::set<int> img;
  for (int g : gs) {
    int i = A.amb_of_G[g];
    if (i >= 0) img.insert(A.q.proj[i]);
  }
  return Sub(img.begin(), img.end());
}

/* O_p(H) for a subgroup H of Q: intersection of all conjugates of a Sylow p-subgroup. */
inline Sub p_core(const FiniteGroup& Q, const Sub& H, int p) {
  FiniteGroup Hg = sub_to_group(Q, H);
  Sub syl = sylow_subgroup(Hg, p);
  Sub core = syl;
  for (int g = 0; g < Hg.order(); ++g) core = sub_intersect(core, sub_conjugate(Hg, g, syl));
  Sub out;  // translate back to Q indices
  for (int x : core) out.push_back(Q.index_of(Hg.elems[x]));
  std::sort(out.begin(), out.end());
  return out;
}

struct SubgroupFlags {
  bool fully_normalized = false, fully_centralized = false, centric = false, radical = false;
};

inline SubgroupFlags classify_subgroup(const FusionSystem& F, int a) {
  const FiniteGroup& G = *F.G;
  SubgroupFlags out;
  std::vector<int> cls = fusion_class(F, a);
  auto NS = [&](int x) { return sub_intersect(normalizer(G, F.objects[x]), F.S).size(); };
  auto CS = [&](int x) { return sub_intersect(F.centralizer_cache[x], F.S).size(); };
  size_t nP = NS(a), cP = CS(a);
  out.fully_normalized = true;
  out.fully_centralized = true;
  out.centric = true;
  for (int x : cls) {
    if (NS(x) > nP) out.fully_normalized = false;
    if (CS(x) > cP) out.fully_centralized = false;
    Sub Z = sub_intersect(F.centralizer_cache[x], F.objects[x]);
    if (sub_intersect(F.centralizer_cache[x], F.S) != Z) out.centric = false;
  }
  // radical: O_p(Out_F(P)) = 1
  AutGroup A = fusion_aut_group(F, a);
  Sub inn = aut_image(A, F.objects[a], G);
  Quotient outq = quotient_group(A.q.Q, inn);
  Sub core = p_core(outq.Q, whole_group(outq.Q), F.p);
  out.radical = (core.size() == 1);
  return out;
}

struct SaturationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline SaturationReport check_saturation(const FusionSystem& F) {
  const FiniteGroup& G = *F.G;
  SaturationReport rep;
  int n = int(F.objects.size());
  std::vector<SubgroupFlags> flags(n);
  for (int a = 0; a < n; ++a) flags[a] = classify_subgroup(F, a);

  // Axiom I: fully normalized => fully centralized and Aut_S(P) Sylow in Aut_F(P).
  for (int a = 0; a < n; ++a) {
    if (!flags[a].fully_normalized) continue;
    if (!flags[a].fully_centralized)
      rep.failures.push_back("axiom I: object " + std::to_string(a) +
                             " fully normalized but not fully centralized");
    AutGroup A = fusion_aut_group(F, a);
    // Aut_F(P) = subgroup generated by the automizer reps in amb/C; Aut_S(P) = image of N_S(P).
    std::set<int> autF_set;
    for (int g : F.homset(a, a)) {
      int i = A.amb_of_G[g];
      assert(i >= 0);
      autF_set.insert(A.q.proj[i]);
    }
    long autF_order =
        long(sub_closure(A.q.Q, std::vector<int>(autF_set.begin(), autF_set.end())).size());
    Sub NSP = sub_intersect(normalizer(G, F.objects[a]), F.S);
    std::set<int> autS_set;
    for (int g : NSP) {
      int i = A.amb_of_G[g];
      if (i >= 0) autS_set.insert(A.q.proj[i]);
    }
    long autS_order = long(sub_closure(A.q.Q, std::vector<int>(autS_set.begin(), autS_set.end())).size());
    long ppart = 1;
    long m = autF_order;
    while (m % F.p == 0) { m /= F.p; ppart *= F.p; }
    if (autS_order != ppart)
      rep.failures.push_back("axiom I: Aut_S not Sylow in Aut_F at object " + std::to_string(a));
  }

  // Axiom II: every φ with fully centralized image extends over N_φ.
  int sidx = F.obj_index(F.S);
  for (int a = 0; a < n; ++a) {
    const Sub& P = F.objects[a];
    std::set<int> seen_cosets;
    for (int b = 0; b < n; ++b) {
      for (int g : F.homset(a, b)) {
        if (!seen_cosets.insert(g).second) continue;  // reps are canonical per source
        Sub Pimg = sub_conjugate(G, g, P);
        int img = F.obj_index(Pimg);
        if (!flags[img].fully_centralized) continue;
        // N_φ = { x in N_S(P) : c_{gxg^{-1}}|_{P'} in Aut_S(P') }
        Sub NSP = sub_intersect(normalizer(G, P), F.S);
        Sub NSPimg = sub_intersect(normalizer(G, Pimg), F.S);
        std::vector<int> Nphi_gens;
        for (int x : NSP) {
          int y = G.conj(g, x);
          bool in_autS = false;
          for (int s : NSPimg) {
            bool same = true;
            for (int z : Pimg)
              if (G.conj(s, z) != G.conj(y, z)) { same = false; break; }
            if (same) { in_autS = true; break; }
          }
          if (in_autS) Nphi_gens.push_back(x);
        }
        Sub Nphi = sub_closure(G, Nphi_gens);
        int nidx = F.obj_index(Nphi);
        // need ψ in Hom_F(N_φ, S) with ψ|_P = φ, i.e. rep h with h^{-1}g ∈ C_G(P)
        bool found = false;
        for (int h : F.homset(nidx, sidx)) {
          for (int c : F.centralizer_cache[a])
            if (G.mul(h, c) == g) { found = true; break; }
          // h^{-1} g ∈ C_G(P)  <=>  g ∈ h·C_G(P)
          if (found) break;
        }
        if (!found)
          rep.failures.push_back("axiom II: no extension over N_phi for morphism from object " +
                                 std::to_string(a) + " rep " + std::to_string(g));
      }
    }
  }
  return rep;
}

} // namespace fuscoh

#endif
