#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuscoh/linking.hpp"

using namespace fuscoh;

TEST_CASE("fusion system of S3 at p=3") {
  FiniteGroup G = symmetric_group(3);
  FusionSystem F = build_fusion(G, 3);
  CHECK(F.S.size() == 3);
  CHECK(F.objects.size() == 2);  // 1 and Z/3
  int s = F.obj_index(F.S);
  CHECK(F.homset(s, s).size() == 2);  // Aut_F(Z/3) = N/C = 6/3
  CHECK(check_saturation(F).ok());
}

TEST_CASE("fusion system of A4 at p=2") {
  FiniteGroup G = alternating_group(4);
  FusionSystem F = build_fusion(G, 2);
  CHECK(F.S.size() == 4);
  int s = F.obj_index(F.S);
  CHECK(F.homset(s, s).size() == 3);  // N/C = 12/4
  CHECK(check_saturation(F).ok());
}

TEST_CASE("fused transpositions in S3 at p=2") {
  FiniteGroup G = symmetric_group(3);
  Sub P = sub_closure(G, {G.index_of(perm_parse("(0 1)", 3))});
  Sub Q = sub_closure(G, {G.index_of(perm_parse("(0 2)", 3))});
  // |Hom(P,Q)| = |N_G(P,Q)|/|C_G(P)| = 2/2 = 1
  auto reps = canonical_coset_reps(G, transporter_into(G, P, Q), centralizer(G, P));
  CHECK(reps.size() == 1);
  FusionSystem F = build_fusion(G, 2);
  CHECK(check_saturation(F).ok());
  int s = F.obj_index(F.S);
  CHECK(F.homset(s, s).size() == 1);
}

TEST_CASE("hom sets between distinct conjugate subgroups") {
  FiniteGroup G = symmetric_group(3);
  FusionSystem F = build_fusion(G, 3);
  // Hom(1, S) = single morphism class (trivial source): |N|/|C| = 6/6
  int triv = F.obj_index({0});
  int s = F.obj_index(F.S);
  CHECK(F.homset(triv, s).size() == 1);
  CHECK(F.homset(s, triv).empty());
}

TEST_CASE("classify_subgroup flags") {
  FiniteGroup S4 = symmetric_group(4);
  FusionSystem F = build_fusion(S4, 2);
  // the normal V4 (intersection of A4 with the Sylow) is centric and radical
  Sub Vn = normal_closure(S4, {S4.index_of(perm_parse("(0 1)(2 3)", 4))});
  SubgroupFlags fl = classify_subgroup(F, F.obj_index(Vn));
  CHECK(fl.centric);
  CHECK(fl.radical);
  // S itself is always fully normalized, centric, but not radical here (Out_F(D8)=1... O_2 check)
  SubgroupFlags fs = classify_subgroup(F, F.obj_index(F.S));
  CHECK(fs.fully_normalized);
  CHECK(fs.fully_centralized);
  CHECK(fs.centric);
  // trivial subgroup is not centric
  FiniteGroup S3 = symmetric_group(3);
  FusionSystem F3 = build_fusion(S3, 3);
  CHECK(!classify_subgroup(F3, F3.obj_index({0})).centric);
}

TEST_CASE("saturation of the four fixtures") {
  CHECK(check_saturation(build_fusion(symmetric_group(3), 3)).ok());
  CHECK(check_saturation(build_fusion(alternating_group(4), 2)).ok());
  CHECK(check_saturation(build_fusion(symmetric_group(4), 2)).ok());
  CHECK(check_saturation(build_fusion(symmetric_group(5), 5)).ok());
}

TEST_CASE("linking system of S3 at p=3") {
  FiniteGroup G = symmetric_group(3);
  FusionSystem F = build_fusion(G, 3);
  LinkingSystem L = build_linking(F);
  CHECK(L.cat.nobj == 1);
  CHECK(L.cat.nmor() == 6);  // Aut_L(S) = N_G(S)/C' = 6/1
}

TEST_CASE("linking system of A4 at p=2") {
  FiniteGroup G = alternating_group(4);
  FusionSystem F = build_fusion(G, 2);
  LinkingSystem L = build_linking(F);
  CHECK(L.cat.nobj == 1);
  CHECK(L.cat.nmor() == 12);
}

TEST_CASE("linking system of S4 at p=2") {
  FiniteGroup G = symmetric_group(4);
  FusionSystem F = build_fusion(G, 2);
  LinkingSystem L = build_linking(F);
  CHECK(L.cat.nobj == 4);  // D8, Z/4, two V4's
  CHECK(L.cat.hom(L.s_obj, L.s_obj).size() == 8);
  std::vector<size_t> sizes;
  for (int c = 0; c < L.cat.nobj; ++c) sizes.push_back(L.grp(c).size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>({4, 4, 4, 8}));
}

TEST_CASE("linking system of S5 at p=5") {
  FiniteGroup G = symmetric_group(5);
  FusionSystem F = build_fusion(G, 5);
  LinkingSystem L = build_linking(F);
  CHECK(L.cat.nobj == 1);
  CHECK(L.cat.nmor() == 20);  // Frobenius group of order 20
}

TEST_CASE("restriction of linking morphisms") {
  FiniteGroup G = symmetric_group(4);
  FusionSystem F = build_fusion(G, 2);
  LinkingSystem L = build_linking(F);
  // restrict the identity of S to (P,P): must be the identity of P
  for (int c = 0; c < L.cat.nobj; ++c) {
    int r = L.restrict(L.cat.id_of[L.s_obj], c, c);
    CHECK(r == L.cat.id_of[c]);
  }
  // restrict alpha in Aut_L(S) to (P, P^alpha): projection is restricted conjugation
  for (int al : L.cat.hom(L.s_obj, L.s_obj)) {
    for (int c = 0; c < L.cat.nobj; ++c) {
      if (c == L.s_obj) continue;
      Sub img = sub_conjugate(G, L.rep[al], L.grp(c));
      int cimg = L.obj_of_fusion(F.obj_index(img));
      int r = L.restrict(al, c, cimg);
      CHECK(L.rep[r] == L.canon_cprime(c, L.rep[al]));
      // two-step restriction agrees with one-step
      int mid = L.restrict(al, c, L.s_obj);
      CHECK(L.restrict(mid, c, cimg) == r);
    }
  }
  // restriction with image not contained must throw
  int a4 = -1, b4 = -1;  // two distinct order-4 objects with no containment
  for (int c = 0; c < L.cat.nobj; ++c)
    if (L.grp(c).size() == 4) (a4 < 0 ? a4 : b4) = c;
  REQUIRE(a4 >= 0);
  REQUIRE(b4 >= 0);
  CHECK_THROWS_AS(L.restrict(L.cat.id_of[L.s_obj], a4, b4), ImageNotContained);
  // non-object restriction target
  Sub triv = {0};
  CHECK_THROWS_AS(restrict_morphism(L, L.cat.id_of[L.s_obj], triv, triv), NotAnObject);
}

TEST_CASE("every linking morphism factors as iso onto image then inclusion") {
  FiniteGroup G = symmetric_group(4);
  FusionSystem F = build_fusion(G, 2);
  LinkingSystem L = build_linking(F);
  for (int f = 0; f < L.cat.nmor(); ++f) {
    int a = L.cat.msrc[f], b = L.cat.mtgt[f];
    Sub img = sub_conjugate(G, L.rep[f], L.grp(a));
    int c;
    try {
      c = L.obj_of_fusion(F.obj_index(img));
    } catch (const NotAnObject&) {
      continue;  // image of a centric is centric; should not happen
    }
    int iso = L.restrict(f, a, c);
    CHECK(L.cat.compose(L.inclusion(c, b), iso) == f);
  }
}
