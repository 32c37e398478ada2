#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuscoh/gamma.hpp"

using namespace fuscoh;

namespace {

struct Fixture {
  FiniteGroup G;
  FusionSystem F;
  LinkingSystem L;
  GammaData gd;
};

/* Heap-allocated so internal cross-pointers stay valid. */
std::unique_ptr<Fixture> make_fixture(FiniteGroup g, int p) {
  auto fx = std::make_unique<Fixture>();
  fx->G = std::move(g);
  fx->F = build_fusion(fx->G, p);
  fx->L = build_linking(fx->F);
  fx->gd = gamma_p_prime(fx->F, fx->L);
  return fx;
}

}  // namespace

TEST_CASE("todd-coxeter on small presentations") {
  PresentedGroup P;
  P.ngens = 1;
  P.relators = {{0, 0}};  // a^2
  CHECK(todd_coxeter_checked(P).order() == 2);

  PresentedGroup Q;  // <a,b | a^2, b^3, (ab)^2> = S3
  Q.ngens = 2;
  Q.relators = {{0, 0}, {2, 2, 2}, {0, 2, 0, 2}};
  CHECK(todd_coxeter_checked(Q).order() == 6);

  PresentedGroup R;  // <a,b | a^4, b^2, baba> = D8
  R.ngens = 2;
  R.relators = {{0, 0, 0, 0}, {2, 2}, {2, 0, 2, 0}};
  CHECK(todd_coxeter_checked(R).order() == 8);

  PresentedGroup T;  // free group Z: must exceed any cap
  T.ngens = 1;
  CHECK_THROWS_AS(todd_coxeter(T, nullptr, 50), CosetCapExceeded);
}

TEST_CASE("pi1 of one-object categories recovers the group") {
  for (auto n : {2, 3, 4}) {
    FiniteGroup Zn = cyclic_group(n);
    Category C = one_object_category(Zn);
    std::vector<int> tree = {C.id_of[0]};
    Pi1Result pi = pi1_presentation(C, 0, tree);
    CHECK(pi.pg.ngens == n - 1);
    FiniteGroup G = todd_coxeter_checked(pi.pg);
    CHECK(G.order() == n);
  }
  // contractible poset: two objects, one non-identity arrow used as tree edge
  Category P;
  P.nobj = 2;
  P.msrc = {0, 1, 0};
  P.mtgt = {0, 1, 1};
  P.id_of = {0, 1};
  P.comp_table = {0, -1, -1, -1, 1, -1, 2, -1, -1};
  // comp_table[g*3+f]: only identities and the arrow compose
  P.comp_table.assign(9, -1);
  P.comp_table[0 * 3 + 0] = 0;
  P.comp_table[1 * 3 + 1] = 1;
  P.comp_table[2 * 3 + 0] = 2;
  P.comp_table[1 * 3 + 2] = 2;
  P.finalize();
  Pi1Result pi = pi1_presentation(P, 1, {2, 1});
  CHECK(pi.pg.ngens == 0);
  CHECK(todd_coxeter_checked(pi.pg).order() == 1);
}

TEST_CASE("gamma of the four fixtures") {
  auto e1p = make_fixture(symmetric_group(3), 3);
  Fixture& e1 = *e1p;
  CHECK(e1.gd.gamma.order() == 2);

  auto e2p = make_fixture(alternating_group(4), 2);
  Fixture& e2 = *e2p;
  CHECK(e2.gd.gamma.order() == 3);

  auto e3p = make_fixture(symmetric_group(4), 2);
  Fixture& e3 = *e3p;
  CHECK(e3.gd.gamma.order() == 1);

  auto e4p = make_fixture(symmetric_group(5), 5);
  Fixture& e4 = *e4p;
  CHECK(e4.gd.gamma.order() == 4);
  // cyclic: some element of order 4
  bool has4 = false;
  for (int i = 0; i < 4; ++i) has4 |= (e4.gd.gamma.element_order(i) == 4);
  CHECK(has4);

  // single-object cross-check: Γ ≅ Aut_F(S) when F^c has one object
  for (Fixture* fx : {&e1, &e2, &e4}) {
    if (fx->L.cat.nobj != 1) continue;
    int s = fx->F.obj_index(fx->F.S);
    CHECK(int(fx->F.homset(s, s).size()) == fx->gd.gamma.order());
  }
}

TEST_CASE("hyperfocal quotient gamma_p") {
  FiniteGroup S3 = symmetric_group(3);
  FusionSystem F1 = build_fusion(S3, 3);
  CHECK(gamma_p(F1).Q.order() == 1);

  FiniteGroup Z4 = cyclic_group(4);
  FusionSystem F2 = build_fusion(Z4, 2);
  Quotient q2 = gamma_p(F2);
  CHECK(q2.Q.order() == 4);
  bool has4 = false;
  for (int i = 0; i < 4; ++i) has4 |= (q2.Q.element_order(i) == 4);
  CHECK(has4);

  FiniteGroup A4 = alternating_group(4);
  FusionSystem F3 = build_fusion(A4, 2);
  CHECK(gamma_p(F3).Q.order() == 1);

  // outputs are p-groups / p'-groups
  auto e4p = make_fixture(symmetric_group(5), 5);
  Fixture& e4 = *e4p;
  CHECK(gamma_p(e4.F).Q.order() == 1);  // Aut_F(Z/5)=Z/4 moves every element: hyperfocal = S
  CHECK(e4.gd.gamma.order() % 5 != 0);
}

TEST_CASE("p-prime index subsystems") {
  auto e1p = make_fixture(symmetric_group(3), 3);
  Fixture& e1 = *e1p;
  Subsystem s1 = build_p_prime_subsystem(e1.L, e1.gd, {0});
  CHECK(s1.LH.cat.nmor() == 3);  // Aut_{L_1}(S) = Z/3
  CHECK(s1.LH.cat.nobj == e1.L.cat.nobj);

  // H = Γ reproduces L
  Subsystem sfull = build_p_prime_subsystem(e1.L, e1.gd, whole_group(e1.gd.gamma));
  CHECK(sfull.LH.cat.nmor() == e1.L.cat.nmor());

  // E4 with the index-2 subgroup of Z/4
  auto e4p = make_fixture(symmetric_group(5), 5);
  Fixture& e4 = *e4p;
  auto subs = all_subgroups(e4.gd.gamma, whole_group(e4.gd.gamma));
  Sub idx2;
  for (auto& h : subs)
    if (h.size() == 2) idx2 = h;
  REQUIRE(idx2.size() == 2);
  Subsystem s4 = build_p_prime_subsystem(e4.L, e4.gd, idx2);
  CHECK(s4.LH.cat.hom(s4.LH.s_obj, s4.LH.s_obj).size() == 10);
}

TEST_CASE("sections over subgroups of gamma") {
  auto e4p = make_fixture(symmetric_group(5), 5);
  Fixture& e4 = *e4p;
  auto subs = all_subgroups(e4.gd.gamma, whole_group(e4.gd.gamma));
  for (auto& H : subs) {
    Section s = make_section(e4.L, e4.gd, H);
    CHECK(s.cosets.count() == e4.gd.gamma.order() / int(H.size()));
    CHECK(s.sigma[s.cosets.coset_of[0]] == e4.L.cat.id_of[e4.L.s_obj]);
    for (int c = 0; c < s.cosets.count(); ++c)
      CHECK(s.cosets.coset_of[e4.gd.theta_hat[s.sigma[c]]] == c);
    for (uint64_t seed : {1u, 2u, 3u}) {
      Section r = make_random_section(e4.L, e4.gd, H, seed);
      CHECK(r.sigma[r.cosets.coset_of[0]] == e4.L.cat.id_of[e4.L.s_obj]);
      for (int c = 0; c < r.cosets.count(); ++c)
        CHECK(r.cosets.coset_of[e4.gd.theta_hat[r.sigma[c]]] == c);
    }
  }
}

TEST_CASE("discrete groupoid G_H(P) has [Γ:H] components") {
  auto e1p = make_fixture(symmetric_group(3), 3);
  Fixture& e1 = *e1p;
  auto comps = enumerate_GH(e1.L, e1.gd, {0}, e1.L.s_obj);
  CHECK(comps.size() == 2);

  for (auto fx : {std::make_pair(symmetric_group(3), 3),
                  std::make_pair(alternating_group(4), 2),
                  std::make_pair(symmetric_group(4), 2),
                  std::make_pair(symmetric_group(5), 5)}) {
    auto ep = make_fixture(fx.first, fx.second);
    Fixture& e = *ep;
    auto subs = all_subgroups(e.gd.gamma, whole_group(e.gd.gamma));
    for (auto& H : subs)
      for (int p_obj = 0; p_obj < e.L.cat.nobj; ++p_obj) {
        auto cs = enumerate_GH(e.L, e.gd, H, p_obj);
        CHECK(int(cs.size()) == e.gd.gamma.order() / int(H.size()));
        // consistency: α,β in the same component iff β∘α^{-1} lies in L_H
        const FiniteGroup& G = e.G;
        for (size_t i = 0; i < cs.size(); ++i)
          for (size_t j = 0; j < cs.size(); ++j)
            for (int al : cs[i])
              for (int be : cs[j]) {
                int th = e.gd.gamma.mul(e.gd.theta_hat[be], e.gd.gamma.inv(e.gd.theta_hat[al]));
                bool inH = sub_contains(H, th);
                CHECK(inH == (i == j));
                (void)G;
              }
      }
  }
}
