#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "fuscoh/random_systems.hpp"

using namespace fuscoh;

TEST_CASE("constant and permutation systems") {
  auto e1 = fixture_e1();
  CoefficientSystem one = constant_system(e1->L.cat, 3, 1);
  CHECK(one.locally_constant);
  for (const Mat& m : one.mat) CHECK(m == Mat::identity(1));

  CoefficientSystem perm = permutation_system(e1->L, e1->gd, {0}, 3);
  CHECK(perm.locally_constant);
  CHECK(perm.dim[0] == 2);
  bool found_swap = false;
  Mat swap(2, 2);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  for (const Mat& m : perm.mat) found_swap |= (m == swap);
  CHECK(found_swap);

  CoefficientSystem full = permutation_system(e1->L, e1->gd, whole_group(e1->gd.gamma), 3);
  CHECK(full.dim[0] == 1);
  for (const Mat& m : full.mat) CHECK(m == Mat::identity(1));
}

TEST_CASE("restriction of systems") {
  auto e4 = fixture_e4();
  Subsystem full = build_p_prime_subsystem(e4->L, e4->gd, whole_group(e4->gd.gamma));
  CoefficientSystem perm = permutation_system(e4->L, e4->gd, {0}, 5);
  CoefficientSystem r = restrict_system(perm, full);
  CHECK(r.dim == perm.dim);
  for (int f = 0; f < full.LH.cat.nmor(); ++f) CHECK(r.mat[f] == perm.mat[full.to_parent[f]]);

  CoefficientSystem c = restrict_system(constant_system(e4->L.cat, 5, 2), full);
  for (const Mat& m : c.mat) CHECK(m == Mat::identity(2));
}

TEST_CASE("Kan extension along H=Gamma is the identity") {
  auto e1 = fixture_e1();
  Subsystem full = build_p_prime_subsystem(e1->L, e1->gd, whole_group(e1->gd.gamma));
  Section sec = make_section(e1->L, e1->gd, whole_group(e1->gd.gamma));
  CoefficientSystem M = permutation_system(e1->L, e1->gd, {0}, 3);
  CoefficientSystem MH = restrict_system(M, full);
  KanExtension K = right_kan_extension(MH, e1->L, full, e1->gd, sec);
  CHECK(K.R.dim == M.dim);
  for (int f = 0; f < e1->L.cat.nmor(); ++f) CHECK(K.R.mat[f] == M.mat[f]);
  NaturalTransformation T = pre_transfer(M, K, e1->L);
  NaturalTransformation D = unit_delta(M, K, e1->L);
  for (int c = 0; c < e1->L.cat.nobj; ++c) {
    CHECK(T.at[c] == Mat::identity(M.dim[c]));
    CHECK(D.at[c] == Mat::identity(M.dim[c]));
  }
}

TEST_CASE("Kan extension of the constant system is the permutation system") {
  std::vector<std::unique_ptr<Fixture>> fxs;
  fxs.push_back(fixture_e1());
  fxs.push_back(fixture_e2());
  fxs.push_back(fixture_e4());
  for (auto& fx : fxs) {
    auto subs = all_subgroups(fx->gd.gamma, whole_group(fx->gd.gamma));
    for (const Sub& H : subs) {
      Subsystem sub = build_p_prime_subsystem(fx->L, fx->gd, H);
      Section sec = make_section(fx->L, fx->gd, H);
      CoefficientSystem MH = constant_system(sub.LH.cat, fx->F.p, 1);
      KanExtension K = right_kan_extension(MH, fx->L, sub, fx->gd, sec);
      CoefficientSystem perm = permutation_system(fx->L, fx->gd, H, fx->F.p);
      CHECK(K.R.dim == perm.dim);
      for (int f = 0; f < fx->L.cat.nmor(); ++f) CHECK(K.R.mat[f] == perm.mat[f]);
    }
  }
}

TEST_CASE("PreTr composed with the unit is multiplication by the index") {
  std::vector<std::unique_ptr<Fixture>> fxs;
  fxs.push_back(fixture_e1());
  fxs.push_back(fixture_e2());
  fxs.push_back(fixture_e4());
  for (auto& fx : fxs) {
    auto subs = all_subgroups(fx->gd.gamma, whole_group(fx->gd.gamma));
    for (const Sub& H : subs) {
      Subsystem sub = build_p_prime_subsystem(fx->L, fx->gd, H);
      Section sec = make_section(fx->L, fx->gd, H);
      int index = fx->gd.gamma.order() / int(H.size());
      for (int which = 0; which < 2; ++which) {
        CoefficientSystem M = which == 0 ? constant_system(fx->L.cat, fx->F.p, 2)
                                         : permutation_system(fx->L, fx->gd, {0}, fx->F.p);
        CoefficientSystem MH = restrict_system(M, sub);
        KanExtension K = right_kan_extension(MH, fx->L, sub, fx->gd, sec);
        NaturalTransformation T = pre_transfer(M, K, fx->L);
        NaturalTransformation D = unit_delta(M, K, fx->L);
        for (int c = 0; c < fx->L.cat.nobj; ++c) {
          Mat prod = mat_mul(T.at[c], D.at[c], fx->F.p);
          Mat want = mat_scale(Mat::identity(M.dim[c]), uint8_t(index % fx->F.p), fx->F.p);
          CHECK(prod == want);
        }
      }
    }
  }
}

TEST_CASE("unit delta of the trivial system is the diagonal embedding") {
  auto e1 = fixture_e1();
  Subsystem sub = build_p_prime_subsystem(e1->L, e1->gd, {0});
  Section sec = make_section(e1->L, e1->gd, {0});
  CoefficientSystem M = constant_system(e1->L.cat, 3, 1);
  CoefficientSystem MH = restrict_system(M, sub);
  KanExtension K = right_kan_extension(MH, e1->L, sub, e1->gd, sec);
  CHECK(K.R.dim[0] == 2);
  NaturalTransformation D = unit_delta(M, K, e1->L);
  Mat want(2, 1);
  want.at(0, 0) = want.at(1, 0) = 1;
  CHECK(D.at[0] == want);
}

TEST_CASE("PreTr is section independent via the change-of-basis of the Kan blocks") {
  auto e4 = fixture_e4();
  auto subs = all_subgroups(e4->gd.gamma, whole_group(e4->gd.gamma));
  for (const Sub& H : subs) {
    Subsystem sub = build_p_prime_subsystem(e4->L, e4->gd, H);
    Section sc = make_section(e4->L, e4->gd, H);
    Section sr = make_random_section(e4->L, e4->gd, H, 1234);
    CoefficientSystem M = permutation_system(e4->L, e4->gd, {0}, 5);
    CoefficientSystem MH = restrict_system(M, sub);
    KanExtension Kc = right_kan_extension(MH, e4->L, sub, e4->gd, sc);
    KanExtension Kr = right_kan_extension(MH, e4->L, sub, e4->gd, sr);
    NaturalTransformation Tc = pre_transfer(M, Kc, e4->L);
    NaturalTransformation Tr = pre_transfer(M, Kr, e4->L);
    // change of basis Psi: blocks M(tau_t^{-1}∘sigma_t|) mapping Kc.R -> Kr.R
    const FiniteGroup& G = e4->G;
    NaturalTransformation Psi;
    Psi.src = &Kc.R;
    Psi.tgt = &Kr.R;
    Psi.at.resize(e4->L.cat.nobj);
    for (int c = 0; c < e4->L.cat.nobj; ++c) {
      Mat m(Kr.R.dim[c], Kc.R.dim[c]);
      for (int t = 0; t < sc.cosets.count(); ++t) {
        int rep = G.mul(G.inv(e4->L.rep[sr.sigma[t]]), e4->L.rep[sc.sigma[t]]);
        int mor = sub.LH.find_morphism(Kc.bobj[c][t], Kr.bobj[c][t], rep);
        REQUIRE(mor >= 0);
        const Mat& blk = MH.mat[mor];
        for (int i = 0; i < blk.rows; ++i)
          for (int j = 0; j < blk.cols; ++j)
            m.at(Kr.boff[c][t] + i, Kc.boff[c][t] + j) = blk.at(i, j);
      }
      Psi.at[c] = std::move(m);
    }
    Psi.check();  // natural isomorphism between the two Kan extensions
    for (int c = 0; c < e4->L.cat.nobj; ++c)
      CHECK(mat_mul(Tr.at[c], Psi.at[c], 5) == Tc.at[c]);
  }
}

TEST_CASE("exactness probe on hand-built and random short exact sequences") {
  std::vector<std::unique_ptr<Fixture>> fxs;
  fxs.push_back(fixture_e1());
  fxs.push_back(fixture_e4());
  for (auto& fx : fxs) {
    auto subs = all_subgroups(fx->gd.gamma, whole_group(fx->gd.gamma));
    for (const Sub& H : subs) {
      Subsystem sub = build_p_prime_subsystem(fx->L, fx->gd, H);
      Section sec = make_section(fx->L, fx->gd, H);
      // constant 0 -> F_p -> F_p^2 -> F_p -> 0
      CoefficientSystem A = constant_system(sub.LH.cat, fx->F.p, 1);
      CoefficientSystem B = constant_system(sub.LH.cat, fx->F.p, 2);
      CoefficientSystem Q = constant_system(sub.LH.cat, fx->F.p, 1);
      NaturalTransformation i, q;
      i.src = &A;
      i.tgt = &B;
      q.src = &B;
      q.tgt = &Q;
      Mat im(2, 1), qm(1, 2);
      im.at(0, 0) = 1;
      qm.at(0, 1) = 1;
      i.at.assign(sub.LH.cat.nobj, im);
      q.at.assign(sub.LH.cat.nobj, qm);
      i.check();
      q.check();
      exactness_probe(i, q, fx->L, sub, fx->gd, sec);

      // seeded random subfunctor sequences
      for (uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(seed);
        CoefficientSystem N = random_system(fx->L, sub, fx->gd, rng);
        ShortExactSequence ses = random_ses(fx->L, std::move(N), rng);
        exactness_probe(ses.i, ses.q, fx->L, sub, fx->gd, sec);
      }
    }
  }
}
