#ifndef FUSCOH_RANDOM_SYSTEMS_HPP
#define FUSCOH_RANDOM_SYSTEMS_HPP

#include <random>

#include "coeff.hpp"
#include "sparse.hpp"

namespace fuscoh {

inline Mat random_invertible(std::mt19937_64& rng, int n, int p) {
  for (;;) {
    Mat m(n, n);
    for (auto& x : m.a) x = uint8_t(rng() % p);
    if (mat_rank(m, p) == n) return m;
  }
}

/* A random coefficient system on L_H: direct sum of a constant system and a
   restricted permutation system, conjugated by random per-object basis changes. */
inline CoefficientSystem random_system(const LinkingSystem& L, const Subsystem& sub,
                                       const GammaData& gd, std::mt19937_64& rng) {
  int p = L.F->p;
  const Category& C = sub.LH.cat;
  int d_const = 1 + int(rng() % 2);
  auto subsK = all_subgroups(gd.gamma, whole_group(gd.gamma));
  const Sub& K = subsK[rng() % subsK.size()];
  CoefficientSystem perm = permutation_system(L, gd, K, p);
  CoefficientSystem permH = restrict_system(perm, sub);

  CoefficientSystem N;
  N.C = &C;
  N.p = p;
  N.dim.resize(C.nobj);
  for (int c = 0; c < C.nobj; ++c) N.dim[c] = d_const + permH.dim[c];
  std::vector<Mat> B(C.nobj), Binv(C.nobj);
  for (int c = 0; c < C.nobj; ++c) {
    B[c] = random_invertible(rng, N.dim[c], p);
    Binv[c] = mat_inverse(B[c], p);
  }
  N.mat.resize(C.nmor());
  for (int f = 0; f < C.nmor(); ++f) {
    int a = C.msrc[f], b = C.mtgt[f];
    Mat m(N.dim[b], N.dim[a]);
    for (int i = 0; i < d_const; ++i) m.at(i, i) = 1;
    const Mat& pm = permH.mat[f];
    for (int i = 0; i < pm.rows; ++i)
      for (int j = 0; j < pm.cols; ++j) m.at(d_const + i, d_const + j) = pm.at(i, j);
    N.mat[f] = mat_mul(B[b], mat_mul(m, Binv[a], p), p);
  }
  N.finalize();
  return N;
}

/* Short exact sequence 0 -> A -> B -> C -> 0 of systems on one category. */
struct ShortExactSequence {
  std::unique_ptr<CoefficientSystem> A, B, C;
  NaturalTransformation i, q;
};

/* Builds the subfunctor V of N generated by random vectors, and the SES
   0 -> V -> N -> N/V -> 0. */
inline ShortExactSequence random_ses(const LinkingSystem&, CoefficientSystem N,
                                     std::mt19937_64& rng) {
  int p = N.p;
  const Category& C = *N.C;
  std::vector<RefDense> span;
  for (int c = 0; c < C.nobj; ++c) span.emplace_back(p, N.dim[c]);
  int nseeds = 1 + int(rng() % 2);
  for (int s = 0; s < nseeds; ++s) {
    int c = int(rng() % C.nobj);
    Vec v(N.dim[c]);
    for (auto& x : v) x = uint8_t(rng() % p);
    span[c].add(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int f = 0; f < C.nmor(); ++f) {
      int a = C.msrc[f], b = C.mtgt[f];
      for (int r = 0; r < span[a].rank(); ++r)
        if (span[b].add(mat_apply(N.mat[f], span[a].row(r), p))) changed = true;
    }
  }

  ShortExactSequence S;
  S.B = std::make_unique<CoefficientSystem>(std::move(N));
  CoefficientSystem& BB = *S.B;
  S.A = std::make_unique<CoefficientSystem>();
  S.C = std::make_unique<CoefficientSystem>();
  CoefficientSystem& A = *S.A;
  CoefficientSystem& Q = *S.C;
  A.C = &C;
  Q.C = &C;
  A.p = p;
  Q.p = p;
  A.dim.resize(C.nobj);
  Q.dim.resize(C.nobj);
  S.i.src = &A;
  S.i.tgt = &BB;
  S.q.src = &BB;
  S.q.tgt = &Q;
  S.i.at.resize(C.nobj);
  S.q.at.resize(C.nobj);
  std::vector<std::vector<int>> freec(C.nobj);
  for (int c = 0; c < C.nobj; ++c) {
    int dv = span[c].rank();
    int dn = BB.dim[c];
    A.dim[c] = dv;
    freec[c] = span[c].free_columns();
    Q.dim[c] = int(freec[c].size());
    Mat inc(dn, dv);
    for (int j = 0; j < dv; ++j)
      for (int i = 0; i < dn; ++i) inc.at(i, j) = span[c].row(j)[i];
    S.i.at[c] = std::move(inc);
    Mat qm(Q.dim[c], dn);
    for (int j = 0; j < dn; ++j) {
      Vec e(dn, 0);
      e[j] = 1;
      span[c].reduce(e);
      for (int k = 0; k < Q.dim[c]; ++k) qm.at(k, j) = e[freec[c][k]];
    }
    S.q.at[c] = std::move(qm);
  }
  // functor matrices of A and Q
  A.mat.resize(C.nmor());
  Q.mat.resize(C.nmor());
  for (int f = 0; f < C.nmor(); ++f) {
    int a = C.msrc[f], b = C.mtgt[f];
    Mat am(A.dim[b], A.dim[a]);
    for (int j = 0; j < A.dim[a]; ++j) {
      Vec coef = span[b].express(mat_apply(BB.mat[f], span[a].row(j), p));
      for (int i = 0; i < A.dim[b]; ++i) am.at(i, j) = coef[i];
    }
    A.mat[f] = std::move(am);
    Mat qm(Q.dim[b], Q.dim[a]);
    for (int j = 0; j < Q.dim[a]; ++j) {
      Vec e(BB.dim[a], 0);
      e[freec[a][j]] = 1;  // section of q at the source
      Vec w = mat_apply(BB.mat[f], e, p);
      Vec img = mat_apply(S.q.at[b], w, p);
      for (int i = 0; i < Q.dim[b]; ++i) qm.at(i, j) = img[i];
    }
    Q.mat[f] = std::move(qm);
  }
  A.finalize();
  Q.finalize();
  S.i.check();
  S.q.check();
  check_ses(S.i, S.q);
  return S;
}

} // namespace fuscoh

#endif
