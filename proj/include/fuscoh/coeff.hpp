#ifndef FUSCOH_COEFF_HPP
#define FUSCOH_COEFF_HPP

#include "gamma.hpp"

namespace fuscoh {

struct FunctorialityFailure : std::runtime_error {
  explicit FunctorialityFailure(const std::string& w) : std::runtime_error(w) {}
};
struct NotLocallyConstant : std::runtime_error {
  NotLocallyConstant() : std::runtime_error("coefficient system is not locally constant") {}
};

/* Covariant functor C -> F_p-vector spaces, with a matrix for every morphism. */
struct CoefficientSystem {
  const Category* C = nullptr;
  int p = 0;
  std::vector<int> dim;   // per object
  std::vector<Mat> mat;   // per morphism
  bool locally_constant = false;

  void finalize() {
    for (int f = 0; f < C->nmor(); ++f) {
      if (mat[f].rows != dim[C->mtgt[f]] || mat[f].cols != dim[C->msrc[f]])
        throw FunctorialityFailure("matrix shape mismatch");
      if (C->is_id(f) && mat[f] != Mat::identity(dim[C->msrc[f]]))
        throw FunctorialityFailure("identity morphism not mapped to identity");
    }
    for (int f = 0; f < C->nmor(); ++f)
      for (int g = 0; g < C->nmor(); ++g) {
        if (C->mtgt[f] != C->msrc[g]) continue;
        if (mat[C->compose(g, f)] != mat_mul(mat[g], mat[f], p))
          throw FunctorialityFailure("functoriality failed");
      }
    locally_constant = true;
    for (int f = 0; f < C->nmor(); ++f) {
      if (mat[f].rows != mat[f].cols || mat_rank(mat[f], p) != mat[f].rows) {
        locally_constant = false;
        break;
      }
    }
  }
};

inline CoefficientSystem constant_system(const Category& C, int p, int d) {
  CoefficientSystem M;
  M.C = &C;
  M.p = p;
  M.dim.assign(C.nobj, d);
  M.mat.assign(C.nmor(), Mat::identity(d));
  M.finalize();
  return M;
}

/* F_p[Γ/K] with morphism f acting by left translation by Θ̂(f). */
inline CoefficientSystem permutation_system(const LinkingSystem& L, const GammaData& gd,
                                            const Sub& K, int p) {
  Cosets cos = left_cosets(gd.gamma, K);
  int d = cos.count();
  CoefficientSystem M;
  M.C = &L.cat;
  M.p = p;
  M.dim.assign(L.cat.nobj, d);
  M.mat.assign(L.cat.nmor(), Mat());
  for (int f = 0; f < L.cat.nmor(); ++f) {
    Mat m(d, d);
    for (int c = 0; c < d; ++c)
      m.at(cos.coset_of[gd.gamma.mul(gd.theta_hat[f], cos.reps[c])], c) = 1;
    M.mat[f] = std::move(m);
  }
  M.finalize();
  return M;
}

/* Restriction along the inclusion L_H ⊂ L. */
inline CoefficientSystem restrict_system(const CoefficientSystem& M, const Subsystem& sub) {
  CoefficientSystem R;
  R.C = &sub.LH.cat;
  R.p = M.p;
  R.dim = M.dim;  // same objects
  R.mat.resize(sub.LH.cat.nmor());
  for (int f = 0; f < sub.LH.cat.nmor(); ++f) R.mat[f] = M.mat[sub.to_parent[f]];
  R.finalize();
  return R;
}

struct NaturalTransformation {
  const CoefficientSystem* src = nullptr;
  const CoefficientSystem* tgt = nullptr;
  std::vector<Mat> at;  // per object

  void check() const {
    const Category& C = *src->C;
    assert(tgt->C == &C);
    for (int f = 0; f < C.nmor(); ++f) {
      Mat lhs = mat_mul(tgt->mat[f], at[C.msrc[f]], src->p);
      Mat rhs = mat_mul(at[C.mtgt[f]], src->mat[f], src->p);
      if (lhs != rhs) throw FunctorialityFailure("naturality square failed");
    }
  }
};

/* Right Kan extension along ι: L_H -> L via the explicit coset-block formula:
   R(P) = ⊕_{t ∈ Γ/H} M(P^{σ_t^{-1}}), and the (t, Θ̂(φ)^{-1}t)-block of R(φ)
   is M(σ_t^{-1}∘φ∘σ_{t'} restricted). */
struct KanExtension {
  CoefficientSystem R;                  // system on L
  std::vector<std::vector<int>> bobj;   // [L object][coset] = L object index of P^{σ_t^{-1}}
  std::vector<std::vector<int>> boff;   // [L object][coset] = column offset of the block
  Section sec;
};

inline KanExtension right_kan_extension(const CoefficientSystem& M, const LinkingSystem& L,
                                        const Subsystem& sub, const GammaData& gd,
                                        const Section& sec) {
  const FiniteGroup& G = L.G();
  const LinkingSystem& LH = sub.LH;
  assert(M.C == &LH.cat);
  int nc = sec.cosets.count();
  KanExtension K;
  K.sec = sec;
  K.R.C = &L.cat;
  K.R.p = M.p;
  K.bobj.assign(L.cat.nobj, std::vector<int>(nc));
  K.boff.assign(L.cat.nobj, std::vector<int>(nc));
  K.R.dim.assign(L.cat.nobj, 0);
  for (int c = 0; c < L.cat.nobj; ++c) {
    int off = 0;
    for (int t = 0; t < nc; ++t) {
      int st = sec.sigma[t];
      Sub img = sub_conjugate(G, G.inv(L.rep[st]), L.grp(c));
      int cimg = L.obj_of_fusion(L.F->obj_index(img));
      K.bobj[c][t] = cimg;
      K.boff[c][t] = off;
      off += M.dim[cimg];
    }
    K.R.dim[c] = off;
  }
  K.R.mat.assign(L.cat.nmor(), Mat());
  for (int f = 0; f < L.cat.nmor(); ++f) {
    int a = L.cat.msrc[f], b = L.cat.mtgt[f];
    Mat m(K.R.dim[b], K.R.dim[a]);
    int thinv = gd.gamma.inv(gd.theta_hat[f]);
    for (int t = 0; t < nc; ++t) {
      int t2 = sec.cosets.coset_of[gd.gamma.mul(thinv, sec.cosets.reps[t])];
      int aobj = K.bobj[a][t2], bobj = K.bobj[b][t];
      int rep = G.mul(G.inv(L.rep[sec.sigma[t]]), G.mul(L.rep[f], L.rep[sec.sigma[t2]]));
      int mor = LH.find_morphism(aobj, bobj, rep);
      assert(mor >= 0);
      const Mat& blk = M.mat[mor];
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j)
          m.at(K.boff[b][t] + i, K.boff[a][t2] + j) = blk.at(i, j);
    }
    K.R.mat[f] = std::move(m);
  }
  K.R.finalize();
  return K;
}

/* Pre-Tr: R_ι(ι*M) -> M, (x_t) ↦ Σ_t M(σ_t|)(x_t).  `M` lives on L and `K`
   must be the Kan extension of its restriction, built with the same section. */
inline NaturalTransformation pre_transfer(const CoefficientSystem& M, const KanExtension& K,
                                          const LinkingSystem& L) {
  NaturalTransformation T;
  T.src = &K.R;
  T.tgt = &M;
  T.at.resize(L.cat.nobj);
  int nc = K.sec.cosets.count();
  for (int c = 0; c < L.cat.nobj; ++c) {
    Mat m(M.dim[c], K.R.dim[c]);
    for (int t = 0; t < nc; ++t) {
      int restr = L.restrict(K.sec.sigma[t], K.bobj[c][t], c);
      const Mat& blk = M.mat[restr];
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j) m.at(i, K.boff[c][t] + j) = blk.at(i, j);
    }
    T.at[c] = std::move(m);
  }
  T.check();
  return T;
}

/* Unit δ_M: M -> R_ι(ι*M), x ↦ {M(σ_t|)^{-1}(x)}_t. */
inline NaturalTransformation unit_delta(const CoefficientSystem& M, const KanExtension& K,
                                        const LinkingSystem& L) {
  NaturalTransformation D;
  D.src = &M;
  D.tgt = &K.R;
  D.at.resize(L.cat.nobj);
  int nc = K.sec.cosets.count();
  for (int c = 0; c < L.cat.nobj; ++c) {
    Mat m(K.R.dim[c], M.dim[c]);
    for (int t = 0; t < nc; ++t) {
      int restr = L.restrict(K.sec.sigma[t], K.bobj[c][t], c);
      Mat blk = mat_inverse(M.mat[restr], M.p);
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j) m.at(K.boff[c][t] + i, j) = blk.at(i, j);
    }
    D.at[c] = std::move(m);
  }
  D.check();
  return D;
}

/* Apply R_ι to a natural transformation between systems on L_H: blockwise. */
inline NaturalTransformation kan_of_transformation(const NaturalTransformation& eta,
                                                   const KanExtension& KA,
                                                   const KanExtension& KB,
                                                   const LinkingSystem& L) {
  NaturalTransformation out;
  out.src = &KA.R;
  out.tgt = &KB.R;
  out.at.resize(L.cat.nobj);
  int nc = KA.sec.cosets.count();
  for (int c = 0; c < L.cat.nobj; ++c) {
    Mat m(KB.R.dim[c], KA.R.dim[c]);
    for (int t = 0; t < nc; ++t) {
      const Mat& blk = eta.at[KA.bobj[c][t]];
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j)
          m.at(KB.boff[c][t] + i, KA.boff[c][t] + j) = blk.at(i, j);
    }
    out.at[c] = std::move(m);
  }
  out.check();
  return out;
}

struct InputNotExact : std::runtime_error {
  InputNotExact() : std::runtime_error("input sequence is not short exact") {}
};

/* Checks 0 -> A -> B -> C -> 0 objectwise (i injective, q surjective, im i = ker q). */
inline void check_ses(const NaturalTransformation& i, const NaturalTransformation& q) {
  const CoefficientSystem& A = *i.src;
  const CoefficientSystem& B = *i.tgt;
  const CoefficientSystem& Cs = *q.tgt;
  assert(q.src == &B);
  for (int c = 0; c < A.C->nobj; ++c) {
    if (mat_rank(i.at[c], A.p) != A.dim[c]) throw InputNotExact();
    if (mat_rank(q.at[c], A.p) != Cs.dim[c]) throw InputNotExact();
    if (!mat_mul(q.at[c], i.at[c], A.p).is_zero()) throw InputNotExact();
    if (A.dim[c] + Cs.dim[c] != B.dim[c]) throw InputNotExact();
  }
}

/* Applies R_ι to a short exact sequence and re-checks exactness objectwise. */
inline void exactness_probe(const NaturalTransformation& i, const NaturalTransformation& q,
                            const LinkingSystem& L, const Subsystem& sub, const GammaData& gd,
                            const Section& sec) {
  check_ses(i, q);
  KanExtension KA = right_kan_extension(*i.src, L, sub, gd, sec);
  KanExtension KB = right_kan_extension(*i.tgt, L, sub, gd, sec);
  KanExtension KC = right_kan_extension(*q.tgt, L, sub, gd, sec);
  NaturalTransformation Ri = kan_of_transformation(i, KA, KB, L);
  NaturalTransformation Rq = kan_of_transformation(q, KB, KC, L);
  check_ses(Ri, Rq);
}

} // namespace fuscoh

#endif
