#ifndef FUSCOH_CATALG_HPP
#define FUSCOH_CATALG_HPP

#include "nerve.hpp"
#include "radical.hpp"

namespace fuscoh {

struct ResolutionCapExceeded : std::runtime_error {
  ResolutionCapExceeded() : std::runtime_error("resolution rank exceeds configured cap") {}
};

/* The category algebra F_p[C]: basis = morphisms, product g*f = g∘f when
   composable and 0 otherwise; unit = sum of identities.  Coefficient systems
   on C are exactly the unital modules, and higher limits are Ext groups from
   the constant module — the same groups the nerve cochain complex computes.
   This path is cheap (all spaces have dimension |Mor(C)|·rank), so it serves
   as the workhorse for cohomology dimensions, with the nerve echelon path as
   an independent cross-check at small sizes. */
struct CatAlgebra {
  const Category* C = nullptr;
  int p = 0;
  int nb = 0;  // basis size = number of morphisms

  CatAlgebra() = default;
  CatAlgebra(const Category& c, int prime) : C(&c), p(prime), nb(c.nmor()) {}

  int mul(int g, int f) const {  // basis product, -1 for zero
    return C->mtgt[f] == C->msrc[g] ? C->compose(g, f) : -1;
  }
};

/* A finite-dimensional module over the category algebra, given by the action
   matrix of every basis morphism.  Functor modules place M(src f) -> M(tgt f)
   blocks; vectors are flattened over the per-object blocks. */
struct CatModule {
  int D = 0;
  std::vector<int64_t> obj_off;  // per object (+ sentinel)
  std::vector<Mat> act;          // per morphism: D x D

  static CatModule of_system(const CoefficientSystem& M) {
    const Category& C = *M.C;
    CatModule m;
    m.obj_off.assign(size_t(C.nobj) + 1, 0);
    for (int c = 0; c < C.nobj; ++c) m.obj_off[c + 1] = m.obj_off[c] + M.dim[c];
    m.D = int(m.obj_off[C.nobj]);
    m.act.assign(C.nmor(), Mat());
    for (int f = 0; f < C.nmor(); ++f) {
      Mat a(m.D, m.D);
      const Mat& blk = M.mat[f];
      int64_t ro = m.obj_off[C.mtgt[f]], co = m.obj_off[C.msrc[f]];
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j) a.at(int(ro) + i, int(co) + j) = blk.at(i, j);
      m.act[f] = std::move(a);
    }
    return m;
  }
};

/* Free resolution ... -> F_1 -> F_0 = A -> k -> 0 of the constant module over
   the category algebra, built degree by degree: exact kernels, then a greedy
   minimal-ish set of module generators of each kernel. */
struct CatResolution {
  CatAlgebra A;
  int rank_cap = 512;
  std::vector<int> rk;               // rk[i] = rank of F_i (rk[0] = 1)
  std::vector<std::vector<Vec>> dg;  // dg[i] (i>=1): image of each F_i generator in F_{i-1}
  std::vector<SparseVec> rad;        // basis of rad F_p[C], for minimal covers

  explicit CatResolution(const Category& C, int p) : A(C, p), rad(category_radical(C, p)) {
    rk.push_back(1);
    dg.push_back({});
  }

  int64_t fdim(int i) const { return int64_t(A.nb) * rk[i]; }

  /* Left action of basis morphism b on a free-module vector of rank r. */
  Vec act(int b, const Vec& v, int r) const {
    Vec out(size_t(A.nb) * r, 0);
    for (int k = 0; k < r; ++k)
      for (int f = 0; f < A.nb; ++f) {
        uint8_t x = v[size_t(k) * A.nb + f];
        if (!x) continue;
        int bf = A.mul(b, f);
        if (bf >= 0) out[size_t(k) * A.nb + bf] = fp_add(out[size_t(k) * A.nb + bf], x, A.p);
      }
    return out;
  }

  /* Augmentation F_0 = A -> constant module (one slot per object). */
  Vec aug(const Vec& v) const {
    Vec out(A.C->nobj, 0);
    for (int f = 0; f < A.nb; ++f)
      if (v[f]) out[A.C->mtgt[f]] = fp_add(out[A.C->mtgt[f]], v[f], A.p);
    return out;
  }

  /* F_p matrix column of the map F_i -> F_{i-1} (or the augmentation for i=0)
     at free basis element (k, f). */
  Vec dcol(int i, int k, int f) const {
    Vec e(fdim(i), 0);
    e[size_t(k) * A.nb + f] = 1;
    return dapply(i, e);
  }

  Vec dapply(int i, const Vec& v) const {
    if (i == 0) return aug(v);
    Vec out(fdim(i - 1), 0);
    for (int k = 0; k < rk[i]; ++k)
      for (int f = 0; f < A.nb; ++f) {
        uint8_t x = v[size_t(k) * A.nb + f];
        if (!x) continue;
        Vec t = act(f, dg[i][k], rk[i - 1]);
        for (size_t j = 0; j < t.size(); ++j)
          if (t[j]) out[j] = fp_add(out[j], fp_mul(x, t[j], A.p), A.p);
      }
    return out;
  }

  /* Left action of an algebra element (coefficients over morphisms). */
  Vec act_elem(const SparseVec& j, const Vec& v, int r) const {
    Vec out(size_t(A.nb) * r, 0);
    for (int k = 0; k < r; ++k)
      for (int f = 0; f < A.nb; ++f) {
        uint8_t x = v[size_t(k) * A.nb + f];
        if (!x) continue;
        for (auto& [g, cg] : j) {
          int gf = A.mul(g, f);
          if (gf >= 0)
            out[size_t(k) * A.nb + gf] =
                fp_add(out[size_t(k) * A.nb + gf], fp_mul(cg, x, A.p), A.p);
        }
      }
    return out;
  }

  /* A minimal set of module generators of the kernel subspace: lifts of a
     basis of K / rad·K (Nakayama).  Generation is certified directly at the
     end, so correctness does not rest on the radical computation. */
  std::vector<Vec> minimal_generators(const std::vector<Vec>& ker, int r) {
    if (ker.empty()) return {};
    int64_t cols = int64_t(A.nb) * r;
    // irredundant generating sequence as a seed (rad·K is generated by
    // radical elements applied to any generating set)
    EchelonAny span(A.p, cols);
    std::vector<const Vec*> seed;
    for (const Vec& v : ker) {
      if (span.in_span(v)) continue;
      seed.push_back(&v);
      for (int b = 0; b < A.nb; ++b) span.add(act(b, v, r));
    }
    EchelonAny jk(A.p, cols);
    for (const SparseVec& j : rad)
      for (const Vec* g : seed) jk.add(act_elem(j, *g, r));
    std::vector<Vec> gens;
    for (const Vec& v : ker)
      if (jk.add(v)) gens.push_back(v);
    // certify that translates of the chosen generators span the kernel
    EchelonAny chk(A.p, cols);
    for (const Vec& g : gens)
      for (int b = 0; b < A.nb; ++b) chk.add(act(b, g, r));
    for (const Vec& v : ker)
      if (!chk.in_span(v)) {
        gens.push_back(v);
        for (int b = 0; b < A.nb; ++b) chk.add(act(b, v, r));
      }
    if (int(gens.size()) > rank_cap) throw ResolutionCapExceeded();
    return gens;
  }

  void extend_to(int top) {
    while (int(rk.size()) <= top) {
      int i = int(rk.size()) - 1;  // extend past F_i
      // kernel of D_i as an F_p matrix
      int64_t cols = fdim(i);
      int64_t rows = i == 0 ? A.C->nobj : fdim(i - 1);
      Mat D{int(rows), int(cols)};
      for (int k = 0; k < rk[i]; ++k)
        for (int f = 0; f < A.nb; ++f) {
          Vec c = dcol(i, k, f);
          for (int64_t r = 0; r < rows; ++r) D.at(int(r), int(size_t(k) * A.nb + f)) = c[r];
        }
      std::vector<Vec> ker = mat_kernel(D, A.p);
      std::vector<Vec> gens = minimal_generators(ker, rk[i]);
      // exactness guard: every generator maps to 0 one step down
      for (const Vec& v : gens) assert(vec_is_zero(dapply(i, v)));
      rk.push_back(int(gens.size()));
      dg.push_back(std::move(gens));
    }
  }
};

/* Ext^*(constant, M) over the category algebra: cochain spaces M^{rk[i]} with
   differential given by the resolution matrices acting through the module. */
struct CatCohomology {
  std::vector<int> h;            // dims, degrees 0..maxdeg
  std::vector<Mat> delta;        // delta^i: M^{rk[i]} -> M^{rk[i+1]}, i = 0..maxdeg
  std::vector<std::vector<Vec>> reps;  // per degree: basis of Ext classes as cocycles in M^{rk[i]}
};

inline Mat ext_delta(const CatResolution& R, const CatModule& M, int i) {
  int p = R.A.p;
  Mat d(M.D * R.rk[i + 1], M.D * R.rk[i]);
  for (int j = 0; j < R.rk[i + 1]; ++j) {
    const Vec& w = R.dg[i + 1][j];
    for (int k = 0; k < R.rk[i]; ++k)
      for (int f = 0; f < R.A.nb; ++f) {
        uint8_t c = w[size_t(k) * R.A.nb + f];
        if (!c) continue;
        const Mat& a = M.act[f];
        for (int r = 0; r < M.D; ++r)
          for (int s = 0; s < M.D; ++s)
            if (a.at(r, s))
              d.at(j * M.D + r, k * M.D + s) =
                  fp_add(d.at(j * M.D + r, k * M.D + s), fp_mul(c, a.at(r, s), p), p);
      }
  }
  return d;
}

inline CatCohomology cat_cohomology(CatResolution& R, const CatModule& M, int maxdeg) {
  R.extend_to(maxdeg + 1);
  int p = R.A.p;
  CatCohomology out;
  for (int i = 0; i <= maxdeg; ++i) out.delta.push_back(ext_delta(R, M, i));
  for (int i = 0; i <= maxdeg; ++i) {
    // image of delta^{i-1} with tag columns, then kernel basis of delta^i
    RefDense cls(p, out.delta[i].cols);
    if (i > 0) {
      const Mat& dm = out.delta[i - 1];
      for (int j = 0; j < dm.cols; ++j) {
        Vec c(dm.rows);
        for (int r = 0; r < dm.rows; ++r) c[r] = dm.at(r, j);
        cls.add(std::move(c));
      }
    }
    std::vector<Vec> ker = mat_kernel(out.delta[i], p);
    std::vector<Vec> reps;
    for (Vec& v : ker)
      if (cls.add(v)) reps.push_back(v);
    out.h.push_back(int(reps.size()));
    out.reps.push_back(std::move(reps));
  }
  return out;
}

} // namespace fuscoh

#endif
