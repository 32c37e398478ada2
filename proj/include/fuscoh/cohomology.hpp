#ifndef FUSCOH_COHOMOLOGY_HPP
#define FUSCOH_COHOMOLOGY_HPP

#include <memory>

#include "catalg.hpp"

namespace fuscoh {

struct NotACocycle : std::runtime_error {
  NotACocycle() : std::runtime_error("cochain is not a cocycle modulo coboundaries") {}
};

/* Solves D x = y where the columns of D were registered with tag indices;
   column space membership and one solution via tag bookkeeping. */
struct LinSolver {
  int p, nmain, ntag;
  RefDense ref;

  LinSolver(int prime, int64_t main, int64_t tags)
      : p(prime), nmain(int(main)), ntag(int(tags)), ref(prime, int(main + tags)) {}

  void add_column(const Vec& col, int tag) {
    Vec r(size_t(nmain) + ntag, 0);
    std::copy(col.begin(), col.end(), r.begin());
    r[size_t(nmain) + tag] = 1;
    ref.add(std::move(r));
  }

  bool solve(const Vec& y, Vec& x) const {
    Vec r(size_t(nmain) + ntag, 0);
    std::copy(y.begin(), y.end(), r.begin());
    ref.reduce(r);
    for (int i = 0; i < nmain; ++i)
      if (r[i]) return false;
    x.assign(ntag, 0);
    for (int j = 0; j < ntag; ++j) x[j] = fp_neg(r[size_t(nmain) + j], p);
    return true;
  }
};

/* Higher limits of a coefficient system over a finite category.

   Dimensions come from the projective-resolution model over the category
   algebra (cat_cohomology); representatives are transported into the nerve
   cochain model by a comparison chain map from the bar resolution, built
   degree by degree with an explicit linear section of the resolution
   differential.  The nerve echelon path (nerve_ranks) is an independent
   cross-check exercised by the test suite wherever chain counts allow. */
class Cohomology {
public:
  Cohomology(const Category& C, const CoefficientSystem& M, int maxdeg)
      : N(C, M), R(C, M.p), mod(CatModule::of_system(M)), maxdeg_(maxdeg) {
    ext = cat_cohomology(R, mod, maxdeg);
    reps_.resize(size_t(maxdeg) + 1);
    reps_done_.assign(size_t(maxdeg) + 1, false);
  }

  int maxdeg() const { return maxdeg_; }
  const std::vector<int>& dims() const { return ext.h; }
  int dim(int n) const { return ext.h[n]; }
  NerveModel& nerve() { return N; }
  const CoefficientSystem& coeff() const { return *N.M; }

  /* Nerve-cocycle representatives of a basis of H^n. */
  const std::vector<Cochain>& reps(int n) {
    assert(n <= maxdeg_);
    if (!reps_done_[size_t(n)]) {
      reps_[n] = build_reps(n);
      reps_done_[size_t(n)] = true;
    }
    return reps_[n];
  }

  /* Coordinates of the class of a cocycle z in the reps(n) basis. */
  Vec class_coords(int n, const Cochain& z) {
    ClassSpace& cs = ensure_class(n);
    Vec r(size_t(cs.nmain) + cs.ntag, 0);
    std::copy(z.v.begin(), z.v.end(), r.begin());
    cs.ech->reduce(r);
    for (int64_t i = 0; i < cs.nmain; ++i)
      if (r[i]) throw NotACocycle();
    Vec out(cs.ntag, 0);
    for (int j = 0; j < cs.ntag; ++j) out[j] = fp_neg(r[size_t(cs.nmain) + j], N.p());
    return out;
  }

  bool is_coboundary(int n, const Cochain& z) {
    return vec_is_zero(class_coords(n, z));
  }

  /* Cocycle with the given class coordinates. */
  Cochain from_coords(int n, const Vec& coords) {
    const std::vector<Cochain>& rs = reps(n);
    Cochain out = zero_cochain(N, n);
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i])
        for (size_t j = 0; j < out.v.size(); ++j)
          out.v[j] = fp_add(out.v[j], fp_mul(coords[i], rs[i].v[j], N.p()), N.p());
    return out;
  }

private:
  struct ClassSpace {
    int64_t nmain = 0;
    int ntag = 0;
    std::unique_ptr<EchelonAny> ech;
  };

  std::vector<Cochain> build_reps(int n) {
    ensure_kappa(n);
    int p = N.p();
    int D = mod.D;
    std::vector<Cochain> out;
    const ChainBasis& B = N.basis[n];
    for (const Vec& v : ext.reps[n]) {
      Cochain c = zero_cochain(N, n);
      for (int64_t ch = 0; ch < B.count; ++ch) {
        const Vec& w = kappa_[n][ch];
        Vec val(D, 0);
        for (int k = 0; k < R.rk[n]; ++k)
          for (int f = 0; f < R.A.nb; ++f) {
            uint8_t x = w[size_t(k) * R.A.nb + f];
            if (!x) continue;
            const Mat& a = mod.act[f];
            for (int r = 0; r < D; ++r) {
              int acc = 0;
              for (int s = 0; s < D; ++s) acc += int(a.at(r, s)) * v[size_t(k) * D + s];
              val[r] = fp_add(val[r], fp_mul(x, uint8_t(acc % p), p), p);
            }
          }
        int c_obj = B.last[ch];
        int d = N.M->dim[c_obj];
        int64_t o = mod.obj_off[c_obj];
        for (int r = 0; r < D; ++r)
          if (r < o || r >= o + d)
            assert(val[r] == 0);
        for (int r = 0; r < d; ++r) c.v[N.off[n][ch] + r] = val[o + r];
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  void ensure_kappa(int n) {
    if (kappa_.empty()) {
      N.ensure(0);
      std::vector<Vec> k0(C().nobj);
      for (int c = 0; c < C().nobj; ++c) {
        Vec e(R.A.nb, 0);
        e[C().id_of[c]] = 1;
        k0[c] = std::move(e);
      }
      kappa_.push_back(std::move(k0));
    }
    while (int(kappa_.size()) <= n) {
      int m = int(kappa_.size());
      R.extend_to(m);
      LinSolver& sol = solver(m);
      N.ensure(m);
      const ChainBasis& B = N.basis[m];
      std::vector<Vec> km(size_t(B.count));
      std::vector<int32_t> scratch;
      int p = N.p();
      for (int64_t ch = 0; ch < B.count; ++ch) {
        Vec y(R.fdim(m - 1), 0);
        for (int i = 0; i < m; ++i) {
          int64_t fc = N.face(m, ch, i, scratch);
          if (fc < 0) continue;
          const Vec& kv = kappa_[m - 1][fc];
          uint8_t sgn = uint8_t(i % 2 == 0 ? 1 : p - 1);
          for (size_t j = 0; j < y.size(); ++j)
            if (kv[j]) y[j] = fp_add(y[j], fp_mul(sgn, kv[j], p), p);
        }
        int64_t fc = N.face(m, ch, m, scratch);
        if (fc >= 0) {
          int flast = B.tuple(ch)[m - 1];
          Vec t = R.act(flast, kappa_[m - 1][fc], R.rk[m - 1]);
          uint8_t sgn = uint8_t(m % 2 == 0 ? 1 : p - 1);
          for (size_t j = 0; j < y.size(); ++j)
            if (t[j]) y[j] = fp_add(y[j], fp_mul(sgn, t[j], p), p);
        }
        Vec x;
        bool ok = sol.solve(y, x);
        assert(ok && "comparison map: face image not in the differential's image");
        (void)ok;
        // project onto the summand fixed by the identity of the last object
        int c_obj = B.last[ch];
        for (int k = 0; k < R.rk[m]; ++k)
          for (int f = 0; f < R.A.nb; ++f)
            if (C().mtgt[f] != c_obj) x[size_t(k) * R.A.nb + f] = 0;
        km[ch] = std::move(x);
      }
      kappa_.push_back(std::move(km));
    }
  }

  LinSolver& solver(int m) {
    while (int(solvers_.size()) < m) solvers_.push_back(nullptr);
    if (!solvers_[size_t(m) - 1]) {
      R.extend_to(m);
      auto s = std::make_unique<LinSolver>(N.p(), R.fdim(m - 1), R.fdim(m));
      for (int k = 0; k < R.rk[m]; ++k)
        for (int f = 0; f < R.A.nb; ++f)
          s->add_column(R.dcol(m, k, f), int(size_t(k) * R.A.nb + f));
      solvers_[size_t(m) - 1] = std::move(s);
    }
    return *solvers_[size_t(m) - 1];
  }

  ClassSpace& ensure_class(int n) {
    while (int(cls_.size()) <= n) cls_.push_back(nullptr);
    if (!cls_[size_t(n)]) {
      auto cs = std::make_unique<ClassSpace>();
      cs->nmain = N.dim(n);
      cs->ntag = dim(n);
      cs->ech = std::make_unique<EchelonAny>(N.p(), cs->nmain + cs->ntag);
      if (n >= 1) add_coboundary_rows(n, *cs);
      const std::vector<Cochain>& rs = reps(n);
      for (int i = 0; i < int(rs.size()); ++i) {
        Vec r(size_t(cs->nmain) + cs->ntag, 0);
        std::copy(rs[i].v.begin(), rs[i].v.end(), r.begin());
        r[size_t(cs->nmain) + i] = 1;
        bool grew = cs->ech->add(std::move(r));
        assert(grew && "representative dependent modulo coboundaries");
        (void)grew;
      }
      cls_[size_t(n)] = std::move(cs);
    }
    return *cls_[size_t(n)];
  }

  /* Adds the image of d^{n-1} (columns indexed by degree-(n-1) components). */
  void add_coboundary_rows(int n, ClassSpace& cs) {
    N.ensure(n);
    int p = N.p();
    int64_t srcdim = N.dim(n - 1);
    std::vector<SparseVec> cols;
    cols.assign(size_t(srcdim), {});
    const ChainBasis& B = N.basis[n];
    std::vector<int32_t> scratch;
    for (int64_t ch = 0; ch < B.count; ++ch) {
      int d = N.M->dim[B.last[ch]];
      for (int i = 0; i < n; ++i) {
        int64_t fc = N.face(n, ch, i, scratch);
        if (fc < 0) continue;
        uint8_t sgn = uint8_t(i % 2 == 0 ? 1 : p - 1);
        for (int r = 0; r < d; ++r)
          cols[size_t(N.off[n - 1][fc] + r)].emplace_back(int(N.off[n][ch] + r), sgn);
      }
      int64_t fc = N.face(n, ch, n, scratch);
      if (fc >= 0) {
        int flast = B.tuple(ch)[n - 1];
        const Mat& A = N.M->mat[flast];
        uint8_t sgn = uint8_t(n % 2 == 0 ? 1 : p - 1);
        for (int s = 0; s < A.cols; ++s)
          for (int r = 0; r < d; ++r)
            if (A.at(r, s))
              cols[size_t(N.off[n - 1][fc] + s)].emplace_back(int(N.off[n][ch] + r),
                                                              fp_mul(sgn, A.at(r, s), p));
      }
    }
    Vec dense;
    for (auto& col : cols) {
      dense.assign(size_t(cs.nmain) + cs.ntag, 0);
      for (auto& [i, x] : col) dense[i] = fp_add(dense[i], x, p);
      cs.ech->add(std::move(dense));
    }
  }

  const Category& C() const { return *N.C; }

  NerveModel N;
  CatResolution R;
  CatModule mod;
  CatCohomology ext;
  int maxdeg_;
  std::vector<std::vector<Vec>> kappa_;
  std::vector<std::unique_ptr<LinSolver>> solvers_;
  std::vector<std::vector<Cochain>> reps_;
  std::vector<bool> reps_done_;
  std::vector<std::unique_ptr<ClassSpace>> cls_;
};

inline bool is_cocycle(NerveModel& N, const Cochain& c) {
  return vec_is_zero(differential(N, c).v);
}

/* ---------- cup products ---------- */

struct NotAnAlgebra : std::runtime_error {
  NotAnAlgebra() : std::runtime_error("coefficient system is not an algebra system") {}
};

/* Per-object bilinear products mu_c: M(c) ⊗ M(c) -> M(c), respected by every
   morphism matrix. */
struct AlgebraSystem {
  const CoefficientSystem* M = nullptr;
  std::vector<Mat> mu;  // per object: dim x dim^2, column index i*dim+j for e_i⊗e_j

  void check() const {
    const Category& C = *M->C;
    for (int f = 0; f < C.nmor(); ++f) {
      int a = C.msrc[f], b = C.mtgt[f];
      int da = M->dim[a], db = M->dim[b];
      const Mat& A = M->mat[f];
      // M(f)∘mu_a == mu_b∘(M(f)⊗M(f)) on every e_i⊗e_j
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
          Vec prod(da);
          for (int r = 0; r < da; ++r) prod[r] = mu[a].at(r, i * da + j);
          Vec lhs = mat_apply(A, prod, M->p);
          Vec fi(da, 0), fj(da, 0);
          fi[i] = 1;
          fj[j] = 1;
          Vec Fi = mat_apply(A, fi, M->p), Fj = mat_apply(A, fj, M->p);
          Vec rhs(db, 0);
          for (int r = 0; r < db; ++r)
            for (int s = 0; s < db; ++s)
              for (int t = 0; t < db; ++t)
                rhs[r] = fp_add(rhs[r],
                                fp_mul(mu[b].at(r, s * db + t), fp_mul(Fi[s], Fj[t], M->p), M->p),
                                M->p);
          if (lhs != rhs) throw NotAnAlgebra();
        }
    }
  }
};

inline AlgebraSystem constant_algebra(const CoefficientSystem& M) {
  AlgebraSystem A;
  A.M = &M;
  for (int c = 0; c < M.C->nobj; ++c) {
    int d = M.dim[c];
    Mat m(d, d * d);
    for (int i = 0; i < d; ++i) m.at(i, i * d + i) = 1;  // componentwise product
    A.mu.push_back(std::move(m));
  }
  A.check();
  return A;
}

/* Front-face/back-face cup product of cochains valued in an algebra system:
   (x ∪ y)(f_1..f_n) = A(f_n∘..∘f_{k+1})(x(front_k)) · y(back_l). */
inline Cochain cup(NerveModel& N, const AlgebraSystem& A, const Cochain& x, const Cochain& y) {
  assert(A.M == N.M);
  int k = x.deg, l = y.deg, n = k + l;
  int p = N.p();
  N.ensure(n);
  Cochain out = zero_cochain(N, n);
  const ChainBasis& B = N.basis[n];
  const Category& C = *N.C;
  for (int64_t ch = 0; ch < B.count; ++ch) {
    const int32_t* t = B.tuple(ch);
    int mid_obj = k == 0 ? (n == 0 ? int(ch) : C.msrc[t[0]]) : C.mtgt[t[k - 1]];
    int last_obj = B.last[ch];
    int64_t fidx = k == 0 ? mid_obj : N.chain_index(k, t);
    int64_t bidx = l == 0 ? last_obj : N.chain_index(l, t + k);
    assert(fidx >= 0 && bidx >= 0);
    // transport x(front) along the composite of the back morphisms
    int g = C.id_of[mid_obj];
    for (int i = k; i < n; ++i) g = C.compose(t[i], g);
    const uint8_t* xv = x.v.data() + N.off[k][fidx];
    Vec tx(N.M->dim[mid_obj]);
    std::copy(xv, xv + tx.size(), tx.begin());
    Vec txn = mat_apply(N.M->mat[g], tx, p);
    const uint8_t* yv = y.v.data() + N.off[l][bidx];
    int d = N.M->dim[last_obj];
    uint8_t* dst = out.v.data() + N.off[n][ch];
    const Mat& mu = A.mu[last_obj];
    for (int r = 0; r < d; ++r) {
      int acc = 0;
      for (int s = 0; s < d; ++s)
        for (int u = 0; u < d; ++u) acc += int(mu.at(r, s * d + u)) * txn[s] * yv[u];
      dst[r] = uint8_t(acc % p);
    }
  }
  return out;
}

} // namespace fuscoh

#endif
