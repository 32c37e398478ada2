#ifndef FUSCOH_NERVE_HPP
#define FUSCOH_NERVE_HPP

#include <cstdint>

#include "coeff.hpp"
#include "gf2.hpp"
#include "sparse.hpp"

namespace fuscoh {

struct DegreeCapExceeded : std::runtime_error {
  DegreeCapExceeded() : std::runtime_error("chain count exceeds configured cap") {}
};

/* Ordered basis of nondegenerate (identity-free) nerve chains in one degree.
   A degree-n chain (n >= 1) is a composable tuple (f_1, ..., f_n) of non-identity
   morphisms; a degree-0 chain is an object.  Chains are stored flattened in
   lexicographic tuple order. */
struct ChainBasis {
  int n = 0;
  int64_t count = 0;
  std::vector<int32_t> mor;   // count*n morphism indices (empty for n = 0)
  std::vector<int32_t> last;  // last object per chain

  const int32_t* tuple(int64_t i) const { return mor.data() + i * n; }
};

/* Nerve cochain model for a coefficient system M on a finite category.
   Chain bases are built lazily per degree; a cochain of degree n assigns to
   every degree-n chain a vector in M(last object), stored flattened. */
struct NerveModel {
  const Category* C = nullptr;
  const CoefficientSystem* M = nullptr;
  int64_t chain_cap = 4'000'000;
  std::vector<std::vector<int>> outmor;  // non-identity morphisms by source, ascending
  std::vector<ChainBasis> basis;
  std::vector<std::vector<int64_t>> off;  // per degree: component offset per chain (+sentinel)

  NerveModel() = default;
  NerveModel(const Category& c, const CoefficientSystem& m) : C(&c), M(&m) {
    assert(m.C == &c);
    outmor.resize(C->nobj);
    for (int f = 0; f < C->nmor(); ++f)
      if (!C->is_id(f)) outmor[C->msrc[f]].push_back(f);
  }

  int p() const { return M->p; }

  void ensure(int n) {
    while (int(basis.size()) <= n) {
      int m = int(basis.size());
      ChainBasis b;
      b.n = m;
      if (m == 0) {
        b.count = C->nobj;
        b.last.resize(C->nobj);
        for (int c = 0; c < C->nobj; ++c) b.last[c] = c;
      } else {
        const ChainBasis& prev = basis[m - 1];
        int64_t cnt = 0;
        for (int64_t i = 0; i < prev.count; ++i) cnt += int64_t(outmor[prev.last[i]].size());
        if (cnt > chain_cap) throw DegreeCapExceeded();
        b.count = cnt;
        b.mor.reserve(size_t(cnt) * m);
        b.last.reserve(size_t(cnt));
        for (int64_t i = 0; i < prev.count; ++i) {
          const int32_t* t = prev.tuple(i);
          for (int f : outmor[prev.last[i]]) {
            b.mor.insert(b.mor.end(), t, t + (m - 1));
            b.mor.push_back(f);
            b.last.push_back(C->mtgt[f]);
          }
        }
      }
      std::vector<int64_t> o(size_t(b.count) + 1, 0);
      for (int64_t i = 0; i < b.count; ++i) o[i + 1] = o[i] + M->dim[b.last[i]];
      basis.push_back(std::move(b));
      off.push_back(std::move(o));
    }
  }

  int64_t nchains(int n) {
    ensure(n);
    return basis[n].count;
  }

  int64_t dim(int n) {  // total components of a degree-n cochain
    ensure(n);
    return off[n][basis[n].count];
  }

  /* Index of a degree-n chain given as a tuple; -1 if absent (n >= 1). */
  int64_t chain_index(int n, const int32_t* t) const {
    const ChainBasis& b = basis[n];
    int64_t lo = 0, hi = b.count;
    while (lo < hi) {
      int64_t mid = (lo + hi) / 2;
      const int32_t* u = b.tuple(mid);
      int cmp = 0;
      for (int i = 0; i < n && !cmp; ++i) cmp = (u[i] < t[i]) ? -1 : (u[i] > t[i] ? 1 : 0);
      if (cmp < 0)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo >= b.count) return -1;
    const int32_t* u = b.tuple(lo);
    for (int i = 0; i < n; ++i)
      if (u[i] != t[i]) return -1;
    return lo;
  }

  /* Face i of a degree-n chain (n >= 1).  Returns the face chain index in
     degree n-1, or -1 if the face is degenerate. */
  int64_t face(int n, int64_t chain, int i, std::vector<int32_t>& scratch) const {
    const int32_t* t = basis[n].tuple(chain);
    if (n == 1) return i == 0 ? C->mtgt[t[0]] : C->msrc[t[0]];
    scratch.clear();
    if (i == 0) {
      scratch.assign(t + 1, t + n);
    } else if (i == n) {
      scratch.assign(t, t + n - 1);
    } else {
      int g = C->compose(t[i], t[i - 1]);
      if (C->is_id(g)) return -1;
      scratch.assign(t, t + i - 1);
      scratch.push_back(g);
      scratch.insert(scratch.end(), t + i + 1, t + n);
    }
    int64_t idx = chain_index(n - 1, scratch.data());
    assert(idx >= 0);
    return idx;
  }
};

/* A cochain: flattened values, one block of dim M(last object) per chain. */
struct Cochain {
  int deg = 0;
  Vec v;
};

inline Cochain zero_cochain(NerveModel& N, int n) {
  Cochain c;
  c.deg = n;
  c.v.assign(size_t(N.dim(n)), 0);
  return c;
}

inline Cochain random_cochain(NerveModel& N, int n, std::mt19937_64& rng) {
  Cochain c = zero_cochain(N, n);
  for (auto& x : c.v) x = uint8_t(rng() % N.p());
  return c;
}

/* The normalized nerve differential:
   (d phi)(f_1..f_{n+1}) = sum_{i=0}^{n} (-1)^i phi(face_i)
                           + (-1)^{n+1} M(f_{n+1})(phi(face_{n+1})),
   with degenerate faces contributing 0. */
inline Cochain differential(NerveModel& N, const Cochain& phi) {
  int n = phi.deg;
  int m = n + 1;
  N.ensure(m);
  int p = N.p();
  Cochain out = zero_cochain(N, m);
  const ChainBasis& B = N.basis[m];
  std::vector<int32_t> scratch;
  for (int64_t ch = 0; ch < B.count; ++ch) {
    int d = N.M->dim[B.last[ch]];
    uint8_t* dst = out.v.data() + N.off[m][ch];
    for (int i = 0; i <= n; ++i) {
      int64_t fc = N.face(m, ch, i, scratch);
      if (fc < 0) continue;
      const uint8_t* src = phi.v.data() + N.off[m - 1][fc];
      if (i % 2 == 0)
        for (int r = 0; r < d; ++r) dst[r] = fp_add(dst[r], src[r], p);
      else
        for (int r = 0; r < d; ++r) dst[r] = fp_sub(dst[r], src[r], p);
    }
    // last face, twisted by M of the final morphism
    int64_t fc = N.face(m, ch, m, scratch);
    if (fc >= 0) {
      int flast = B.tuple(ch)[m - 1];
      const Mat& A = N.M->mat[flast];
      const uint8_t* src = phi.v.data() + N.off[m - 1][fc];
      for (int r = 0; r < d; ++r) {
        int acc = 0;
        for (int s = 0; s < A.cols; ++s) acc += int(A.at(r, s)) * src[s];
        uint8_t t = uint8_t(acc % p);
        dst[r] = (m % 2 == 0) ? fp_add(dst[r], t, p) : fp_sub(dst[r], t, p);
      }
    }
  }
  return out;
}

/* Dimensions of H^0..H^maxdeg by direct echelon reduction of the nerve
   complex: rank d^n computed by streaming the rows of d^n (indexed by
   (n+1)-chain components) into a dense REF over the degree-n components.
   Kernel representatives are available from the same REF.  Only suitable
   when the degree-n cochain dimension is modest. */
struct NerveRanks {
  std::vector<int64_t> cdim;    // cochain dims, degrees 0..maxdeg
  std::vector<int64_t> rank_d;  // rank of d^n, n = 0..maxdeg
  std::vector<int> h;           // cohomology dims, 0..maxdeg

  int64_t cocycles(int n) const { return cdim[n] - rank_d[n]; }
};

/* Streams the rows of d^n into `ref` (ncols must equal N.dim(n)). */
template <class Ref>
void stream_differential_rows(NerveModel& N, int n, Ref& ref) {
  int m = n + 1;
  N.ensure(m);
  int p = N.p();
  const ChainBasis& B = N.basis[m];
  int64_t ncols = N.dim(n);
  std::vector<int32_t> scratch;
  std::vector<int64_t> fidx(size_t(m) + 1);
  Vec row;
  for (int64_t ch = 0; ch < B.count; ++ch) {
    for (int i = 0; i <= m; ++i) fidx[i] = N.face(m, ch, i, scratch);
    int d = N.M->dim[B.last[ch]];
    int flast = B.tuple(ch)[m - 1];
    const Mat& A = N.M->mat[flast];
    for (int r = 0; r < d; ++r) {
      row.assign(size_t(ncols), 0);
      bool nonzero = false;
      for (int i = 0; i < m; ++i) {
        if (fidx[i] < 0) continue;
        int64_t o = N.off[n][fidx[i]] + r;
        row[o] = fp_add(row[o], uint8_t(i % 2 == 0 ? 1 : p - 1), p);
        nonzero = true;
      }
      if (fidx[m] >= 0) {
        int64_t o = N.off[n][fidx[m]];
        uint8_t sgn = uint8_t(m % 2 == 0 ? 1 : p - 1);
        for (int s = 0; s < A.cols; ++s) {
          if (!A.at(r, s)) continue;
          row[o + s] = fp_add(row[o + s], fp_mul(sgn, A.at(r, s), p), p);
          nonzero = true;
        }
      }
      if (nonzero) ref.add(std::move(row));
    }
  }
}

inline NerveRanks nerve_ranks(NerveModel& N, int maxdeg) {
  NerveRanks out;
  for (int n = 0; n <= maxdeg; ++n) {
    int64_t cd = N.dim(n);
    int rank;
    if (N.p() == 2) {
      RefBit ref{int(cd)};
      stream_differential_rows(N, n, ref);
      rank = ref.rank();
    } else {
      RefDense ref(N.p(), int(cd));
      stream_differential_rows(N, n, ref);
      rank = ref.rank();
    }
    out.cdim.push_back(cd);
    out.rank_d.push_back(rank);
    int64_t b = n == 0 ? 0 : out.rank_d[n - 1];
    out.h.push_back(int(cd - rank - b));
  }
  return out;
}

} // namespace fuscoh

#endif
