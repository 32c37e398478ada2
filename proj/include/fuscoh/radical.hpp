#ifndef FUSCOH_RADICAL_HPP
#define FUSCOH_RADICAL_HPP

#include "category.hpp"
#include "sparse.hpp"

namespace fuscoh {

/* Jacobson radicals of small F_p-algebras given by a basis with monomial
   products (basis * basis = basis or 0), and of category algebras of
   EI-categories (every endomorphism invertible). */

namespace detail {

/* Dense product in the monomial-basis algebra. */
template <class MulFn>
Vec alg_mul(int p, int n, MulFn&& mul, const Vec& a, const Vec& b) {
  Vec out(n, 0);
  for (int g = 0; g < n; ++g) {
    if (!a[g]) continue;
    for (int f = 0; f < n; ++f) {
      if (!b[f]) continue;
      int gf = mul(g, f);
      if (gf >= 0) out[gf] = fp_add(out[gf], fp_mul(a[g], b[f], p), p);
    }
  }
  return out;
}

} // namespace detail

namespace detail {

/* Product in the integer lift Z/m[basis] of the monomial-basis algebra. */
template <class MulFn>
std::vector<int64_t> zalg_mul(int64_t m, int n, MulFn&& mul, const std::vector<int64_t>& a,
                              const std::vector<int64_t>& b) {
  std::vector<int64_t> out(n, 0);
  for (int g = 0; g < n; ++g) {
    if (!a[g]) continue;
    for (int f = 0; f < n; ++f) {
      if (!b[f]) continue;
      int gf = mul(g, f);
      if (gf >= 0) out[gf] = (out[gf] + a[g] * b[f]) % m;
    }
  }
  return out;
}

} // namespace detail

/* Radical of a unital F_p-algebra with monomial basis products, by the
   Friedl–Ronyai chain of divided trace forms on the left regular
   representation (integer lifts):
     A_0 = A,   A_{i+1} = { x in A_i : Tr_Z((XY)^{p^i}) / p^i = 0 mod p
                            for all y in A_i },
   with rad(A) = A_{l+1} once p^l >= dim A.  On A_i the divided trace of the
   p^i-th power is F_p-linear, so each step is one kernel computation; the
   plain mod-p trace alone is useless when p divides matrix traces such as
   Tr(id) = dim A.  Returns a basis of the radical as coefficient vectors. */
template <class MulFn>
std::vector<Vec> algebra_radical(int p, int n, MulFn&& mul) {
  // integer trace of left multiplication by a basis element
  std::vector<int64_t> tr(n, 0);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f)
      if (mul(g, f) == f) ++tr[g];

  std::vector<Vec> basis;
  for (int g = 0; g < n; ++g) {
    Vec e(n, 0);
    e[g] = 1;
    basis.push_back(std::move(e));
  }
  for (int64_t q = 1; q <= n && !basis.empty(); q *= p) {
    int64_t modulus = q * p;  // traces needed mod p^{i+1}
    int m = int(basis.size());
    auto lift = [&](const Vec& v) {
      std::vector<int64_t> w(n);
      for (int g = 0; g < n; ++g) w[g] = v[g];
      return w;
    };
    Mat T(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        // (x y)^q in the integer lift, by square-and-multiply
        std::vector<int64_t> w = detail::zalg_mul(modulus, n, mul, lift(basis[c]), lift(basis[r]));
        std::vector<int64_t> acc, sq = w;
        bool first = true;
        int64_t e = q;
        while (e > 0) {
          if (e & 1) {
            acc = first ? sq : detail::zalg_mul(modulus, n, mul, acc, sq);
            first = false;
          }
          e >>= 1;
          if (e) sq = detail::zalg_mul(modulus, n, mul, sq, sq);
        }
        int64_t t = 0;
        for (int g = 0; g < n; ++g) t = (t + acc[g] * (tr[g] % modulus)) % modulus;
        assert(t % q == 0 && "divided trace: trace not divisible at this level");
        T.at(r, c) = uint8_t((t / q) % p);
      }
    std::vector<Vec> ker = mat_kernel(T, p);
    std::vector<Vec> next;
    for (const Vec& k : ker) {
      Vec v(n, 0);
      for (int c = 0; c < m; ++c)
        if (k[c])
          for (int g = 0; g < n; ++g)
            v[g] = fp_add(v[g], fp_mul(k[c], basis[c][g], p), p);
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  return basis;
}

/* Checks that span(J) is a two-sided nilpotent ideal; used by tests to
   certify radical computations independently of the formula above. */
template <class MulFn>
bool verify_nilpotent_ideal(int p, int n, MulFn&& mul, const std::vector<Vec>& J) {
  RefDense span(p, n);
  for (const Vec& j : J) span.add(j);
  for (int g = 0; g < n; ++g) {
    Vec e(n, 0);
    e[g] = 1;
    for (const Vec& j : J) {
      if (!span.in_span(detail::alg_mul(p, n, mul, e, j))) return false;
      if (!span.in_span(detail::alg_mul(p, n, mul, j, e))) return false;
    }
  }
  // nilpotency by repeated squaring of the span
  std::vector<Vec> cur = J;
  for (int step = 0; step < 12 && !cur.empty(); ++step) {
    RefDense s(p, n);
    std::vector<Vec> next;
    for (const Vec& a : cur)
      for (const Vec& b : cur) {
        Vec ab = detail::alg_mul(p, n, mul, a, b);
        if (s.add(ab)) next.push_back(std::move(ab));
      }
    // powers of an ideal have non-increasing dimension; stalling above zero
    // means the span is not nilpotent
    if (!next.empty() && next.size() >= cur.size()) return false;
    cur = std::move(next);
  }
  return cur.empty();
}

/* Radical of the category algebra F_p[C] for an EI-category: the span of all
   non-invertible morphisms together with, for each isomorphism class of
   objects, the matrix block M_m(rad F_p[Aut]) transported along reference
   isomorphisms.  Throws if some endomorphism is not invertible. */
inline std::vector<SparseVec> category_radical(const Category& C, int p) {
  int nb = C.nmor();
  // invertibility and inverses
  std::vector<int> inv(nb, -1);
  for (int f = 0; f < nb; ++f) {
    for (int g : C.hom(C.mtgt[f], C.msrc[f]))
      if (C.compose(g, f) == C.id_of[C.msrc[f]] && C.compose(f, g) == C.id_of[C.mtgt[f]]) {
        inv[f] = g;
        break;
      }
  }
  for (int f = 0; f < nb; ++f)
    if (C.msrc[f] == C.mtgt[f] && inv[f] < 0)
      throw std::domain_error("category_radical: not an EI-category");

  // isomorphism classes of objects
  std::vector<int> cls(C.nobj);
  for (int c = 0; c < C.nobj; ++c) cls[c] = c;
  for (int f = 0; f < nb; ++f)
    if (inv[f] >= 0) {
      int a = cls[C.msrc[f]], b = cls[C.mtgt[f]];
      if (a != b)
        for (int& x : cls)
          if (x == b) x = a;
    }

  std::vector<SparseVec> J;
  for (int f = 0; f < nb; ++f)
    if (inv[f] < 0) J.push_back({{f, 1}});

  std::vector<bool> done(C.nobj, false);
  for (int c0 = 0; c0 < C.nobj; ++c0) {
    if (done[cls[c0]]) continue;
    done[cls[c0]] = true;
    std::vector<int> members;
    for (int c = 0; c < C.nobj; ++c)
      if (cls[c] == cls[c0]) members.push_back(c);
    // group algebra of Aut(c0)
    std::vector<int> aut = C.hom(c0, c0);
    int na = int(aut.size());
    std::vector<int> aut_index(nb, -1);
    for (int i = 0; i < na; ++i) aut_index[aut[i]] = i;
    auto mul = [&](int a, int b) { return aut_index[C.compose(aut[a], aut[b])]; };
    std::vector<Vec> rad = algebra_radical(p, na, mul);
    if (rad.empty()) continue;
    // reference isomorphisms c0 -> c_i
    std::vector<int> theta(members.size(), -1), theta_inv(members.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) {
      for (int f : C.hom(c0, members[i]))
        if (inv[f] >= 0) {
          theta[i] = f;
          theta_inv[i] = inv[f];
          break;
        }
      assert(theta[i] >= 0);
    }
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j)
        for (const Vec& r : rad) {
          SparseVec v;
          for (int g = 0; g < na; ++g)
            if (r[g]) v.emplace_back(C.compose(theta[j], C.compose(aut[g], theta_inv[i])), r[g]);
          std::sort(v.begin(), v.end());
          J.push_back(std::move(v));
        }
  }
  return J;
}

} // namespace fuscoh

#endif
