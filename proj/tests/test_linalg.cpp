#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fuscoh/fp.hpp"
#include "fuscoh/sparse.hpp"

using namespace fuscoh;

TEST_CASE("scalar arithmetic over F_p") {
  for (int p : {2, 3, 5, 7}) {
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b) {
        CHECK(fp_add(uint8_t(a), uint8_t(b), p) == (a + b) % p);
        CHECK(fp_sub(uint8_t(a), uint8_t(b), p) == ((a - b) % p + p) % p);
        CHECK(fp_mul(uint8_t(a), uint8_t(b), p) == (a * b) % p);
      }
    for (int a = 1; a < p; ++a)
      CHECK(fp_mul(uint8_t(a), fp_inv(uint8_t(a), p), p) == 1);
  }
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK(!is_prime(1));
  CHECK(!is_prime(6));
}

static Mat random_matrix(std::mt19937& rng, int r, int c, int p) {
  Mat m(r, c);
  std::uniform_int_distribution<int> d(0, p - 1);
  for (auto& x : m.a) x = uint8_t(d(rng));
  return m;
}

TEST_CASE("matrix inverse and rank") {
  std::mt19937 rng(12345);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat m = random_matrix(rng, 5, 5, p);
      int r = mat_rank(m, p);
      if (r == 5) {
        Mat inv = mat_inverse(m, p);
        CHECK(mat_mul(m, inv, p) == Mat::identity(5));
        CHECK(mat_mul(inv, m, p) == Mat::identity(5));
      } else {
        CHECK_THROWS_AS(mat_inverse(m, p), std::domain_error);
      }
    }
  }
}

TEST_CASE("kernel basis") {
  std::mt19937 rng(777);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      Mat m = random_matrix(rng, 4, 7, p);
      auto ker = mat_kernel(m, p);
      CHECK(int(ker.size()) == 7 - mat_rank(m, p));
      for (const Vec& v : ker) CHECK(vec_is_zero(mat_apply(m, v, p)));
      // Independence of the kernel basis.
      Mat kb(int(ker.size()), 7);
      for (int i = 0; i < int(ker.size()); ++i)
        for (int j = 0; j < 7; ++j) kb.at(i, j) = ker[i][j];
      CHECK(mat_rank(kb, p) == int(ker.size()));
    }
  }
}

TEST_CASE("RefDense agrees with mat_rank and solves kernels") {
  std::mt19937 rng(424242);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      Mat m = random_matrix(rng, 9, 6, p);
      RefDense ref(p, 6);
      for (int i = 0; i < m.rows; ++i) {
        Vec row(m.a.begin() + size_t(i) * 6, m.a.begin() + size_t(i + 1) * 6);
        ref.add(row);
      }
      CHECK(ref.rank() == mat_rank(m, p));
      for (int c : ref.free_columns()) {
        Vec x = ref.kernel_vector(c);
        CHECK(x[c] == 1);
        CHECK(vec_is_zero(mat_apply(m, x, p)));
      }
      // in_span: a random combination of rows must reduce to zero.
      Vec comb(6, 0);
      std::uniform_int_distribution<int> d(0, p - 1);
      for (int i = 0; i < m.rows; ++i) {
        uint8_t c = uint8_t(d(rng));
        for (int j = 0; j < 6; ++j)
          comb[j] = fp_add(comb[j], fp_mul(c, m.at(i, j), p), p);
      }
      CHECK(ref.in_span(comb));
    }
  }
}

TEST_CASE("RefSparse rank matches dense rank") {
  std::mt19937 rng(99);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 15; ++trial) {
      Mat m = random_matrix(rng, 20, 14, p);
      // Thin it out so it is actually sparse.
      std::uniform_int_distribution<int> keep(0, 3);
      for (auto& x : m.a)
        if (keep(rng)) x = 0;
      RefSparse ref(p, 14);
      for (int i = 0; i < m.rows; ++i) {
        SparseVec s;
        for (int j = 0; j < 14; ++j)
          if (m.at(i, j)) s.emplace_back(j, m.at(i, j));
        ref.add(std::move(s));
      }
      CHECK(ref.rank() == mat_rank(m, p));
    }
  }
}

TEST_CASE("sparse axpy round trips through dense") {
  std::mt19937 rng(5);
  for (int p : {3, 5}) {
    std::uniform_int_distribution<int> d(0, p - 1);
    for (int trial = 0; trial < 25; ++trial) {
      Vec a(10), b(10);
      for (auto& x : a) x = uint8_t(d(rng));
      for (auto& x : b) x = uint8_t(d(rng));
      uint8_t f = uint8_t(d(rng));
      SparseVec got = sparse_axpy(sparse_from_dense(a), f, sparse_from_dense(b), p);
      Vec want = vec_add(a, vec_scale(b, f, p), p);
      CHECK(dense_from_sparse(got, 10) == want);
    }
  }
}
