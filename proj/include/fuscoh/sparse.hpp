#ifndef FUSCOH_SPARSE_HPP
#define FUSCOH_SPARSE_HPP

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <utility>

#include "fp.hpp"

namespace fuscoh {

/* Sparse vector over F_p: (column, value) pairs, sorted by column, values nonzero. */
using SparseVec = std::vector<std::pair<int, uint8_t>>;

inline SparseVec sparse_from_dense(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < int(v.size()); ++i)
    if (v[i]) s.emplace_back(i, v[i]);
  return s;
}

inline Vec dense_from_sparse(const SparseVec& s, int ncols) {
  Vec v(ncols, 0);
  for (auto& [c, x] : s) v[c] = x;
  return v;
}

/* w += f*r (merge of sorted sparse vectors). */
inline SparseVec sparse_axpy(const SparseVec& w, uint8_t f, const SparseVec& r, int p) {
  SparseVec out;
  out.reserve(w.size() + r.size());
  size_t i = 0, j = 0;
  while (i < w.size() || j < r.size()) {
    if (j == r.size() || (i < w.size() && w[i].first < r[j].first)) {
      out.push_back(w[i++]);
    } else if (i == w.size() || r[j].first < w[i].first) {
      out.emplace_back(r[j].first, fp_mul(f, r[j].second, p));
      ++j;
    } else {
      uint8_t v = fp_add(w[i].second, fp_mul(f, r[j].second, p), p);
      if (v) out.emplace_back(w[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

/* Row echelon form with dense uint8 rows; supports kernel extraction.
   Suitable when ncols is moderate (up to ~10^5). */
class RefDense {
public:
  RefDense(int p, int ncols) : p_(p), ncols_(ncols), pivot_of_col_(ncols, -1) {}

  int ncols() const { return ncols_; }
  int rank() const { return int(rows_.size()); }
  bool col_has_pivot(int c) const { return pivot_of_col_[c] >= 0; }

  /* Forward-reduce v in place against the stored rows. */
  void reduce(Vec& v) const {
    for (int c = 0; c < ncols_; ++c) {
      if (!v[c]) continue;
      int r = pivot_of_col_[c];
      if (r < 0) continue;
      uint8_t f = v[c];
      const Vec& row = rows_[r];
      for (int j = c; j < ncols_; ++j)
        if (row[j]) v[j] = fp_sub(v[j], fp_mul(f, row[j], p_), p_);
    }
  }

  /* Returns true if the row was independent (rank grew). */
  bool add(Vec v) {
    reduce(v);
    int lead = -1;
    for (int c = 0; c < ncols_; ++c)
      if (v[c]) { lead = c; break; }
    if (lead < 0) return false;
    uint8_t inv = fp_inv(v[lead], p_);
    for (int j = lead; j < ncols_; ++j) v[j] = fp_mul(v[j], inv, p_);
    pivot_of_col_[lead] = int(rows_.size());
    lead_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
  }

  bool add_sparse(const SparseVec& s) { return add(dense_from_sparse(s, ncols_)); }

  bool in_span(Vec v) const {
    reduce(v);
    return vec_is_zero(v);
  }

  /* Kernel vector of the row system for a given pivot-free column:
     x with x[free_col]=1 and (row)·x = 0 for every stored row. */
  Vec kernel_vector(int free_col) const {
    assert(pivot_of_col_[free_col] < 0);
    Vec x(ncols_, 0);
    x[free_col] = 1;
    // rows are naturally in increasing lead order? Not guaranteed; sort indices by lead desc.
    std::vector<int> order(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return lead_[a] > lead_[b]; });
    for (int r : order) {
      const Vec& row = rows_[r];
      int c = lead_[r];
      int acc = 0;
      for (int j = c + 1; j < ncols_; ++j)
        if (row[j] && x[j]) acc += int(row[j]) * x[j];
      x[c] = fp_neg(uint8_t(acc % p_), p_);
    }
    return x;
  }

  std::vector<int> free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
  }

  const Vec& row(int i) const { return rows_[i]; }
  int lead(int i) const { return lead_[i]; }

  /* Coordinates of v in the basis formed by the stored rows; v must lie in
     their span. */
  Vec express(Vec v) const {
    Vec coef(rows_.size(), 0);
    for (int c = 0; c < ncols_; ++c) {
      if (!v[c]) continue;
      int r = pivot_of_col_[c];
      if (r < 0) throw std::domain_error("express: vector not in span");
      uint8_t f = v[c];
      coef[r] = f;
      const Vec& row = rows_[r];
      for (int j = c; j < ncols_; ++j)
        if (row[j]) v[j] = fp_sub(v[j], fp_mul(f, row[j], p_), p_);
    }
    return coef;
  }

private:
  int p_, ncols_;
  std::vector<Vec> rows_;
  std::vector<int> lead_;
  std::vector<int> pivot_of_col_;
};

/* Rank-only echelon form with fully sparse rows; shortest-row-first lazy
   reduction keeps fill-in low on nerve-type coboundary matrices. */
class RefSparse {
public:
  RefSparse(int p, long ncols) : p_(p), ncols_(ncols) {}

  void add(SparseVec v) {
    if (!v.empty()) queue_.push({v.size(), seq_++, std::move(v)});
    drain();
  }

  int rank() const { return rank_; }

  long fill() const {
    long f = 0;
    for (auto& [c, r] : pivots_) f += long(r.size());
    return f;
  }

private:
  struct Item {
    size_t len;
    long seq;
    SparseVec v;
    bool operator>(const Item& o) const {
      return len != o.len ? len > o.len : seq > o.seq;
    }
  };

  void drain() {
    while (!queue_.empty()) {
      Item it = queue_.top();
      queue_.pop();
      SparseVec& v = it.v;
      auto piv = pivots_.find(v[0].first);
      if (piv == pivots_.end()) {
        uint8_t inv = fp_inv(v[0].second, p_);
        if (inv != 1)
          for (auto& [c, x] : v) x = fp_mul(x, inv, p_);
        pivots_.emplace(v[0].first, std::move(v));
        ++rank_;
        continue;
      }
      SparseVec w = sparse_axpy(v, fp_neg(v[0].second, p_), piv->second, p_);
      if (!w.empty()) queue_.push({w.size(), it.seq, std::move(w)});
    }
  }

  int p_;
  long ncols_;
  long seq_ = 0;
  int rank_ = 0;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue_;
  std::unordered_map<int, SparseVec> pivots_;
};

} // namespace fuscoh

#endif
