#ifndef FUSCOH_GF2_HPP
#define FUSCOH_GF2_HPP

#include <bit>
#include <cstdint>

#include <memory>

#include "sparse.hpp"

namespace fuscoh {

/* Row echelon form over F_2 with bit-packed rows; drop-in for RefDense where
   only reduce/add/rank are needed.  Rows are stored full-width. */
class RefBit {
public:
  explicit RefBit(int ncols)
      : ncols_(ncols), nw_((ncols + 63) / 64), pivot_of_col_(ncols, -1) {}

  int rank() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }

  void reduce_bits(std::vector<uint64_t>& v) const {
    for (int w = 0; w < nw_; ++w) {
      uint64_t skip = 0;
      for (;;) {
        uint64_t bits = v[w] & ~skip;
        if (!bits) break;
        int b = std::countr_zero(bits);
        int c = w * 64 + b;
        int r = c < ncols_ ? pivot_of_col_[c] : -1;
        if (r < 0) {
          skip |= uint64_t(1) << b;
          continue;
        }
        const std::vector<uint64_t>& row = rows_[r];
        for (int j = w; j < nw_; ++j) v[j] ^= row[j];
      }
    }
  }

  bool add_bits(std::vector<uint64_t> v) {
    reduce_bits(v);
    int lead = -1;
    for (int w = 0; w < nw_ && lead < 0; ++w)
      if (v[w]) lead = w * 64 + std::countr_zero(v[w]);
    if (lead < 0 || lead >= ncols_) return false;
    pivot_of_col_[lead] = int(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  std::vector<uint64_t> pack(const Vec& v) const {
    std::vector<uint64_t> w(nw_, 0);
    for (int i = 0; i < int(v.size()); ++i)
      if (v[i] & 1) w[i / 64] |= uint64_t(1) << (i % 64);
    return w;
  }

  void unpack(const std::vector<uint64_t>& w, Vec& v) const {
    v.assign(ncols_, 0);
    for (int i = 0; i < ncols_; ++i) v[i] = uint8_t((w[i / 64] >> (i % 64)) & 1);
  }

  void reduce(Vec& v) const {
    std::vector<uint64_t> w = pack(v);
    reduce_bits(w);
    unpack(w, v);
  }

  bool add(Vec v) { return add_bits(pack(v)); }

  bool in_span(const Vec& v) const {
    std::vector<uint64_t> w = pack(v);
    reduce_bits(w);
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }

private:
  int ncols_, nw_;
  std::vector<std::vector<uint64_t>> rows_;
  std::vector<int> pivot_of_col_;
};

/* Echelon form dispatching to the bit-packed variant for p = 2. */
struct EchelonAny {
  std::unique_ptr<RefDense> rd;
  std::unique_ptr<RefBit> rb;

  EchelonAny(int p, int64_t ncols) {
    if (p == 2)
      rb = std::make_unique<RefBit>(int(ncols));
    else
      rd = std::make_unique<RefDense>(p, int(ncols));
  }
  bool add(Vec v) { return rb ? rb->add(std::move(v)) : rd->add(std::move(v)); }
  void reduce(Vec& v) const { rb ? rb->reduce(v) : rd->reduce(v); }
  bool in_span(const Vec& v) const { return rb ? rb->in_span(v) : rd->in_span(v); }
  int rank() const { return rb ? rb->rank() : rd->rank(); }
};

} // namespace fuscoh

#endif
