#ifndef FUSCOH_CATEGORY_HPP
#define FUSCOH_CATEGORY_HPP

#include <vector>

#include "group.hpp"

namespace fuscoh {

/* Small finite category with a full composition table.
   Morphisms are indices 0..nmor-1 with fixed source/target objects;
   comp_table[g*nmor+f] = g∘f, or -1 when target(f) != source(g). */
struct Category {
  int nobj = 0;
  std::vector<int> msrc, mtgt;
  std::vector<int> id_of;              // identity morphism per object
  std::vector<int> comp_table;
  std::vector<std::vector<int>> from;  // morphism indices grouped by source

  int nmor() const { return int(msrc.size()); }
  bool is_id(int f) const { return id_of[msrc[f]] == f; }

  int compose(int g, int f) const {  // g∘f : first f, then g
    assert(mtgt[f] == msrc[g]);
    int r = comp_table[size_t(g) * nmor() + f];
    assert(r >= 0);
    return r;
  }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int f : from[a])
      if (mtgt[f] == b) out.push_back(f);
    return out;
  }

  /* Populate `from` and verify the category axioms. */
  void finalize() {
    from.assign(nobj, {});
    for (int f = 0; f < nmor(); ++f) from[msrc[f]].push_back(f);
    for (int c = 0; c < nobj; ++c) {
      assert(msrc[id_of[c]] == c && mtgt[id_of[c]] == c);
    }
    for (int f = 0; f < nmor(); ++f) {
      assert(compose(id_of[mtgt[f]], f) == f);
      assert(compose(f, id_of[msrc[f]]) == f);
    }
    for (int f = 0; f < nmor(); ++f)
      for (int g = 0; g < nmor(); ++g) {
        if (mtgt[f] != msrc[g]) continue;
        int gf = compose(g, f);
        assert(msrc[gf] == msrc[f] && mtgt[gf] == mtgt[g]);
        for (int h = 0; h < nmor(); ++h) {
          if (mtgt[g] != msrc[h]) continue;
          assert(compose(h, gf) == compose(compose(h, g), f));
        }
      }
  }

  bool connected() const {
    if (nobj == 0) return true;
    std::vector<bool> seen(nobj, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int f = 0; f < nmor(); ++f) {
        int o = -1;
        if (msrc[f] == c) o = mtgt[f];
        else if (mtgt[f] == c) o = msrc[f];
        if (o >= 0 && !seen[o]) { seen[o] = true; stack.push_back(o); }
      }
    }
    for (bool b : seen)
      if (!b) return false;
    return true;
  }
};

/* B(G): one object, one morphism per group element, g∘f = g·f. */
inline Category one_object_category(const FiniteGroup& G) {
  Category C;
  C.nobj = 1;
  C.msrc.assign(G.order(), 0);
  C.mtgt.assign(G.order(), 0);
  C.id_of = {0};
  C.comp_table.resize(size_t(G.order()) * G.order());
  for (int g = 0; g < G.order(); ++g)
    for (int f = 0; f < G.order(); ++f)
      C.comp_table[size_t(g) * G.order() + f] = G.mul(g, f);
  C.finalize();
  return C;
}

} // namespace fuscoh

#endif
