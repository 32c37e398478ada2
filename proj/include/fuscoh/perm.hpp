#ifndef FUSCOH_PERM_HPP
#define FUSCOH_PERM_HPP

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuscoh {

/* Permutation of {0..n-1} as an image vector: g[i] = g(i).
   Composition is left-to-right in the functional sense: (f*g)(x) = f(g(x)). */
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline bool perm_is_identity(const Perm& g) {
  for (int i = 0; i < int(g.size()); ++i)
    if (g[i] != i) return false;
  return true;
}

/* (f*g)(x) = f(g(x)). */
inline Perm perm_mul(const Perm& f, const Perm& g) {
  assert(f.size() == g.size());
  Perm h(f.size());
  for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

inline Perm perm_inv(const Perm& g) {
  Perm h(g.size());
  for (size_t i = 0; i < g.size(); ++i) h[g[i]] = int(i);
  return h;
}

/* g h g^{-1}. */
inline Perm perm_conj(const Perm& g, const Perm& h) {
  return perm_mul(perm_mul(g, h), perm_inv(g));
}

inline int perm_order(const Perm& g) {
  Perm x = g;
  int n = 1;
  while (!perm_is_identity(x)) {
    x = perm_mul(x, g);
    ++n;
  }
  return n;
}

/* Parse cycle notation like "(0 1 2)(3 4)" into a permutation of {0..n-1}.
   "()" or "" is the identity. */
inline Perm perm_parse(const std::string& s, int n) {
  Perm g = perm_identity(n);
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(unsigned(s[i]))) { ++i; continue; }
    if (s[i] != '(') throw std::invalid_argument("perm_parse: expected '(' in " + s);
    ++i;
    std::vector<int> cyc;
    std::string cur;
    while (i < s.size() && s[i] != ')') {
      if (std::isdigit(unsigned(s[i]))) {
        cur += s[i];
      } else if (std::isspace(unsigned(s[i])) || s[i] == ',') {
        if (!cur.empty()) { cyc.push_back(std::stoi(cur)); cur.clear(); }
      } else {
        throw std::invalid_argument("perm_parse: bad character in " + s);
      }
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("perm_parse: unterminated cycle in " + s);
    ++i;
    if (!cur.empty()) cyc.push_back(std::stoi(cur));
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 0 || a >= n) throw std::invalid_argument("perm_parse: point out of range in " + s);
      if (g[a] != a && cyc.size() > 1)
        throw std::invalid_argument("perm_parse: repeated point in " + s);
      g[a] = b;
    }
  }
  return g;
}

inline std::string perm_print(const Perm& g) {
  std::ostringstream out;
  std::vector<bool> seen(g.size(), false);
  bool any = false;
  for (int i = 0; i < int(g.size()); ++i) {
    if (seen[i] || g[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << j;
      seen[j] = true;
      j = g[j];
      first = false;
    } while (j != i);
    out << ')';
  }
  return any ? out.str() : "()";
}

} // namespace fuscoh

#endif
