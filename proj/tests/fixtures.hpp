#ifndef FUSCOH_TEST_FIXTURES_HPP
#define FUSCOH_TEST_FIXTURES_HPP

#include <memory>

#include "fuscoh/gamma.hpp"

namespace fuscoh {

struct Fixture {
  FiniteGroup G;
  FusionSystem F;
  LinkingSystem L;
  GammaData gd;
};

/* Heap-allocated so internal cross-pointers stay valid. */
inline std::unique_ptr<Fixture> make_fixture(FiniteGroup g, int p) {
  auto fx = std::make_unique<Fixture>();
  fx->G = std::move(g);
  fx->F = build_fusion(fx->G, p);
  fx->L = build_linking(fx->F);
  fx->gd = gamma_p_prime(fx->F, fx->L);
  return fx;
}

inline std::unique_ptr<Fixture> fixture_e1() { return make_fixture(symmetric_group(3), 3); }
inline std::unique_ptr<Fixture> fixture_e2() { return make_fixture(alternating_group(4), 2); }
inline std::unique_ptr<Fixture> fixture_e3() { return make_fixture(symmetric_group(4), 2); }
inline std::unique_ptr<Fixture> fixture_e4() { return make_fixture(symmetric_group(5), 5); }

} // namespace fuscoh

#endif
