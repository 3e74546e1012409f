#include <doctest.h>

#include <cmath>
#include <random>

#include "scnoise/stratified.hpp"

using namespace scnoise;

namespace {

const double kOmega = 2.0 * kPi * 560e3;
const double kK = kOmega / kConstants.c;

bool close(complex a, complex b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

struct RandomMedia {
  std::mt19937_64 rng{20240611};
  std::uniform_real_distribution<double> u{0.0, 1.0};

  // z-wavenumber of a passive medium: Im >= 0
  complex passive_kz(double decades = 9.0) {
    const double mag = std::pow(10.0, -3.0 + decades * u(rng));
    const double phase = kPi * u(rng);
    return std::polar(mag, phase);
  }
  double log_uniform(double lo, double hi) {
    return lo * std::pow(hi / lo, u(rng));
  }
};

} // namespace

TEST_CASE("decaying square root branch") {
  CHECK(decaying_sqrt({4.0, 0.0}) == complex{2.0, 0.0});
  CHECK(decaying_sqrt({-4.0, 0.0}) == complex{0.0, 2.0});
  CHECK(decaying_sqrt({0.0, 0.0}) == complex{0.0, 0.0});
  RandomMedia r;
  for (int i = 0; i < 1000; ++i) {
    const complex a = std::polar(r.log_uniform(1e-6, 1e12), 2.0 * kPi * r.u(r.rng));
    const complex s = decaying_sqrt(a);
    CHECK(s.imag() >= 0.0);
    CHECK(close(s * s, a, 1e-13));
  }
  // negative zero imaginary part still maps onto the decaying branch
  CHECK(decaying_sqrt({-4.0, -0.0}).imag() == 2.0);
}

TEST_CASE("layer wavevectors") {
  const PermittivityTensor vac;
  const auto w = layer_wavevectors(10.0 * kK, kOmega, vac);
  CHECK(w.h1.real() == 0.0);
  CHECK(w.h1.imag() == doctest::Approx(std::sqrt(99.0) * kK));
  CHECK(w.h2 == w.h1);

  const auto prop = layer_wavevectors(0.6 * kK, kOmega, vac);
  CHECK(prop.h1.real() == doctest::Approx(0.8 * kK));

  const PermittivityTensor uni{{-3.0, 2.0}, {-0.5, 0.1}};
  const double eta = 5.0 * kK;
  const auto wu = layer_wavevectors(eta, kOmega, uni);
  CHECK(close(wu.h1 * wu.h1, kK * kK * uni.eps_t - eta * eta, 1e-13));
  CHECK(close(wu.h2 * wu.h2, kK * kK * uni.eps_t - eta * eta * uni.eps_t / uni.eps_z, 1e-13));
  CHECK(wu.h2.imag() >= 0.0);

  CHECK_THROWS_AS(layer_wavevectors(-1.0, kOmega, vac), DomainError);
  CHECK_THROWS_AS(layer_wavevectors(1.0, kOmega, {{1.0, 0.0}, {0.0, 0.0}}), DomainError);
}

TEST_CASE("Fresnel TE identities") {
  RandomMedia r;
  for (int i = 0; i < 500; ++i) {
    const complex a = r.passive_kz(), b = r.passive_kz();
    const complex r12 = fresnel_te(a, b);
    CHECK(close(fresnel_te(b, a), -r12, 1e-14));
    CHECK(std::abs(1.0 + r12 - 2.0 * a / (a + b)) < 1e-12);
    CHECK(fresnel_te(a, a) == complex{0.0, 0.0});
  }
  CHECK_THROWS_AS(fresnel_te({1.0, 0.0}, {-1.0, 0.0}), ResonanceError);
}

TEST_CASE("generalized coefficient limits") {
  RandomMedia r;
  for (int i = 0; i < 500; ++i) {
    const complex k1 = r.passive_kz(3.0), k2 = r.passive_kz(3.0), k3 = r.passive_kz(3.0);
    const complex r12 = fresnel_te(k1, k2), r23 = fresnel_te(k2, k3);
    CHECK(close(generalized_r_te(r12, r23, k2, 0.0), fresnel_te(k1, k3), 1e-12));
    if (k2.imag() > 0.0) CHECK(generalized_r_te(r12, r23, k2, kSemiInfinite) == r12);
  }
  CHECK_THROWS_AS(generalized_r_te(0.1, 0.2, {1.0, 1.0}, -1.0), DomainError);
}

TEST_CASE("generalized coefficient equals the multiple-reflection sum") {
  RandomMedia r;
  for (int i = 0; i < 300; ++i) {
    const complex k1 = r.passive_kz(), k2 = r.passive_kz(), k3 = r.passive_kz();
    const double d = r.log_uniform(1e-9, 1e-5);
    const complex r12 = fresnel_te(k1, k2), r21 = -r12, r23 = fresnel_te(k2, k3);
    const complex p = std::exp(complex{0.0, 2.0} * k2 * d);
    if (std::abs(1.0 - r21 * r23 * p) < 1e-3) continue;
    const complex t12 = 1.0 + r12, t21 = 1.0 + r21;
    const complex airy = r12 + t12 * t21 * r23 * p / (1.0 - r21 * r23 * p);
    CHECK(close(generalized_r_te(r12, r23, k2, d), airy, 1e-9));
  }
}

TEST_CASE("interface coefficients") {
  RandomMedia r;
  for (int i = 0; i < 500; ++i) {
    const complex h1 = r.passive_kz(), h2 = r.passive_kz();
    const complex e1 = r.passive_kz(), e2 = r.passive_kz();
    CHECK(close(interface_rh(h1, h2), -fresnel_te(h1, h2), 1e-14));
    CHECK(interface_rh(h1, h1) == complex{0.0, 0.0});
    CHECK(close(interface_rv(h1, h2, e1, e2), -interface_rv(h2, h1, e2, e1), 1e-13));
    CHECK(interface_rv(h1, h1, e1, e1) == complex{0.0, 0.0});
    // TM form (eps2 k1z - eps1 k2z) / (eps2 k1z + eps1 k2z)
    CHECK(close(interface_rv(h1, h2, e1, e2), (e2 * h1 - e1 * h2) / (e2 * h1 + e1 * h2), 1e-12));
  }
}

TEST_CASE("weighted V coefficient reduces to the plain form for equal weights") {
  RandomMedia r;
  for (int i = 0; i < 1000; ++i) {
    const complex h1 = r.passive_kz(), h2 = r.passive_kz();
    const complex e1 = r.passive_kz(), e2 = r.passive_kz();
    const double w = r.log_uniform(1e-3, 1e3);
    const complex general = interface_rv_weighted(h1, h2, e1, e2, w, w);
    const complex reduced = interface_rv(h1, h2, e1, e2);
    CHECK(close(general, reduced, 1e-10));
  }
}

TEST_CASE("isotropic stacks: scattering coefficients degenerate to Fresnel forms") {
  const std::vector<LayerStack> stacks = {
      make_three_layer(presets::niobium(), 1e-6, presets::copper(), 4.2),
      make_three_layer(make_drude(1e6), 3e-7, presets::copper(), 4.2),
      make_two_layer(presets::copper(), 4.2),
  };
  for (const auto& s : stacks) {
    const StackResponse resp(s, kOmega);
    for (double eta : {0.5 * kK, 2.0 * kK, 1e3, 1e5, 1e6, 3e7}) {
      const auto b = resp.scattering(eta);
      CHECK(close(b.bm, resp.r_te(eta), 1e-12));
      CHECK(close(b.bn, -resp.r_v(eta), 1e-12));
    }
  }
}

TEST_CASE("stack response agrees with the interface composition") {
  const std::vector<LayerStack> stacks = {
      make_three_layer(presets::niobium(), 1e-6, presets::copper(), 4.2),
      make_three_layer(presets::bscco(), 2.5e-6, presets::copper(), 4.2),
      make_three_layer(make_drude(1e6), 3e-7, presets::niobium(), 4.2),
      make_three_layer(presets::copper(), 5e-5, presets::bscco(), 77.0),
  };
  for (const auto& s : stacks) {
    const StackResponse resp(s, kOmega);
    for (double eta : {0.5 * kK, 2.0 * kK, 1e3, 1e5, 1e6, 3e7}) {
      LayerWavevectors w[3];
      for (int l = 0; l < 3; ++l) w[l] = layer_wavevectors(eta, kOmega, resp.eps(l));
      const double d = resp.film_thickness();
      const complex p1 = std::exp(complex{0.0, 2.0} * w[1].h1 * d);
      const complex p2 = std::exp(complex{0.0, 2.0} * w[1].h2 * d);
      auto compose = [](complex a, complex b, complex p) { return (a + b * p) / (1.0 + a * b * p); };
      const complex rh1 = interface_rh(w[0].h1, w[1].h1), rh2 = interface_rh(w[1].h1, w[2].h1);
      const complex ksq[3] = {kK * kK * resp.eps(0).eps_t, kK * kK * resp.eps(1).eps_t,
                              kK * kK * resp.eps(2).eps_t};
      const complex rv1 = interface_rv(w[0].h2, w[1].h2, ksq[0], ksq[1]);
      const complex rv2 = interface_rv(w[1].h2, w[2].h2, ksq[1], ksq[2]);
      const auto b = resp.scattering(eta);
      CHECK(std::abs(b.bm + compose(rh1, rh2, p1)) < 1e-12);
      CHECK(std::abs(b.bn + compose(rv1, rv2, p2)) < 1e-12);
      const complex r12 = fresnel_te(w[0].h1, w[1].h1), r23 = fresnel_te(w[1].h1, w[2].h1);
      CHECK(std::abs(resp.r_te(eta) - generalized_r_te(r12, r23, w[1].h1, d)) < 1e-12);
    }
  }
}

TEST_CASE("thin lossy film on a superconductor keeps a smooth loss signal") {
  // the imaginary part is tiny against |r| ~ 1; neighbouring points must agree
  const auto s = make_three_layer(make_drude(1.8e6), 1e-9, presets::niobium(), 2.0);
  const StackResponse resp(s, kOmega);
  for (double eta : {1e4, 1e5, 1e6}) {
    const double a = resp.r_te(eta).imag(), b = resp.r_te(eta * (1 + 1e-10)).imag();
    CHECK(a > 0.0);
    CHECK(std::abs(a - b) <= 1e-6 * a);
  }
}

TEST_CASE("zero-thickness film is elided") {
  const auto bare = make_two_layer(presets::copper(), 4.2);
  for (const auto& film : {presets::niobium(), presets::bscco(), make_drude(1e5)}) {
    const auto thin = make_three_layer(film, 0.0, presets::copper(), 4.2);
    for (double eta : {1e2, 1e4, 1e5, 1e6, 1e7}) {
      const auto a = scattering_coefficients(bare, eta, kOmega);
      const auto b = scattering_coefficients(thin, eta, kOmega);
      CHECK(close(a.bm, b.bm, 1e-12));
      CHECK(close(a.bn, b.bn, 1e-12));
    }
  }
  const auto t = as_three_layer(bare);
  REQUIRE(t.layers.size() == 3);
  CHECK(t.layers[1].thickness == 0.0);
  CHECK(t.layers[1].material.label == "copper");
}

TEST_CASE("evanescent TE response is passive on random stacks") {
  RandomMedia r;
  int violations = 0;
  for (int i = 0; i < 300; ++i) {
    const TwoFluidParams p{r.log_uniform(1e-8, 1e-6), 1.0 + 99.0 * r.u(r.rng),
                           r.log_uniform(1e4, 1e9), r.u(r.rng) < 0.5 ? 1.0 : 4.0};
    const double T = 1.2 * p.Tc * r.u(r.rng);
    const auto s = make_three_layer(make_isotropic_sc(p), r.log_uniform(1e-9, 1e-5),
                                    make_drude(r.log_uniform(1e4, 1e9)), T);
    const StackResponse resp(s, kOmega);
    for (int j = 0; j < 10; ++j) {
      const double eta = r.log_uniform(1.01 * kK, 1e9);
      if (resp.r_te(eta).imag() < 0.0) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("stack validation") {
  CHECK_THROWS_AS(make_two_layer(presets::copper(), -1.0), DomainError);
  CHECK_THROWS_AS(make_three_layer(presets::niobium(), -1e-9, presets::copper(), 4.2),
                  DomainError);
  CHECK_THROWS_AS(make_three_layer(presets::niobium(), kSemiInfinite, presets::copper(), 4.2),
                  DomainError);
  LayerStack top_not_vacuum{{{presets::copper(), kSemiInfinite}, {presets::copper(), kSemiInfinite}}, 4.2};
  CHECK_THROWS_AS(top_not_vacuum.validate(), DomainError);
  LayerStack one{{{make_vacuum(), kSemiInfinite}}, 4.2};
  CHECK_THROWS_AS(one.validate(), DomainError);

  const auto s = make_three_layer(presets::bscco(), 2.5e-6, presets::copper(), 4.2);
  CHECK(s.film_thickness() == 2.5e-6);
  CHECK(s.has_uniaxial_layer());
  CHECK_FALSE(make_two_layer(presets::copper(), 4.2).has_uniaxial_layer());
}
