#include "scnoise/stratified.hpp"

#include <cmath>
#include <string>

namespace scnoise {

namespace {

constexpr double kResonanceFloor = 1e-14;

complex checked_quotient(complex num, complex den, const char* what) {
  if (std::abs(den) < kResonanceFloor)
    throw ResonanceError(std::string(what) + ": vanishing denominator");
  return num / den;
}

// e^{2 i k d} for d >= 0, taking d = inf as a fully decayed film.
complex round_trip_phase(complex k, double d) {
  if (d == 0.0) return {1.0, 0.0};
  if (std::isinf(d)) {
    if (!(k.imag() > 0.0))
      throw DomainError("semi-infinite film requires a decaying wavenumber");
    return {0.0, 0.0};
  }
  return std::exp(complex{0.0, 2.0} * k * d);
}

// e^x - 1 without cancellation for small |x|
complex expm1(complex x) {
  const double re = std::expm1(x.real()) * std::cos(x.imag()) -
                    2.0 * std::pow(std::sin(0.5 * x.imag()), 2);
  return {re, std::exp(x.real()) * std::sin(x.imag())};
}

// Input admittance seen from the top of a film (admittance a1, z-wavenumber kz,
// thickness d) on a substrate a2. With p = e^{2 i kz d}:
//   A = a1 (1 - p r12) / (1 + p r12),  r12 = (a1 - a2) / (a1 + a2),
// evaluated through m = p - 1 for thin films so that A -> a2 without cancellation,
// and through p for thick ones so that a negligible leak leaves A = a1 exactly.
complex film_input(complex a1, complex a2, complex kz, double d, const char* what) {
  if (d == 0.0) return a2;
  if (std::isinf(d)) {
    if (!(kz.imag() > 0.0))
      throw DomainError("semi-infinite film requires a decaying wavenumber");
    return a1;
  }
  const complex x = complex{0.0, 2.0} * kz * d;
  const complex p = std::exp(x);
  if (std::abs(p) < 0.5) {
    const complex pr = p * checked_quotient(a1 - a2, a1 + a2, what);
    return a1 * checked_quotient(1.0 - pr, 1.0 + pr, what);
  }
  const complex md = expm1(x) * (a1 - a2);
  return a1 * checked_quotient(2.0 * a2 - md, 2.0 * a1 + md, what);
}

// (a0 - A) / (a0 + A): equal to (r01 + r12 p) / (1 + r01 r12 p) with
// r_ij = (a_i - a_j) / (a_i + a_j), but the loss is never formed from
// cancelling O(1) terms.
complex layered_reflection(complex a0, complex input, const char* what) {
  return checked_quotient(a0 - input, a0 + input, what);
}

} // namespace

void LayerStack::validate() const {
  if (layers.size() < 2 || layers.size() > 3)
    throw DomainError("layer stack must have 2 or 3 layers, got " +
                      std::to_string(layers.size()));
  if (!layers.front().material.is_vacuum())
    throw DomainError("the top layer (atom side) must be vacuum");
  if (!(temperature >= 0.0)) throw DomainError("stack temperature must be non-negative");
  if (layers.size() == 3) {
    const double d = layers[1].thickness;
    if (!(d >= 0.0) || !std::isfinite(d))
      throw DomainError("film thickness must be finite and non-negative");
  }
  for (const auto& l : layers) l.material.validate();
}

double LayerStack::film_thickness() const {
  return layers.size() == 3 ? layers[1].thickness : 0.0;
}

bool LayerStack::has_uniaxial_layer() const {
  for (const auto& l : layers)
    if (l.material.is_uniaxial()) return true;
  return false;
}

LayerStack make_two_layer(MaterialModel substrate, double temperature) {
  LayerStack s{{{make_vacuum(), kSemiInfinite}, {std::move(substrate), kSemiInfinite}},
               temperature};
  s.validate();
  return s;
}

LayerStack make_three_layer(MaterialModel film, double d, MaterialModel substrate,
                            double temperature) {
  LayerStack s{{{make_vacuum(), kSemiInfinite},
                {std::move(film), d},
                {std::move(substrate), kSemiInfinite}},
               temperature};
  s.validate();
  return s;
}

LayerStack as_three_layer(const LayerStack& stack) {
  stack.validate();
  if (stack.layers.size() == 3) return stack;
  LayerStack s = stack;
  s.layers.insert(s.layers.begin() + 1, Layer{stack.layers[1].material, 0.0});
  return s;
}

complex decaying_sqrt(complex arg) {
  complex r = std::sqrt(arg);
  if (r.imag() < 0.0 || (r.imag() == 0.0 && r.real() < 0.0)) r = -r;
  return r;
}

LayerWavevectors layer_wavevectors(double eta, double omega,
                                   const PermittivityTensor& eps) {
  if (!(eta >= 0.0)) throw DomainError("transverse wavenumber must be non-negative");
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  if (eps.eps_z == complex{0.0, 0.0})
    throw DomainError("singular material: eps_z = 0");
  const double k = omega / kConstants.c;
  const complex kt_sq = k * k * eps.eps_t;
  const complex h1 = decaying_sqrt(kt_sq - eta * eta);
  if (eps.isotropic()) return {h1, h1};
  // eta^2 (1 - eps_t/eps_z) + k^2 eps_t - eta^2, without the eta^2 cancellation
  const complex h2 = decaying_sqrt(kt_sq - eta * eta * (eps.eps_t / eps.eps_z));
  return {h1, h2};
}

complex fresnel_te(complex k1z, complex k2z) {
  return checked_quotient(k1z - k2z, k1z + k2z, "fresnel_te");
}

complex generalized_r_te(complex r12, complex r23, complex k2z, double d) {
  if (!(d >= 0.0)) throw DomainError("film thickness must be non-negative");
  const complex phase = round_trip_phase(k2z, d);
  const complex r21 = -r12;
  return checked_quotient(r12 + r23 * phase, 1.0 - r21 * r23 * phase,
                          "generalized_r_te");
}

complex interface_rh(complex h_f, complex h_f1) {
  return checked_quotient(h_f1 - h_f, h_f1 + h_f, "interface_rh");
}

complex interface_rv(complex h_f, complex h_f1, complex k_f_sq, complex k_f1_sq) {
  const complex a = h_f * k_f1_sq;
  const complex b = h_f1 * k_f_sq;
  return checked_quotient(a - b, a + b, "interface_rv");
}

complex interface_rv_weighted(complex h_f, complex h_f1, complex k_f_sq,
                              complex k_f1_sq, double w1, double w2) {
  const complex upper = h_f * ((w1 - w2) * h_f1 * h_f1 + w2 * k_f1_sq);
  const complex lower = h_f1 * ((w1 - w2) * h_f * h_f + w2 * k_f_sq);
  const complex x = checked_quotient(upper, lower, "interface_rv_weighted");
  return checked_quotient(x - 1.0, x + 1.0, "interface_rv_weighted");
}

StackResponse::StackResponse(const LayerStack& stack, double omega)
    : omega_(omega), k_(omega / kConstants.c) {
  if (!(omega > 0.0)) throw DomainError("angular frequency must be positive");
  const LayerStack s = as_three_layer(stack);
  for (int l = 0; l < 3; ++l) {
    eps_[l] = permittivity(s.layers[l].material, omega, s.temperature);
    if (eps_[l].eps_z == complex{0.0, 0.0})
      throw DomainError("singular material: eps_z = 0");
    kt_sq_[l] = k_ * k_ * eps_[l].eps_t;
    if (kt_sq_[l] == complex{0.0, 0.0})
      throw DomainError("singular material: eps_t = 0");
  }
  d_ = s.layers[1].thickness;
}

StackResponse::Wavevectors StackResponse::wavevectors(double eta) const {
  Wavevectors w;
  for (int l = 0; l < 3; ++l) w.h[l] = layer_wavevectors(eta, omega_, eps_[l]);
  return w;
}

complex StackResponse::reflection_te(const Wavevectors& w, const char* what) const {
  const complex input = film_input(w.h[1].h1, w.h[2].h1, w.h[1].h1, d_, what);
  return layered_reflection(w.h[0].h1, input, what);
}

complex StackResponse::reflection_v(const Wavevectors& w, const char* what) const {
  // TM admittances h2 / k_t^2
  complex a[3];
  for (int l = 0; l < 3; ++l) a[l] = w.h[l].h2 / kt_sq_[l];
  const complex input = film_input(a[1], a[2], w.h[1].h2, d_, what);
  return layered_reflection(a[0], input, what);
}

// bm = +r_te and bn = -r_v: both families carry an overall minus sign
// relative to the interface composition (R1 + R2 p) / (1 + R1 R2 p).
ScatteringCoefficients StackResponse::scattering(double eta) const {
  const Wavevectors w = wavevectors(eta);
  return {reflection_te(w, "scattering coefficient (M)"),
          -reflection_v(w, "scattering coefficient (N)")};
}

complex StackResponse::r_te(double eta) const {
  return reflection_te(wavevectors(eta), "film TE coefficient");
}

complex StackResponse::r_v(double eta) const {
  return reflection_v(wavevectors(eta), "film V coefficient");
}

ScatteringCoefficients scattering_coefficients(const LayerStack& stack, double eta,
                                               double omega) {
  return StackResponse(stack, omega).scattering(eta);
}

complex stack_r_te(const LayerStack& stack, double eta, double omega) {
  return StackResponse(stack, omega).r_te(eta);
}

complex stack_r_v(const LayerStack& stack, double eta, double omega) {
  return StackResponse(stack, omega).r_v(eta);
}

} // namespace scnoise
