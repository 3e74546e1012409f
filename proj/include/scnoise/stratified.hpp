#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "scnoise/materials.hpp"

namespace scnoise {

/// A vanishing denominator in an interface or film coefficient. Lossy passive
/// media keep these away from zero, so hitting one signals a branch or usage
/// error rather than physics.
class ResonanceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSemiInfinite = std::numeric_limits<double>::infinity();

struct Layer {
  MaterialModel material;
  double thickness = kSemiInfinite; // m; ignored for the outer layers
};

/// Planar stack ordered from the atom side (layer 1, vacuum) to the substrate.
/// The whole structure sits at one equilibrium temperature.
struct LayerStack {
  std::vector<Layer> layers;
  double temperature = 4.2; // K

  /// Throws DomainError unless the stack has 2 or 3 layers with vacuum on top
  /// and a non-negative film thickness.
  void validate() const;
  /// Thickness of the film (layer 2 of a three-layer stack), 0 for two layers.
  double film_thickness() const;
  bool has_uniaxial_layer() const;
};

/// Vacuum over a bare substrate.
LayerStack make_two_layer(MaterialModel substrate, double temperature);
/// Vacuum / film of thickness d / substrate.
LayerStack make_three_layer(MaterialModel film, double d, MaterialModel substrate,
                            double temperature);
/// Three-layer view of `stack`: a two-layer stack gains a zero-thickness film
/// made of its substrate material.
LayerStack as_three_layer(const LayerStack& stack);

/// Principal square root with the decaying branch selected: Im >= 0, and
/// Re >= 0 when the result is real.
complex decaying_sqrt(complex arg);

struct LayerWavevectors {
  complex h1; // ordinary (TE / M family)
  complex h2; // extraordinary (TM / N family)
};

/// z-wavenumbers of the two families in a uniaxial layer at transverse
/// wavenumber eta.
LayerWavevectors layer_wavevectors(double eta, double omega,
                                   const PermittivityTensor& eps);

/// (k1z - k2z) / (k1z + k2z).
complex fresnel_te(complex k1z, complex k2z);

/// Film reflection (r12 + r23 e^{2i k2z d}) / (1 - r21 r23 e^{2i k2z d}).
complex generalized_r_te(complex r12, complex r23, complex k2z, double d);

/// (h_{f+1} - h_f) / (h_{f+1} + h_f); equal to -fresnel_te(h_f, h_{f+1}).
complex interface_rh(complex h_f, complex h_f1);

/// V-family interface coefficient with unit weights, in its reduced form
/// (h_f k_{f+1}^2 - h_{f+1} k_f^2) / (h_f k_{f+1}^2 + h_{f+1} k_f^2).
/// Takes squared wavenumbers.
complex interface_rv(complex h_f, complex h_f1, complex k_f_sq, complex k_f1_sq);

/// The weighted V coefficient before reduction, with weights w1 and w2.
/// interface_rv() equals this at w1 = w2 = 1.
complex interface_rv_weighted(complex h_f, complex h_f1, complex k_f_sq,
                              complex k_f1_sq, double w1, double w2);

/// Phase-referenced film scattering coefficients, i.e. the raw coefficients
/// times e^{+2 i h_1 d}, so that they pair with e^{2 i h z} for an atom at
/// height z above the top interface.
struct ScatteringCoefficients {
  complex bm; // M family (H interfaces, ordinary wavenumbers)
  complex bn; // N family (V interfaces, extraordinary wavenumbers)
};

ScatteringCoefficients scattering_coefficients(const LayerStack& stack, double eta,
                                               double omega);

/// Layer permittivities of a stack at one frequency, evaluated once so that
/// integrands can sweep eta cheaply. Stateless after construction.
class StackResponse {
public:
  StackResponse(const LayerStack& stack, double omega);

  ScatteringCoefficients scattering(double eta) const;
  complex r_te(double eta) const;
  complex r_v(double eta) const;

  double omega() const { return omega_; }
  double vacuum_wavenumber() const { return k_; }
  double film_thickness() const { return d_; }
  const PermittivityTensor& eps(int layer) const { return eps_[layer]; }

private:
  struct Wavevectors {
    LayerWavevectors h[3];
  };
  Wavevectors wavevectors(double eta) const;
  complex reflection_te(const Wavevectors& w, const char* what) const;
  complex reflection_v(const Wavevectors& w, const char* what) const;

  PermittivityTensor eps_[3];
  complex kt_sq_[3];
  double omega_;
  double k_;
  double d_;
};

/// Generalized TE reflection r12~ of the stack (isotropic rate path).
complex stack_r_te(const LayerStack& stack, double eta, double omega);

/// Film composition of two V interfaces, the TM analogue of stack_r_te().
complex stack_r_v(const LayerStack& stack, double eta, double omega);

} // namespace scnoise
