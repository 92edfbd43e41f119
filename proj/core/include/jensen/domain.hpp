#pragma once

#include <vector>

#include "jensen/errors.hpp"
#include "jensen/types.hpp"

namespace jensen {

enum class DomainKind { UnitDisk, Disk, PlaneWindow };

// Planar domain the library computes on: the unit disk, a disk of radius R, or a
// finite window of radius R standing in for the whole plane.
struct DomainSpec {
  DomainKind kind = DomainKind::UnitDisk;
  double R = 1.0;

  static DomainSpec unit_disk() { return {DomainKind::UnitDisk, 1.0}; }
  static DomainSpec disk(double radius) { return {DomainKind::Disk, radius}; }
  static DomainSpec plane_window(double radius) { return {DomainKind::PlaneWindow, radius}; }

  bool bounded() const { return kind != DomainKind::PlaneWindow; }
  double reference_radius() const { return kind == DomainKind::UnitDisk ? 1.0 : R; }
  bool contains(Complex z, double margin = 0.0) const;
  void validate() const;
};

// Distance to the boundary; +infinity for the plane window.
double boundary_distance(const DomainSpec& domain, Complex z);

// Logarithmic boundary correction: log(1/dist) on bounded domains, log(2+|z|)
// on the plane.  Throws DomainError outside the domain.
double log_distance_weight(const DomainSpec& domain, Complex z);

enum class SigmaMode { Default14, Constant, Custom };

// Smoothing radius field sigma(z).  Admissibility 0 < sigma(z) < min(dist, |z|)
// is enforced at every query; Default14 is the self-clamping preset
// scale * min(1, dist/2, |z|/2), with dist(0)/2 taking over at the origin.
struct SigmaSpec {
  SigmaMode mode = SigmaMode::Default14;
  double scale = 1.0;
  double constant = 0.1;
  std::vector<double> table_radii;   // Custom: sorted radii
  std::vector<double> table_values;  // Custom: sigma at those radii

  static SigmaSpec default14(double scale = 1.0);
  static SigmaSpec constant_radius(double value);
  static SigmaSpec custom(std::vector<double> radii, std::vector<double> values,
                          double scale = 1.0);
  void validate() const;
};

double sigma_value(const SigmaSpec& sigma, const DomainSpec& domain, Complex z);

enum class SmoothingKernel { Circumference, Disk };

// sup of w over the closed disk of radius sigma(z) about z, taken on a fixed
// polar net (32 radii x 128 angles plus the center).
double smoothed_sup(const ScalarField& w, const SigmaSpec& sigma,
                    const DomainSpec& domain, Complex z);

// Mean of w over the circle (or disk) of radius sigma(z) about z.
double smoothed_mean(const ScalarField& w, const SigmaSpec& sigma,
                     const DomainSpec& domain, Complex z,
                     SmoothingKernel kernel = SmoothingKernel::Circumference,
                     int quad_nodes = 1024);

// Sup-smoothed weight plus four times the boundary correction.  This is the
// corrected weight appearing on the relaxed side of the membership criteria.
double corrected_weight(const ScalarField& weight, const SigmaSpec& sigma,
                        const DomainSpec& domain, Complex z);

}
