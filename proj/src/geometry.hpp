#pragma once

#include "model.hpp"
#include "rng.hpp"

namespace friendjam {

// Homogeneous PPP on a disk: Poisson count with mean intensity*pi*R^2, then
// uniform placement (radius by inverse CDF r = R*sqrt(u), angle uniform).
PointSet sample_ppp(double intensity, double region_radius, RngStream& rng);

// Keep-probability for an annulus node at radius r, r in [R1, R2].
//   Policy E: p
//   Policy I: (r^a - R1^a) / (R2^a - R1^a)
//   Policy D: (R2^a - r^a) / (R2^a - R1^a)
// For the degenerate annulus R1 == R2 the I/D ratio is 0/0; such a point is
// kept (measure-zero convention, matches the no-thinning limit).
double selection_probability(const JammingScheme& scheme, double alpha, double r);

// Thinning of the legitimate process into the jammer process: every point
// with r < R1 is kept, each point with R1 <= r <= R2 is kept independently
// with selection_probability(r), points beyond R2 are dropped.
// Consumes exactly one uniform per annulus candidate, in input order, so
// paired-randomness couplings across p values line up draw for draw.
PointSet select_jammers(const PointSet& legit, const JammingScheme& scheme,
                        double alpha, RngStream& rng);

// Unit-mean Rayleigh-fading power coefficient.
double sample_fading(RngStream& rng);

// Density of the distance from the origin to the nearest eavesdropper of a
// PPP with intensity lambda_e on a disk of radius D:
//   2*lambda_e*pi*r*exp(-lambda_e*pi*r^2) on [0, D], 0 elsewhere.
// Defective: total mass is 1 - exp(-lambda_e*pi*D^2) (the missing mass is the
// empty-process event).
double nearest_eaves_pdf(double r, double lambda_e, double disk_radius);

// Expected number of selected annulus jammers, lambda * int 2*pi*r*P(r) dr.
double expected_lfa_jammers(const JammingScheme& scheme, double alpha, double lambda);

}  // namespace friendjam
