#pragma once

#include "morifiber/config.hpp"

namespace morifiber {

/// Parameters of a pluri-form dimension query: tensor power m >= 1 and the
/// number r of non-reduced fibers of the Mori fiber model.
struct PluriformQuery {
  long long m = 1;
  long long r = 0;
};

/// h^0 of a degree-d invertible sheaf on the projective line.
long long h0_line(long long d);

/// Largest k with 2k <= m: the twist picked up by pushing the m-th power of
/// the ramification divisor down to the line.
long long pushforward_exponent(long long m);

/// Dimension of the space of m-pluri-forms on a Mori fiber model with r
/// non-reduced fibers: h^0 of degree -2m + floor(m/2) * r on the line.
long long pluriform_dim(const PluriformQuery& q);
long long pluriform_dim(long long m, long long r);

/// Runs the model down to its Mori fiber model, counts non-reduced fibers
/// and evaluates pluriform_dim. The value is the dimension for the input
/// model as well: contractions of K-negative curves do not change it.
long long pluriform_dim_of_model(const SurfaceModel& model, long long m);

/// Genus of the degree-4 cover of the line ramified at 2 points (each of
/// index 2) over each of r >= 4 base points. Riemann-Hurwitz:
/// 2g - 2 = 4(-2) + 2r, so g = r - 3.
long long genus_cover(long long r);

/// h^0(E, mK_E) for a smooth curve of genus g >= 1: g when m = 1, 1 on an
/// elliptic curve, (2m-1)(g-1) when g >= 2 and m >= 2.
long long h0_pluricanonical_curve(long long g, long long m);

/// Consistency of the cover-side numerics: the pluri-form space embeds into
/// the pluri-canonical space of the cover, with equality in the elliptic
/// case r = 4 for even m.
bool invariant_dim_identity(long long r, long long m);

}  // namespace morifiber
