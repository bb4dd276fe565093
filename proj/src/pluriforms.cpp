#include "morifiber/pluriforms.hpp"

#include "morifiber/mmp.hpp"

namespace morifiber {

long long h0_line(long long d) { return d >= 0 ? d + 1 : 0; }

long long pushforward_exponent(long long m) {
  if (m < 1) throw PreconditionError("tensor power must be positive");
  return m / 2;
}

long long pluriform_dim(const PluriformQuery& q) {
  if (q.m < 1) throw PreconditionError("tensor power must be positive");
  if (q.r < 0) throw PreconditionError("fiber count must be non-negative");
  return h0_line(-2 * q.m + pushforward_exponent(q.m) * q.r);
}

long long pluriform_dim(long long m, long long r) {
  return pluriform_dim(PluriformQuery{m, r});
}

long long pluriform_dim_of_model(const SurfaceModel& model, long long m) {
  MoriResult mori = to_mori_fiber(model);
  return pluriform_dim(m, count_nonreduced(mori.model));
}

long long genus_cover(long long r) {
  if (r < 4)
    throw PreconditionError("the 4:1 cover needs at least 4 branch points");
  return r - 3;
}

long long h0_pluricanonical_curve(long long g, long long m) {
  if (g < 1) throw PreconditionError("genus must be positive");
  if (m < 1) throw PreconditionError("tensor power must be positive");
  if (m == 1) return g;
  if (g == 1) return 1;
  return (2 * m - 1) * (g - 1);
}

bool invariant_dim_identity(long long r, long long m) {
  long long dim = pluriform_dim(m, r);
  long long cover = h0_pluricanonical_curve(genus_cover(r), m);
  if (dim > cover) return false;  // invariant part must embed
  if (r == 4 && m % 2 == 0 && dim != h0_pluricanonical_curve(1, m))
    return false;
  return true;
}

}  // namespace morifiber
