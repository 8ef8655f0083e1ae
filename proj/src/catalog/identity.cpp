#include "heunref/catalog/identity.hpp"

#include <algorithm>
#include <string>

#include "heunref/errors.hpp"

namespace heunref {

const char* to_string(StatusNote s) { return s == StatusNote::Known ? "KNOWN" : "CLAIMED_NEW"; }

ConcreteIdentity ConcreteIdentity::perturbed(double eps) const {
  ConcreteIdentity c = *this;
  auto base = antiderivative;
  c.antiderivative = [base, eps](const Dual& x) { return base(x) + eps * x; };
  return c;
}

bool Identity::has_variant(const std::string& v) const {
  return std::find(variants.begin(), variants.end(), v) != variants.end();
}

ConcreteIdentity instantiate(const Identity& idy, const ParamSet& params, const std::string& variant) {
  if (!idy.has_variant(variant)) throw ParameterError(idy.id + ": unknown variant '" + variant + "'");
  const ParamSet full = idy.complete(params);
  ConcreteIdentity c = idy.build(full, variant);
  c.interval = idy.default_interval(full);
  c.id = idy.id;
  c.variant = variant;
  c.params = full;
  return c;
}

Interval carve_interval(double lo, double hi, const std::vector<double>& bad, double margin, double min_length) {
  std::vector<Interval> pieces{{lo, hi}};
  for (double b : bad) {
    std::vector<Interval> next;
    for (const Interval& iv : pieces) {
      if (b + margin <= iv.lo || b - margin >= iv.hi) {
        next.push_back(iv);
        continue;
      }
      if (b - margin > iv.lo) next.push_back({iv.lo, b - margin});
      if (b + margin < iv.hi) next.push_back({b + margin, iv.hi});
    }
    pieces = std::move(next);
  }
  Interval best{0.0, 0.0};
  for (const Interval& iv : pieces)
    if (iv.hi - iv.lo > best.hi - best.lo) best = iv;
  if (best.hi - best.lo < min_length)
    throw IntervalError("no sub-interval of [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        "] of length " + std::to_string(min_length) + " avoids the singular points");
  return best;
}

}  // namespace heunref
