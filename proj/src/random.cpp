#include "argshift/random.hpp"

namespace argshift {

Rational random_rational(Rng& rng, long range) {
  Rational r(uniform_int(rng, -range, range), uniform_int(rng, 1, range));
  r.canonicalize();
  return r;
}

SparsePoly random_poly(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned terms) {
  SparsePoly p(nvars);
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(nvars);
    const unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, max_degree));
    for (unsigned k = 0; k < deg; ++k) {
      const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nvars) - 1));
      m.set(i, m[i] + 1);
    }
    p.add_term(m, random_rational(rng));
  }
  return p;
}

}  // namespace argshift
