#include "hecke/pair.hpp"

namespace hecke {

std::uint64_t left_count(const Backend& backend, const DoubleCoset& d) {
  return backend.left_cosets_of(d).size();
}

CosetCounts coset_counts(const Backend& backend, const DoubleCoset& d) {
  std::uint64_t l = left_count(backend, d);
  DoubleCoset dinv = backend.canonical_double_coset(backend.inverse(d.rep));
  std::uint64_t r = left_count(backend, dinv);
  return {l, r};
}

Rational delta(const Backend& backend, const DoubleCoset& d) {
  CosetCounts c = coset_counts(backend, d);
  return Rational(mpq_class(static_cast<unsigned long>(c.left),
                            static_cast<unsigned long>(c.right)));
}

} // namespace hecke
