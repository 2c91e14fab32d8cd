#include "fc/batch.hpp"

#include <exception>
#include <vector>

namespace fc {

namespace {

template <class Sum, class F>
Sum map_terms_parallel(const Sum& h, F&& f) {
  std::vector<std::pair<typename Sum::Map::key_type, Coeff>> items(h.begin(), h.end());
  std::vector<Sum> parts(items.size());
  std::exception_ptr err;
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < n; ++t) {
    try {
      parts[t] = f(items[t].first) * items[t].second;
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  Sum out(h.width());
  for (const auto& p : parts) out += p;
  return out;
}

template <class Sum, class F>
Sum map_terms_serial(const Sum& h, F&& f) {
  Sum out(h.width());
  for (const auto& [s, c] : h) out += f(s) * c;
  return out;
}

}  // namespace

FermionicSum conjugate_terms(const FermionicSum& h, const Generator& g, const Angle& theta) {
  return map_terms_parallel(h, [&](const FermionicString& s) { return general_conjugate(s, g, theta); });
}

FermionicSum conjugate_terms_serial(const FermionicSum& h, const Generator& g, const Angle& theta) {
  return map_terms_serial(h, [&](const FermionicString& s) { return general_conjugate(s, g, theta); });
}

PauliSum conjugate_terms(const PauliSum& h, const PauliSum& u) {
  PauliSum ud = u.dagger();
  return map_terms_parallel(h, [&](const PauliString& s) { return u * PauliSum(s) * ud; });
}

PauliSum conjugate_terms_serial(const PauliSum& h, const PauliSum& u) {
  PauliSum ud = u.dagger();
  return map_terms_serial(h, [&](const PauliString& s) { return u * PauliSum(s) * ud; });
}

}  // namespace fc
