#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "fc/coeff.hpp"
#include "fc/error.hpp"

namespace fc {

// Finite linear combination of canonical strings. Keys always carry phase 0;
// string phases are folded into the coefficients, zero strings and zero
// coefficients are dropped. S must provide width(), phase(), bare(),
// is_zero(), dagger(), ordering, and a product `S * S`.
template <class S>
class OperatorSum {
 public:
  using Map = std::map<S, Coeff>;

  OperatorSum() = default;
  explicit OperatorSum(std::size_t width) : width_(width) {}
  OperatorSum(const S& s, const Coeff& c = Coeff::one()) : width_(s.width()) { add(s, c); }  // NOLINT

  static OperatorSum identity(std::size_t width) { return OperatorSum(S::identity(width)); }

  std::size_t width() const { return width_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coefficient(const S& s) const {
    auto it = terms_.find(s.bare());
    if (it == terms_.end()) return Coeff::zero();
    return it->second.times_i_pow(-s.phase());
  }

  void add(const S& s, const Coeff& c) {
    if (s.is_zero() || c.is_zero()) return;
    adopt(s.width());
    Coeff v = c.times_i_pow(s.phase());
    S key = s.bare();
    auto [it, inserted] = terms_.try_emplace(std::move(key), v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OperatorSum& operator+=(const OperatorSum& o) {
    adopt(o.width_);
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  OperatorSum& operator-=(const OperatorSum& o) {
    adopt(o.width_);
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
  }
  OperatorSum& operator*=(const Coeff& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    Map out;
    for (auto& [s, c] : terms_) {
      Coeff v = c * k;
      if (!v.is_zero()) out.emplace(s, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(OperatorSum a, const Coeff& k) { return a *= k; }
  friend OperatorSum operator*(const Coeff& k, OperatorSum a) { return a *= k; }
  OperatorSum operator-() const { return *this * Coeff(-1); }

  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
    OperatorSum out(a.width_ ? a.width_ : b.width_);
    for (const auto& [sa, ca] : a.terms_)
      for (const auto& [sb, cb] : b.terms_) out.add(sa * sb, ca * cb);
    return out;
  }

  OperatorSum dagger() const {
    OperatorSum out(width_);
    for (const auto& [s, c] : terms_) out.add(s.dagger(), c.conj());
    return out;
  }

  template <class F>
  OperatorSum map_coeffs(F&& f) const {
    OperatorSum out(width_);
    for (const auto& [s, c] : terms_) out.add(s, f(c));
    return out;
  }

  OperatorSum to_float(const Bindings& b = {}) const {
    return map_coeffs([&](const Coeff& c) { return c.to_float(b); });
  }

  // Drops float coefficients with modulus at or below tol.
  OperatorSum chop(double tol) const {
    OperatorSum out(width_);
    for (const auto& [s, c] : terms_)
      if (c.has_symbols() || std::abs(c.value()) > tol) out.add(s, c);
    return out;
  }

  friend bool operator==(const OperatorSum& a, const OperatorSum& b) { return a.terms_ == b.terms_; }

 private:
  void adopt(std::size_t w) {
    if (w == 0) return;
    if (width_ == 0)
      width_ = w;
    else if (width_ != w)
      throw WidthMismatch(width_, w);
  }

  std::size_t width_ = 0;
  Map terms_;
};

template <class S>
OperatorSum<S> commutator(const OperatorSum<S>& a, const OperatorSum<S>& b) {
  return a * b - b * a;
}

}  // namespace fc
