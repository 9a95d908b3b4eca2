#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "hopfelim/rational.hpp"

namespace hopfelim {

/// Sparse linear combination over a totally ordered basis-key type.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration visits keys in ascending order,
/// which makes every printed form deterministic.
template <class Key, class Compare = std::less<Key>>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(std::initializer_list<std::pair<const Key, Rational>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }

  static LinComb term(Key key, Rational coeff = 1) {
    LinComb r;
    r.add(std::move(key), coeff);
    return r;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.lower_bound(key);
    if (it != terms_.end() && !terms_.key_comp()(key, it->first)) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    } else {
      terms_.emplace_hint(it, std::move(key), coeff);
    }
  }

  // this += c * other
  void add_scaled(const LinComb& other, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational{} : it->second;
  }

  bool contains(const Key& key) const { return terms_.count(key) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  void erase(const Key& key) { terms_.erase(key); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  LinComb& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

template <class K, class C>
LinComb<K, C> lincomb_add(const LinComb<K, C>& x, const LinComb<K, C>& y) {
  return x + y;
}

template <class K, class C>
LinComb<K, C> lincomb_scale(const Rational& c, const LinComb<K, C>& x) {
  return c * x;
}

/// Rank over Q of a family of combinations, by exact elimination on leading keys.
template <class K, class C>
std::size_t rank(const std::vector<LinComb<K, C>>& rows) {
  std::map<K, LinComb<K, C>, C> pivots;
  for (LinComb<K, C> row : rows) {
    while (!row.is_zero()) {
      const auto& [lead, coeff] = *row.begin();
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        Rational inv = Rational(1) / coeff;
        K key = lead;
        row *= inv;
        pivots.emplace(std::move(key), std::move(row));
        break;
      }
      row.add_scaled(p->second, -coeff);
    }
  }
  return pivots.size();
}

}  // namespace hopfelim
