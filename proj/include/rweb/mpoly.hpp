#pragma once

#include "rweb/basics.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rweb {

// Monomial order is fixed globally: graded lexicographic with variables in
// index order (x0 > x1 > ...). Division and coefficient extraction are
// deterministic under this order.
struct GrlexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    return a > b;  // lex on exponent vectors, x0 first
  }
};

class MPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rat, GrlexGreater>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly zero(int nvars) { return MPoly(nvars); }
  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int i);
  // Linear form from a covector.
  static MPoly linear(const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void set_coeff(const std::vector<int>& expo, const Rat& c);
  Rat coeff(const std::vector<int>& expo) const;

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  const std::vector<int>& leading_monomial() const;
  const Rat& leading_coeff() const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Rat& c) const;
  MPoly pow(int e) const;

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Single-divisor division: *this = q*b + r where no term of r is divisible
  // by the leading monomial of b. For a single divisor r is unique, so
  // r == 0 iff b divides *this.
  std::pair<MPoly, MPoly> divmod(const MPoly& b) const;
  bool divisible_by(const MPoly& b) const { return divmod(b).second.is_zero(); }

  Rat eval(const std::vector<Rat>& point) const;
  MPoly partial_derivative(int var) const;

  // Proportionality: returns k with o == k * *this (both nonzero), or
  // nullopt. Zero polynomials are handled by the caller.
  std::optional<Rat> proportionality(const MPoly& o) const;

  // Primitive integer form with positive leading coefficient; canonical
  // representative of the scalar class.
  MPoly normalized() const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

}  // namespace rweb
