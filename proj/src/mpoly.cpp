#include "rweb/mpoly.hpp"

#include <sstream>

namespace rweb {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_[std::vector<int>(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int i) {
  MPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = 1;
  return p;
}

MPoly MPoly::linear(const std::vector<Rat>& coeffs) {
  int n = static_cast<int>(coeffs.size());
  MPoly p(n);
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(n, 0);
    e[i] = 1;
    p.terms_[e] = coeffs[i];
  }
  return p;
}

void MPoly::set_coeff(const std::vector<int>& expo, const Rat& c) {
  if (static_cast<int>(expo.size()) != nvars_) throw internal_error("exponent length mismatch");
  for (int e : expo)
    if (e < 0) throw internal_error("negative exponent");
  if (c == 0)
    terms_.erase(expo);
  else
    terms_[expo] = c;
}

Rat MPoly::coeff(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;  // leading term has maximal degree under grlex
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s != d) return false;
  }
  return true;
}

const std::vector<int>& MPoly::leading_monomial() const {
  if (terms_.empty()) throw internal_error("leading_monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rat& MPoly::leading_coeff() const {
  if (terms_.empty()) throw internal_error("leading_coeff of zero polynomial");
  return terms_.begin()->second;
}

MPoly MPoly::operator-() const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw internal_error("nvars mismatch in +");
  MPoly p = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = p.terms_.find(e);
    if (it == p.terms_.end()) {
      p.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw internal_error("nvars mismatch in *");
  MPoly p(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) {
        Rat c = ca * cb;
        if (c != 0) p.terms_.emplace(e, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  return p;
}

MPoly MPoly::scaled(const Rat& c) const {
  MPoly p(nvars_);
  if (c == 0) return p;
  for (const auto& [e, x] : terms_) p.terms_[e] = x * c;
  return p;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw internal_error("negative power");
  MPoly r = MPoly::constant(nvars_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::pair<MPoly, MPoly> MPoly::divmod(const MPoly& b) const {
  if (b.is_zero()) throw input_error("division by zero polynomial");
  if (nvars_ != b.nvars_) throw internal_error("nvars mismatch in divmod");
  MPoly q(nvars_), r(nvars_);
  MPoly p = *this;
  const auto& lmb = b.leading_monomial();
  const Rat& lcb = b.leading_coeff();
  while (!p.is_zero()) {
    const auto& lmp = p.leading_monomial();
    bool div = true;
    for (int i = 0; i < nvars_; ++i)
      if (lmp[i] < lmb[i]) {
        div = false;
        break;
      }
    if (div) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = lmp[i] - lmb[i];
      Rat c = p.leading_coeff() / lcb;
      MPoly t(nvars_);
      t.terms_[e] = c;
      q = q + t;
      p = p - t * b;
    } else {
      // Move the leading term to the remainder.
      MPoly t(nvars_);
      t.terms_[lmp] = p.leading_coeff();
      r = r + t;
      p = p - t;
    }
  }
  return {q, r};
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw internal_error("eval: point size mismatch");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

MPoly MPoly::partial_derivative(int var) const {
  MPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    p.terms_[d] = c * e[var];
  }
  return p;
}

std::optional<Rat> MPoly::proportionality(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return std::nullopt;
  if (terms_.size() != o.terms_.size()) return std::nullopt;
  if (leading_monomial() != o.leading_monomial()) return std::nullopt;
  Rat k = o.leading_coeff() / leading_coeff();
  auto ia = terms_.begin();
  auto ib = o.terms_.begin();
  for (; ia != terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ia->second * k != ib->second) return std::nullopt;
  }
  return k;
}

MPoly MPoly::normalized() const {
  if (is_zero()) return *this;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale = Rat(den_lcm) / Rat(num_gcd);
  if (leading_coeff() < 0) scale = -scale;
  return scaled(scale);
}

std::string MPoly::str(const std::vector<std::string>& var_names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Rat ac = abs(c);
    bool has_var = false;
    for (int x : e) has_var = has_var || x > 0;
    if (ac != 1 || !has_var) os << rat_str(ac);
    bool started = ac != 1 || !has_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (started) os << "*";
      started = true;
      if (!var_names.empty())
        os << var_names[i];
      else
        os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace rweb
