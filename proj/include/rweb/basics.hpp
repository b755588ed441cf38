#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rweb {

// Exact arithmetic: GMP-backed. mpq_class keeps fractions reduced with a
// positive denominator, which is exactly the canonical form used in all
// file formats ("p/q", or "p" when q = 1).
using Int = mpz_class;
using Rat = mpq_class;

// Bad user input (malformed files, degenerate generator parameters). CLI exit 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured search/sampling budget ran out. CLI exit 3.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure (cross-checked invariants disagree).
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Deterministic pseudorandom stream of small-height rationals. Only used
// where an exact generic sample is needed (base points, evaluation points);
// sequences are reproducible from the seed across platforms.
class RatStream {
 public:
  explicit RatStream(std::uint64_t seed, long height = 8) : state_(seed), height_(height) {}

  std::uint64_t next_u64() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long next_long(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat next_rat() {
    long num = next_long(-height_, height_);
    long den = next_long(1, height_);
    return Rat(num, den);
  }

  std::vector<Rat> next_point(int dim) {
    std::vector<Rat> p(dim);
    for (auto& c : p) c = next_rat();
    return p;
  }

  void widen() { height_ *= 2; }
  long height() const { return height_; }

 private:
  std::uint64_t state_;
  long height_;
};

inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  std::size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    if (t.empty()) throw input_error("malformed rational: '" + s + "'");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw input_error("malformed rational: '" + s + "'");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw input_error("malformed rational: '" + s + "'");
  };
  Rat q;
  if (slash == std::string::npos) {
    check_int(s);
    q = Rat(Int(s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Int d(den);
    if (d == 0) throw input_error("zero denominator in rational: '" + s + "'");
    q = Rat(Int(num), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace rweb
