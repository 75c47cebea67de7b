#include "kproper/picard.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "kproper/errors.hpp"

namespace kproper {

namespace {

void check_r(int r) {
  if (r < 1 || r > 8) throw DomainError("number of blown-up points must be between 1 and 8");
}

// Multiplicity vectors (m_1..m_r), 0 <= m_i <= d, with given sum and sum of squares.
void enumerate_multiplicities(int r, int d, int sum, int squares, std::vector<std::int64_t>& cur,
                              std::vector<std::vector<std::int64_t>>& out) {
  const int k = static_cast<int>(cur.size());
  if (k == r) {
    if (sum == 0 && squares == 0) out.push_back(cur);
    return;
  }
  const int left = r - k;
  for (int m = 0; m <= d; ++m) {
    if (m > sum || m * m > squares) break;
    if (sum - m > (left - 1) * d) continue;
    cur.push_back(m);
    enumerate_multiplicities(r, d, sum - m, squares - m * m, cur, out);
    cur.pop_back();
  }
}

std::vector<PicardClass> compute_exceptional(int r) {
  std::vector<PicardClass> out;
  for (int i = 1; i <= r; ++i) out.push_back(PicardClass::exceptional(r, i));
  // d >= 1: C.K = -1 gives sum m = 3d - 1, C^2 = -1 gives sum m^2 = d^2 + 1.
  for (int d = 1; d <= 7; ++d) {
    std::vector<std::vector<std::int64_t>> mults;
    std::vector<std::int64_t> cur;
    enumerate_multiplicities(r, d, 3 * d - 1, d * d + 1, cur, mults);
    if (d == 7) {
      if (!mults.empty()) throw std::logic_error("exceptional class of degree 7 found; degree bound violated");
      break;
    }
    std::sort(mults.begin(), mults.end());
    for (const auto& m : mults) {
      RatVector coords{Rational(d)};
      for (auto x : m) coords.emplace_back(x);
      out.emplace_back(r, std::move(coords));
    }
  }
  return out;
}

}  // namespace

PicardClass::PicardClass(int r, RatVector coords) : r_(r), coords_(std::move(coords)) {
  check_r(r);
  if (coords_.size() != static_cast<std::size_t>(r) + 1)
    throw DomainError("Picard class needs r + 1 coordinates (d, m_1, ..., m_r)");
}

PicardClass PicardClass::hyperplane(int r) {
  check_r(r);
  RatVector c(static_cast<std::size_t>(r) + 1, Rational(0));
  c[0] = Rational(1);
  return PicardClass(r, std::move(c));
}

PicardClass PicardClass::exceptional(int r, int i) {
  check_r(r);
  if (i < 1 || i > r) throw DomainError("exceptional divisor index out of range");
  RatVector c(static_cast<std::size_t>(r) + 1, Rational(0));
  c[static_cast<std::size_t>(i)] = Rational(-1);
  return PicardClass(r, std::move(c));
}

PicardClass PicardClass::canonical(int r) {
  check_r(r);
  RatVector c(static_cast<std::size_t>(r) + 1, Rational(-1));
  c[0] = Rational(-3);
  return PicardClass(r, std::move(c));
}

std::string PicardClass::str() const {
  std::string out;
  auto term = [&](const Rational& coeff, const std::string& name) {
    if (coeff.is_zero()) return;
    const bool neg = coeff.sign() < 0;
    const Rational mag = coeff.abs();
    if (!out.empty() || neg) out += neg ? "-" : "+";
    if (mag != Rational(1)) out += mag.str();
    out += name;
  };
  term(coords_[0], "H");
  for (int i = 1; i <= r_; ++i) term(-coords_[static_cast<std::size_t>(i)], "E" + std::to_string(i));
  return out.empty() ? "0" : out;
}

PicardClass operator+(const PicardClass& a, const PicardClass& b) {
  if (a.r_ != b.r_) throw DomainError("classes live on different surfaces");
  return PicardClass(a.r_, a.coords_ + b.coords_);
}

PicardClass operator-(const PicardClass& a, const PicardClass& b) {
  if (a.r_ != b.r_) throw DomainError("classes live on different surfaces");
  return PicardClass(a.r_, a.coords_ - b.coords_);
}

PicardClass operator*(const Rational& s, const PicardClass& c) { return PicardClass(c.r_, s * c.coords_); }

Rational pairing(const PicardClass& a, const PicardClass& b) {
  if (a.r() != b.r()) throw DomainError("pairing: classes live on different surfaces");
  Rational v = a.coords()[0] * b.coords()[0];
  for (std::size_t i = 1; i < a.coords().size(); ++i) v -= a.coords()[i] * b.coords()[i];
  return v;
}

const std::vector<PicardClass>& exceptional_curves(int r) {
  check_r(r);
  static std::once_flag flags[9];
  static std::vector<PicardClass> cache[9];
  std::call_once(flags[r], [r] { cache[r] = compute_exceptional(r); });
  return cache[r];
}

std::array<std::size_t, 7> exceptional_census(int r) {
  std::array<std::size_t, 7> counts{};
  for (const auto& c : exceptional_curves(r)) {
    const auto d = c.degree().numerator().convert_to<int>();
    ++counts[static_cast<std::size_t>(d)];
  }
  return counts;
}

const std::vector<PicardClass>& test_curves(int r) {
  check_r(r);
  static std::once_flag flags[9];
  static std::vector<PicardClass> cache[9];
  std::call_once(flags[r], [r] {
    cache[r] = exceptional_curves(r);
    for (int i = 1; i <= r; ++i) cache[r].push_back(PicardClass::hyperplane(r) + PicardClass::exceptional(r, i));
  });
  return cache[r];
}

PicardPositivity picard_positivity(const PicardClass& d) {
  PicardPositivity out;
  const auto& curves = test_curves(d.r());
  std::optional<Rational> lowest;
  for (const auto& c : curves) {
    const Rational v = pairing(d, c);
    if (!lowest || v < *lowest) {
      lowest = v;
      out.binding_curve = c.str();
    }
  }
  out.min_pairing = *lowest;
  out.self_intersection = pairing(d, d);
  const bool curves_positive = out.min_pairing.sign() > 0;
  const bool curves_nonnegative = out.min_pairing.sign() >= 0;
  out.ample = curves_positive && out.self_intersection.sign() > 0;
  out.nef = curves_nonnegative && out.self_intersection.sign() >= 0;
  out.nakai_binding = (curves_positive && !out.ample) || (curves_nonnegative && !out.nef);
  return out;
}

bool is_ample_picard(const PicardClass& d) { return picard_positivity(d).ample; }
bool is_nef_picard(const PicardClass& d) { return picard_positivity(d).nef; }

PicardClass dp1_class(const Rational& lambda) {
  RatVector c(9, Rational(1));
  c[0] = Rational(3);
  c[8] = lambda;
  return PicardClass(8, std::move(c));
}

std::optional<std::pair<Rational, Rational>> dp1_parameters(const PicardClass& c) {
  if (c.r() != 8) return std::nullopt;
  const Rational a = c.coords()[0] / Rational(3);
  if (a.sign() <= 0) return std::nullopt;
  for (std::size_t i = 1; i <= 7; ++i)
    if (c.coords()[i] != a) return std::nullopt;
  return std::make_pair(a, c.coords()[8] / a);
}

}  // namespace kproper
