#include "septet/polynomial.hpp"

#include <algorithm>

#include "septet/error.hpp"

namespace septet {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::remainder(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> r = c_;
  const int dd = divisor.degree();
  const Rational& lead = divisor.leading();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[static_cast<std::size_t>(k)] == 0) continue;
    Rational factor = r[static_cast<std::size_t>(k)] / lead;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.c_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> c = p.c_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Rational> c(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + septet::to_string(c_[k]) + ")";
    if (k > 0) out += "*t^" + std::to_string(k);
  }
  return out;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw Error(ErrorKind::InvalidArgument, "interpolation size mismatch");
  // Newton divided differences, then expand the Newton form.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial acc({dd[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * Polynomial({Rational(-xs[i]), Rational(1)});
    std::vector<Rational> c = acc.coeffs();
    if (c.empty()) c.resize(1);
    c[0] += dd[i];
    acc = Polynomial(std::move(c));
  }
  return acc;
}

namespace {

Polynomial scale_positive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational lead = abs(p.leading());
  std::vector<Rational> c = p.coeffs();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(scale_positive(p));
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(scale_positive(d));
  while (true) {
    Polynomial r = -seq[seq.size() - 2].remainder(seq.back());
    if (r.is_zero()) break;
    seq.push_back(scale_positive(r));
  }
  return seq;
}

int sign_variations(const std::vector<Polynomial>& seq, const Rational& t) {
  int variations = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_roots(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

namespace {

// A split point strictly inside (lo, hi) that is not a root of p, as close
// to the midpoint as needed: 1/2, then 1/3, 2/5, 3/7, ... of the way.
Rational split_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (long k = 1; p.sign_at(mid) == 0; ++k) mid = lo + (hi - lo) * Rational(k, 2 * k + 1);
  return mid;
}

}  // namespace

RootInterval refine_root(const std::vector<Polynomial>& seq, RootInterval iv, const Rational& max_width) {
  const Polynomial& p = seq.front();
  while (iv.hi - iv.lo > max_width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (p.sign_at(mid) == 0) return {mid, mid};
    if (count_roots(seq, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& max_width) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
  if (p.sign_at(a) == 0 || p.sign_at(b) == 0)
    throw Error(ErrorKind::InvalidArgument, "root isolation endpoint is a root");
  auto seq = sturm_sequence(p);
  std::vector<RootInterval> out;
  std::vector<RootInterval> work{{a, b}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    int n = count_roots(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(refine_root(seq, iv, max_width));
      continue;
    }
    Rational mid = split_point(p, iv.lo, iv.hi);
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace septet
