#include "cw/exact/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::exact {

namespace {

std::atomic<std::uint32_t> g_max_order{10000};

using RationalPoly = std::vector<BigRational>;

std::int64_t checked_mul_sub(std::int64_t acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_sub_overflow(acc, prod, &out)) {
    throw Error(ErrorKind::OrderBound, "cyclotomic polynomial coefficient overflow");
  }
  return out;
}

// Exact quotient of `num` by a monic divisor.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  const std::size_t dn = den.size() - 1;
  IntPolynomial rem = num;
  IntPolynomial quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = rem[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] = checked_mul_sub(rem[i - dn + j], c, den[j]);
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (rem[i] != 0) throw Error(ErrorKind::Precondition, "inexact cyclotomic division");
  }
  return quot;
}

class PolynomialCache {
 public:
  static PolynomialCache& instance() {
    static PolynomialCache cache;
    return cache;
  }

  const IntPolynomial* find(std::uint32_t n) {
    std::shared_lock lock(mutex_);
    auto it = table_.find(n);
    return it == table_.end() ? nullptr : &it->second;
  }

  // First writer wins; later identical results are dropped.
  const IntPolynomial& insert(std::uint32_t n, IntPolynomial poly) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(n, std::move(poly));
    if (inserted) persist(n, it->second);
    return it->second;
  }

 private:
  PolynomialCache() { load(); }

  static std::filesystem::path cache_file() {
    const char* dir = std::getenv("CW_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::filesystem::path(dir) / "cyclotomic_polynomials.txt";
  }

  void load() {
    const auto path = cache_file();
    if (path.empty()) return;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::uint32_t n = 0;
      if (!(row >> n) || n == 0) continue;
      IntPolynomial poly;
      std::int64_t c = 0;
      while (row >> c) poly.push_back(c);
      // Stale or truncated lines are ignored and recomputed.
      if (poly.size() != euler_phi(n) + 1 || poly.back() != 1) continue;
      table_.emplace(n, std::move(poly));
    }
  }

  void persist(std::uint32_t n, const IntPolynomial& poly) {
    const auto path = cache_file();
    if (path.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) return;
    out << n;
    for (auto c : poly) out << ' ' << c;
    out << '\n';
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::uint32_t, IntPolynomial> table_;
};

void check_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::Precondition, "cyclotomic order must be positive");
  if (n > g_max_order.load()) {
    throw Error(ErrorKind::OrderBound,
                "order " + std::to_string(n) + " exceeds bound " + std::to_string(g_max_order.load()));
  }
}

std::uint32_t common_order(std::uint32_t a, std::uint32_t b) {
  const auto l = lcm_checked(a, b);
  check_order(l);
  return static_cast<std::uint32_t>(l);
}

// Reduces `v` modulo the monic Phi_n in place and truncates to phi(n) terms.
void reduce_mod_phi(RationalPoly& v, std::uint32_t n) {
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (sgn(v[i]) == 0) continue;
    const BigRational c = v[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) v[i - deg + j] -= c * static_cast<long>(phi[j]);
    }
    v[i] = 0;
  }
  v.resize(deg);
}

// Splits a rational vector into integer numerators over a common denominator.
std::pair<std::vector<BigInteger>, BigInteger> clear_denominators(std::span<const BigRational> v) {
  BigInteger den = 1;
  for (const auto& c : v) {
    if (c.get_den() != 1) den = lcm(den, BigInteger(c.get_den()));
  }
  std::vector<BigInteger> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  return {std::move(out), std::move(den)};
}

}  // namespace

std::uint32_t max_cyclotomic_order() noexcept { return g_max_order.load(); }

void set_max_cyclotomic_order(std::uint32_t bound) noexcept { g_max_order.store(bound); }

std::uint32_t euler_phi(std::uint32_t n) noexcept {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const IntPolynomial& cyclotomic_polynomial(std::uint32_t n) {
  check_order(n);
  auto& cache = PolynomialCache::instance();
  if (const auto* hit = cache.find(n)) return *hit;

  IntPolynomial num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    num = divide_exact(num, cyclotomic_polynomial(static_cast<std::uint32_t>(d)));
  }
  return cache.insert(n, std::move(num));
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(const BigRational& value) : order_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(std::int64_t value) : order_(1), coeffs_{BigRational(static_cast<long>(value))} {}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
  check_order(n);
  const auto e = static_cast<std::size_t>(mod(k, n));
  RationalPoly dense(e + 1);
  dense[e] = 1;
  Cyclotomic out;
  out.order_ = n;
  reduce_mod_phi(dense, n);
  out.coeffs_ = std::move(dense);
  return out;
}

Cyclotomic Cyclotomic::from_dense(std::uint32_t n, std::span<const BigRational> dense) {
  check_order(n);
  RationalPoly wrapped(std::min<std::size_t>(dense.size(), n));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) wrapped[i % n] += dense[i];
  }
  reduce_mod_phi(wrapped, n);
  Cyclotomic out;
  out.order_ = n;
  out.coeffs_ = std::move(wrapped);
  return out;
}

Cyclotomic Cyclotomic::from_canonical(std::uint32_t n, std::vector<BigRational> coeffs) {
  check_order(n);
  if (coeffs.size() != euler_phi(n)) {
    throw Error(ErrorKind::Precondition, "canonical coefficient vector must have length phi(n)");
  }
  Cyclotomic out;
  out.order_ = n;
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool Cyclotomic::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

BigRational Cyclotomic::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::NotRational, to_string());
  return coeffs_.front();
}

Cyclotomic Cyclotomic::embed(std::uint32_t target) const {
  if (target == order_) return *this;
  check_order(target);
  if (target % order_ != 0) throw Error(ErrorKind::Precondition, "embedding target must be a multiple of the order");
  Cyclotomic out;
  out.order_ = target;
  if (is_rational()) {
    out.coeffs_.assign(euler_phi(target), BigRational{});
    out.coeffs_[0] = coeffs_[0];
    return out;
  }
  const std::size_t step = target / order_;
  RationalPoly dense((coeffs_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[i * step] = coeffs_[i];
  reduce_mod_phi(dense, target);
  out.coeffs_ = std::move(dense);
  return out;
}

Cyclotomic Cyclotomic::simplified() const {
  if (order_ == 1 || !is_rational()) return *this;
  return Cyclotomic(coeffs_.front());
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  const auto kk = static_cast<std::uint64_t>(mod(k, order_));
  if (std::gcd<std::uint64_t>(kk, order_) != 1) {
    throw Error(ErrorKind::Precondition, "Galois exponent must be coprime to the order");
  }
  if (is_rational()) return *this;
  RationalPoly dense(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) dense[(i * kk) % order_] += coeffs_[i];
  }
  reduce_mod_phi(dense, order_);
  Cyclotomic out;
  out.order_ = order_;
  out.coeffs_ = std::move(dense);
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    Cyclotomic out = *this;
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Clear denominators, then solve M x = e_0 where column j of the integer
  // matrix M holds A * zeta^j. Fraction-free elimination keeps entries integral.
  const IntPolynomial& phi = cyclotomic_polynomial(order_);
  const std::size_t d = coeffs_.size();
  auto [column, den] = clear_denominators(coeffs_);

  std::vector<std::vector<BigInteger>> m(d, std::vector<BigInteger>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = column[i];
    const BigInteger top = column[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) column[i] = column[i - 1] - top * phi[i];
    column[0] = -top * phi[0];
  }
  m[0][d] = 1;

  BigInteger prev = 1;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t pivot = k;
    while (pivot < d && sgn(m[pivot][k]) == 0) ++pivot;
    if (pivot == d) throw Error(ErrorKind::Precondition, "non-invertible cyclotomic element");
    std::swap(m[k], m[pivot]);
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j <= d; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<BigRational> x(d);
  for (std::size_t i = d; i-- > 0;) {
    BigRational acc(m[i][d]);
    for (std::size_t j = i + 1; j < d; ++j) acc -= BigRational(m[i][j]) * x[j];
    x[i] = acc / BigRational(m[i][i]);
  }
  for (auto& c : x) c *= den;
  return from_canonical(order_, std::move(x));
}

Cyclotomic Cyclotomic::pow(std::int64_t exponent) const {
  Cyclotomic base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  Cyclotomic result(1);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  const auto n = common_order(order_, rhs.order_);
  if (n != order_) *this = embed(n);
  if (rhs.order_ == n) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else if (rhs.is_rational()) {
    coeffs_[0] += rhs.coeffs_[0];
  } else {
    const Cyclotomic other = rhs.embed(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  const auto n = common_order(order_, rhs.order_);
  if (rhs.is_rational()) {
    if (n != order_) *this = embed(n);
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    const BigRational scale = coeffs_[0];
    *this = rhs.embed(n);
    for (auto& c : coeffs_) c *= scale;
    return *this;
  }
  const Cyclotomic a = embed(n);
  const Cyclotomic b = rhs.embed(n);
  const auto [an, ad] = clear_denominators(a.coeffs_);
  const auto [bn, bd] = clear_denominators(b.coeffs_);
  std::vector<BigInteger> dense(an.size() + bn.size() - 1);
  for (std::size_t i = 0; i < an.size(); ++i) {
    if (sgn(an[i]) == 0) continue;
    for (std::size_t j = 0; j < bn.size(); ++j) {
      if (sgn(bn[j]) != 0) dense[i + j] += an[i] * bn[j];
    }
  }
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    const BigInteger c = dense[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) dense[i - deg + j] -= c * phi[j];
    }
  }
  dense.resize(deg);
  const BigInteger den = ad * bd;
  order_ = n;
  coeffs_.resize(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    coeffs_[i] = BigRational(dense[i], den);
    coeffs_[i].canonicalize();
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return compare(a, b) == 0; }

int compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) {
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (const int c = cmp(a.coeffs_[i], b.coeffs_[i]); c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
  }
  if (a.is_rational() && b.is_rational()) {
    // Rational values in any field have only the constant coefficient.
    const int c = cmp(a.coeffs_[0], b.coeffs_[0]);
    return c == 0 ? 0 : (c < 0 ? -1 : 1);
  }
  const auto n = common_order(a.order_, b.order_);
  return compare(a.embed(n), b.embed(n));
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z' << order_;
    if (i > 1) out << '^' << i;
  }
  if (first) out << '0';
  return out.str();
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    sum += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return sum;
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "cyclo_arith division by zero");
      return a / b;
  }
  throw Error(ErrorKind::Precondition, "unknown arithmetic operation");
}

}  // namespace cw::exact
