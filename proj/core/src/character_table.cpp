#include "cw/group/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "cw/error.hpp"
#include "cw/exact/number_theory.hpp"

namespace cw::group {

using exact::BigRational;
using exact::inv_mod;
using exact::pow_mod;

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

struct PrimeField {
  std::uint64_t q;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q - b) % q; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, q); }
};

std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t group_order) {
  for (std::uint64_t q = exponent + 1;; q += exponent) {
    if (q > 2 * group_order && exact::is_prime(q)) return q;
  }
}

// Similarity transform to upper Hessenberg form, in place.
void to_hessenberg(Matrix& a, const PrimeField& f) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t pivot = c + 1;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != c + 1) {
      std::swap(a[pivot], a[c + 1]);
      for (auto& row : a) std::swap(row[pivot], row[c + 1]);
    }
    const std::uint64_t inv = f.inv(a[c + 1][c]);
    for (std::size_t i = c + 2; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t u = f.mul(a[i][c], inv);
      for (std::size_t j = 0; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(u, a[c + 1][j]));
      for (std::size_t j = 0; j < n; ++j) a[j][c + 1] = f.add(a[j][c + 1], f.mul(u, a[j][i]));
    }
  }
}

// Characteristic polynomial of an upper Hessenberg matrix, coefficient of x^i at index i.
std::vector<std::uint64_t> hessenberg_charpoly(const Matrix& h, const PrimeField& f) {
  const std::size_t n = h.size();
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = p[m];
    cur.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[m - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(h[m - 1][m - 1], p[m - 1][i]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const std::uint64_t c = f.mul(h[m - i - 1][m - 1], t);
      if (c == 0) continue;
      for (std::size_t k = 0; k < p[m - i - 1].size(); ++k) cur[k] = f.sub(cur[k], f.mul(c, p[m - i - 1][k]));
    }
  }
  return p[n];
}

std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, const PrimeField& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.q; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

// One-dimensional kernel of a - lambda I, scaled so that entry 0 is 1.
std::optional<std::vector<std::uint64_t>> eigenvector(Matrix a, std::uint64_t lambda, const PrimeField& f) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i][i] = f.sub(a[i][i], lambda);
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const std::uint64_t inv = f.inv(a[row][c]);
    for (auto& v : a[row]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const std::uint64_t u = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(u, a[row][j]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  while (free_col < pivot_col.size() && pivot_col[free_col] == free_col) ++free_col;
  std::vector<std::uint64_t> v(n, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = f.sub(0, a[r][free_col]);
  if (v[0] == 0) return std::nullopt;
  const std::uint64_t inv = f.inv(v[0]);
  for (auto& x : v) x = f.mul(x, inv);
  return v;
}

std::int64_t exact_sqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? static_cast<std::int64_t>(r) : -1;
}

}  // namespace

std::vector<Cyclotomic> CharacterTable::values_on_powers(const FiniteGroup& group, std::size_t row,
                                                         std::size_t element) const {
  const std::size_t o = group.element_order(element);
  std::vector<Cyclotomic> out;
  out.reserve(o);
  std::size_t x = 0;
  for (std::size_t l = 0; l < o; ++l) {
    out.push_back(characters.at(row).at(partition.class_of[x]));
    x = group.multiply(x, element);
  }
  return out;
}

CharacterTable character_table_dixon(const FiniteGroup& group) {
  CharacterTable table;
  table.group_order = group.order();
  table.exponent = group.exponent();
  table.partition = conjugacy_classes(group);
  const auto& classes = table.partition.classes;
  const auto& class_of = table.partition.class_of;
  const std::size_t r = classes.size();
  const std::size_t n = group.order();

  const PrimeField f{choose_prime(table.exponent, n)};
  const std::uint64_t z = pow_mod(exact::least_primitive_root(f.q), (f.q - 1) / table.exponent, f.q);

  // c[j][l][k] = #{x in C_j : x^-1 g_k in C_l}; then omega_j omega_l = sum_k c[j][l][k] omega_k.
  std::vector<Matrix> structure(r, Matrix(r, std::vector<std::uint64_t>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t gk = classes[k].representative;
    for (std::size_t x = 0; x < n; ++x) {
      ++structure[class_of[x]][class_of[group.multiply(group.inverse(x), gk)]][k];
    }
  }

  std::mt19937_64 rng(0x5eed);
  std::vector<std::vector<std::uint64_t>> omegas;
  for (int attempt = 0; attempt < 32 && omegas.size() != r; ++attempt) {
    Matrix a(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t coeff = rng() % f.q;
      for (std::size_t l = 0; l < r; ++l) {
        for (std::size_t k = 0; k < r; ++k) a[l][k] = f.add(a[l][k], f.mul(coeff, structure[j][l][k] % f.q));
      }
    }
    Matrix h = a;
    to_hessenberg(h, f);
    const auto lambdas = roots(hessenberg_charpoly(h, f), f);
    if (lambdas.size() != r) continue;
    omegas.clear();
    for (auto lambda : lambdas) {
      auto v = eigenvector(a, lambda, f);
      if (!v) break;
      omegas.push_back(std::move(*v));
    }
  }
  if (omegas.size() != r) throw Error(ErrorKind::LiftFailure, "class algebra did not split over F_" + std::to_string(f.q));

  for (const auto& w : omegas) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = f.add(s, f.mul(f.mul(w[k], w[table.partition.inverse_class[k]]), f.inv(classes[k].size % f.q)));
    }
    const std::int64_t dim = exact_sqrt(f.mul(n % f.q, f.inv(s)));
    if (dim <= 0) throw Error(ErrorKind::LiftFailure, "degree is not a square root of a divisor of |G|");

    std::vector<std::uint64_t> chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(w[k], static_cast<std::uint64_t>(dim)), f.inv(classes[k].size % f.q));

    std::vector<Cyclotomic> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t g = classes[k].representative;
      const std::size_t o = classes[k].element_order;
      const std::uint64_t zo_inv = f.inv(pow_mod(z, table.exponent / o, f.q));
      std::vector<std::uint64_t> on_powers(o);
      std::size_t x = 0;
      for (std::size_t l = 0; l < o; ++l) {
        on_powers[l] = chi[class_of[x]];
        x = group.multiply(x, g);
      }
      const std::uint64_t o_inv = f.inv(o % f.q);
      std::vector<BigRational> mult(o);
      for (std::size_t j = 0; j < o; ++j) {
        const std::uint64_t step = pow_mod(zo_inv, j, f.q);
        std::uint64_t acc = 0;
        std::uint64_t root = 1;
        for (std::size_t l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(on_powers[l], root));
          root = f.mul(root, step);
        }
        const std::uint64_t m = f.mul(acc, o_inv);
        if (m > static_cast<std::uint64_t>(dim)) {
          throw Error(ErrorKind::LiftFailure, "eigenvalue multiplicity out of range on class " + std::to_string(k));
        }
        mult[j] = BigRational(static_cast<unsigned long>(m));
      }
      row[k] = Cyclotomic::from_dense(static_cast<std::uint32_t>(o), mult).simplified();
    }
    table.characters.push_back(std::move(row));
  }

  std::sort(table.characters.begin(), table.characters.end(), [](const auto& x, const auto& y) {
    if (const int c = compare(x[0], y[0]); c != 0) return c < 0;
    for (std::size_t k = 1; k < x.size(); ++k) {
      if (const int c = compare(x[k], y[k]); c != 0) return c < 0;
    }
    return false;
  });
  for (const auto& row : table.characters) table.dimensions.push_back(*exact::to_int64(row[0].to_rational()));
  return table;
}

bool OrthogonalityReport::passed() const noexcept { return dimension_sum_ok && failures() == 0; }

std::size_t OrthogonalityReport::failures() const noexcept {
  auto count = [](const std::vector<PairCheck>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const PairCheck& p) { return !p.passed; }));
  };
  return count(rows) + count(columns);
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table) {
  OrthogonalityReport report;
  const auto& classes = table.classes();
  const std::size_t r = classes.size();
  const std::size_t rows = table.characters.size();
  const BigRational order(static_cast<unsigned long>(table.group_order));

  std::vector<std::vector<Cyclotomic>> conj(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& v : table.characters[i]) conj[i].push_back(v.conj());
  }

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      Cyclotomic sum;
      for (std::size_t k = 0; k < r; ++k) {
        sum += Cyclotomic(static_cast<std::int64_t>(classes[k].size)) * table.characters[i][k] * conj[j][k];
      }
      sum = (sum / Cyclotomic(order)).simplified();
      report.rows.push_back({i, j, sum, sum == Cyclotomic(i == j ? 1 : 0)});
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < rows; ++i) sum += table.characters[i][a] * conj[i][b];
      sum = sum.simplified();
      const std::int64_t expected = a == b ? static_cast<std::int64_t>(table.group_order / classes[a].size) : 0;
      report.columns.push_back({a, b, sum, sum == Cyclotomic(expected)});
    }
  }
  std::int64_t dim_sq = 0;
  for (auto d : table.dimensions) dim_sq += d * d;
  report.dimension_sum_ok = rows == r && dim_sq == static_cast<std::int64_t>(table.group_order);
  return report;
}

}  // namespace cw::group
