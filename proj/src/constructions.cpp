#include "polytrope/constructions.hpp"

#include <stdexcept>

namespace polytrope {

Polytrope small_simplex(int d) {
  if (d < 1) throw std::invalid_argument("small_simplex needs d >= 1");
  // conv(0, e_1, e_1+e_2, ...) = { 1 >= x_1 >= x_2 >= ... >= x_d >= 0 }.
  WeightMatrix c(d);
  c.set(1, 0, TropScalar(Rational(1)));
  for (int k = 1; k < d; ++k) c.set(k + 1, k, TropScalar(Rational(0)));
  c.set(0, d, TropScalar(Rational(0)));
  return polytrope_from_inequalities(c);
}

Polytrope pyrope(int d) {
  if (d < 1) throw std::invalid_argument("pyrope needs d >= 1");
  const int n = d + 1;
  std::vector<Rational> entries(static_cast<std::size_t>(n) * n, Rational(1));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i) * n + i] = 0;
  return Polytrope(ClosedWeightMatrix(d, std::move(entries)));
}

EpsilonMatrix::EpsilonMatrix(int dim, Rational eps) : dim_(dim), eps_(std::move(eps)) {
  if (dim < 1) throw std::invalid_argument("epsilon matrix needs d >= 1");
  if (eps_ <= 0 || eps_ >= Rational(1, 2))
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  const int n = dim + 1;
  std::vector<Rational> powers(static_cast<std::size_t>(n));
  powers[0] = 0;  // diagonal
  Rational p(1);
  for (int j = 1; j < n; ++j) {
    p *= eps_;
    powers[static_cast<std::size_t>(j)] = p;
  }
  entries_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      entries_[static_cast<std::size_t>(i) * n + j] = powers[static_cast<std::size_t>((j - i + n) % n)];
}

const Rational& EpsilonMatrix::at(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * (dim_ + 1) + static_cast<std::size_t>(j)];
}

EpsilonMatrix epsilon_matrix(int d, const Rational& eps) { return EpsilonMatrix(d, eps); }

Polytrope perturbed_pyrope(int d, const std::vector<std::vector<Rational>>& e) {
  if (d < 1) throw std::invalid_argument("perturbed pyrope needs d >= 1");
  const int n = d + 1;
  if (static_cast<int>(e.size()) != n)
    throw std::invalid_argument("perturbation matrix must be (d+1) x (d+1)");
  for (const auto& row : e) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("perturbation matrix must be (d+1) x (d+1)");
    for (const auto& v : row)
      if (v < 0 || v >= Rational(1, 2))
        throw std::invalid_argument("perturbation entries must lie in [0, 1/2)");
  }
  std::vector<TropPoint> generators;
  generators.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> coords(e[static_cast<std::size_t>(i)]);
    coords[static_cast<std::size_t>(i)] -= 1;
    generators.emplace_back(std::move(coords));
  }
  return Polytrope(matrix_from_vertices(PointConfig(d, std::move(generators))));
}

Polytrope perturbed_pyrope(const EpsilonMatrix& e) {
  const int n = e.dim() + 1;
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(e.at(i, j));
  return perturbed_pyrope(e.dim(), rows);
}

Polytrope associahedron(int n) {
  if (n < 3) throw std::invalid_argument("associahedron needs n >= 3");
  const int d = n - 2;
  // Coordinate k stands for the paper's x_{k+1}; x_1 = 0 is the
  // homogenizing coordinate and x_n = (n-1)^2 is eliminated against it.
  WeightMatrix c(d);
  for (int a = 0; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) c.set(a, b, TropScalar(Rational(-(b - a) * (b - a))));
  for (int a = 1; a <= d; ++a) {
    const int i = a + 1;  // paper index of the surviving coordinate
    c.set(a, 0, TropScalar(Rational((n - 1) * (n - 1) - (n - i) * (n - i))));
  }
  return polytrope_from_inequalities(c);
}

std::vector<ClosedWeightMatrix> fixtures_20() {
  static const long long raw[5][16] = {
      {0, 0, 2, 2, 4, 0, 4, 3, 4, 3, 0, 4, 6, 4, 4, 0},
      {0, 2, 2, 2, 4, 0, 4, 2, 4, 3, 0, 4, 6, 6, 4, 0},
      {0, 10, 11, 14, 14, 0, 10, 11, 11, 14, 0, 10, 10, 11, 14, 0},
      {0, 1, 2, 2, 8, 0, 8, 7, 10, 6, 0, 8, 6, 5, 4, 0},
      {0, 6, 6, 2, 6, 0, 2, 3, 11, 10, 0, 10, 8, 8, 9, 0},
  };
  std::vector<ClosedWeightMatrix> out;
  out.reserve(5);
  for (const auto& m : raw) {
    std::vector<Rational> entries(m, m + 16);
    out.emplace_back(3, std::move(entries));
  }
  return out;
}

}  // namespace polytrope
