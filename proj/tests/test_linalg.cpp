#include <doctest.h>

#include "argshift/linalg.hpp"
#include "argshift/random.hpp"

using namespace argshift;

namespace {

// Plain dense Gaussian elimination over Q.
std::size_t dense_rank(RationalMatrix a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

RatRow to_row(const std::vector<Rational>& v) {
  RatRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return r;
}

Rational dot(const RatRow& a, const std::vector<Rational>& b) {
  Rational s;
  for (const auto& [c, v] : a) s += v * b[c];
  return s;
}

}  // namespace

TEST_CASE("identity and zero") {
  Echelon id(4);
  for (std::uint32_t i = 0; i < 4; ++i) CHECK(id.insert(RatRow{{i, Rational(1)}}));
  CHECK(id.rank() == 4);
  CHECK(id.kernel().empty());
  Echelon z(3);
  CHECK_FALSE(z.insert(RatRow{}));
  CHECK(z.rank() == 0);
  CHECK(z.kernel().size() == 3);
}

TEST_CASE("random matrices against dense elimination") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 6, cols = 8;
    RationalMatrix a(rows, std::vector<Rational>(cols));
    for (auto& row : a)
      for (auto& v : row)
        if (uniform_int(rng, 0, 2) == 0) v = random_rational(rng);
    // force some dependence
    if (trial % 2) a[5] = a[0];
    std::vector<RatRow> sparse;
    for (const auto& row : a) sparse.push_back(to_row(row));
    const std::size_t r = dense_rank(a);
    CHECK(rank_of(sparse, cols) == r);

    Echelon e(cols);
    for (const auto& row : sparse) e.insert(row);
    const auto ker = e.kernel();
    CHECK(ker.size() == cols - r);
    for (const auto& k : ker) {
      std::vector<Rational> kv(cols);
      for (const auto& [c, v] : k) kv[c] = v;
      for (const auto& row : sparse) CHECK(dot(row, kv) == 0);
    }
    const auto rr = e.rref();
    CHECK(rr.size() == r);
    for (const auto& row : sparse) CHECK(e.contains(row));
    for (const auto& row : rr) CHECK(row.front().second == 1);
  }
}

TEST_CASE("solve_dense") {
  RationalMatrix a{{2, 1}, {1, 3}};
  const auto x = solve_dense(a, {Rational(3), Rational(5)});
  CHECK(x[0] == Rational(4, 5));
  CHECK(x[1] == Rational(7, 5));
}
