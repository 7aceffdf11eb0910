#include "galmod/integer_matrix.hpp"

#include <utility>

#include "galmod/error.hpp"

namespace galmod {

namespace {

void combine_rows(IntMatrix& a, std::size_t i, std::size_t j, const Integer& p, const Integer& q, const Integer& r,
                  const Integer& s) {
  // (row_i, row_j) <- (p*row_i + q*row_j, r*row_i + s*row_j)
  for (std::size_t c = 0; c < a[i].size(); ++c) {
    Integer x = a[i][c], y = a[j][c];
    a[i][c] = p * x + q * y;
    a[j][c] = r * x + s * y;
  }
}

void sub_multiple(IntMatrix& a, std::size_t target, std::size_t source, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < a[target].size(); ++c) a[target][c] -= f * a[source][c];
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  HermiteResult res;
  res.h = m;
  res.u.assign(rows, std::vector<Integer>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
  auto& h = res.h;
  auto& u = res.u;

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (h[i][col] == 0) continue;
      Integer a = h[pivot_row][col], b = h[i][col];
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      // [x y; -b/g a/g] has determinant 1
      combine_rows(h, pivot_row, i, x, y, -bg, ag);
      combine_rows(u, pivot_row, i, x, y, -bg, ag);
    }
    if (h[pivot_row][col] == 0) continue;
    if (h[pivot_row][col] < 0) {
      for (auto& v : h[pivot_row]) v = -v;
      for (auto& v : u[pivot_row]) v = -v;
    }
    const Integer& piv = h[pivot_row][col];
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][col].get_mpz_t(), piv.get_mpz_t());
      sub_multiple(u, i, pivot_row, q);
      sub_multiple(h, i, pivot_row, q);
    }
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

IntMatrix left_kernel(const IntMatrix& m) {
  auto res = hermite_normal_form(m);
  IntMatrix kernel(res.u.begin() + static_cast<std::ptrdiff_t>(res.rank), res.u.end());
  if (kernel.empty()) return kernel;
  return hermite_normal_form(kernel).h;
}

Integer abs_determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw Error(ErrorCode::Domain, "determinant of non-square matrix");
  auto res = hermite_normal_form(m);
  if (res.rank < m.size()) return 0;
  Integer d = 1;
  for (std::size_t i = 0; i < m.size(); ++i) d *= res.h[i][i];
  return abs(d);
}

}  // namespace galmod
