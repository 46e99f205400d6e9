#include <array>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "haefliger/calculus.hpp"
#include "haefliger/error.hpp"

namespace haefliger {

namespace {

using Matrix = std::vector<std::vector<int>>;

// Writes `sign` times the identity of size n with its top-left entry at (row, col).
void put_identity(Matrix& a, int row, int col, int n, int sign) {
  for (int i = 0; i < n; ++i) a[row + i][col + i] = sign;
}

}  // namespace

std::vector<std::vector<int>> jacobian_matrix(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be positive");
  const int odd = 2 * k - 1;
  const int even = 2 * k;
  const int size = 16 * k - 4;

  // Each configuration point contributes a (2k-1)-block followed by a 2k-block.
  std::array<int, 8> col{};
  for (int b = 1; b < 8; ++b) col[b] = col[b - 1] + (b % 2 == 1 ? odd : even);

  Matrix a(size, std::vector<int>(size, 0));
  int row = 0;

  // First S^{6k-1} factor.
  put_identity(a, row, col[0], odd, 1);
  put_identity(a, row, col[2], odd, -1);
  row += odd;
  put_identity(a, row, col[1], even, 1);
  row += even;
  put_identity(a, row, col[3], even, -1);
  row += even;

  // Second S^{6k-1} factor.
  put_identity(a, row, col[6], odd, -1);
  row += odd;
  put_identity(a, row, col[4], odd, 1);
  row += odd;
  put_identity(a, row, col[5], odd, 1);
  put_identity(a, row, col[7], odd, -1);
  a[row + odd][col[5] + odd] = 1;
  a[row + odd + 1][col[7] + odd] = -1;
  row += even + 1;

  // S^{4k-2} factor.
  put_identity(a, row, col[2], odd, 1);
  put_identity(a, row, col[4], odd, -1);
  row += odd;
  put_identity(a, row, col[3], odd, 1);
  put_identity(a, row, col[5], odd, -1);
  row += odd;

  for (auto& r : a)
    for (auto& v : r) v = -v;
  return a;
}

std::int64_t jacobian_det(int k) {
  using boost::multiprecision::cpp_int;
  const Matrix src = jacobian_matrix(k);
  const std::size_t n = src.size();
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = src[i][j];

  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pivot = p;
    while (pivot < n && a[pivot][p] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != p) {
      std::swap(a[pivot], a[p]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  cpp_int det = sign * a[n - 1][n - 1];
  return det.convert_to<std::int64_t>();
}

}  // namespace haefliger
