#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace blockdual {

using IntVector = std::vector<long long>;

/// Dense square integer matrix, row major. Ranks are tiny (<= 8 for the types
/// we build), so no attempt is made to be clever.
struct IntMatrix {
  int n = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}

  static IntMatrix identity(int size) {
    IntMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
  }

  long long& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  long long at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const long long v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
      }
    return z;
  }

  IntVector apply(const IntVector& v) const {
    IntVector w(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i] += at(i, j) * v[j];
    return w;
  }

  bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  /// Byte string usable as a hash key.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(a.data()),
                       a.size() * sizeof(long long));
  }
};

}  // namespace blockdual
