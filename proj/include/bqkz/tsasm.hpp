#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bqkz/mpoly.hpp"
#include "bqkz/report.hpp"

namespace bqkz {

using IntMatrix = std::vector<std::vector<int>>;

bool validate_asm(const IntMatrix& a);
/// ASM with a_ij = a_ji = a_i(M+1-j).
bool validate_tsasm(const IntMatrix& a);

/// Upper-left triangular part a_ij, 1 <= i <= j <= m, of a TSASM of size 2m+1.
class TsasmTriangle {
 public:
  explicit TsasmTriangle(int m) : m_(m), a_(static_cast<std::size_t>(m * (m + 1) / 2), 0) {}

  [[nodiscard]] int m() const { return m_; }
  /// 1-based, i <= j.
  [[nodiscard]] int at(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, int v) { a_[index(i, j)] = static_cast<std::int8_t>(v); }

  [[nodiscard]] int mu() const;
  [[nodiscard]] int nu() const;
  /// Full matrix of size 2m+1 from the symmetry relations and the alternating medians.
  [[nodiscard]] IntMatrix reconstruct() const;
  static TsasmTriangle from_matrix(const IntMatrix& a);

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    if (i < 1 || i > j || j > m_) throw std::out_of_range("TsasmTriangle: index outside the triangle");
    return static_cast<std::size_t>((i - 1) * m_ - (i - 1) * (i - 2) / 2 + (j - i));
  }
  int m_;
  std::vector<std::int8_t> a_;
};

/// Visits every TSASM triangle of size 2m+1 exactly once.
void enumerate_tsasm(int m, const std::function<void(const TsasmTriangle&)>& visit);
std::uint64_t count_tsasm(int m);

/// A_TS(2m+1; t, tau) accumulated over the enumeration.
MPoly tsasm_genfun(int m);
/// Same polynomial from a transfer recursion over partial column sums.
MPoly tsasm_genfun_dp(int m);

/// Paper counts A_TS(2m+1), m = 0..9.
const std::vector<std::uint64_t>& tsasm_reference_counts();
/// Paper table A_TS(2m+1; t, tau), m = 0..7.
MPoly tsasm_reference_genfun(int m);

/// Counts, table, round trip and DP agreement for m <= m_max.
Report check_tsasm_enumeration(int m_max);
/// A_TS(2N+3; 1, tau) = A_TS(2N+1; 1 + tau, tau) for N <= n_max.
Report check_shift_identity(int n_max);
/// S_N(x, tau) against the weighted TSASM sum for N <= n_max, and S_N(1,1) = A_TS(2N+3) for N <= n_ts.
Report check_conjecture_tsasm(int n_max, int n_ts);

}  // namespace bqkz
