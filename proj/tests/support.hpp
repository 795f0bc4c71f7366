#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "idemlin/finite_semiring.hpp"
#include "idemlin/io.hpp"
#include "idemlin/linear_solver.hpp"
#include "idemlin/tropical.hpp"

namespace idemlin::testing {

inline std::string fixture(const std::string& name) { return std::string(IDEMLIN_FIXTURE_DIR) + "/" + name; }

// Worked max-plus examples, column form AX = Y (rows are equations).
inline const std::vector<std::vector<std::int64_t>> kExample1A = {
    {-4, 7, 12, -3, 0}, {3, 2, 8, 3, -1}, {-9, 1, 6, 0, 2}, {2, 8, -5, 1, -3}};
inline const std::vector<std::int64_t> kExample1Y = {14, 10, 8, 11};

inline const std::vector<std::vector<std::int64_t>> kExample2A = {
    {165, 57, 72, -7, 0}, {141, 64, 48, 3, -1}, {137, 101, 46, 0, 2}, {-243, 98, -206, 156, -5}};
inline const std::vector<std::int64_t> kExample2Y = {102, 78, 76, 160};

inline LinearSystem<MaxPlusInt> example1() {
  return make_system(MaxPlusInt{}, Matrix<std::int64_t>::from_rows(kExample1A), kExample1Y, Orientation::ax);
}

inline LinearSystem<MaxPlusInt> example2() {
  return make_system(MaxPlusInt{}, Matrix<std::int64_t>::from_rows(kExample2A), kExample2Y, Orientation::ax);
}

/// 1-based copy of 0-based index sets, for comparing with hand-written tables.
inline std::vector<std::vector<std::size_t>> one_based(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) {
    auto& o = out.emplace_back();
    for (auto e : s) o.push_back(e + 1);
  }
  return out;
}

/// Every vector in carrier^n, in odometer order.
template <class V, class F>
void for_each_vector(const std::vector<V>& carrier, std::size_t n, F&& f) {
  std::vector<std::size_t> digits(n, 0);
  std::vector<V> x(n, carrier.front());
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = carrier[digits[i]];
    f(x);
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == carrier.size()) digits[pos++] = 0;
    if (pos == n) return;
  }
}

template <class V>
Matrix<V> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const std::vector<V>& carrier) {
  std::uniform_int_distribution<std::size_t> pick(0, carrier.size() - 1);
  std::vector<V> entries(rows * cols);
  for (auto& e : entries) e = carrier[pick(rng)];
  return Matrix<V>(rows, cols, std::move(entries));
}

inline Matrix<std::int64_t> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                              std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  std::vector<std::int64_t> entries(rows * cols);
  for (auto& e : entries) e = pick(rng);
  return Matrix<std::int64_t>(rows, cols, std::move(entries));
}

}  // namespace idemlin::testing
