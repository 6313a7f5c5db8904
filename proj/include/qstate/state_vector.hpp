#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qstate {

/// Integer type for amplitude indices and bit masks.
using index_t = std::uint64_t;

template <typename T>
concept Real = std::floating_point<T>;

template <Real T>
using Amplitude = std::complex<T>;

inline constexpr int kMaxQubits = 62;

constexpr index_t pow2(int k) noexcept { return index_t{1} << k; }

/// Value of qubit `q` in an amplitude index over `n` qubits. Qubit 0 is the
/// most significant bit.
constexpr index_t qubit_bit(int n, int q) noexcept { return pow2(n - q - 1); }

/// Bits [j_0 j_1 ... j_{n-1}] of index `j`, most significant first.
inline std::vector<int> index_bits(int n, index_t j) {
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    bits[static_cast<std::size_t>(q)] = (j & qubit_bit(n, q)) ? 1 : 0;
  }
  return bits;
}

inline index_t index_from_bits(std::span<const int> bits) {
  index_t j = 0;
  for (int b : bits) {
    j = (j << 1) | static_cast<index_t>(b & 1);
  }
  return j;
}

inline void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must lie in [1, " +
                                std::to_string(kMaxQubits) + "], got " +
                                std::to_string(n));
  }
}

/// Dense state vector of 2^n complex amplitudes in big-endian qubit order.
///
/// Kernels write to disjoint index sets from several threads during a single
/// gate application; the container itself performs no synchronization.
template <Real T>
class StateVector {
 public:
  using real_type = T;
  using value_type = std::complex<T>;

  /// All-zero vector on `nbQubits` qubits.
  explicit StateVector(int nbQubits)
      : nbQubits_(nbQubits), amps_((check_qubit_count(nbQubits), pow2(nbQubits))) {}

  StateVector(int nbQubits, std::vector<value_type> amplitudes)
      : nbQubits_(nbQubits), amps_(std::move(amplitudes)) {
    check_qubit_count(nbQubits);
    if (amps_.size() != pow2(nbQubits)) {
      throw std::invalid_argument("amplitude count " + std::to_string(amps_.size()) +
                                  " does not equal 2^" + std::to_string(nbQubits));
    }
  }

  int nbQubits() const noexcept { return nbQubits_; }
  index_t size() const noexcept { return amps_.size(); }

  value_type& operator[](index_t i) noexcept { return amps_[i]; }
  const value_type& operator[](index_t i) const noexcept { return amps_[i]; }

  value_type* data() noexcept { return amps_.data(); }
  const value_type* data() const noexcept { return amps_.data(); }

  std::span<value_type> amplitudes() noexcept { return amps_; }
  std::span<const value_type> amplitudes() const noexcept { return amps_; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int nbQubits_;
  std::vector<value_type> amps_;
};

template <Real T>
StateVector<T> basis_state(int n, index_t k) {
  check_qubit_count(n);
  if (k >= pow2(n)) {
    throw std::out_of_range("basis index " + std::to_string(k) + " outside [0, " +
                            std::to_string(pow2(n)) + ") for " + std::to_string(n) +
                            " qubits");
  }
  StateVector<T> s(n);
  s[k] = T{1};
  return s;
}

/// Euclidean norm, accumulated in double.
template <Real T>
double norm(const StateVector<T>& s) {
  double sum = 0.0;
  for (const auto& a : s.amplitudes()) {
    sum += std::norm(std::complex<double>(a));
  }
  return std::sqrt(sum);
}

template <Real T, Real U>
double max_abs_diff(const StateVector<T>& a, const StateVector<U>& b) {
  if (a.nbQubits() != b.nbQubits()) {
    throw std::invalid_argument("cannot compare states on " + std::to_string(a.nbQubits()) +
                                " and " + std::to_string(b.nbQubits()) + " qubits");
  }
  double m = 0.0;
  for (index_t j = 0; j < a.size(); ++j) {
    const double d = std::abs(std::complex<double>(a[j]) - std::complex<double>(b[j]));
    m = std::max(m, d);
  }
  return m;
}

template <Real U, Real T>
StateVector<U> state_cast(const StateVector<T>& s) {
  std::vector<std::complex<U>> amps(s.size());
  for (index_t j = 0; j < s.size(); ++j) {
    amps[j] = std::complex<U>(s[j]);
  }
  return StateVector<U>(s.nbQubits(), std::move(amps));
}

/// Normalized state with Gaussian-distributed amplitudes.
template <Real T, class Rng>
StateVector<T> random_state(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  std::vector<std::complex<double>> amps(pow2(n));
  double sum = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    sum += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(sum);
  std::vector<std::complex<T>> out(amps.size());
  for (std::size_t j = 0; j < amps.size(); ++j) {
    out[j] = std::complex<T>(amps[j] * scale);
  }
  return StateVector<T>(n, std::move(out));
}

}  // namespace qstate
