#include "gaskit/simulator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gaskit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

using Complex = std::complex<double>;

/// Statevector bit position of a circuit qubit id (key qubits live above the
/// value register; value qubit 0 is the top bit of z).
std::uint32_t state_bit(std::uint32_t qubit, std::uint32_t n, std::uint32_t m) {
  if (qubit < n) return m + qubit;
  return n + m - 1 - qubit;
}

void apply_hadamard(Eigen::VectorXcd& amps, std::uint32_t bit) {
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      const std::uint64_t s0 = base + off;
      const std::uint64_t s1 = s0 + stride;
      const Complex a = amps[static_cast<Eigen::Index>(s0)];
      const Complex b = amps[static_cast<Eigen::Index>(s1)];
      amps[static_cast<Eigen::Index>(s0)] = (a + b) * kInvSqrt2;
      amps[static_cast<Eigen::Index>(s1)] = (a - b) * kInvSqrt2;
    }
  }
}

void apply_x(Eigen::VectorXcd& amps, std::uint32_t bit) {
  const std::uint64_t stride = std::uint64_t{1} << bit;
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  for (std::uint64_t base = 0; base < dim; base += 2 * stride)
    for (std::uint64_t off = 0; off < stride; ++off)
      std::swap(amps[static_cast<Eigen::Index>(base + off)],
                amps[static_cast<Eigen::Index>(base + off + stride)]);
}

/// Phase e^{2 pi i a z / 2^m} on every basis state whose control bits are all
/// set; the modular product keeps the phase index exact for any coefficient.
void apply_phase_block(Eigen::VectorXcd& amps, const PhaseBlock& block, std::uint32_t n,
                       std::uint32_t m, bool inverse) {
  const std::uint64_t modulus = std::uint64_t{1} << m;
  Coeff folded = block.coefficient % static_cast<Coeff>(modulus);
  if (folded < 0) folded += static_cast<Coeff>(modulus);
  std::uint64_t a = static_cast<std::uint64_t>(folded);
  if (inverse) a = (modulus - a) % modulus;
  std::vector<Complex> phase(modulus);
  for (std::uint64_t w = 0; w < modulus; ++w)
    phase[w] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(w) /
                                   static_cast<double>(modulus));
  std::uint64_t control_mask = 0;
  for (auto q : block.controls) control_mask |= std::uint64_t{1} << state_bit(q, n, m);
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  const std::uint64_t zmask = modulus - 1;
  for (std::uint64_t s = 0; s < dim; ++s) {
    if ((s & control_mask) != control_mask) continue;
    const std::uint64_t z = s & zmask;
    amps[static_cast<Eigen::Index>(s)] *= phase[(a * z) & zmask];
  }
}

/// Inverse QFT on the value register, blockwise per key assignment:
/// out[k] = (1/sqrt(M)) sum_z w^{-kz} in[z]. `inverse` applies the forward
/// transform instead (used when undoing A_y).
void apply_iqft(Eigen::VectorXcd& amps, std::uint32_t m, bool inverse) {
  const std::uint64_t modulus = std::uint64_t{1} << m;
  const double scale = 1.0 / std::sqrt(static_cast<double>(modulus));
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<Complex> root(modulus);
  for (std::uint64_t w = 0; w < modulus; ++w)
    root[w] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(w) /
                                  static_cast<double>(modulus));
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  Eigen::VectorXcd block(static_cast<Eigen::Index>(modulus));
  for (std::uint64_t base = 0; base < dim; base += modulus) {
    for (std::uint64_t z = 0; z < modulus; ++z)
      block[static_cast<Eigen::Index>(z)] = amps[static_cast<Eigen::Index>(base + z)];
    for (std::uint64_t k = 0; k < modulus; ++k) {
      Complex sum = 0;
      for (std::uint64_t z = 0; z < modulus; ++z)
        sum += root[(k * z) & (modulus - 1)] * block[static_cast<Eigen::Index>(z)];
      amps[static_cast<Eigen::Index>(base + k)] = sum * scale;
    }
  }
}

void apply_sign_flip(Eigen::VectorXcd& amps, std::uint32_t m) {
  const std::uint64_t sign_mask = std::uint64_t{1} << (m - 1);
  const std::uint64_t dim = static_cast<std::uint64_t>(amps.size());
  for (std::uint64_t s = 0; s < dim; ++s)
    if (s & sign_mask) amps[static_cast<Eigen::Index>(s)] = -amps[static_cast<Eigen::Index>(s)];
}

void apply_gate(const Gate& gate, StateVector& state, bool inverse) {
  const std::uint32_t n = state.num_key_qubits();
  const std::uint32_t m = state.num_value_qubits();
  auto& amps = state.amplitudes();
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HGate>)
          apply_hadamard(amps, state_bit(g.qubit, n, m));
        else if constexpr (std::is_same_v<T, XGate>)
          apply_x(amps, state_bit(g.qubit, n, m));
        else if constexpr (std::is_same_v<T, PhaseBlock>)
          apply_phase_block(amps, g, n, m, inverse);
        else if constexpr (std::is_same_v<T, InverseQft>)
          apply_iqft(amps, m, inverse);
        else
          apply_sign_flip(amps, m);
      },
      gate);
}

}  // namespace

StateVector::StateVector(std::uint32_t num_key, std::uint32_t num_value, std::uint32_t max_qubits)
    : num_key_(num_key), num_value_(num_value) {
  if (num_key + num_value > max_qubits)
    throw std::invalid_argument("statevector size exceeds the qubit cap");
  amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim()));
  amps_[0] = 1.0;
}

StateVector StateVector::basis(std::uint32_t num_key, std::uint32_t num_value,
                               std::uint64_t key_bits, std::uint64_t value_bits,
                               std::uint32_t max_qubits) {
  StateVector state(num_key, num_value, max_qubits);
  state.amps_[0] = 0.0;
  const std::uint64_t s = (key_bits << num_value) | value_bits;
  state.amps_[static_cast<Eigen::Index>(s)] = 1.0;
  return state;
}

double StateVector::marked_probability() const {
  if (num_value_ == 0) return 0.0;
  const std::uint64_t sign_mask = std::uint64_t{1} << (num_value_ - 1);
  double p = 0.0;
  for (std::uint64_t s = 0; s < dim(); ++s)
    if (s & sign_mask) p += std::norm(amps_[static_cast<Eigen::Index>(s)]);
  return p;
}

double StateVector::key_probability(std::uint64_t x) const {
  const std::uint64_t base = x << num_value_;
  double p = 0.0;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << num_value_); ++z)
    p += std::norm(amps_[static_cast<Eigen::Index>(base + z)]);
  return p;
}

void apply(const Circuit& circ, StateVector& state) {
  if (circ.num_key_qubits != state.num_key_qubits() ||
      circ.num_value_qubits != state.num_value_qubits())
    throw std::invalid_argument("circuit and state dimensions do not match");
  for (const auto& gate : circ.gates) apply_gate(gate, state, false);
}

void apply_inverse(const Circuit& circ, StateVector& state) {
  if (circ.num_key_qubits != state.num_key_qubits() ||
      circ.num_value_qubits != state.num_value_qubits())
    throw std::invalid_argument("circuit and state dimensions do not match");
  for (auto it = circ.gates.rbegin(); it != circ.gates.rend(); ++it)
    apply_gate(*it, state, true);
}

void grover_step(const Circuit& ay, StateVector& state) {
  auto& amps = state.amplitudes();
  apply_sign_flip(amps, state.num_value_qubits());  // oracle
  apply_inverse(ay, state);
  for (Eigen::Index s = 1; s < amps.size(); ++s) amps[s] = -amps[s];  // 2|0><0| - Id
  apply(ay, state);
}

std::uint64_t measure_key(const StateVector& state, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double acc = 0.0;
  const auto& amps = state.amplitudes();
  for (std::uint64_t s = 0; s < state.dim(); ++s) {
    acc += std::norm(amps[static_cast<Eigen::Index>(s)]);
    if (u < acc) return s >> state.num_value_qubits();
  }
  return (state.dim() - 1) >> state.num_value_qubits();
}

OracleReport verify_oracle(const Polynomial& poly, Coeff y, std::uint32_t m) {
  const Circuit circ = synthesize_ay(poly, y, m, /*enforce_width=*/false);
  return verify_oracle(circ, poly, y);
}

OracleReport verify_oracle(const Circuit& circ, const Polynomial& poly, Coeff y) {
  const std::uint32_t n = circ.num_key_qubits;
  const std::uint32_t m = circ.num_value_qubits;
  if (n + m > 20) throw std::invalid_argument("oracle verification capped at 20 qubits");
  StateVector state(n, m);
  apply(circ, state);
  const std::uint64_t modulus = std::uint64_t{1} << m;
  const double expected_amp = 1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << n));
  const auto& amps = state.amplitudes();
  OracleReport report;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Coeff value = checked_sub(evaluate_mask(poly, x), y);
    const Coeff folded = ((value % static_cast<Coeff>(modulus)) + static_cast<Coeff>(modulus)) %
                         static_cast<Coeff>(modulus);
    const auto expected_z = static_cast<std::uint64_t>(folded);
    const bool expected_sign = value < 0;
    ++report.checked;
    for (std::uint64_t z = 0; z < modulus; ++z) {
      const Complex a = amps[static_cast<Eigen::Index>((x << m) | z)];
      const double want = (z == expected_z) ? expected_amp : 0.0;
      if (std::abs(std::abs(a) - want) > 1e-9) {
        report.counterexample_x = x;
        std::ostringstream os;
        os << "x=" << x << ": value register is not concentrated on (E(x)-y) mod 2^m = "
           << expected_z;
        report.message = os.str();
        return report;
      }
    }
    const bool got_sign = (expected_z >> (m - 1)) & 1;
    if (got_sign != expected_sign) {
      report.counterexample_x = x;
      std::ostringstream os;
      os << "x=" << x << ": E(x)-y=" << value << " but sign bit reads " << got_sign
         << " (two's complement aliasing; m too small)";
      report.message = os.str();
      return report;
    }
  }
  report.pass = true;
  report.message = "ok";
  return report;
}

}  // namespace gaskit
