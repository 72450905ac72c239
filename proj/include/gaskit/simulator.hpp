#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>

#include "gaskit/circuit.hpp"

namespace gaskit {

/// Dense complex statevector over key register then value register.
/// Basis index s = x * 2^m + z with x the key assignment (variable v is bit
/// v of x) and z the value-register content read with the sign qubit as the
/// most significant bit.
class StateVector {
 public:
  StateVector(std::uint32_t num_key, std::uint32_t num_value, std::uint32_t max_qubits = 26);

  static StateVector basis(std::uint32_t num_key, std::uint32_t num_value, std::uint64_t key_bits,
                           std::uint64_t value_bits = 0, std::uint32_t max_qubits = 26);

  std::uint32_t num_key_qubits() const { return num_key_; }
  std::uint32_t num_value_qubits() const { return num_value_; }
  std::uint64_t dim() const { return std::uint64_t{1} << (num_key_ + num_value_); }

  Eigen::VectorXcd& amplitudes() { return amps_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  double norm() const { return amps_.norm(); }

  /// Probability that measuring the sign qubit yields 1 (the marked mass).
  double marked_probability() const;

  /// Probability of measuring key assignment x.
  double key_probability(std::uint64_t x) const;

 private:
  std::uint32_t num_key_ = 0;
  std::uint32_t num_value_ = 0;
  Eigen::VectorXcd amps_;
};

void apply(const Circuit& circ, StateVector& state);
void apply_inverse(const Circuit& circ, StateVector& state);

/// One Grover iteration: Z on the sign qubit, then the diffusion
/// A_y (2|0><0| - Id) A_y^dagger.
void grover_step(const Circuit& ay, StateVector& state);

/// Born-rule sample of the key register; deterministic for a given rng state.
std::uint64_t measure_key(const StateVector& state, std::mt19937_64& rng);

struct OracleReport {
  bool pass = false;
  std::uint64_t checked = 0;
  std::uint64_t counterexample_x = 0;
  std::string message;
};

/// Applies A_y once to |0...0> and checks, for every key basis state, that
/// the value register holds (E(x) - y) mod 2^m with the sign bit equal to
/// [E(x) < y]. The circuit is built without the width guard so aliasing
/// failures are observable.
OracleReport verify_oracle(const Polynomial& poly, Coeff y, std::uint32_t m);
OracleReport verify_oracle(const Circuit& circ, const Polynomial& poly, Coeff y);

}  // namespace gaskit
