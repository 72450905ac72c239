#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gaskit/boolpoly.hpp"
#include "gaskit/problems.hpp"

namespace gaskit {

/// Qubit ids: 0..n-1 are key qubits (variable v on qubit v), n..n+m-1 the
/// value register with qubit n the most-significant (sign) bit.
struct HGate {
  std::uint32_t qubit;
  friend bool operator==(const HGate&, const HGate&) = default;
};
struct XGate {
  std::uint32_t qubit;
  friend bool operator==(const XGate&, const XGate&) = default;
};
/// Controlled geometric-phase block: one R(2^(m-1-j) * theta) per value
/// qubit j with theta = 2*pi*coefficient / 2^m, conditioned on every control
/// qubit being |1>. An empty control set is the uncontrolled constant block.
struct PhaseBlock {
  std::vector<std::uint32_t> controls;  // sorted key qubits
  Coeff coefficient;
  friend bool operator==(const PhaseBlock&, const PhaseBlock&) = default;
};
struct InverseQft {
  friend bool operator==(const InverseQft&, const InverseQft&) = default;
};
/// Z on the sign qubit: the GAS oracle marker.
struct SignFlip {
  friend bool operator==(const SignFlip&, const SignFlip&) = default;
};

using Gate = std::variant<HGate, XGate, PhaseBlock, InverseQft, SignFlip>;

struct Circuit {
  std::uint32_t num_key_qubits = 0;
  std::uint32_t num_value_qubits = 0;
  std::vector<Gate> gates;

  std::uint32_t num_qubits() const { return num_key_qubits + num_value_qubits; }
  std::uint32_t sign_qubit() const { return num_key_qubits; }
};

/// State-preparation operator A_y: Hadamards on every qubit, one phase block
/// per term (negated literals wrapped in X), the constant minus y as an
/// uncontrolled block, and a trailing inverse QFT on the value register.
/// After application to |0...0>, the value register holds (E(x) - y) mod 2^m
/// in two's complement for every key basis state |x>.
///
/// When enforce_width is set (and the polynomial is small enough to
/// enumerate), m smaller than the two's-complement width of E - y is an
/// error; pass false to deliberately build an aliasing circuit.
Circuit synthesize_ay(const Polynomial& poly, Coeff y, std::uint32_t m,
                      bool enforce_width = true);

/// Formulation-aware synthesis: honors the emission plan when present
/// (index-grouped X layers for Gray-coded formulations), otherwise falls
/// back to per-term emission on the stored polynomial.
Circuit synthesize_ay(const Formulation& form, Coeff y, std::uint32_t m,
                      bool enforce_width = true);

/// Removes pairs of X gates on the same qubit with no intervening gate
/// acting on that qubit; left-to-right peephole iterated to fixpoint.
Circuit cancel_x(const Circuit& circ);

enum class Decomposition : std::uint8_t { Toffoli, Rtof };

struct ResourceReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t ancilla = 0;  // max over blocks of (control count - 1)
  std::uint64_t h_count = 0;
  std::uint64_t x_count = 0;
  /// k -> number of C^k R gate equivalents; each arity-k block contributes m.
  std::map<std::uint32_t, std::uint64_t> ckr_histogram;
  std::uint64_t t_count_toffoli = 0;  // 14(k-1) per C^k R, k >= 2
  std::uint64_t t_count_rtof = 0;     //  8(k-1) per C^k R, k >= 2
};

/// Exact counts from the gate list. The inverse QFT and the sign-flip Z are
/// not counted.
ResourceReport count_resources(const Circuit& circ);

std::uint64_t t_count(const ResourceReport& report, Decomposition decomp);

/// One gate per line: `H q3`, `X q0`, `CPHASE a=-1 ctrl=0,2`, `IQFT`,
/// `Z-sign`, preceded by a `qubits <n> <m>` header.
std::string to_text(const Circuit& circ);
Circuit circuit_from_text(const std::string& text);

}  // namespace gaskit
