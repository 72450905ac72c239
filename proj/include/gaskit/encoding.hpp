#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaskit/boolpoly.hpp"

namespace gaskit {

/// Formulation / index-assignment strategies. OneHot backs the conventional
/// QUBO; the others binary-encode the index.
enum class Strategy : std::uint8_t { OneHot, Asc, Dsc, GrayPf, EvenOr };

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Bit vector [b_1 .. b_B]; bits[0] is the paper's leading bit b_{i1}.
using BitVector = std::vector<std::uint8_t>;

int hamming_weight(const BitVector& bits);

/// Mapping from 1-based problem indices to codewords, plus the extended
/// enumeration of all 2^B slots used by penalty terms.
///
/// Slot order per strategy:
///   Asc     slot i = [i-1]_2
///   Dsc     slot i = [2^B - i]_2
///   GrayPf  slot i = gray((k0+i-1) mod 2^B), gray(k)=k^(k>>1), gray(k0)=all-ones
///   EvenOr  slots 1..2^(B-1): even-weight vectors ascending;
///           slots 2^(B-1)+1..2^B: odd-weight vectors ascending
///   OneHot  slots 1..I: unit vectors; remaining slots: non-unit vectors ascending
class IndexCode {
 public:
  static IndexCode make(Strategy strategy, std::uint32_t num_indices);

  Strategy strategy() const { return strategy_; }
  std::uint32_t num_indices() const { return num_indices_; }
  std::uint32_t width() const { return width_; }
  std::uint64_t num_slots() const;

  /// Extended codeword for 1-based slot index i, 1 <= i <= num_slots().
  BitVector slot(std::uint64_t i) const;

  /// The num_indices assigned codewords (slots 1..I).
  std::vector<BitVector> codewords() const;

  /// Slot indices penalized by the unused-codeword constraint: the tail
  /// I+1..2^B, or for EvenOr the unused even-weight slots I+1..2^(B-1).
  std::vector<std::uint64_t> unused_codewords() const;

  /// EvenOr only: slot indices holding odd-Hamming-weight vectors, covered
  /// by the parity penalty rather than the unused-codeword one.
  std::vector<std::uint64_t> odd_parity_slots() const;

 private:
  Strategy strategy_ = Strategy::Asc;
  std::uint32_t num_indices_ = 0;
  std::uint32_t width_ = 0;
  std::vector<BitVector> slots_;  // materialized for binary strategies
};

/// Indicator product for slot i over the given variables: literal r is
/// Positive iff bit r of the codeword is 1. Evaluates to 1 exactly on the
/// assignment equal to the codeword and to 0 otherwise.
FactoredTerm delta(const IndexCode& code, std::uint64_t i, std::span<const VarId> vars);

/// Table in the layout of the paper's encoding examples; EvenOr is listed in
/// ascending vector order with unassigned rows marked "not used".
std::string format_code_table(const IndexCode& code);

}  // namespace gaskit
