#include "gaskit/encoding.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gaskit {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::OneHot: return "qubo";
    case Strategy::Asc: return "asc";
    case Strategy::Dsc: return "dsc";
    case Strategy::GrayPf: return "pf";
    case Strategy::EvenOr: return "or";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "qubo" || name == "onehot") return Strategy::OneHot;
  if (name == "asc") return Strategy::Asc;
  if (name == "dsc") return Strategy::Dsc;
  if (name == "pf" || name == "gray") return Strategy::GrayPf;
  if (name == "or" || name == "even") return Strategy::EvenOr;
  throw std::invalid_argument("unknown strategy: " + name);
}

int hamming_weight(const BitVector& bits) {
  int w = 0;
  for (auto b : bits) w += b ? 1 : 0;
  return w;
}

namespace {

std::uint32_t ceil_log2(std::uint32_t n) {
  std::uint32_t b = 0;
  while ((std::uint32_t{1} << b) < n) ++b;
  return b;
}

BitVector to_bits(std::uint64_t value, std::uint32_t width) {
  BitVector bits(width);
  for (std::uint32_t r = 0; r < width; ++r)
    bits[r] = static_cast<std::uint8_t>((value >> (width - 1 - r)) & 1);  // bits[0] = MSB
  return bits;
}

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

std::uint64_t gray_inverse(std::uint64_t g) {
  std::uint64_t k = 0;
  for (; g; g >>= 1) k ^= g;
  return k;
}

}  // namespace

IndexCode IndexCode::make(Strategy strategy, std::uint32_t num_indices) {
  IndexCode code;
  code.strategy_ = strategy;
  code.num_indices_ = num_indices;
  if (strategy == Strategy::OneHot) {
    if (num_indices < 1) throw std::invalid_argument("one-hot code needs at least one index");
    code.width_ = num_indices;
    return code;  // slots computed lazily; 2^I of them
  }
  if (num_indices < 2)
    throw std::invalid_argument("binary-coded strategies require at least two indices");
  const std::uint32_t b = ceil_log2(num_indices);
  code.width_ = (strategy == Strategy::EvenOr) ? b + 1 : b;
  const std::uint64_t total = std::uint64_t{1} << code.width_;
  code.slots_.reserve(total);
  switch (strategy) {
    case Strategy::Asc:
      for (std::uint64_t i = 1; i <= total; ++i) code.slots_.push_back(to_bits(i - 1, code.width_));
      break;
    case Strategy::Dsc:
      for (std::uint64_t i = 1; i <= total; ++i) code.slots_.push_back(to_bits(total - i, code.width_));
      break;
    case Strategy::GrayPf: {
      // Standard Gray cycle rotated so the first codeword is all-ones;
      // consecutive slots then differ in exactly one bit.
      const std::uint64_t k0 = gray_inverse(total - 1);
      for (std::uint64_t i = 0; i < total; ++i)
        code.slots_.push_back(to_bits(gray((k0 + i) % total), code.width_));
      break;
    }
    case Strategy::EvenOr: {
      for (std::uint64_t v = 0; v < total; ++v)
        if (std::popcount(v) % 2 == 0) code.slots_.push_back(to_bits(v, code.width_));
      for (std::uint64_t v = 0; v < total; ++v)
        if (std::popcount(v) % 2 == 1) code.slots_.push_back(to_bits(v, code.width_));
      if (num_indices > (total >> 1))
        throw std::invalid_argument("even-weight codewords exhausted");
      break;
    }
    default: break;
  }
  return code;
}

std::uint64_t IndexCode::num_slots() const {
  return std::uint64_t{1} << width_;
}

BitVector IndexCode::slot(std::uint64_t i) const {
  if (i < 1 || i > num_slots()) throw std::out_of_range("codeword slot index out of range");
  if (strategy_ != Strategy::OneHot) return slots_[i - 1];
  if (i <= num_indices_) {
    BitVector bits(width_, 0);
    bits[i - 1] = 1;
    return bits;
  }
  // Non-unit vectors in ascending order fill the remaining slots.
  std::uint64_t remaining = i - num_indices_;
  for (std::uint64_t v = 0;; ++v) {
    if (std::popcount(v) == 1) continue;
    if (--remaining == 0) return to_bits(v, width_);
  }
}

std::vector<BitVector> IndexCode::codewords() const {
  std::vector<BitVector> out;
  out.reserve(num_indices_);
  for (std::uint32_t i = 1; i <= num_indices_; ++i) out.push_back(slot(i));
  return out;
}

std::vector<std::uint64_t> IndexCode::unused_codewords() const {
  const std::uint64_t last =
      (strategy_ == Strategy::EvenOr) ? (num_slots() >> 1) : num_slots();
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = num_indices_ + 1; i <= last; ++i) out.push_back(i);
  return out;
}

std::vector<std::uint64_t> IndexCode::odd_parity_slots() const {
  if (strategy_ != Strategy::EvenOr) return {};
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = (num_slots() >> 1) + 1; i <= num_slots(); ++i) out.push_back(i);
  return out;
}

FactoredTerm delta(const IndexCode& code, std::uint64_t i, std::span<const VarId> vars) {
  if (vars.size() != code.width())
    throw std::invalid_argument("delta needs exactly one variable per code bit");
  const BitVector bits = code.slot(i);
  std::vector<Literal> lits;
  lits.reserve(bits.size());
  for (std::size_t r = 0; r < bits.size(); ++r)
    lits.push_back(Literal{vars[r], bits[r] ? Polarity::Positive : Polarity::Negated});
  return FactoredTerm(1, std::move(lits));
}

namespace {

std::string bits_string(const BitVector& bits) {
  std::string s;
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

std::string delta_string(const BitVector& bits) {
  std::ostringstream os;
  for (std::size_t r = 0; r < bits.size(); ++r) {
    if (r) os << ' ';
    if (bits[r])
      os << "x" << (r + 1);
    else
      os << "(1-x" << (r + 1) << ")";
  }
  return os.str();
}

std::uint64_t bits_value(const BitVector& bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b ? 1 : 0);
  return v;
}

}  // namespace

std::string format_code_table(const IndexCode& code) {
  std::ostringstream os;
  os << "i\tcodeword\tdelta\n";
  if (code.strategy() == Strategy::EvenOr) {
    // Ascending vector order with parity gaps, as in the paper's listing.
    const std::uint64_t total = code.num_slots();
    std::vector<std::string> label(total);
    for (std::uint64_t i = 1; i <= code.num_indices(); ++i)
      label[bits_value(code.slot(i))] = std::to_string(i);
    for (std::uint64_t v = 0; v < total; ++v) {
      BitVector bits;
      for (std::uint32_t r = 0; r < code.width(); ++r)
        bits.push_back(static_cast<std::uint8_t>((v >> (code.width() - 1 - r)) & 1));
      const auto& l = label[v];
      os << (l.empty() ? std::string("not used") : l) << '\t' << bits_string(bits) << '\t'
         << delta_string(bits) << '\n';
    }
    return os.str();
  }
  const std::uint64_t rows =
      (code.strategy() == Strategy::OneHot) ? code.num_indices() : code.num_slots();
  for (std::uint64_t i = 1; i <= rows; ++i) {
    const BitVector bits = code.slot(i);
    os << i;
    if (i > code.num_indices()) os << " (unused)";
    os << '\t' << bits_string(bits) << '\t' << delta_string(bits) << '\n';
  }
  return os.str();
}

}  // namespace gaskit
