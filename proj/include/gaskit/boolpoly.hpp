#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gaskit/arith.hpp"

namespace gaskit {

/// Identifier of a binary variable. Indices are dense 0..n-1 within a
/// Polynomial.
struct VarId {
  std::uint32_t value = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Polarity of a literal: Positive denotes the factor x, Negated the factor
/// (1 - x).
enum class Polarity : std::uint8_t { Positive, Negated };

struct Literal {
  VarId var;
  Polarity polarity = Polarity::Positive;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos(std::uint32_t v) { return Literal{VarId{v}, Polarity::Positive}; }
inline Literal neg(std::uint32_t v) { return Literal{VarId{v}, Polarity::Negated}; }

/// One product term coeff * l1 * l2 * ... with all literal variables distinct
/// and literals sorted by variable index.
struct FactoredTerm {
  Coeff coefficient = 0;
  std::vector<Literal> literals;

  FactoredTerm() = default;
  FactoredTerm(Coeff c, std::vector<Literal> lits);

  int degree() const { return static_cast<int>(literals.size()); }
  friend bool operator==(const FactoredTerm&, const FactoredTerm&) = default;
};

/// Multiplies two terms over binary variables. Literals on the same variable
/// are idempotent (x*x = x); opposite polarities annihilate the term
/// (x*(1-x) = 0), in which case nullopt is returned.
std::optional<FactoredTerm> term_product(const FactoredTerm& a, const FactoredTerm& b);

/// Integer-coefficient multilinear polynomial over binary variables, kept in
/// a canonical form: terms sorted lexicographically by (var, polarity)
/// sequence, identical literal sets merged, zero coefficients dropped.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::size_t num_vars, std::vector<FactoredTerm> terms, Coeff constant = 0);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<FactoredTerm>& terms() const { return terms_; }
  Coeff constant() const { return constant_; }

  /// Max literal count over terms (0 for a constant polynomial).
  int degree() const;

  /// True when every literal is Positive (monomial form).
  bool is_expanded() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<FactoredTerm> terms_;
  Coeff constant_ = 0;
};

/// Canonical ordering used for terms: lexicographic over the literal
/// sequence, Positive before Negated on the same variable.
bool term_order_less(const FactoredTerm& a, const FactoredTerm& b);

/// Distributes all (1-x) factors into monomials. The result has only
/// Positive literals and evaluates identically on every assignment.
Polynomial expand(const Polynomial& poly);

/// E(assignment); assignment[v] in {0,1}, length num_vars.
Coeff evaluate(const Polynomial& poly, const std::vector<std::uint8_t>& assignment);

/// Fast path for n <= 64: variable v is bit v of the mask.
Coeff evaluate_mask(const Polynomial& poly, std::uint64_t assignment);

/// All 2^n objective values, indexed by assignment mask. Throws when
/// num_vars exceeds the cap.
std::vector<Coeff> enumerate_values(const Polynomial& poly, unsigned cap = 24);

struct Bounds {
  Coeff min = 0;
  Coeff max = 0;
};

/// Exact min/max of E over all 2^n assignments by exhaustive scan.
Bounds bounds(const Polynomial& poly, unsigned cap = 24);

/// Smallest m with -2^(m-1) <= min and max < 2^(m-1). The degenerate
/// all-zero case still needs one qubit for the sign bit, so m >= 1.
std::uint32_t value_register_width(Coeff min, Coeff max);
std::uint32_t value_register_width(const Polynomial& poly, unsigned cap = 24);

/// E(x) - y: decreases the constant by y, terms untouched.
Polynomial shift(const Polynomial& poly, Coeff y);

/// Line-oriented text format:
///   vars <n>
///   <coeff> * [!]v<i> [!]v<j> ...
///   const <c>
std::string to_text(const Polynomial& poly);
Polynomial polynomial_from_text(const std::string& text);

std::string term_to_string(const FactoredTerm& term);

}  // namespace gaskit
