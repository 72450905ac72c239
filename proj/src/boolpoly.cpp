#include "gaskit/boolpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gaskit {

FactoredTerm::FactoredTerm(Coeff c, std::vector<Literal> lits)
    : coefficient(c), literals(std::move(lits)) {
  std::sort(literals.begin(), literals.end());
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (literals[i].var == literals[i - 1].var)
      throw std::invalid_argument("duplicate variable in factored term");
  }
}

std::optional<FactoredTerm> term_product(const FactoredTerm& a, const FactoredTerm& b) {
  FactoredTerm out;
  out.coefficient = checked_mul(a.coefficient, b.coefficient);
  out.literals.reserve(a.literals.size() + b.literals.size());
  std::size_t i = 0, j = 0;
  while (i < a.literals.size() && j < b.literals.size()) {
    const Literal& la = a.literals[i];
    const Literal& lb = b.literals[j];
    if (la.var < lb.var) {
      out.literals.push_back(la);
      ++i;
    } else if (lb.var < la.var) {
      out.literals.push_back(lb);
      ++j;
    } else {
      if (la.polarity != lb.polarity) return std::nullopt;  // x * (1-x) = 0
      out.literals.push_back(la);                           // x * x = x
      ++i;
      ++j;
    }
  }
  out.literals.insert(out.literals.end(), a.literals.begin() + i, a.literals.end());
  out.literals.insert(out.literals.end(), b.literals.begin() + j, b.literals.end());
  return out;
}

bool term_order_less(const FactoredTerm& a, const FactoredTerm& b) {
  return std::lexicographical_compare(a.literals.begin(), a.literals.end(),
                                      b.literals.begin(), b.literals.end());
}

Polynomial::Polynomial(std::size_t num_vars, std::vector<FactoredTerm> terms, Coeff constant)
    : num_vars_(num_vars), constant_(constant) {
  for (auto& t : terms) {
    for (const auto& l : t.literals) {
      if (l.var.value >= num_vars_)
        throw std::invalid_argument("literal variable out of range");
    }
  }
  std::sort(terms.begin(), terms.end(), term_order_less);
  for (auto& t : terms) {
    if (t.literals.empty()) {
      constant_ = checked_add(constant_, t.coefficient);
      continue;
    }
    if (!terms_.empty() && terms_.back().literals == t.literals) {
      terms_.back().coefficient = checked_add(terms_.back().coefficient, t.coefficient);
      if (terms_.back().coefficient == 0) terms_.pop_back();
    } else if (t.coefficient != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

bool Polynomial::is_expanded() const {
  for (const auto& t : terms_)
    for (const auto& l : t.literals)
      if (l.polarity == Polarity::Negated) return false;
  return true;
}

Polynomial expand(const Polynomial& poly) {
  std::vector<FactoredTerm> monomials;
  Coeff constant = poly.constant();
  for (const auto& term : poly.terms()) {
    std::vector<Literal> positives;
    std::vector<VarId> negated;
    for (const auto& l : term.literals) {
      if (l.polarity == Polarity::Positive)
        positives.push_back(l);
      else
        negated.push_back(l.var);
    }
    // (1-x_s) factors distribute into 2^|negated| monomials with sign
    // (-1)^|subset|.
    const std::size_t k = negated.size();
    for (std::uint64_t subset = 0; subset < (1ull << k); ++subset) {
      FactoredTerm mono;
      mono.coefficient = term.coefficient;
      mono.literals = positives;
      for (std::size_t b = 0; b < k; ++b) {
        if (subset >> b & 1) {
          mono.coefficient = checked_neg(mono.coefficient);
          mono.literals.push_back(Literal{negated[b], Polarity::Positive});
        }
      }
      std::sort(mono.literals.begin(), mono.literals.end());
      monomials.push_back(std::move(mono));
    }
  }
  return Polynomial(poly.num_vars(), std::move(monomials), constant);
}

Coeff evaluate(const Polynomial& poly, const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != poly.num_vars())
    throw std::invalid_argument("assignment length does not match num_vars");
  Coeff sum = poly.constant();
  for (const auto& term : poly.terms()) {
    bool live = true;
    for (const auto& l : term.literals) {
      const bool bit = assignment[l.var.value] != 0;
      if (bit != (l.polarity == Polarity::Positive)) {
        live = false;
        break;
      }
    }
    if (live) sum = checked_add(sum, term.coefficient);
  }
  return sum;
}

namespace {

struct MaskTerm {
  std::uint64_t pos_mask;
  std::uint64_t neg_mask;
  Coeff coefficient;
};

std::vector<MaskTerm> mask_terms(const Polynomial& poly) {
  std::vector<MaskTerm> out;
  out.reserve(poly.terms().size());
  for (const auto& term : poly.terms()) {
    MaskTerm mt{0, 0, term.coefficient};
    for (const auto& l : term.literals) {
      const std::uint64_t bit = 1ull << l.var.value;
      if (l.polarity == Polarity::Positive)
        mt.pos_mask |= bit;
      else
        mt.neg_mask |= bit;
    }
    out.push_back(mt);
  }
  return out;
}

}  // namespace

Coeff evaluate_mask(const Polynomial& poly, std::uint64_t assignment) {
  if (poly.num_vars() > 64) throw std::invalid_argument("mask evaluation limited to 64 variables");
  Coeff sum = poly.constant();
  for (const auto& term : poly.terms()) {
    bool live = true;
    for (const auto& l : term.literals) {
      const bool bit = (assignment >> l.var.value) & 1;
      if (bit != (l.polarity == Polarity::Positive)) {
        live = false;
        break;
      }
    }
    if (live) sum = checked_add(sum, term.coefficient);
  }
  return sum;
}

std::vector<Coeff> enumerate_values(const Polynomial& poly, unsigned cap) {
  const std::size_t n = poly.num_vars();
  if (n > cap)
    throw std::invalid_argument("exhaustive enumeration cap exceeded; supply analytic bounds");
  const auto terms = mask_terms(poly);
  std::vector<Coeff> values(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    Coeff sum = poly.constant();
    for (const auto& mt : terms) {
      if ((x & mt.pos_mask) == mt.pos_mask && (x & mt.neg_mask) == 0)
        sum = checked_add(sum, mt.coefficient);
    }
    values[x] = sum;
  }
  return values;
}

Bounds bounds(const Polynomial& poly, unsigned cap) {
  const std::size_t n = poly.num_vars();
  if (n > cap)
    throw std::invalid_argument("exhaustive enumeration cap exceeded; supply analytic bounds");
  const auto terms = mask_terms(poly);
  Bounds b{poly.constant(), poly.constant()};
  bool first = true;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    Coeff sum = poly.constant();
    for (const auto& mt : terms) {
      if ((x & mt.pos_mask) == mt.pos_mask && (x & mt.neg_mask) == 0)
        sum = checked_add(sum, mt.coefficient);
    }
    if (first || sum < b.min) b.min = sum;
    if (first || sum > b.max) b.max = sum;
    first = false;
  }
  return b;
}

std::uint32_t value_register_width(Coeff min, Coeff max) {
  if (min > max) throw std::invalid_argument("min > max");
  for (std::uint32_t m = 1; m < 64; ++m) {
    // -2^(m-1) <= min and max < 2^(m-1)
    const Coeff half = Coeff{1} << (m - 1);
    if (min >= -half && max < half) return m;
  }
  throw OverflowError("value range does not fit a 64-bit two's complement register");
}

std::uint32_t value_register_width(const Polynomial& poly, unsigned cap) {
  const Bounds b = bounds(poly, cap);
  return value_register_width(b.min, b.max);
}

Polynomial shift(const Polynomial& poly, Coeff y) {
  return Polynomial(poly.num_vars(), poly.terms(), checked_sub(poly.constant(), y));
}

std::string term_to_string(const FactoredTerm& term) {
  std::ostringstream os;
  os << term.coefficient << " *";
  for (const auto& l : term.literals) {
    os << ' ';
    if (l.polarity == Polarity::Negated) os << '!';
    os << 'v' << l.var.value;
  }
  return os.str();
}

std::string to_text(const Polynomial& poly) {
  std::ostringstream os;
  os << "vars " << poly.num_vars() << '\n';
  for (const auto& term : poly.terms()) os << term_to_string(term) << '\n';
  os << "const " << poly.constant() << '\n';
  return os.str();
}

Polynomial polynomial_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t num_vars = 0;
  bool have_vars = false;
  Coeff constant = 0;
  std::vector<FactoredTerm> terms;
  std::size_t max_var = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "vars") {
      ls >> num_vars;
      have_vars = true;
    } else if (head == "const") {
      ls >> constant;
    } else {
      FactoredTerm term;
      term.coefficient = std::stoll(head);
      std::string tok;
      ls >> tok;
      if (tok != "*") throw std::invalid_argument("malformed term line: " + line);
      std::vector<Literal> lits;
      while (ls >> tok) {
        Polarity p = Polarity::Positive;
        std::string_view sv(tok);
        if (!sv.empty() && sv.front() == '!') {
          p = Polarity::Negated;
          sv.remove_prefix(1);
        }
        if (sv.empty() || sv.front() != 'v')
          throw std::invalid_argument("malformed literal: " + tok);
        sv.remove_prefix(1);
        std::uint32_t idx = 0;
        auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), idx);
        if (ec != std::errc{} || ptr != sv.data() + sv.size())
          throw std::invalid_argument("malformed literal: " + tok);
        lits.push_back(Literal{VarId{idx}, p});
        max_var = std::max<std::size_t>(max_var, idx + 1);
      }
      terms.emplace_back(term.coefficient, std::move(lits));
    }
  }
  if (!have_vars) num_vars = max_var;
  return Polynomial(num_vars, std::move(terms), constant);
}

}  // namespace gaskit
