#include "gaskit/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace gaskit {

namespace {

void check_width(const Polynomial& poly, Coeff y, std::uint32_t m) {
  if (poly.num_vars() > 24) return;  // not enumerable; caller is responsible
  const Bounds b = bounds(poly);
  const std::uint32_t required =
      value_register_width(checked_sub(b.min, y), checked_sub(b.max, y));
  if (m < required) {
    std::ostringstream os;
    os << "value register too small: m=" << m << " but E-y spans [" << b.min - y << ", "
       << b.max - y << "] needing m=" << required;
    throw std::invalid_argument(os.str());
  }
}

void emit_hadamard_layer(Circuit& circ) {
  for (std::uint32_t q = 0; q < circ.num_qubits(); ++q) circ.gates.push_back(HGate{q});
}

void emit_term_block(Circuit& circ, const FactoredTerm& term) {
  PhaseBlock block;
  block.coefficient = term.coefficient;
  for (const auto& l : term.literals) block.controls.push_back(l.var.value);
  circ.gates.push_back(std::move(block));
}

void emit_tail(Circuit& circ, Coeff constant, Coeff y) {
  const Coeff c = checked_sub(constant, y);
  if (c != 0) circ.gates.push_back(PhaseBlock{{}, c});
  circ.gates.push_back(InverseQft{});
}

}  // namespace

Circuit synthesize_ay(const Polynomial& poly, Coeff y, std::uint32_t m, bool enforce_width) {
  if (m < 1 || m > 62) throw std::invalid_argument("value register width out of range");
  if (enforce_width) check_width(poly, y, m);
  Circuit circ;
  circ.num_key_qubits = static_cast<std::uint32_t>(poly.num_vars());
  circ.num_value_qubits = m;
  emit_hadamard_layer(circ);
  for (const auto& term : poly.terms()) {
    std::vector<std::uint32_t> flips;
    for (const auto& l : term.literals)
      if (l.polarity == Polarity::Negated) flips.push_back(l.var.value);
    for (auto q : flips) circ.gates.push_back(XGate{q});
    emit_term_block(circ, term);
    for (auto q : flips) circ.gates.push_back(XGate{q});
  }
  emit_tail(circ, poly.constant(), y);
  return circ;
}

Circuit synthesize_ay(const Formulation& form, Coeff y, std::uint32_t m, bool enforce_width) {
  if (!form.emission_groups) return synthesize_ay(form.polynomial, y, m, enforce_width);
  if (m < 1 || m > 62) throw std::invalid_argument("value register width out of range");
  if (enforce_width) check_width(form.polynomial, y, m);
  Circuit circ;
  circ.num_key_qubits = static_cast<std::uint32_t>(form.polynomial.num_vars());
  circ.num_value_qubits = m;
  emit_hadamard_layer(circ);
  const auto& terms = form.polynomial.terms();
  for (const auto& group : *form.emission_groups) {
    for (auto q : group.flip_qubits) circ.gates.push_back(XGate{q});
    for (auto idx : group.term_indices) emit_term_block(circ, terms[idx]);
    for (auto q : group.flip_qubits) circ.gates.push_back(XGate{q});
  }
  emit_tail(circ, form.polynomial.constant(), y);
  return circ;
}

namespace {

bool acts_on(const Gate& gate, std::uint32_t qubit, std::uint32_t num_key_qubits) {
  return std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, HGate> || std::is_same_v<T, XGate>)
          return g.qubit == qubit;
        else if constexpr (std::is_same_v<T, PhaseBlock>)
          return qubit >= num_key_qubits ||
                 std::find(g.controls.begin(), g.controls.end(), qubit) != g.controls.end();
        else if constexpr (std::is_same_v<T, InverseQft>)
          return qubit >= num_key_qubits;
        else  // SignFlip
          return qubit == num_key_qubits;
      },
      gate);
}

}  // namespace

Circuit cancel_x(const Circuit& circ) {
  std::vector<Gate> gates = circ.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<bool> removed(gates.size(), false);
    std::map<std::uint32_t, std::size_t> open_x;  // qubit -> index of unmatched X
    for (std::size_t i = 0; i < gates.size(); ++i) {
      if (const auto* x = std::get_if<XGate>(&gates[i])) {
        auto it = open_x.find(x->qubit);
        if (it != open_x.end()) {
          removed[it->second] = removed[i] = true;
          open_x.erase(it);
          changed = true;
        } else {
          open_x[x->qubit] = i;
        }
        continue;
      }
      for (auto it = open_x.begin(); it != open_x.end();) {
        if (acts_on(gates[i], it->first, circ.num_key_qubits))
          it = open_x.erase(it);
        else
          ++it;
      }
    }
    if (changed) {
      std::vector<Gate> kept;
      kept.reserve(gates.size());
      for (std::size_t i = 0; i < gates.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(gates[i]));
      gates = std::move(kept);
    }
  }
  Circuit out;
  out.num_key_qubits = circ.num_key_qubits;
  out.num_value_qubits = circ.num_value_qubits;
  out.gates = std::move(gates);
  return out;
}

ResourceReport count_resources(const Circuit& circ) {
  ResourceReport report;
  report.n = circ.num_key_qubits;
  report.m = circ.num_value_qubits;
  for (const auto& gate : circ.gates) {
    if (std::holds_alternative<HGate>(gate)) {
      ++report.h_count;
    } else if (std::holds_alternative<XGate>(gate)) {
      ++report.x_count;
    } else if (const auto* block = std::get_if<PhaseBlock>(&gate)) {
      const auto k = static_cast<std::uint32_t>(block->controls.size());
      report.ckr_histogram[k] += circ.num_value_qubits;
      if (k >= 1) report.ancilla = std::max(report.ancilla, k - 1);
    }
  }
  for (const auto& [k, count] : report.ckr_histogram) {
    if (k < 2) continue;
    report.t_count_toffoli += count * 14ull * (k - 1);
    report.t_count_rtof += count * 8ull * (k - 1);
  }
  return report;
}

std::uint64_t t_count(const ResourceReport& report, Decomposition decomp) {
  return decomp == Decomposition::Toffoli ? report.t_count_toffoli : report.t_count_rtof;
}

std::string to_text(const Circuit& circ) {
  std::ostringstream os;
  os << "qubits " << circ.num_key_qubits << ' ' << circ.num_value_qubits << '\n';
  for (const auto& gate : circ.gates) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, HGate>) {
            os << "H q" << g.qubit << '\n';
          } else if constexpr (std::is_same_v<T, XGate>) {
            os << "X q" << g.qubit << '\n';
          } else if constexpr (std::is_same_v<T, PhaseBlock>) {
            os << "CPHASE a=" << g.coefficient;
            if (!g.controls.empty()) {
              os << " ctrl=";
              for (std::size_t i = 0; i < g.controls.size(); ++i) {
                if (i) os << ',';
                os << g.controls[i];
              }
            }
            os << '\n';
          } else if constexpr (std::is_same_v<T, InverseQft>) {
            os << "IQFT\n";
          } else {
            os << "Z-sign\n";
          }
        },
        gate);
  }
  return os.str();
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Circuit circ;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "qubits") {
      ls >> circ.num_key_qubits >> circ.num_value_qubits;
      have_header = true;
    } else if (head == "H" || head == "X") {
      std::string q;
      ls >> q;
      if (q.size() < 2 || q[0] != 'q') throw std::invalid_argument("malformed gate line: " + line);
      const auto qubit = static_cast<std::uint32_t>(std::stoul(q.substr(1)));
      if (head == "H")
        circ.gates.push_back(HGate{qubit});
      else
        circ.gates.push_back(XGate{qubit});
    } else if (head == "CPHASE") {
      PhaseBlock block;
      std::string tok;
      while (ls >> tok) {
        if (tok.rfind("a=", 0) == 0) {
          block.coefficient = std::stoll(tok.substr(2));
        } else if (tok.rfind("ctrl=", 0) == 0) {
          std::string list = tok.substr(5);
          std::istringstream cs(list);
          std::string item;
          while (std::getline(cs, item, ','))
            block.controls.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } else {
          throw std::invalid_argument("malformed CPHASE line: " + line);
        }
      }
      circ.gates.push_back(std::move(block));
    } else if (head == "IQFT") {
      circ.gates.push_back(InverseQft{});
    } else if (head == "Z-sign") {
      circ.gates.push_back(SignFlip{});
    } else {
      throw std::invalid_argument("unknown gate line: " + line);
    }
  }
  if (!have_header) throw std::invalid_argument("circuit text needs a 'qubits <n> <m>' header");
  return circ;
}

}  // namespace gaskit
