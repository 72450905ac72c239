#include "gaskit/problems.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gaskit {

std::vector<std::uint32_t> GcpInstance::degrees() const {
  std::vector<std::uint32_t> deg(num_vertices, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void GcpInstance::validate() const {
  if (num_colors < 1) throw std::invalid_argument("GCP needs at least one color");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in GCP instance");
    if (u >= num_vertices || v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge in GCP instance");
  }
}

void TspInstance::validate() const {
  if (num_cities < 2) throw std::invalid_argument("TSP needs at least two cities");
  if (dist.size() != num_cities) throw std::invalid_argument("distance matrix size mismatch");
  for (std::uint32_t u = 0; u < num_cities; ++u) {
    if (dist[u].size() != num_cities) throw std::invalid_argument("distance matrix size mismatch");
    if (dist[u][u] != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::uint32_t v = 0; v < num_cities; ++v) {
      if (dist[u][v] < 0) throw std::invalid_argument("negative distance");
      if (dist[u][v] != dist[v][u]) throw std::invalid_argument("distance matrix not symmetric");
    }
  }
}

namespace {

std::vector<VarId> entity_vars(const VarLayout& layout, std::uint32_t entity) {
  std::vector<VarId> vars;
  vars.reserve(layout.bits_per_entity);
  for (std::uint32_t r = 0; r < layout.bits_per_entity; ++r) vars.push_back(layout.var(entity, r));
  return vars;
}

/// Collects terms in build order and, optionally, emission groups keyed by
/// the literal sequences of their member terms. Canonical term indices are
/// resolved after the polynomial merges and sorts.
class FormulationBuilder {
 public:
  void add(FactoredTerm term) {
    if (term.coefficient != 0) terms_.push_back(std::move(term));
  }
  void add_to_group(std::size_t group, FactoredTerm term) {
    if (term.coefficient == 0) return;
    group_keys_[group].push_back(term.literals);
    terms_.push_back(std::move(term));
  }
  std::size_t new_group(std::vector<std::uint32_t> flip_qubits) {
    std::sort(flip_qubits.begin(), flip_qubits.end());
    group_flips_.push_back(std::move(flip_qubits));
    group_keys_.emplace_back();
    return group_flips_.size() - 1;
  }
  void add_constant(Coeff c) { constant_ = checked_add(constant_, c); }

  Formulation finish(Strategy strategy, ProblemKind kind, IndexCode code, VarLayout layout,
                     bool expand_terms) const {
    Formulation form;
    form.strategy = strategy;
    form.kind = kind;
    form.code = std::move(code);
    form.layout = layout;
    form.polynomial = Polynomial(layout.num_vars(), terms_, constant_);
    if (expand_terms) form.polynomial = expand(form.polynomial);
    if (!group_flips_.empty()) {
      std::map<std::vector<Literal>, std::size_t> index_of;
      const auto& canonical = form.polynomial.terms();
      for (std::size_t i = 0; i < canonical.size(); ++i) index_of[canonical[i].literals] = i;
      std::vector<TermGroup> groups;
      std::set<std::size_t> consumed;
      for (std::size_t g = 0; g < group_flips_.size(); ++g) {
        TermGroup group;
        group.flip_qubits = group_flips_[g];
        for (const auto& key : group_keys_[g]) {
          auto it = index_of.find(key);
          if (it == index_of.end()) continue;  // merged away or zero coefficient
          if (consumed.insert(it->second).second) group.term_indices.push_back(it->second);
        }
        std::sort(group.term_indices.begin(), group.term_indices.end());
        if (!group.term_indices.empty() || !group.flip_qubits.empty())
          groups.push_back(std::move(group));
      }
      if (consumed.size() != canonical.size())
        throw std::logic_error("emission plan does not cover every term");
      form.emission_groups = std::move(groups);
    }
    return form;
  }

 private:
  std::vector<FactoredTerm> terms_;
  Coeff constant_ = 0;
  std::vector<std::vector<std::uint32_t>> group_flips_;
  std::vector<std::vector<std::vector<Literal>>> group_keys_;
};

/// Zero-bit qubits of codeword slot i across every entity: the shared X
/// layer of one index group.
std::vector<std::uint32_t> index_flip_layer(const IndexCode& code, std::uint64_t i,
                                            const VarLayout& layout) {
  const BitVector bits = code.slot(i);
  std::vector<std::uint32_t> qubits;
  for (std::uint32_t e = 0; e < layout.num_entities; ++e)
    for (std::uint32_t r = 0; r < layout.bits_per_entity; ++r)
      if (!bits[r]) qubits.push_back(layout.var(e, r).value);
  return qubits;
}

}  // namespace

Formulation gcp_qubo(const GcpInstance& inst) {
  inst.validate();
  const std::uint32_t V = inst.num_vertices;
  const std::uint32_t I = inst.num_colors;
  VarLayout layout{V, I};
  FormulationBuilder b;
  for (const auto& [u, v] : inst.edges)
    for (std::uint32_t i = 0; i < I; ++i)
      b.add(FactoredTerm(1, {Literal{layout.var(u, i)}, Literal{layout.var(v, i)}}));
  // (1 - sum_i x_vi)^2 = 1 - sum_i x_vi + 2 sum_{i<j} x_vi x_vj
  for (std::uint32_t v = 0; v < V; ++v) {
    b.add_constant(inst.lambda);
    for (std::uint32_t i = 0; i < I; ++i)
      b.add(FactoredTerm(checked_neg(inst.lambda), {Literal{layout.var(v, i)}}));
    for (std::uint32_t i = 0; i < I; ++i)
      for (std::uint32_t j = i + 1; j < I; ++j)
        b.add(FactoredTerm(checked_mul(2, inst.lambda),
                           {Literal{layout.var(v, i)}, Literal{layout.var(v, j)}}));
  }
  return b.finish(Strategy::OneHot, ProblemKind::Gcp, IndexCode::make(Strategy::OneHot, I),
                  layout, false);
}

Formulation gcp_hubo(const GcpInstance& inst, Strategy strategy) {
  inst.validate();
  if (strategy != Strategy::Asc && strategy != Strategy::Dsc && strategy != Strategy::GrayPf)
    throw std::invalid_argument("gcp_hubo expects asc, dsc or pf");
  const IndexCode code = IndexCode::make(strategy, inst.num_colors);
  VarLayout layout{inst.num_vertices, code.width()};
  const bool grouped = strategy == Strategy::GrayPf;
  FormulationBuilder b;
  for (std::uint64_t i = 1; i <= code.num_slots(); ++i) {
    std::size_t group = 0;
    if (grouped) group = b.new_group(index_flip_layer(code, i, layout));
    if (i <= inst.num_colors) {
      for (const auto& [u, v] : inst.edges) {
        auto du = delta(code, i, entity_vars(layout, u));
        auto dv = delta(code, i, entity_vars(layout, v));
        auto term = term_product(du, dv).value();
        if (grouped)
          b.add_to_group(group, std::move(term));
        else
          b.add(std::move(term));
      }
    } else {
      for (std::uint32_t v = 0; v < inst.num_vertices; ++v) {
        auto term = delta(code, i, entity_vars(layout, v));
        term.coefficient = inst.lambda_unused;
        if (grouped)
          b.add_to_group(group, std::move(term));
        else
          b.add(std::move(term));
      }
    }
  }
  return b.finish(strategy, ProblemKind::Gcp, code, layout, false);
}

Formulation gcp_hubo_or(const GcpInstance& inst) {
  inst.validate();
  const IndexCode code = IndexCode::make(Strategy::EvenOr, inst.num_colors);
  VarLayout layout{inst.num_vertices, code.width()};
  FormulationBuilder b;
  // Interference per edge: prod_r (1 - x_ur - x_vr), expanded directly.
  for (const auto& [u, v] : inst.edges) {
    std::vector<FactoredTerm> partial{FactoredTerm(1, {})};
    for (std::uint32_t r = 0; r < code.width(); ++r) {
      std::vector<FactoredTerm> next;
      next.reserve(partial.size() * 3);
      for (const auto& t : partial) {
        next.push_back(t);
        for (auto var : {layout.var(u, r), layout.var(v, r)}) {
          FactoredTerm e = t;
          e.coefficient = checked_neg(e.coefficient);
          e.literals.push_back(Literal{var});
          std::sort(e.literals.begin(), e.literals.end());
          next.push_back(std::move(e));
        }
      }
      partial = std::move(next);
    }
    for (auto& t : partial) {
      if (t.literals.empty())
        b.add_constant(t.coefficient);
      else
        b.add(std::move(t));
    }
  }
  // Odd-parity slots are forbidden; unused even slots beyond I as well.
  for (std::uint32_t v = 0; v < inst.num_vertices; ++v) {
    for (auto i : code.odd_parity_slots()) {
      auto term = delta(code, i, entity_vars(layout, v));
      term.coefficient = inst.lambda_parity;
      b.add(std::move(term));
    }
    for (auto i : code.unused_codewords()) {
      auto term = delta(code, i, entity_vars(layout, v));
      term.coefficient = inst.lambda_or_unused;
      b.add(std::move(term));
    }
  }
  return b.finish(Strategy::EvenOr, ProblemKind::Gcp, code, layout, true);
}

Formulation tsp_qubo(const TspInstance& inst) {
  inst.validate();
  const std::uint32_t N = inst.num_cities;
  VarLayout layout{N, N};
  FormulationBuilder b;
  // Tour cost over both adjacency orientations; order i+1 wraps to 1 at i=N.
  for (std::uint32_t u = 0; u < N; ++u)
    for (std::uint32_t v = u + 1; v < N; ++v) {
      if (inst.dist[u][v] == 0) continue;
      for (std::uint32_t i = 0; i < N; ++i) {
        const std::uint32_t j = (i + 1) % N;
        b.add(FactoredTerm(inst.dist[u][v], {Literal{layout.var(u, i)}, Literal{layout.var(v, j)}}));
        b.add(FactoredTerm(inst.dist[u][v], {Literal{layout.var(v, i)}, Literal{layout.var(u, j)}}));
      }
    }
  for (std::uint32_t v = 0; v < N; ++v) {  // each city visited exactly once
    b.add_constant(inst.lambda1);
    for (std::uint32_t i = 0; i < N; ++i)
      b.add(FactoredTerm(checked_neg(inst.lambda1), {Literal{layout.var(v, i)}}));
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = i + 1; j < N; ++j)
        b.add(FactoredTerm(checked_mul(2, inst.lambda1),
                           {Literal{layout.var(v, i)}, Literal{layout.var(v, j)}}));
  }
  for (std::uint32_t i = 0; i < N; ++i) {  // one city per visiting order
    b.add_constant(inst.lambda2);
    for (std::uint32_t v = 0; v < N; ++v)
      b.add(FactoredTerm(checked_neg(inst.lambda2), {Literal{layout.var(v, i)}}));
    for (std::uint32_t u = 0; u < N; ++u)
      for (std::uint32_t v = u + 1; v < N; ++v)
        b.add(FactoredTerm(checked_mul(2, inst.lambda2),
                           {Literal{layout.var(u, i)}, Literal{layout.var(v, i)}}));
  }
  return b.finish(Strategy::OneHot, ProblemKind::Tsp, IndexCode::make(Strategy::OneHot, N),
                  layout, false);
}

Formulation tsp_hubo(const TspInstance& inst, Strategy strategy) {
  inst.validate();
  if (strategy != Strategy::Asc && strategy != Strategy::Dsc && strategy != Strategy::GrayPf)
    throw std::invalid_argument("tsp_hubo expects asc, dsc or pf");
  const std::uint32_t N = inst.num_cities;
  const IndexCode code = IndexCode::make(strategy, N);
  VarLayout layout{N, code.width()};
  const bool grouped = strategy == Strategy::GrayPf;
  FormulationBuilder b;
  // Tour cost: the two-codeword terms cannot share an index-group X layer,
  // so each one is emitted with its own sandwich.
  for (std::uint32_t u = 0; u < N; ++u)
    for (std::uint32_t v = u + 1; v < N; ++v) {
      if (inst.dist[u][v] == 0) continue;
      for (std::uint32_t i = 1; i <= N; ++i) {
        const std::uint32_t j = (i % N) + 1;
        for (const auto& [a, c] : {std::pair{u, v}, std::pair{v, u}}) {
          auto da = delta(code, i, entity_vars(layout, a));
          auto dc = delta(code, j, entity_vars(layout, c));
          auto term = term_product(da, dc).value();
          term.coefficient = checked_mul(term.coefficient, inst.dist[u][v]);
          if (grouped) {
            std::vector<std::uint32_t> flips;
            for (const auto& l : term.literals)
              if (l.polarity == Polarity::Negated) flips.push_back(l.var.value);
            b.add_to_group(b.new_group(std::move(flips)), std::move(term));
          } else {
            b.add(std::move(term));
          }
        }
      }
    }
  for (std::uint64_t i = 1; i <= code.num_slots(); ++i) {
    std::size_t group = 0;
    if (grouped) group = b.new_group(index_flip_layer(code, i, layout));
    auto emit = [&](FactoredTerm term) {
      if (grouped)
        b.add_to_group(group, std::move(term));
      else
        b.add(std::move(term));
    };
    if (i <= N) {
      // (1 - sum_v d_vi)^2 = 1 - sum_v d_vi + 2 sum_{u<v} d_ui d_vi
      b.add_constant(inst.lambda1_hubo);
      for (std::uint32_t v = 0; v < N; ++v) {
        auto term = delta(code, i, entity_vars(layout, v));
        term.coefficient = checked_neg(inst.lambda1_hubo);
        emit(std::move(term));
      }
      for (std::uint32_t u = 0; u < N; ++u)
        for (std::uint32_t v = u + 1; v < N; ++v) {
          auto du = delta(code, i, entity_vars(layout, u));
          auto dv = delta(code, i, entity_vars(layout, v));
          auto term = term_product(du, dv).value();
          term.coefficient = checked_mul(2, inst.lambda1_hubo);
          emit(std::move(term));
        }
    } else {
      for (std::uint32_t v = 0; v < N; ++v) {
        auto term = delta(code, i, entity_vars(layout, v));
        term.coefficient = inst.lambda2_hubo;
        emit(std::move(term));
      }
    }
  }
  return b.finish(strategy, ProblemKind::Tsp, code, layout, false);
}

Formulation formulate(const GcpInstance& inst, Strategy strategy) {
  switch (strategy) {
    case Strategy::OneHot: return gcp_qubo(inst);
    case Strategy::EvenOr: return gcp_hubo_or(inst);
    default: return gcp_hubo(inst, strategy);
  }
}

Formulation formulate(const TspInstance& inst, Strategy strategy) {
  switch (strategy) {
    case Strategy::OneHot: return tsp_qubo(inst);
    case Strategy::EvenOr:
      throw std::invalid_argument("order reduction is not defined for the TSP formulation");
    default: return tsp_hubo(inst, strategy);
  }
}

BruteForceResult brute_force_min(const Polynomial& poly, unsigned cap) {
  const auto values = enumerate_values(poly, cap);
  BruteForceResult best{0, values[0]};
  for (std::uint64_t x = 1; x < values.size(); ++x) {
    if (values[x] < best.value) {
      best.value = values[x];
      best.assignment = x;
    }
  }
  return best;
}

DecodedSolution decode(const Formulation& form, std::uint64_t assignment) {
  DecodedSolution sol;
  const auto& layout = form.layout;
  sol.labels.resize(layout.num_entities);
  for (std::uint32_t e = 0; e < layout.num_entities; ++e) {
    BitVector bits(layout.bits_per_entity);
    for (std::uint32_t r = 0; r < layout.bits_per_entity; ++r)
      bits[r] = static_cast<std::uint8_t>((assignment >> layout.var(e, r).value) & 1);
    for (std::uint32_t i = 1; i <= form.code.num_indices(); ++i) {
      if (form.code.slot(i) == bits) {
        sol.labels[e] = i;
        break;
      }
    }
  }
  sol.complete = std::all_of(sol.labels.begin(), sol.labels.end(),
                             [](const auto& l) { return l.has_value(); });
  sol.valid = sol.complete;
  if (sol.complete && form.kind == ProblemKind::Tsp) {
    std::set<std::uint32_t> orders;
    for (const auto& l : sol.labels) orders.insert(*l);
    sol.valid = orders.size() == sol.labels.size();
  }
  return sol;
}

std::string describe(const DecodedSolution& sol) {
  std::ostringstream os;
  for (std::size_t e = 0; e < sol.labels.size(); ++e) {
    if (e) os << ' ';
    if (sol.labels[e])
      os << *sol.labels[e];
    else
      os << "invalid";
  }
  if (!sol.valid) os << "  (not a valid solution)";
  return os.str();
}

std::uint64_t encode_solution(const Formulation& form, const std::vector<std::uint32_t>& labels) {
  if (labels.size() != form.layout.num_entities)
    throw std::invalid_argument("label count does not match entity count");
  if (form.layout.num_vars() > 64) throw std::invalid_argument("assignment exceeds 64 bits");
  std::uint64_t assignment = 0;
  for (std::uint32_t e = 0; e < labels.size(); ++e) {
    const BitVector bits = form.code.slot(labels[e]);
    for (std::uint32_t r = 0; r < form.layout.bits_per_entity; ++r)
      if (bits[r]) assignment |= std::uint64_t{1} << form.layout.var(e, r).value;
  }
  return assignment;
}

std::string to_text(const GcpInstance& inst) {
  std::ostringstream os;
  os << inst.num_vertices << ' ' << inst.num_colors << '\n';
  for (const auto& [u, v] : inst.edges) os << u << ' ' << v << '\n';
  return os.str();
}

GcpInstance gcp_from_text(const std::string& text) {
  std::istringstream is(text);
  GcpInstance inst;
  if (!(is >> inst.num_vertices >> inst.num_colors))
    throw std::invalid_argument("GCP file needs a 'V I' header");
  std::uint32_t u, v;
  while (is >> u >> v) inst.edges.emplace_back(std::min(u, v), std::max(u, v));
  inst.validate();
  return inst;
}

std::string to_text(const TspInstance& inst) {
  std::ostringstream os;
  os << inst.num_cities << '\n';
  for (std::uint32_t u = 0; u + 1 < inst.num_cities; ++u) {
    for (std::uint32_t v = u + 1; v < inst.num_cities; ++v) {
      if (v > u + 1) os << ' ';
      os << inst.dist[u][v];
    }
    os << '\n';
  }
  return os.str();
}

TspInstance tsp_from_text(const std::string& text) {
  std::istringstream is(text);
  TspInstance inst;
  if (!(is >> inst.num_cities)) throw std::invalid_argument("TSP file needs an 'N' header");
  inst.dist.assign(inst.num_cities, std::vector<Coeff>(inst.num_cities, 0));
  for (std::uint32_t u = 0; u + 1 < inst.num_cities; ++u)
    for (std::uint32_t v = u + 1; v < inst.num_cities; ++v) {
      Coeff w;
      if (!(is >> w)) throw std::invalid_argument("TSP file is missing distances");
      inst.dist[u][v] = inst.dist[v][u] = w;
    }
  inst.validate();
  return inst;
}

GcpInstance gcp_bench_graph(std::uint32_t num_vertices, std::uint32_t num_colors,
                            std::uint32_t num_edges) {
  GcpInstance inst;
  inst.num_vertices = num_vertices;
  inst.num_colors = num_colors;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t off = 1; off <= 3 && inst.edges.size() < num_edges; ++off) {
    for (std::uint32_t v = 0; v < num_vertices && inst.edges.size() < num_edges; ++v) {
      const std::uint32_t w = (v + off) % num_vertices;
      if (v == w) continue;
      auto key = std::minmax(v, w);
      if (seen.insert(key).second) inst.edges.push_back(key);
    }
  }
  if (inst.edges.size() < num_edges)
    throw std::invalid_argument("circulant family cannot supply that many edges");
  inst.validate();
  return inst;
}

GcpInstance benchmark_family_instance(std::uint32_t num_vertices) {
  if (num_vertices % 4 != 0 || num_vertices < 8)
    throw std::invalid_argument("family requires V divisible by 4, V >= 8");
  return gcp_bench_graph(num_vertices, num_vertices / 4, 3 * num_vertices);
}

}  // namespace gaskit
