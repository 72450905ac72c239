#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaskit/boolpoly.hpp"
#include "gaskit/encoding.hpp"

namespace gaskit {

/// Vertex-coloring instance. Penalties default to 1, matching the reference
/// experiments; lambda is the QUBO one-hot penalty, lambda_unused the
/// binary-code unused-slot penalty, lambda_parity / lambda_or_unused the
/// order-reduction ones.
struct GcpInstance {
  std::uint32_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t num_colors = 0;
  Coeff lambda = 1;
  Coeff lambda_unused = 1;
  Coeff lambda_parity = 1;
  Coeff lambda_or_unused = 1;

  std::uint32_t num_edges() const { return static_cast<std::uint32_t>(edges.size()); }
  std::vector<std::uint32_t> degrees() const;
  void validate() const;  // no self-loops, no duplicate edges, vertex ids in range
};

/// Travelling-salesman instance with a symmetric integer distance matrix.
struct TspInstance {
  std::uint32_t num_cities = 0;
  std::vector<std::vector<Coeff>> dist;  // N x N, zero diagonal
  Coeff lambda1 = 1;        // each city visited once (one-hot rows)
  Coeff lambda2 = 1;        // one city per visiting order (one-hot columns)
  Coeff lambda1_hubo = 1;   // one city per order, binary-coded
  Coeff lambda2_hubo = 1;   // order index <= N

  void validate() const;
};

/// (entity, bit) -> variable index; entities are vertices or cities.
struct VarLayout {
  std::uint32_t num_entities = 0;
  std::uint32_t bits_per_entity = 0;

  VarId var(std::uint32_t entity, std::uint32_t bit) const {
    return VarId{entity * bits_per_entity + bit};
  }
  std::uint32_t num_vars() const { return num_entities * bits_per_entity; }
};

/// X gates shared by a run of phase blocks: flip the listed qubits, emit the
/// blocks for the listed terms, flip back. Built so that Gray-coded
/// formulations get maximal X runs.
struct TermGroup {
  std::vector<std::uint32_t> flip_qubits;
  std::vector<std::size_t> term_indices;  // into Polynomial::terms()
};

enum class ProblemKind : std::uint8_t { Gcp, Tsp };

struct Formulation {
  Strategy strategy = Strategy::OneHot;
  ProblemKind kind = ProblemKind::Gcp;
  Polynomial polynomial;
  IndexCode code;
  VarLayout layout;
  /// Present for GrayPf formulations: emission plan covering every term.
  std::optional<std::vector<TermGroup>> emission_groups;
};

Formulation gcp_qubo(const GcpInstance& inst);
Formulation gcp_hubo(const GcpInstance& inst, Strategy strategy);  // Asc, Dsc or GrayPf
Formulation gcp_hubo_or(const GcpInstance& inst);
Formulation tsp_qubo(const TspInstance& inst);
Formulation tsp_hubo(const TspInstance& inst, Strategy strategy);  // Asc, Dsc or GrayPf

/// Convenience dispatch on the strategy tag.
Formulation formulate(const GcpInstance& inst, Strategy strategy);
Formulation formulate(const TspInstance& inst, Strategy strategy);

struct BruteForceResult {
  std::uint64_t assignment = 0;  // variable v is bit v
  Coeff value = 0;
};

/// Global minimizer by exhaustive scan; ties break to the smallest
/// assignment read as an unsigned integer.
BruteForceResult brute_force_min(const Polynomial& poly, unsigned cap = 24);

/// Per-entity decoded index (1-based color / visiting order); nullopt when
/// the entity's bits match no assigned codeword.
struct DecodedSolution {
  std::vector<std::optional<std::uint32_t>> labels;
  bool complete = false;  // every entity decoded
  bool valid = false;     // complete and domain-consistent (TSP: a permutation)
};

DecodedSolution decode(const Formulation& form, std::uint64_t assignment);
std::string describe(const DecodedSolution& sol);

/// Inverse of decode for a full labeling (1-based indices per entity).
std::uint64_t encode_solution(const Formulation& form, const std::vector<std::uint32_t>& labels);

/// Instance text formats: GCP is a "V I" header plus one "u v" line per
/// edge (0-based); TSP is an "N" header plus the strict upper triangle of W,
/// one row per line.
std::string to_text(const GcpInstance& inst);
GcpInstance gcp_from_text(const std::string& text);
std::string to_text(const TspInstance& inst);
TspInstance tsp_from_text(const std::string& text);

/// Deterministic benchmark graphs: edges of the circulant graph with offsets
/// {1,2,3} in offset-major order, truncated to num_edges.
GcpInstance gcp_bench_graph(std::uint32_t num_vertices, std::uint32_t num_colors,
                            std::uint32_t num_edges);

/// The evaluation family: I = V/4, E = 3V on the 6-regular circulant.
GcpInstance benchmark_family_instance(std::uint32_t num_vertices);

}  // namespace gaskit
