// Copyright 2026 The glsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <memory>
#include <string>
#include <vector>

#include "glsim/access.hpp"
#include "glsim/lattice.hpp"

namespace glsim {

/// Qubit 0 is the most significant bit of a basis index.
struct Gate {
  enum class Kind { x, cnot, toffoli, hadamard };
  Kind kind;
  /// Controls first, target last.
  std::vector<int> qubits;

  int target() const { return qubits.back(); }
  bool is_permutation() const { return kind != Kind::hadamard; }
  std::string to_string() const;
};

class ReversibleCircuit {
 public:
  ReversibleCircuit(int qubits, std::vector<Gate> gates);

  /// One gate per line: "X 0", "CNOT 0 1", "TOFFOLI 0 1 2", "H 2". Blank
  /// lines and '#' comments are skipped; an optional "QUBITS n" line fixes
  /// the width, otherwise it is one past the largest qubit used.
  static ReversibleCircuit parse(const std::string& text);

  int qubits() const { return qubits_; }
  Site basis_size() const { return Site{1} << qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t length() const { return gates_.size(); }
  bool has_hadamard() const;

  /// Throws PreconditionError unless the circuit is Hadamard-free.
  void require_classical() const;
  /// Throws PreconditionError unless every Hadamard targets the last qubit
  /// and no two Hadamards are adjacent.
  void require_long_time_rules() const;

 private:
  int qubits_;
  std::vector<Gate> gates_;
};

/// Image of basis index z under a permutation gate on n qubits.
Site apply_permutation_gate(const Gate& g, int n, Site z);
/// The full permutation table of a permutation gate.
std::vector<Site> gate_permutation(const Gate& g, int n);

/// Gate-by-gate dense simulation (Hadamards included).
DenseVector simulate_circuit(const ReversibleCircuit& c, const DenseVector& psi0);

/// One hopping block V between consecutive clock slots.
struct ClockStep {
  enum class Kind { permutation, transposition, dilated_hadamard, hadamard };
  Kind kind;
  /// Permutation gate (kind permutation).
  Gate gate{Gate::Kind::x, {0}};
  /// Transposition (k, k + 1) of the unextended register.
  Site k = 0;
  /// Target qubit for Hadamard steps.
  int target = 0;

  /// Row z of V over a register of `qubits` qubits (V is real symmetric).
  void row(Site z, int qubits, bool dilated, std::vector<MatrixEntry>& out) const;
};

/// shift I - sum_m (|m+1><m| (x) V_m + |m><m+1| (x) V_m^dagger) over
/// composite indices slot * 2^qubits + z.
struct ClockHamiltonian {
  std::shared_ptr<const LocalMatrixOracle> generator;
  double diagonal_shift = 2.0;
  int qubits = 0;
  Site clock_slots = 1;
  bool dilated = false;
  std::vector<ClockStep> steps;

  Site basis_size() const { return Site{1} << qubits; }
  Site index(Site slot, Site z) const { return slot * basis_size() + z; }
};

/// A_FK = 2I - sum_l (|l+1><l| (x) U_l + h.c.). Sites are laid out on the
/// [2^n, L + 1] grid: chain z0 occupies row z0, so r0 = 1.
ClockHamiltonian fk_classical(const ReversibleCircuit& c);

/// f_l = U_l ... U_1 for l = 0..L, as permutation tables.
std::vector<std::vector<Site>> cumulative_permutations(const ReversibleCircuit& c);

/// alpha_l(t) = (cos(sqrt(J) t) e_1)_l for J = 2I - shift - shift^dagger on L + 1 sites.
/// Amplitudes of cos(sqrt(J) t) e_1 on the L + 1 clock slots, where
/// J = diagonal * I - (shift + shift^dagger). The dilated long-time
/// construction restricted to the |-> ancilla subspace uses diagonal 3.
std::vector<Complex> overlap_coefficients(int length, double t, double diagonal = 2.0);

struct ReadoutScan {
  std::vector<double> times;
  std::vector<double> overlaps;
  double t_star = 0.0;
  double overlap = 0.0;
  double threshold = 0.0;
  bool success = false;
};

/// Threshold 1 / (4 (L + 2)) on |alpha_{L+1}(t)|^2.
double readout_threshold(int length);
/// 8 L^2 ln(L + 2).
double default_readout_tmax(int length);

/// Uniform scan of |alpha_{L+1}(t)|^2 on [0, t_max] keeping the first maximum.
ReadoutScan find_readout_time(int length, double t_max, int grid_points, unsigned threads = 1,
                              double diagonal = 2.0);

/// H_dil = (1/sqrt 2) [[I, I], [I, X]] on (target, ancilla), as a 4x4 row table.
std::vector<std::vector<double>> dilated_hadamard_matrix();

/// Dense matrix of the dilated form of g on n qubits plus an ancilla (LSB):
/// H_dil on (target, ancilla) for Hadamards, g (x) I_2 otherwise.
std::vector<std::vector<Complex>> dilated_gate(const Gate& g, int n);

/// Adjacent transpositions (k, k + 1), applied first to last, composing to
/// the permutation of g on 2^n basis states (bubble sort, descending passes).
std::vector<Site> adjacent_transposition_decomposition(const Gate& g, int n);

/// A_L,local = 3I - sum_m (|m+1><m| (x) V_m + h.c.) over n + 1 qubits, with
/// the 2D layout slot x register index (r0 = 3).
ClockHamiltonian fk_long_local(const ReversibleCircuit& c);
/// The same clock without the ancilla: Hadamards stay plain Hadamards.
ClockHamiltonian fk_long_undilated(const ReversibleCircuit& c);

struct EmbeddedRun {
  /// |block|^2 of every clock slot.
  std::vector<double> slice_weights;
  /// Register amplitudes on the last slot (ancilla projected onto |->).
  DenseVector last_slice;
  /// Normalized |last_slice|^2.
  std::vector<double> last_distribution;
  /// The whole evolved vector.
  DenseVector state;
};

/// Dense cos(sqrt(A) t) applied to e_1 (x) psi0 [(x) |->].
EmbeddedRun simulate_embedded_circuit(const ClockHamiltonian& h, const DenseVector& psi0, double t);

}  // namespace glsim
