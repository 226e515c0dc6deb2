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


#include "glsim/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "glsim/dense.hpp"
#include "glsim/parallel.hpp"

namespace glsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Site qubit_bit(int n, int q) { return Site{1} << (n - 1 - q); }

void sort_entries(std::vector<MatrixEntry>& row) {
  std::sort(row.begin(), row.end(), [](const MatrixEntry& x, const MatrixEntry& y) { return x.index < y.index; });
}

Gate::Kind parse_kind(const std::string& word, std::size_t line) {
  std::string upper = word;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (upper == "X" || upper == "NOT") {
    return Gate::Kind::x;
  }
  if (upper == "CNOT" || upper == "CX") {
    return Gate::Kind::cnot;
  }
  if (upper == "TOFFOLI" || upper == "CCX" || upper == "CCNOT") {
    return Gate::Kind::toffoli;
  }
  if (upper == "H") {
    return Gate::Kind::hadamard;
  }
  throw PreconditionError("line " + std::to_string(line) + ": unknown gate '" + word + "'");
}

std::size_t arity(Gate::Kind k) {
  switch (k) {
    case Gate::Kind::x:
    case Gate::Kind::hadamard:
      return 1;
    case Gate::Kind::cnot:
      return 2;
    case Gate::Kind::toffoli:
      return 3;
  }
  return 0;
}

// shift I - sum_m (|m+1><m| (x) V_m + h.c.) over slot-major composite indices.
LocalMatrixOracle clock_oracle(const ClockHamiltonian& h, SiteGraph graph, double r0, double norm_bound,
                               std::pair<double, double> spectrum) {
  const Site basis = h.basis_size();
  const Site slots = h.clock_slots;
  const auto steps = std::make_shared<const std::vector<ClockStep>>(h.steps);
  const int qubits = h.qubits;
  const bool dilated = h.dilated;
  const double shift = h.diagonal_shift;
  auto rows = [=](Site i, std::vector<MatrixEntry>& out) {
    const Site m = i / basis;
    const Site z = i % basis;
    std::vector<MatrixEntry> v;
    if (m > 0) {
      (*steps)[static_cast<std::size_t>(m - 1)].row(z, qubits, dilated, v);
      for (const MatrixEntry& e : v) {
        out.push_back({(m - 1) * basis + e.index, -e.value});
      }
    }
    out.push_back({i, Complex{shift, 0.0}});
    if (m + 1 < slots) {
      (*steps)[static_cast<std::size_t>(m)].row(z, qubits, dilated, v);
      for (const MatrixEntry& e : v) {
        out.push_back({(m + 1) * basis + e.index, -e.value});
      }
    }
  };
  LocalMatrixOracle::Options options;
  options.symmetry = LocalMatrixOracle::Symmetry::hermitian;
  options.spectral_interval = spectrum;
  return LocalMatrixOracle(std::move(graph), r0, rows, norm_bound, options);
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> clock_chain_eigen(int length, double diagonal) {
  require(length >= 0, "circuit length must be nonnegative");
  require(diagonal >= 2.0, "the clock chain needs a diagonal of at least 2");
  const Eigen::Index n = length + 1;
  Eigen::MatrixXd j = diagonal * Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index q = 0; q + 1 < n; ++q) {
    j(q, q + 1) = -1.0;
    j(q + 1, q) = -1.0;
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(j);
}

double last_overlap(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& eig, double t) {
  const auto& v = eig.eigenvectors();
  const Eigen::Index last = v.rows() - 1;
  double a = 0.0;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    a += v(last, k) * v(0, k) * std::cos(std::sqrt(std::max(0.0, eig.eigenvalues()[k])) * t);
  }
  return a * a;
}

ClockHamiltonian fk_long(const ReversibleCircuit& c, bool dilated) {
  c.require_long_time_rules();
  ClockHamiltonian h;
  h.diagonal_shift = 3.0;
  h.dilated = dilated;
  h.qubits = c.qubits() + (dilated ? 1 : 0);
  for (const Gate& g : c.gates()) {
    if (g.kind == Gate::Kind::hadamard) {
      ClockStep s{dilated ? ClockStep::Kind::dilated_hadamard : ClockStep::Kind::hadamard};
      s.target = g.target();
      h.steps.push_back(s);
      continue;
    }
    for (Site k : adjacent_transposition_decomposition(g, c.qubits())) {
      ClockStep s{ClockStep::Kind::transposition};
      s.k = k;
      h.steps.push_back(s);
    }
  }
  h.clock_slots = static_cast<Site>(h.steps.size()) + 1;
  const double off = 1.0 + 2.0 * kInvSqrt2;
  const SiteGraph layout = SiteGraph::grid({h.clock_slots, h.basis_size()}, Boundary::open);
  h.generator = std::make_shared<const LocalMatrixOracle>(
      clock_oracle(h, layout, 3.0, h.diagonal_shift + off, {h.diagonal_shift - off, h.diagonal_shift + off}));

  if (dilated) {
    // Off-diagonal signs and diagonal dominance, on every row of small clocks.
    const Site rows = std::min<Site>(h.generator->dimension(), Site{1} << 16);
    std::vector<MatrixEntry> row;
    for (Site i = 0; i < rows; ++i) {
      h.generator->row(i, row);
      double sum = 0.0;
      for (const MatrixEntry& e : row) {
        if (e.index == i) {
          continue;
        }
        if (e.value.real() > 0.0 || e.value.imag() != 0.0) {
          throw std::logic_error("dilated clock has a positive off-diagonal entry");
        }
        sum += std::abs(e.value);
      }
      if (sum > off + 1e-12) {
        throw std::logic_error("dilated clock row " + std::to_string(i) + " is not diagonally dominant");
      }
    }
  }
  return h;
}

}  // namespace

std::string Gate::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::x: out << "X"; break;
    case Kind::cnot: out << "CNOT"; break;
    case Kind::toffoli: out << "TOFFOLI"; break;
    case Kind::hadamard: out << "H"; break;
  }
  for (int q : qubits) {
    out << ' ' << q;
  }
  return out.str();
}

ReversibleCircuit::ReversibleCircuit(int qubits, std::vector<Gate> gates) : qubits_(qubits), gates_(std::move(gates)) {
  require(qubits >= 1 && qubits <= 30, "qubit count must lie in [1, 30]");
  for (const Gate& g : gates_) {
    require(g.qubits.size() == arity(g.kind), "gate " + g.to_string() + " has the wrong number of qubits");
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      require(g.qubits[a] >= 0 && g.qubits[a] < qubits, "gate " + g.to_string() + " acts outside the register");
      for (std::size_t b = 0; b < a; ++b) {
        require(g.qubits[a] != g.qubits[b], "gate " + g.to_string() + " repeats a qubit");
      }
    }
  }
}

ReversibleCircuit ReversibleCircuit::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Gate> gates;
  int declared = 0;
  int widest = 0;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) {
      continue;
    }
    std::string upper = head;
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (upper == "QUBITS") {
      if (!(words >> declared) || declared < 1) {
        throw PreconditionError("line " + std::to_string(number) + ": bad qubit count");
      }
      continue;
    }
    Gate g{parse_kind(head, number), {}};
    int q = 0;
    while (words >> q) {
      g.qubits.push_back(q);
      widest = std::max(widest, q + 1);
    }
    if (!words.eof()) {
      throw PreconditionError("line " + std::to_string(number) + ": qubit indices must be integers");
    }
    gates.push_back(std::move(g));
  }
  const int n = declared > 0 ? declared : std::max(widest, 1);
  require(widest <= n, "a gate uses a qubit beyond the declared width");
  return ReversibleCircuit(n, std::move(gates));
}

bool ReversibleCircuit::has_hadamard() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == Gate::Kind::hadamard; });
}

void ReversibleCircuit::require_classical() const {
  require(!has_hadamard(), "the short-time embedding accepts X, CNOT and Toffoli gates only");
}

void ReversibleCircuit::require_long_time_rules() const {
  for (std::size_t l = 0; l < gates_.size(); ++l) {
    if (gates_[l].kind != Gate::Kind::hadamard) {
      continue;
    }
    require(gates_[l].target() == qubits_ - 1, "Hadamard gates must act on the last qubit");
    require(l == 0 || gates_[l - 1].kind != Gate::Kind::hadamard, "two consecutive Hadamard gates");
  }
}

Site apply_permutation_gate(const Gate& g, int n, Site z) {
  require(g.is_permutation(), "Hadamard is not a basis permutation");
  for (std::size_t a = 0; a + 1 < g.qubits.size(); ++a) {
    if ((z & qubit_bit(n, g.qubits[a])) == 0) {
      return z;
    }
  }
  return z ^ qubit_bit(n, g.target());
}

std::vector<Site> gate_permutation(const Gate& g, int n) {
  std::vector<Site> perm(static_cast<std::size_t>(Site{1} << n));
  for (Site z = 0; z < static_cast<Site>(perm.size()); ++z) {
    perm[static_cast<std::size_t>(z)] = apply_permutation_gate(g, n, z);
  }
  return perm;
}

DenseVector simulate_circuit(const ReversibleCircuit& c, const DenseVector& psi0) {
  require(static_cast<Site>(psi0.size()) == c.basis_size(), "state size does not match the register");
  DenseVector state = psi0;
  DenseVector next(state.size());
  for (const Gate& g : c.gates()) {
    if (g.is_permutation()) {
      for (Site z = 0; z < c.basis_size(); ++z) {
        next[static_cast<std::size_t>(apply_permutation_gate(g, c.qubits(), z))] = state[static_cast<std::size_t>(z)];
      }
    } else {
      const Site bit = qubit_bit(c.qubits(), g.target());
      for (Site z = 0; z < c.basis_size(); ++z) {
        if ((z & bit) != 0) {
          continue;
        }
        const Complex a = state[static_cast<std::size_t>(z)];
        const Complex b = state[static_cast<std::size_t>(z | bit)];
        next[static_cast<std::size_t>(z)] = (a + b) * kInvSqrt2;
        next[static_cast<std::size_t>(z | bit)] = (a - b) * kInvSqrt2;
      }
    }
    std::swap(state, next);
  }
  return state;
}

void ClockStep::row(Site z, int qubits, bool dilated, std::vector<MatrixEntry>& out) const {
  out.clear();
  const Complex one{1.0, 0.0};
  const Complex r2{kInvSqrt2, 0.0};
  switch (kind) {
    case Kind::permutation:
      out.push_back({apply_permutation_gate(gate, qubits, z), one});
      return;
    case Kind::transposition: {
      const Site y = dilated ? z >> 1 : z;
      const Site swapped = y == k ? k + 1 : (y == k + 1 ? k : y);
      out.push_back({dilated ? (swapped << 1) | (z & 1) : swapped, one});
      return;
    }
    case Kind::dilated_hadamard: {
      // (target, ancilla) are the two low bits; rows of [[I, I], [I, X]] / sqrt 2.
      const Site high = z & ~Site{3};
      static constexpr Site kCols[4][2] = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
      for (Site col : kCols[z & 3]) {
        out.push_back({high | col, r2});
      }
      sort_entries(out);
      return;
    }
    case Kind::hadamard: {
      const Site bit = qubit_bit(qubits, target);
      if ((z & bit) == 0) {
        out.push_back({z, r2});
        out.push_back({z | bit, r2});
      } else {
        out.push_back({z & ~bit, r2});
        out.push_back({z, -r2});
      }
      return;
    }
  }
}

std::vector<std::vector<Site>> cumulative_permutations(const ReversibleCircuit& c) {
  c.require_classical();
  std::vector<std::vector<Site>> maps;
  std::vector<Site> current(static_cast<std::size_t>(c.basis_size()));
  for (Site z = 0; z < c.basis_size(); ++z) {
    current[static_cast<std::size_t>(z)] = z;
  }
  maps.push_back(current);
  for (const Gate& g : c.gates()) {
    for (Site& z : current) {
      z = apply_permutation_gate(g, c.qubits(), z);
    }
    maps.push_back(current);
  }
  return maps;
}

ClockHamiltonian fk_classical(const ReversibleCircuit& c) {
  c.require_classical();
  ClockHamiltonian h;
  h.diagonal_shift = 2.0;
  h.qubits = c.qubits();
  h.clock_slots = static_cast<Site>(c.length()) + 1;
  for (const Gate& g : c.gates()) {
    ClockStep s{ClockStep::Kind::permutation};
    s.gate = g;
    h.steps.push_back(s);
  }
  const Site basis = h.basis_size();
  const Site slots = h.clock_slots;
  const auto gates = std::make_shared<const std::vector<Gate>>(c.gates());
  const int n = c.qubits();
  // Chain z0 runs along host row z0: (l, f_l(z0)) sits at (z0, l).
  auto to_host = [=](Site idx) {
    const Site l = idx / basis;
    Site z = idx % basis;
    for (Site q = l; q-- > 0;) {
      z = apply_permutation_gate((*gates)[static_cast<std::size_t>(q)], n, z);
    }
    return z * slots + l;
  };
  auto from_host = [=](Site host) {
    const Site row = host / slots;
    const Site l = host % slots;
    Site z = row;
    for (Site q = 0; q < l; ++q) {
      z = apply_permutation_gate((*gates)[static_cast<std::size_t>(q)], n, z);
    }
    return l * basis + z;
  };
  const SiteGraph host = SiteGraph::grid({basis, slots}, Boundary::open);
  const SiteGraph layout = SiteGraph::embedded(host, basis * slots, to_host, from_host);
  h.generator = std::make_shared<const LocalMatrixOracle>(clock_oracle(h, layout, 1.0, 4.0, {0.0, 4.0}));
  return h;
}

std::vector<Complex> overlap_coefficients(int length, double t, double diagonal) {
  const auto eig = clock_chain_eigen(length, diagonal);
  const auto& v = eig.eigenvectors();
  std::vector<Complex> alpha(static_cast<std::size_t>(length) + 1);
  for (Eigen::Index l = 0; l < v.rows(); ++l) {
    double a = 0.0;
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
      a += v(l, k) * v(0, k) * std::cos(std::sqrt(std::max(0.0, eig.eigenvalues()[k])) * t);
    }
    alpha[static_cast<std::size_t>(l)] = a;
  }
  return alpha;
}

double readout_threshold(int length) { return 1.0 / (4.0 * (length + 2)); }

double default_readout_tmax(int length) {
  return 8.0 * static_cast<double>(length) * length * std::log(length + 2.0);
}

ReadoutScan find_readout_time(int length, double t_max, int grid_points, unsigned threads, double diagonal) {
  require(grid_points >= 1, "the scan needs at least one grid point");
  require(t_max >= 0.0, "t_max must be nonnegative");
  const auto eig = clock_chain_eigen(length, diagonal);
  ReadoutScan scan;
  scan.times.resize(static_cast<std::size_t>(grid_points));
  scan.overlaps.resize(static_cast<std::size_t>(grid_points));
  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (scan.times.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    const std::size_t end = std::min(scan.times.size(), (chunk + 1) * kChunk);
    for (std::size_t q = chunk * kChunk; q < end; ++q) {
      const double t = grid_points == 1 ? 0.0 : t_max * static_cast<double>(q) / (grid_points - 1);
      scan.times[q] = t;
      scan.overlaps[q] = last_overlap(eig, t);
    }
  });
  const auto best = std::max_element(scan.overlaps.begin(), scan.overlaps.end());
  scan.t_star = scan.times[static_cast<std::size_t>(best - scan.overlaps.begin())];
  scan.overlap = *best;
  scan.threshold = readout_threshold(length);
  scan.success = scan.overlap >= scan.threshold;
  return scan;
}

std::vector<std::vector<double>> dilated_hadamard_matrix() {
  const double r = kInvSqrt2;
  return {{r, 0, r, 0}, {0, r, 0, r}, {r, 0, 0, r}, {0, r, r, 0}};
}

std::vector<std::vector<Complex>> dilated_gate(const Gate& g, int n) {
  const Site dim = Site{2} << n;
  std::vector<std::vector<Complex>> m(static_cast<std::size_t>(dim), std::vector<Complex>(static_cast<std::size_t>(dim)));
  if (g.is_permutation()) {
    for (Site y = 0; y < (Site{1} << n); ++y) {
      const Site gy = apply_permutation_gate(g, n, y);
      for (Site a = 0; a < 2; ++a) {
        m[static_cast<std::size_t>(2 * gy + a)][static_cast<std::size_t>(2 * y + a)] = 1.0;
      }
    }
    return m;
  }
  const auto table = dilated_hadamard_matrix();
  const Site bit = qubit_bit(n, g.target());
  for (Site z = 0; z < dim; ++z) {
    const Site y = z >> 1;
    const Site rest = y & ~bit;
    const Site row_local = ((y & bit) != 0 ? 2 : 0) | (z & 1);
    for (Site col_local = 0; col_local < 4; ++col_local) {
      const double v = table[static_cast<std::size_t>(row_local)][static_cast<std::size_t>(col_local)];
      if (v != 0.0) {
        const Site col = ((rest | ((col_local & 2) != 0 ? bit : 0)) << 1) | (col_local & 1);
        m[static_cast<std::size_t>(z)][static_cast<std::size_t>(col)] = v;
      }
    }
  }
  return m;
}

std::vector<Site> adjacent_transposition_decomposition(const Gate& g, int n) {
  require(g.is_permutation(), "only basis permutations decompose into transpositions");
  std::vector<Site> arr = gate_permutation(g, n);
  std::vector<Site> swaps;
  const auto size = static_cast<Site>(arr.size());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (Site k = size - 2; k >= 0; --k) {
      auto& lo = arr[static_cast<std::size_t>(k)];
      auto& hi = arr[static_cast<std::size_t>(k + 1)];
      if (lo > hi) {
        std::swap(lo, hi);
        swaps.push_back(k);
        swapped = true;
      }
    }
  }
  return swaps;
}

ClockHamiltonian fk_long_local(const ReversibleCircuit& c) { return fk_long(c, true); }

ClockHamiltonian fk_long_undilated(const ReversibleCircuit& c) { return fk_long(c, false); }

EmbeddedRun simulate_embedded_circuit(const ClockHamiltonian& h, const DenseVector& psi0, double t) {
  const int register_qubits = h.qubits - (h.dilated ? 1 : 0);
  const Site register_size = Site{1} << register_qubits;
  require(static_cast<Site>(psi0.size()) == register_size, "state size does not match the circuit register");
  const Site total = h.clock_slots * h.basis_size();
  if (total > dense_cap()) {
    throw CapacityError("embedded simulation of dimension " + std::to_string(total) + " exceeds the dense cap");
  }
  Eigen::VectorXcd x0 = Eigen::VectorXcd::Zero(total);
  for (Site y = 0; y < register_size; ++y) {
    const Complex amp = psi0[static_cast<std::size_t>(y)];
    if (h.dilated) {
      x0[2 * y] = amp * kInvSqrt2;
      x0[2 * y + 1] = -amp * kInvSqrt2;
    } else {
      x0[y] = amp;
    }
  }
  const DenseMatrix a = dense_from_oracle(*h.generator);
  const Eigen::VectorXcd x = dense_cos_sqrt(a, t) * x0;

  EmbeddedRun run;
  run.state = from_eigen(x);
  run.slice_weights.resize(static_cast<std::size_t>(h.clock_slots));
  for (Site m = 0; m < h.clock_slots; ++m) {
    run.slice_weights[static_cast<std::size_t>(m)] = x.segment(m * h.basis_size(), h.basis_size()).squaredNorm();
  }
  const Site last = (h.clock_slots - 1) * h.basis_size();
  run.last_slice.resize(static_cast<std::size_t>(register_size));
  double weight = 0.0;
  for (Site y = 0; y < register_size; ++y) {
    const Complex amp = h.dilated ? (x[last + 2 * y] - x[last + 2 * y + 1]) * kInvSqrt2 : x[last + y];
    run.last_slice[static_cast<std::size_t>(y)] = amp;
    weight += std::norm(amp);
  }
  run.last_distribution.resize(static_cast<std::size_t>(register_size), 0.0);
  if (weight > 0.0) {
    for (Site y = 0; y < register_size; ++y) {
      run.last_distribution[static_cast<std::size_t>(y)] = std::norm(run.last_slice[static_cast<std::size_t>(y)]) / weight;
    }
  }
  return run;
}

}  // namespace glsim
