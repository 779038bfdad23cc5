// Copyright 2026 The repnet Authors
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

#ifndef REPNET_TABLEAU_HPP
#define REPNET_TABLEAU_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace repnet {

/// A Pauli operator on up to 64 qubits in binary-symplectic form with the
/// phase stored as a power of i (mod 4). Qubit q carries X when bit q of `x`
/// is set, Z when bit q of `z` is set, and a literal Y when both are.
struct PauliOp {
    uint64_t x = 0;
    uint64_t z = 0;
    uint8_t phase = 0;  // power of i, mod 4

    bool commutes_with(const PauliOp& other) const {
        return (std::popcount(x & other.z) + std::popcount(z & other.x)) % 2 == 0;
    }

    bool is_identity() const { return x == 0 && z == 0; }

    /// In-place right multiplication with exact phase tracking.
    void mul(const PauliOp& o) {
        int g = 0;  // accumulated power of i from per-qubit factor products
        uint64_t both = (x | z) & (o.x | o.z);
        for (uint64_t rest = both; rest;) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            int x1 = static_cast<int>((x >> q) & 1), z1 = static_cast<int>((z >> q) & 1);
            int x2 = static_cast<int>((o.x >> q) & 1), z2 = static_cast<int>((o.z >> q) & 1);
            if (x1 && z1) {
                g += z2 - x2;  // Y * sigma
            } else if (x1) {
                g += z2 * (2 * x2 - 1);  // X * sigma
            } else if (z1) {
                g += x2 * (1 - 2 * z2);  // Z * sigma
            }
        }
        phase = static_cast<uint8_t>(((phase + o.phase + g) % 4 + 4) % 4);
        x ^= o.x;
        z ^= o.z;
    }
};

/// N-qubit stabilizer state held as N generator rows. Covers what the
/// graph-state protocol oracle needs: CZ, the local-complementation
/// single-qubit Cliffords, Pauli injection, X measurement, and
/// stabilizer-group comparison with signs.
class StabilizerTableau {
  public:
    explicit StabilizerTableau(size_t n) : n_(n) {
        if (n > 64) throw std::invalid_argument("tableau limited to 64 qubits");
    }

    /// |+>^n, stabilized by X_q for every q.
    static StabilizerTableau plus_states(size_t n) {
        StabilizerTableau t(n);
        t.rows_.resize(n);
        for (size_t q = 0; q < n; ++q) t.rows_[q].x = 1ull << q;
        return t;
    }

    /// Graph state for per-qubit neighbor masks: stabilized by X_q Z_{N(q)}
    /// with + signs.
    static StabilizerTableau graph_state(const std::vector<uint64_t>& adjacency) {
        StabilizerTableau t(adjacency.size());
        t.rows_.resize(adjacency.size());
        for (size_t q = 0; q < adjacency.size(); ++q) {
            t.rows_[q].x = 1ull << q;
            t.rows_[q].z = adjacency[q];
        }
        return t;
    }

    size_t num_qubits() const { return n_; }
    const std::vector<PauliOp>& rows() const { return rows_; }

    void apply_cz(size_t a, size_t b) {
        assert(a != b && a < n_ && b < n_);
        for (PauliOp& r : rows_) {
            int xa = static_cast<int>((r.x >> a) & 1), xb = static_cast<int>((r.x >> b) & 1);
            int za = static_cast<int>((r.z >> a) & 1), zb = static_cast<int>((r.z >> b) & 1);
            if (xa && xb && (za ^ zb)) r.phase = (r.phase + 2) % 4;
            if (xa) r.z ^= 1ull << b;
            if (xb) r.z ^= 1ull << a;
        }
    }

    /// Injects a Pauli error: flips the sign of every generator that
    /// anticommutes with it.
    void apply_pauli(uint64_t ex, uint64_t ez) {
        for (PauliOp& r : rows_) {
            if ((std::popcount(r.x & ez) + std::popcount(r.z & ex)) % 2 != 0) {
                r.phase = (r.phase + 2) % 4;
            }
        }
    }

    void apply_pauli_x(size_t q) { apply_pauli(1ull << q, 0); }
    void apply_pauli_z(size_t q) { apply_pauli(0, 1ull << q); }

    /// Conjugates by the single-qubit Clifford whose images of X and Z on
    /// qubit q are the given single-qubit Paulis (phase 0 or 2).
    void apply_single_qubit_clifford(size_t q, PauliOp img_x, PauliOp img_z) {
        const uint64_t qbit = 1ull << q;
        img_x.x *= qbit, img_x.z *= qbit;  // images given on bit 0
        img_z.x *= qbit, img_z.z *= qbit;
        for (PauliOp& r : rows_) {
            bool xq = r.x & qbit, zq = r.z & qbit;
            if (!xq && !zq) continue;
            PauliOp local;
            if (xq && zq) {
                local = img_x;
                local.mul(img_z);
                local.phase = (local.phase + 1) % 4;  // Y = i X Z
            } else {
                local = xq ? img_x : img_z;
            }
            r.x &= ~qbit;
            r.z &= ~qbit;
            r.x |= local.x;
            r.z |= local.z;
            r.phase = static_cast<uint8_t>((r.phase + local.phase) % 4);
        }
    }

    /// exp(-i pi/4 X): X -> X, Z -> -Y. One half of the local-complementation
    /// unitary.
    void apply_sqrt_minus_ix(size_t q) {
        apply_single_qubit_clifford(q, PauliOp{1, 0, 0}, PauliOp{1, 1, 2});
    }

    /// exp(+i pi/4 Z): X -> -Y, Z -> Z. The other half.
    void apply_sqrt_iz(size_t q) {
        apply_single_qubit_clifford(q, PauliOp{1, 1, 2}, PauliOp{0, 1, 0});
    }

    /// Measures X on qubit q; returns 0 for outcome +1, 1 for -1. Outcomes of
    /// anticommuting measurements come from the supplied engine.
    int measure_x(size_t q, std::mt19937_64& rng) {
        const uint64_t qbit = 1ull << q;
        int pivot = -1;  // X_q anticommutes with rows that carry Z or Y at q
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].z & qbit) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot >= 0) {
            for (size_t i = 0; i < rows_.size(); ++i) {
                if (static_cast<int>(i) != pivot && (rows_[i].z & qbit)) {
                    rows_[i].mul(rows_[static_cast<size_t>(pivot)]);
                }
            }
            int outcome = static_cast<int>(rng() & 1);
            rows_[static_cast<size_t>(pivot)] =
                PauliOp{qbit, 0, static_cast<uint8_t>(outcome ? 2 : 0)};
            return outcome;
        }
        // Deterministic: +-X_q is already in the group.
        PauliOp residue = reduce(PauliOp{qbit, 0, 0});
        if (!residue.is_identity() || residue.phase % 2 != 0) {
            throw std::logic_error("measure_x: inconsistent tableau");
        }
        return residue.phase == 2 ? 1 : 0;
    }

    /// Whether P (sign encoded in P.phase) is an element of the stabilizer
    /// group, sign included.
    bool stabilizes(const PauliOp& p) const {
        PauliOp residue = reduce(p);
        return residue.is_identity() && residue.phase == 0;
    }

    /// Stabilizer-group equality with signs.
    bool same_state(const StabilizerTableau& other) const {
        if (other.n_ != n_ || other.rows_.size() != rows_.size()) return false;
        for (const PauliOp& r : other.rows_) {
            if (!stabilizes(r)) return false;
        }
        return true;
    }

    /// Drops qubits outside `keep_mask`, renumbering the kept ones in
    /// ascending order. Dropped qubits must be disentangled (each has a +-X
    /// generator), which holds once they have been measured in the X basis.
    StabilizerTableau restricted_to(uint64_t keep_mask) const {
        std::vector<PauliOp> work = rows_;
        for (size_t q = 0; q < n_; ++q) {
            uint64_t qbit = 1ull << q;
            if (keep_mask & qbit) continue;
            int pivot = -1;
            for (size_t i = 0; i < work.size(); ++i) {
                if (work[i].z & qbit) throw std::logic_error("dropped qubit still entangled");
                if (pivot < 0 && (work[i].x & qbit)) pivot = static_cast<int>(i);
            }
            if (pivot < 0) throw std::logic_error("dropped qubit has no X generator");
            for (size_t i = 0; i < work.size(); ++i) {
                if (static_cast<int>(i) != pivot && (work[i].x & qbit)) {
                    work[i].mul(work[static_cast<size_t>(pivot)]);
                }
            }
            work[static_cast<size_t>(pivot)] = PauliOp{};  // consumed
        }
        std::vector<int> new_index(n_, -1);
        size_t n_new = 0;
        for (size_t q = 0; q < n_; ++q) {
            if (keep_mask & (1ull << q)) new_index[q] = static_cast<int>(n_new++);
        }
        StabilizerTableau out(n_new);
        for (const PauliOp& r : work) {
            if (r.is_identity()) continue;
            PauliOp nr;
            nr.phase = r.phase;
            for (size_t q = 0; q < n_; ++q) {
                if (new_index[q] < 0) continue;
                if (r.x & (1ull << q)) nr.x |= 1ull << new_index[q];
                if (r.z & (1ull << q)) nr.z |= 1ull << new_index[q];
            }
            out.rows_.push_back(nr);
        }
        if (out.rows_.size() != n_new) throw std::logic_error("restriction lost rank");
        return out;
    }

  private:
    /// Reduces P against the generators. Returns identity with phase 0 when P
    /// is in the group, identity with phase 2 when -P is, and a non-identity
    /// residue otherwise.
    PauliOp reduce(PauliOp p) const {
        // Bring a copy of the generators into reduced echelon form over the
        // 2n GF(2) columns (x, z interleaved per qubit), tracking phases.
        std::vector<PauliOp> basis = rows_;
        std::vector<std::pair<size_t, bool>> pivots;  // (qubit, is_x_column) per row
        size_t row = 0;
        for (size_t col = 0; col < 2 * n_ && row < basis.size(); ++col) {
            size_t q = col / 2;
            bool use_x = (col % 2) == 0;
            uint64_t qbit = 1ull << q;
            auto bit = [&](const PauliOp& r) {
                return ((use_x ? r.x : r.z) & qbit) != 0;
            };
            size_t pivot = row;
            while (pivot < basis.size() && !bit(basis[pivot])) ++pivot;
            if (pivot == basis.size()) continue;
            std::swap(basis[row], basis[pivot]);
            for (size_t i = 0; i < basis.size(); ++i) {
                if (i != row && bit(basis[i])) basis[i].mul(basis[row]);
            }
            pivots.emplace_back(q, use_x);
            ++row;
        }
        for (size_t i = 0; i < pivots.size(); ++i) {
            auto [q, use_x] = pivots[i];
            if (((use_x ? p.x : p.z) >> q) & 1) p.mul(basis[i]);
        }
        return p;
    }

    size_t n_;
    std::vector<PauliOp> rows_;
};

}  // namespace repnet

#endif  // REPNET_TABLEAU_HPP
