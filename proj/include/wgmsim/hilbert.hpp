#pragma once

#include <utility>
#include <vector>

#include "wgmsim/matrix.hpp"

namespace wgmsim {

// Ordered subsystem dimensions defining the tensor-product structure of
// every operator and state. Convention used throughout: two-level emitters
// first (in index order), then mode A, then mode B. Atom local basis is
// index 0 = |e>, index 1 = |g>; mode local basis is the Fock number.
struct DimensionLayout {
    std::vector<int> dims;
    int atoms = 0;  // first `atoms` entries are two-level emitters

    DimensionLayout() = default;
    DimensionLayout(std::vector<int> d, int atom_count);

    int subsystems() const { return static_cast<int>(dims.size()); }
    int total() const;
    bool is_atom(int index) const { return index < atoms; }
    // Stride of subsystem `index` in the flattened basis.
    int stride(int index) const;
};

DimensionLayout make_layout(int atom_count, int photon_cutoff);

enum class OperatorKind { lower, raise, number, annihilate, create, identity };

// Local generator tensored with identities on every other subsystem.
// lower/raise act on atoms only; annihilate/create/number on modes only.
ComplexMatrix subsystem_operator(OperatorKind kind, int index, const DimensionLayout& layout);

// Reduced density matrix over `keep` (original relative order preserved).
std::pair<ComplexMatrix, DimensionLayout> partial_trace(const ComplexMatrix& rho,
                                                        const DimensionLayout& layout,
                                                        const std::vector<int>& keep);

// Transposes the row/column indices of the listed subsystems.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimensionLayout& layout,
                                const std::vector<int>& transposed);

// Basis state |digits> as a flat vector, digits given per subsystem.
StateVector basis_state(const DimensionLayout& layout, const std::vector<int>& digits);

}  // namespace wgmsim
