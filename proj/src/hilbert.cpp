#include "wgmsim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wgmsim {

DimensionLayout::DimensionLayout(std::vector<int> d, int atom_count)
    : dims(std::move(d)), atoms(atom_count) {
    if (atoms < 0 || atoms > subsystems())
        throw DimensionError("atom count outside subsystem list");
    for (int i = 0; i < subsystems(); ++i) {
        if (dims[static_cast<size_t>(i)] < 2)
            throw DimensionError("subsystem dimension must be at least 2");
        if (is_atom(i) && dims[static_cast<size_t>(i)] != 2)
            throw DimensionError("atom subsystems must have dimension 2");
    }
}

int DimensionLayout::total() const {
    long t = 1;
    for (int d : dims) {
        t *= d;
        if (t > (1L << 26)) throw DimensionError("total dimension too large");
    }
    return static_cast<int>(t);
}

int DimensionLayout::stride(int index) const {
    long s = 1;
    for (int i = index + 1; i < subsystems(); ++i) s *= dims[static_cast<size_t>(i)];
    return static_cast<int>(s);
}

DimensionLayout make_layout(int atom_count, int photon_cutoff) {
    if (atom_count < 1) throw DimensionError("atom count must be positive");
    if (photon_cutoff < 0) throw DimensionError("photon cutoff must be non-negative");
    std::vector<int> dims(static_cast<size_t>(atom_count), 2);
    dims.push_back(photon_cutoff + 1);  // mode A
    dims.push_back(photon_cutoff + 1);  // mode B
    return DimensionLayout(std::move(dims), atom_count);
}

namespace {

ComplexMatrix local_generator(OperatorKind kind, int d) {
    ComplexMatrix g(d, d);
    switch (kind) {
        case OperatorKind::identity:
            for (int i = 0; i < d; ++i) g(i, i) = 1.0;
            break;
        case OperatorKind::lower:  // |g><e| with e=0, g=1
            g(1, 0) = 1.0;
            break;
        case OperatorKind::raise:
            g(0, 1) = 1.0;
            break;
        case OperatorKind::annihilate:
            for (int n = 1; n < d; ++n) g(n - 1, n) = std::sqrt(static_cast<double>(n));
            break;
        case OperatorKind::create:
            for (int n = 1; n < d; ++n) g(n, n - 1) = std::sqrt(static_cast<double>(n));
            break;
        case OperatorKind::number:
            for (int n = 0; n < d; ++n) g(n, n) = static_cast<double>(n);
            break;
    }
    return g;
}

}  // namespace

ComplexMatrix subsystem_operator(OperatorKind kind, int index, const DimensionLayout& layout) {
    if (index < 0 || index >= layout.subsystems())
        throw DimensionError("subsystem index out of range");
    const bool atom_kind = (kind == OperatorKind::lower || kind == OperatorKind::raise);
    const bool mode_kind = (kind == OperatorKind::annihilate || kind == OperatorKind::create ||
                            kind == OperatorKind::number);
    if (atom_kind && !layout.is_atom(index))
        throw DimensionError("lower/raise require a two-level subsystem");
    if (mode_kind && layout.is_atom(index))
        throw DimensionError("bosonic operators require a mode subsystem");

    const int d = layout.dims[static_cast<size_t>(index)];
    const ComplexMatrix local = local_generator(kind, d);

    const int total = layout.total();
    const int right = layout.stride(index);
    const int left = total / (d * right);

    ComplexMatrix out(total, total);
    for (int lb = 0; lb < left; ++lb) {
        const long base = static_cast<long>(lb) * d * right;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const cplx v = local(r, c);
                if (v == cplx(0.0, 0.0)) continue;
                for (int rb = 0; rb < right; ++rb)
                    out(static_cast<int>(base + static_cast<long>(r) * right + rb),
                        static_cast<int>(base + static_cast<long>(c) * right + rb)) = v;
            }
    }
    return out;
}

std::pair<ComplexMatrix, DimensionLayout> partial_trace(const ComplexMatrix& rho,
                                                        const DimensionLayout& layout,
                                                        const std::vector<int>& keep) {
    const int total = layout.total();
    if (!rho.square() || rho.rows() != total)
        throw DimensionError("density matrix does not match layout");
    if (keep.empty()) throw DimensionError("partial trace must keep at least one subsystem");

    std::vector<int> kept(keep);
    std::sort(kept.begin(), kept.end());
    if (std::unique(kept.begin(), kept.end()) != kept.end())
        throw DimensionError("duplicate subsystem in keep set");
    for (int k : kept)
        if (k < 0 || k >= layout.subsystems()) throw DimensionError("keep index out of range");

    std::vector<int> traced;
    for (int i = 0; i < layout.subsystems(); ++i)
        if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);

    // Flat offsets of every kept and traced multi-index.
    auto offsets = [&](const std::vector<int>& subs) {
        std::vector<long> off{0};
        for (int s : subs) {
            const int d = layout.dims[static_cast<size_t>(s)];
            const long stride = layout.stride(s);
            std::vector<long> next;
            next.reserve(off.size() * static_cast<size_t>(d));
            for (long o : off)
                for (int v = 0; v < d; ++v) next.push_back(o + v * stride);
            off = std::move(next);
        }
        return off;
    };
    const std::vector<long> off_keep = offsets(kept);
    const std::vector<long> off_tr = offsets(traced);

    const int dk = static_cast<int>(off_keep.size());
    ComplexMatrix out(dk, dk);
    const cplx* src = rho.data();
    for (int i = 0; i < dk; ++i)
        for (int j = 0; j < dk; ++j) {
            cplx acc(0.0, 0.0);
            for (long t : off_tr)
                acc += src[(off_keep[static_cast<size_t>(i)] + t) * total +
                           off_keep[static_cast<size_t>(j)] + t];
            out(i, j) = acc;
        }

    std::vector<int> new_dims;
    int new_atoms = 0;
    for (int k : kept) {
        new_dims.push_back(layout.dims[static_cast<size_t>(k)]);
        if (layout.is_atom(k)) ++new_atoms;
    }
    return {std::move(out), DimensionLayout(std::move(new_dims), new_atoms)};
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimensionLayout& layout,
                                const std::vector<int>& transposed) {
    const int total = layout.total();
    if (!rho.square() || rho.rows() != total)
        throw DimensionError("density matrix does not match layout");
    std::vector<bool> flip(static_cast<size_t>(layout.subsystems()), false);
    for (int t : transposed) {
        if (t < 0 || t >= layout.subsystems())
            throw DimensionError("transpose index out of range");
        flip[static_cast<size_t>(t)] = true;
    }

    const int m = layout.subsystems();
    std::vector<int> strides(static_cast<size_t>(m));
    for (int s = 0; s < m; ++s) strides[static_cast<size_t>(s)] = layout.stride(s);

    // digit(s, flat) tables
    std::vector<std::vector<int>> digit(static_cast<size_t>(m),
                                        std::vector<int>(static_cast<size_t>(total)));
    for (int s = 0; s < m; ++s) {
        const int d = layout.dims[static_cast<size_t>(s)];
        const int str = strides[static_cast<size_t>(s)];
        for (int f = 0; f < total; ++f) digit[static_cast<size_t>(s)][static_cast<size_t>(f)] = (f / str) % d;
    }

    ComplexMatrix out(total, total);
    for (int r = 0; r < total; ++r)
        for (int c = 0; c < total; ++c) {
            int rr = r, cc = c;
            for (int s = 0; s < m; ++s) {
                if (!flip[static_cast<size_t>(s)]) continue;
                const int dr = digit[static_cast<size_t>(s)][static_cast<size_t>(r)];
                const int dc = digit[static_cast<size_t>(s)][static_cast<size_t>(c)];
                const int str = strides[static_cast<size_t>(s)];
                rr += (dc - dr) * str;
                cc += (dr - dc) * str;
            }
            out(rr, cc) = rho(r, c);
        }
    return out;
}

StateVector basis_state(const DimensionLayout& layout, const std::vector<int>& digits) {
    if (static_cast<int>(digits.size()) != layout.subsystems())
        throw DimensionError("digit list does not match layout");
    long flat = 0;
    for (int s = 0; s < layout.subsystems(); ++s) {
        const int d = layout.dims[static_cast<size_t>(s)];
        const int v = digits[static_cast<size_t>(s)];
        if (v < 0 || v >= d) throw DimensionError("basis digit out of range");
        flat = flat * d + v;
    }
    StateVector psi(layout.total());
    psi[static_cast<int>(flat)] = 1.0;
    return psi;
}

}  // namespace wgmsim
