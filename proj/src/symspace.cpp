#include "symspace.hpp"

namespace gmld {

SymSpace make_symspace(int m) {
    SymSpace s;
    s.m = m;
    s.primal = make_sym_ring(m, "k");
    s.dual = make_sym_ring(m, "s");
    return s;
}

int sym_index(int m, int i, int j) {
    if (i > j) std::swap(i, j);
    // row-major over i<=j, 1-based
    int idx = 0;
    for (int r = 1; r < i; ++r) idx += m - r + 1;
    return idx + (j - i);
}

std::vector<std::vector<QPoly>> sym_matrix(const RingP& ring) {
    int m = ring->sym_m;
    if (m <= 0) input_error("not a symmetric-matrix ring");
    std::vector<std::vector<QPoly>> a(m, std::vector<QPoly>(m, QPoly::zero(ring)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) a[i - 1][j - 1] = QPoly::var(ring, sym_index(m, i, j));
    return a;
}

QPoly mat_det(const std::vector<std::vector<QPoly>>& a) {
    size_t n = a.size();
    if (n == 0) input_error("determinant of empty matrix");
    if (n == 1) return a[0][0];
    QPoly acc = QPoly::zero(a[0][0].ring);
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<QPoly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<QPoly> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            minor.push_back(std::move(row));
        }
        QPoly term = a[0][c] * mat_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

QPoly sym_det(const RingP& ring) { return mat_det(sym_matrix(ring)); }

std::vector<std::vector<QPoly>> mat_adjugate(const std::vector<std::vector<QPoly>>& a) {
    size_t n = a.size();
    std::vector<std::vector<QPoly>> adj(n, std::vector<QPoly>(n, QPoly::zero(a[0][0].ring)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<QPoly>> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;  // adj = transposed cofactors
                std::vector<QPoly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            QPoly d = n == 1 ? QPoly::constant(a[0][0].ring, 1) : mat_det(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

Rat rat_mat_det(const std::vector<std::vector<Rat>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    Rat acc(0);
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rat>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(a[r][cc]);
            minor.push_back(std::move(row));
        }
        Rat term = a[0][c] * rat_mat_det(minor);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<std::vector<Rat>> rat_mat_adjugate(const std::vector<std::vector<Rat>>& a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> adj(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Rat> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Rat d = n == 1 ? Rat(1) : rat_mat_det(minor);
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

QPoly trace_pair(const RingP& ring, const std::vector<std::vector<Rat>>& a) {
    int m = ring->sym_m;
    if (m <= 0) input_error("trace pairing needs a symmetric-matrix ring");
    if ((int)a.size() != m) input_error("matrix size does not match ring");
    QPoly acc = QPoly::zero(ring);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            Rat c = a[i - 1][j - 1] * Rat(i == j ? 1 : 2);
            acc = acc + QPoly::var(ring, sym_index(m, i, j)).scaled(c);
        }
    return acc;
}

}  // namespace gmld
