#pragma once

#include "ratfn.hpp"

namespace gmld {

// Symmetric m x m coordinate space with its dual grid; the trace pairing
// <S,K> = sum (2-delta_ij) s_ij k_ij is encoded in the rings' pair weights.
struct SymSpace {
    int m = 0;
    RingP primal;  // k-grid
    RingP dual;    // s-grid
};

SymSpace make_symspace(int m);

// Index of grid position (i,j), 1-based, i<=j.
int sym_index(int m, int i, int j);

// The symbolic symmetric matrix of a sym ring.
std::vector<std::vector<QPoly>> sym_matrix(const RingP& ring);
QPoly sym_det(const RingP& ring);
std::vector<std::vector<QPoly>> mat_adjugate(const std::vector<std::vector<QPoly>>& a);
QPoly mat_det(const std::vector<std::vector<QPoly>>& a);
Rat rat_mat_det(const std::vector<std::vector<Rat>>& a);

// trace(A * M) for numeric symmetric A against the ring's grid variables:
// sum over i<=j of (2-delta_ij) a_ij x_ij.
QPoly trace_pair(const RingP& ring, const std::vector<std::vector<Rat>>& a);

std::vector<std::vector<Rat>> rat_mat_adjugate(const std::vector<std::vector<Rat>>& a);

}  // namespace gmld
