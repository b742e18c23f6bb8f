#pragma once

#include <map>
#include <optional>

#include "symspace.hpp"
#include "varieties.hpp"

namespace gmld {

// Parsed problem session: one ring declaration plus named bindings.
// Statements end with ';', comments run from '#' to end of line.
//
//   ring x0 x1 x2;          plain ring (dual variables u_x0, u_x1, u_x2)
//   ring sym 2;             symmetric grid k11 k12 k22 (dual s11 s12 s22)
//   F = det;                expressions: + - * / ^, integers, rationals a/b,
//   X = ideal(det - k11^2); variables of either ring, det, adj(A),
//   alpha = k11;            trace(A*K), trace(A*S)
//   Phi = 1 / u_x0;
//   A = matrix[[1,0],[0,0]];
//   point = [0,0,1];
struct Session {
    std::string source;
    RingP ring;
    RingP dual;
    int sym_m = 0;

    struct Fn {
        RatFn value;
        int ring_tag;  // 0 constant, 1 primal, 2 dual
    };
    std::map<std::string, Fn> fns;
    std::map<std::string, std::vector<QPoly>> ideals;
    std::map<std::string, std::vector<std::vector<Rat>>> matrices;
    std::map<std::string, std::vector<Rat>> vectors;

    bool has_fn(const std::string& name) const { return fns.count(name) != 0; }
    const Fn& fn(const std::string& name) const;
    const std::vector<QPoly>& ideal(const std::string& name) const;
    const std::vector<std::vector<Rat>>& matrix(const std::string& name) const;
    const std::vector<Rat>& vec(const std::string& name) const;

    // Bindings required by commands, with arity/homogeneity validation.
    RatFn require_F() const;
    VarietySpec require_X() const;
    QPoly require_alpha() const;
    RatFn require_phi() const;  // over the dual ring
    std::vector<Rat> require_point() const;

    std::string hash() const { return hex64(fnv1a64(source)); }
};

Session parse_session(const std::string& text);

}  // namespace gmld
