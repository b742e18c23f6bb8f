#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "basics.hpp"

namespace gmld {

constexpr int kMaxVars = 24;

enum class FieldKind { QQ, Zp };

struct Ring;
using RingP = std::shared_ptr<const Ring>;

// Immutable ring context: variable names, coefficient field, and the
// dual-pairing multiplier per variable (2 for off-diagonal symmetric-matrix
// coordinates, 1 otherwise).
struct Ring {
    std::vector<std::string> names;
    std::vector<int> pairw;  // 2 - delta_ij
    FieldKind field = FieldKind::QQ;
    uint64_t p = 0;  // modulus when field == Zp
    int sym_m = 0;   // >0 when the ring is a full symmetric-matrix grid

    int nvars() const { return (int)names.size(); }
    int index_of(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
    bool same_structure(const Ring& o) const {
        return names == o.names && field == o.field && p == o.p;
    }
};

RingP make_ring(std::vector<std::string> names, FieldKind field = FieldKind::QQ, uint64_t p = 0);
RingP make_ring_weighted(std::vector<std::string> names, std::vector<int> pairw,
                         FieldKind field = FieldKind::QQ, uint64_t p = 0);
// Symmetric m x m coordinate grid: prefix=="k" gives k11,k12,...,kmm (row-major, i<=j).
RingP make_sym_ring(int m, const std::string& prefix, FieldKind field = FieldKind::QQ, uint64_t p = 0);
// Same variables over Z/p.
RingP to_zp(const RingP& r, uint64_t p);
// Append extra variables (pair weight 1).
RingP extend_ring(const RingP& r, const std::vector<std::string>& extra);
// Concatenate two rings (same field).
RingP concat_rings(const RingP& a, const RingP& b);

// Exponent vector with cached total degree.
struct Expvec {
    uint32_t deg = 0;
    std::array<uint16_t, kMaxVars> e{};

    static Expvec one() { return Expvec{}; }
    static Expvec var(int i, int pow = 1) {
        Expvec m;
        m.e[i] = (uint16_t)pow;
        m.deg = pow;
        return m;
    }
    bool is_one() const { return deg == 0; }
    Expvec operator*(const Expvec& o) const {
        Expvec r;
        r.deg = deg + o.deg;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    bool divides(const Expvec& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Expvec div(const Expvec& o) const {  // *this / o, assumes divisible
        Expvec r;
        r.deg = deg - o.deg;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    Expvec lcm(const Expvec& o) const {
        Expvec r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }
    bool coprime(const Expvec& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Expvec& o) const { return deg == o.deg && e == o.e; }
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, block, weighted };
    Kind kind = Kind::grevlex;
    // block order: vars in `front` compared first (elimination block), the rest after.
    std::vector<int> front;
    Kind inner1 = Kind::grevlex, inner2 = Kind::grevlex;
    std::vector<long> weights;  // weighted: weight vector, grevlex tiebreak

    // +1 if a > b, -1 if a < b, 0 if equal.
    int cmp(const Expvec& a, const Expvec& b, int nvars) const;
};

using OrdP = std::shared_ptr<const MonomialOrder>;

OrdP grevlex_order();
OrdP lex_order();
OrdP block_order(std::vector<int> front_vars,
                 MonomialOrder::Kind inner1 = MonomialOrder::Kind::grevlex,
                 MonomialOrder::Kind inner2 = MonomialOrder::Kind::grevlex);
OrdP weighted_order(std::vector<long> weights);

}  // namespace gmld
