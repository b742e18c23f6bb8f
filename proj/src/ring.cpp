#include "ring.hpp"

#include <algorithm>

#include "coeffs.hpp"

namespace gmld {

std::string hex64(uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = d[v & 0xf];
        v >>= 4;
    }
    return s;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static void validate(const Ring& r) {
    if (r.nvars() == 0) input_error("ring needs at least one variable");
    if (r.nvars() > kMaxVars) input_error("too many ring variables (limit " + std::to_string(kMaxVars) + ")");
    if (r.field == FieldKind::Zp) {
        if (r.p >= (1ULL << 31)) input_error("prime too large");
        if (!is_prime_u64(r.p)) input_error(std::to_string(r.p) + " is not prime");
    }
    for (int i = 0; i < r.nvars(); ++i)
        for (int j = i + 1; j < r.nvars(); ++j)
            if (r.names[i] == r.names[j]) input_error("duplicate variable name " + r.names[i]);
}

RingP make_ring(std::vector<std::string> names, FieldKind field, uint64_t p) {
    auto r = std::make_shared<Ring>();
    r->pairw.assign(names.size(), 1);
    r->names = std::move(names);
    r->field = field;
    r->p = p;
    validate(*r);
    return r;
}

RingP make_ring_weighted(std::vector<std::string> names, std::vector<int> pairw, FieldKind field,
                         uint64_t p) {
    auto r = std::make_shared<Ring>();
    r->names = std::move(names);
    r->pairw = std::move(pairw);
    r->field = field;
    r->p = p;
    validate(*r);
    return r;
}

RingP make_sym_ring(int m, const std::string& prefix, FieldKind field, uint64_t p) {
    if (m < 1 || m > 5) input_error("symmetric matrix size out of range");
    auto r = std::make_shared<Ring>();
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) {
            r->names.push_back(prefix + std::to_string(i) + std::to_string(j));
            r->pairw.push_back(i == j ? 1 : 2);
        }
    r->field = field;
    r->p = p;
    r->sym_m = m;
    validate(*r);
    return r;
}

RingP to_zp(const RingP& r, uint64_t p) {
    auto s = std::make_shared<Ring>(*r);
    s->field = FieldKind::Zp;
    s->p = p;
    validate(*s);
    return s;
}

RingP extend_ring(const RingP& r, const std::vector<std::string>& extra) {
    auto s = std::make_shared<Ring>(*r);
    for (auto& n : extra) {
        s->names.push_back(n);
        s->pairw.push_back(1);
    }
    s->sym_m = 0;
    validate(*s);
    return s;
}

RingP concat_rings(const RingP& a, const RingP& b) {
    if (a->field != b->field || a->p != b->p) input_error("cannot join rings over different fields");
    auto s = std::make_shared<Ring>();
    s->names = a->names;
    s->pairw = a->pairw;
    s->names.insert(s->names.end(), b->names.begin(), b->names.end());
    s->pairw.insert(s->pairw.end(), b->pairw.begin(), b->pairw.end());
    s->field = a->field;
    s->p = a->p;
    validate(*s);
    return s;
}

// grevlex on an index subset: higher total degree wins; on ties the last
// position (in subset order) where exponents differ decides, smaller wins.
static int cmp_grevlex(const Expvec& a, const Expvec& b, const int* idx, int n) {
    long da = 0, db = 0;
    for (int k = 0; k < n; ++k) {
        da += a.e[idx[k]];
        db += b.e[idx[k]];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int k = n - 1; k >= 0; --k) {
        int i = idx[k];
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

static int cmp_lex(const Expvec& a, const Expvec& b, const int* idx, int n) {
    for (int k = 0; k < n; ++k) {
        int i = idx[k];
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

static int cmp_kind(MonomialOrder::Kind k, const Expvec& a, const Expvec& b, const int* idx, int n) {
    return k == MonomialOrder::Kind::lex ? cmp_lex(a, b, idx, n) : cmp_grevlex(a, b, idx, n);
}

int MonomialOrder::cmp(const Expvec& a, const Expvec& b, int nvars) const {
    static thread_local std::vector<int> all;
    switch (kind) {
        case Kind::grevlex:
        case Kind::lex: {
            all.resize(nvars);
            for (int i = 0; i < nvars; ++i) all[i] = i;
            return cmp_kind(kind, a, b, all.data(), nvars);
        }
        case Kind::weighted: {
            long wa = 0, wb = 0;
            for (int i = 0; i < nvars && i < (int)weights.size(); ++i) {
                wa += weights[i] * a.e[i];
                wb += weights[i] * b.e[i];
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            all.resize(nvars);
            for (int i = 0; i < nvars; ++i) all[i] = i;
            return cmp_grevlex(a, b, all.data(), nvars);
        }
        case Kind::block: {
            int c = cmp_kind(inner1, a, b, front.data(), (int)front.size());
            if (c) return c;
            std::vector<char> in(nvars, 0);
            for (int i : front) in[i] = 1;
            static thread_local std::vector<int> rest;
            rest.clear();
            for (int i = 0; i < nvars; ++i)
                if (!in[i]) rest.push_back(i);
            return cmp_kind(inner2, a, b, rest.data(), (int)rest.size());
        }
    }
    return 0;
}

OrdP grevlex_order() {
    static OrdP o = std::make_shared<MonomialOrder>();
    return o;
}

OrdP lex_order() {
    auto o = std::make_shared<MonomialOrder>();
    o->kind = MonomialOrder::Kind::lex;
    return o;
}

OrdP block_order(std::vector<int> front_vars, MonomialOrder::Kind inner1, MonomialOrder::Kind inner2) {
    auto o = std::make_shared<MonomialOrder>();
    o->kind = MonomialOrder::Kind::block;
    o->front = std::move(front_vars);
    o->inner1 = inner1;
    o->inner2 = inner2;
    return o;
}

OrdP weighted_order(std::vector<long> weights) {
    auto o = std::make_shared<MonomialOrder>();
    o->kind = MonomialOrder::Kind::weighted;
    o->weights = std::move(weights);
    return o;
}

}  // namespace gmld
