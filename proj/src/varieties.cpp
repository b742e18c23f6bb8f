#include "varieties.hpp"

#include <functional>

#include "symspace.hpp"

namespace gmld {

VarietySpec make_variety(RingP ring, std::vector<QPoly> gens) {
    VarietySpec X;
    X.ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) {
            std::string terms;
            for (auto& [m, c] : g.t) {
                if (!terms.empty()) terms += ", ";
                terms += poly_str(QPoly::term(g.ring, m, c));
            }
            input_error("variety generator is not homogeneous; terms: " + terms);
        }
        if (g.is_constant()) input_error("variety ideal contains a unit");
        // clear denominators and integer content, keeping the given sign
        QPoly prim = primitive_part(g);
        if ((prim.reorder(grevlex_order()).lc() * g.reorder(grevlex_order()).lc()).v < 0) prim = -prim;
        X.gens.push_back(prim);
    }
    return X;
}

int VarietySpec::codim(Budget* budget) const {
    if (codim_cache >= 0) return codim_cache;
    if (gens.empty()) return codim_cache = 0;
    int affdim = ideal_dimension(gens, ring, budget);
    if (affdim <= 0) input_error("variety ideal cuts out only the origin");
    codim_cache = ring->nvars() - affdim;
    return codim_cache;
}

std::vector<std::vector<QPoly>> jacobian(const VarietySpec& X) {
    std::vector<std::vector<QPoly>> rows;
    for (auto& g : X.gens) rows.push_back(plain_gradient(g));
    return rows;
}

static void combos(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

std::vector<QPoly> minors(const std::vector<std::vector<QPoly>>& mat, int k) {
    if (k <= 0) return {QPoly::constant(mat.empty() ? RingP() : mat[0][0].ring, 1)};
    int rows = (int)mat.size();
    int cols = rows ? (int)mat[0].size() : 0;
    std::vector<QPoly> out;
    if (k > rows || k > cols) return out;
    combos(rows, k, [&](const std::vector<int>& ri) {
        combos(cols, k, [&](const std::vector<int>& ci) {
            std::vector<std::vector<QPoly>> sub(k, std::vector<QPoly>(k, QPoly::zero(mat[0][0].ring)));
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) sub[a][b] = mat[ri[a]][ci[b]];
            QPoly d = mat_det(sub);
            if (!d.is_zero()) out.push_back(primitive_part(d));
        });
    });
    return out;
}

std::vector<QPoly> singular_locus(const VarietySpec& X, Budget* budget) {
    if (X.sing_cache) return *X.sing_cache;
    int c = X.codim(budget);
    std::vector<QPoly> out = minors(jacobian(X), c);
    for (auto& g : X.gens) out.push_back(g);
    X.sing_cache = out;
    return out;
}

std::vector<int> BiRing::x_indices() const {
    std::vector<int> v(nx);
    for (int i = 0; i < nx; ++i) v[i] = i;
    return v;
}
std::vector<int> BiRing::y_indices() const {
    std::vector<int> v(ny);
    for (int i = 0; i < ny; ++i) v[i] = nx + i;
    return v;
}

BiRing make_biring(const RingP& primal, const RingP& dual) {
    BiRing b;
    b.xr = primal;
    b.yr = dual;
    b.ring = concat_rings(primal, dual);
    b.nx = primal->nvars();
    b.ny = dual->nvars();
    return b;
}

std::vector<QPoly> conormal_raw(const VarietySpec& X, const BiRing& b, Budget* budget) {
    int c = X.codim(budget);
    std::vector<std::vector<QPoly>> mat;
    std::vector<QPoly> yrow;
    for (int i = 0; i < b.ny; ++i) yrow.push_back(b.pair_row_entry(i));
    mat.push_back(yrow);
    for (auto& row : jacobian(X)) {
        std::vector<QPoly> r;
        for (auto& e : row) r.push_back(b.embed_x(e));
        mat.push_back(std::move(r));
    }
    std::vector<QPoly> out = minors(mat, c + 1);
    for (auto& g : X.gens) out.push_back(b.embed_x(g));
    return out;
}

std::vector<QPoly> conormal_ideal(const VarietySpec& X, const BiRing& b, Budget* budget) {
    auto raw = conormal_raw(X, b, budget);
    int c = X.codim(budget);
    auto sat = minors(jacobian(X), c);
    std::vector<QPoly> sat_emb;
    for (auto& s : sat)
        if (!s.is_zero()) sat_emb.push_back(b.embed_x(s));
    if (sat_emb.empty()) return raw;
    return saturate(raw, b.ring, sat_emb, budget);
}

std::vector<QPoly> gradient_row(const RatFn& F) {
    std::vector<QPoly> out;
    for (int i = 0; i < F.ring()->nvars(); ++i)
        out.push_back(F.den * deriv(F.num, i) - F.num * deriv(F.den, i));
    return out;
}

std::vector<QPoly> gradient_graph_raw(const RatFn& F, const BiRing& b) {
    std::vector<std::vector<QPoly>> mat(2);
    for (int i = 0; i < b.ny; ++i) mat[0].push_back(b.pair_row_entry(i));
    for (auto& e : gradient_row(F)) mat[1].push_back(b.embed_x(e));
    return minors(mat, 2);
}

std::vector<QPoly> gradient_graph_ideal(const RatFn& F, const BiRing& b, Budget* budget) {
    if (F.degree() == 0) input_error("gradient graph needs nonzero degree");
    auto raw = gradient_graph_raw(F, b);
    std::vector<QPoly> sat;
    for (auto& e : gradient_row(F))
        if (!e.is_zero()) sat.push_back(b.embed_x(e));
    return saturate(raw, b.ring, sat, budget);
}

std::vector<QPoly> dual_variety(const VarietySpec& X, const RingP& dual, Budget* budget) {
    BiRing b = make_biring(X.ring, dual);
    auto con = conormal_ideal(X, b, budget);
    auto elim = eliminate(con, b.ring, b.x_indices(), budget);
    std::vector<int> back(b.ring->nvars(), -1);
    for (int i = 0; i < b.ny; ++i) back[b.nx + i] = i;
    std::vector<QPoly> out;
    for (auto& g : elim) out.push_back(primitive_part(map_vars(g, dual, back)));
    return out;
}

long multiplicity_at_point(const QPoly& g, const std::vector<Rat>& point) {
    if (!g.is_homogeneous()) input_error("multiplicity test needs a homogeneous polynomial");
    bool nonzero = false;
    for (auto& c : point) nonzero |= !c.is_zero();
    if (!nonzero) input_error("multiplicity at the zero vector");
    RingP r = g.ring;
    auto ext = with_aux(r, "mult");
    std::vector<QPoly> images;
    for (int i = 0; i < r->nvars(); ++i)
        images.push_back(QPoly::var(ext.ring, i) + QPoly::var(ext.ring, ext.aux).scaled(point[i]));
    QPoly shifted = substitute(g, ext.ring, images);
    int tdeg = 0;
    for (auto& [m, c] : shifted.t) tdeg = std::max(tdeg, (int)m.e[ext.aux]);
    return g.deg() - tdeg;
}

bool f_general_emptiness(const VarietySpec& X, const RatFn& F, const RingP& dual, Budget* budget) {
    if (F.degree() == 0) input_error("F must have nonzero degree");
    BiRing b = make_biring(X.ring, dual);
    auto sum = conormal_ideal(X, b, budget);
    for (auto& g : gradient_graph_ideal(F, b, budget)) sum.push_back(g);
    std::vector<QPoly> irr_x, irr_y;
    for (int i = 0; i < b.nx; ++i) irr_x.push_back(QPoly::var(b.ring, i));
    for (int i = 0; i < b.ny; ++i) irr_y.push_back(QPoly::var(b.ring, b.nx + i));
    auto s1 = saturate(sum, b.ring, irr_x, budget);
    auto s2 = saturate(s1, b.ring, irr_y, budget);
    return buchberger(s2, grevlex_order(), budget).is_unit();
}

VarietySpec perturb(const VarietySpec& X, uint64_t seed) {
    int n = X.ring->nvars();
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n, Rat(0)));
    if (seed == 0) {
        for (int i = 0; i < n; ++i) g[i][i] = Rat(1);
    } else {
        Rng rng(seed);
        for (int attempt = 0;; ++attempt) {
            for (auto& row : g)
                for (auto& e : row) e = Rat((long)rng.below(9) - 4);
            if (!rat_mat_det(g).is_zero()) break;
            if (attempt == 31) input_error("could not sample an invertible matrix");
        }
    }
    std::vector<QPoly> images;
    for (int i = 0; i < n; ++i) {
        QPoly im = QPoly::zero(X.ring);
        for (int j = 0; j < n; ++j)
            if (!g[i][j].is_zero()) im = im + QPoly::var(X.ring, j).scaled(g[i][j]);
        images.push_back(im);
    }
    std::vector<QPoly> gens;
    for (auto& h : X.gens) gens.push_back(substitute_linear(h, X.ring, images));
    return make_variety(X.ring, gens);
}

}  // namespace gmld
