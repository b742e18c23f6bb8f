#include "mld.hpp"

#include <map>

namespace gmld {

MLProblem make_ml_problem(VarietySpec X, RatFn F, RingP dual, Budget* budget) {
    if (F.degree() == 0) input_error("F must have nonzero degree");
    if (!F.is_homogeneous()) input_error("F must be homogeneous");
    if (!X.gens.empty()) {
        if (radical_membership(F.num, X.gens, X.ring, budget))
            input_error("X lies inside the zero divisor of F");
        if (!F.den.is_constant() && radical_membership(F.den, X.gens, X.ring, budget))
            input_error("X lies inside the polar divisor of F");
    }
    return MLProblem{std::move(X), std::move(F), std::move(dual)};
}

// row_i = (g grad f - f grad g)_i - f g (2-delta_i) u_i
static std::vector<QPoly> likelihood_row(const MLProblem& P, const BiRing& b) {
    QPoly fg = b.embed_x(P.F.num * P.F.den);
    std::vector<QPoly> row;
    auto grad = gradient_row(P.F);
    for (int i = 0; i < b.nx; ++i) row.push_back(b.embed_x(grad[i]) - fg * b.pair_row_entry(i));
    return row;
}

static std::vector<std::vector<QPoly>> embed_jacobian(const VarietySpec& X, const BiRing& b) {
    std::vector<std::vector<QPoly>> rows;
    for (auto& row : jacobian(X)) {
        std::vector<QPoly> r;
        for (auto& e : row) r.push_back(b.embed_x(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<QPoly> critical_ideal_affine(const MLProblem& P, const BiRing& b, Budget* budget) {
    int c = P.X.codim(budget);
    std::vector<std::vector<QPoly>> mat;
    mat.push_back(likelihood_row(P, b));
    for (auto& r : embed_jacobian(P.X, b)) mat.push_back(r);
    std::vector<QPoly> gens = minors(mat, c + 1);
    for (auto& g : P.X.gens) gens.push_back(b.embed_x(g));

    std::vector<QPoly> sing;
    for (auto& s : minors(jacobian(P.X), c))
        if (!s.is_zero() && !s.is_constant()) sing.push_back(b.embed_x(s));
    if (!sing.empty()) gens = saturate(gens, b.ring, sing, budget);
    QPoly fg = b.embed_x(P.F.num * P.F.den);
    if (!fg.is_constant()) gens = saturate(gens, b.ring, {fg}, budget);
    return gens;
}

std::vector<QPoly> ml_correspondence_raw(const MLProblem& P, const BiRing& b, Budget* budget) {
    int c = P.X.codim(budget);
    std::vector<std::vector<QPoly>> mat;
    std::vector<QPoly> urow;
    for (int i = 0; i < b.ny; ++i) urow.push_back(b.pair_row_entry(i));
    mat.push_back(urow);
    std::vector<QPoly> grow;
    for (auto& e : gradient_row(P.F)) grow.push_back(b.embed_x(e));
    mat.push_back(grow);
    for (auto& r : embed_jacobian(P.X, b)) mat.push_back(r);
    std::vector<QPoly> gens = minors(mat, c + 2);
    for (auto& g : P.X.gens) gens.push_back(b.embed_x(g));
    return gens;
}

// (c+1)-minors of [g grad f - f grad g; J_X]: where the adjoined Gauss map
// degenerates. Lives in the x-block.
static std::vector<QPoly> gauss_degeneracy_minors(const MLProblem& P, Budget* budget) {
    int c = P.X.codim(budget);
    std::vector<std::vector<QPoly>> mat;
    mat.push_back(gradient_row(P.F));
    for (auto& r : jacobian(P.X)) mat.push_back(r);
    return minors(mat, c + 1);
}

std::vector<QPoly> ml_correspondence_projective(const MLProblem& P, const BiRing& b, Budget* budget) {
    auto raw = ml_correspondence_raw(P, b, budget);
    std::vector<QPoly> sat;
    for (auto& m : gauss_degeneracy_minors(P, budget))
        if (!m.is_zero()) sat.push_back(b.embed_x(m));
    if (sat.empty()) return raw;
    return saturate(raw, b.ring, sat, budget);
}

MLDReport mld_compute(const MLProblem& P, const CountOptions& opt, Dehomog mode) {
    BiRing b = make_biring(P.X.ring, P.dual);
    RingP zbi = to_zp(b.ring, opt.prime);
    RingP zx = to_zp(P.X.ring, opt.prime);
    int m = P.F.degree();

    std::vector<ZpPoly> raw;
    for (auto& g : ml_correspondence_raw(P, b, opt.budget)) raw.push_back(reduce_poly(g, zbi));

    std::vector<std::vector<ZpPoly>> avoid_groups;
    {
        ZpPoly fg = reduce_poly(P.F.num * P.F.den, zx);
        if (fg.is_zero()) input_error("F vanishes mod p; pick another prime");
        if (!fg.is_constant()) avoid_groups.push_back({fg});
        std::vector<ZpPoly> grp;
        int c = P.X.codim(opt.budget);
        for (auto& s : minors(jacobian(P.X), c)) {
            if (s.is_zero() || s.is_constant()) continue;
            ZpPoly sz = reduce_poly(s, zx);
            if (!sz.is_zero()) grp.push_back(sz);
        }
        if (!grp.empty()) avoid_groups.push_back(grp);
        grp.clear();
        for (auto& g : gauss_degeneracy_minors(P, opt.budget)) {
            if (g.is_zero() || g.is_constant()) continue;
            ZpPoly gz = reduce_poly(g, zx);
            if (!gz.is_zero()) grp.push_back(gz);
        }
        if (!grp.empty()) avoid_groups.push_back(grp);
    }

    MLDReport rep;
    rep.method = "direct";
    rep.prime = opt.prime;
    rep.trials = opt.trials;
    Rng seeder(opt.seed);
    long agreed = 0;
    int posdim = 0;
    for (int t = 0; t < opt.trials; ++t) {
        uint64_t s = seeder.next();
        rep.seeds.push_back(s);
        Rng rng(s);
        std::vector<ZpPoly> images;
        for (int i = 0; i < b.nx; ++i) images.push_back(ZpPoly::var(zx, i));
        std::vector<Zp> uval;
        for (int i = 0; i < b.ny; ++i) {
            uval.push_back(Zp(rng.below(opt.prime), opt.prime));
            images.push_back(ZpPoly::konst(zx, uval.back()));
        }
        std::vector<ZpPoly> gens;
        for (auto& g : raw) {
            ZpPoly sg = substitute(g, zx, images);
            if (!sg.is_zero()) gens.push_back(sg);
        }
        std::vector<std::vector<int>> charts;
        if (mode == Dehomog::trace_slice) {
            ZpPoly slice = ZpPoly::zero(zx, grevlex_order());
            for (int i = 0; i < b.nx; ++i)
                slice =
                    slice + ZpPoly::var(zx, i).scaled(uval[i] * Zp::of_long(zx->pairw[i], opt.prime));
            slice = slice - ZpPoly::constant(zx, m);
            gens.push_back(slice);
        }
        if (mode == Dehomog::chart) {
            std::vector<int> all;
            for (int i = 0; i < b.nx; ++i) all.push_back(i);
            charts.push_back(all);
        }
        long c = sliced_count_once(zx, gens, {}, charts, avoid_groups, rng, opt.budget);
        if (c < 0) {
            ++posdim;
            continue;
        }
        if (t == posdim)
            agreed = c;
        else if (c != agreed)
            throw Error(ErrKind::disagreement, "trial counts disagree (" + std::to_string(agreed) +
                                                   " vs " + std::to_string(c) +
                                                   "); rerun with another seed");
    }
    if (posdim == opt.trials) {
        rep.status = "positive-dimensional";
        rep.value = 0;
        return rep;
    }
    if (posdim != 0)
        throw Error(ErrKind::disagreement,
                    "some trials were positive-dimensional; rerun with another seed");
    rep.value = agreed;
    return rep;
}

std::pair<long, long> affine_slice_counts(const MLProblem& P, const CountOptions& opt) {
    BiRing b = make_biring(P.X.ring, P.dual);
    RingP zbi = to_zp(b.ring, opt.prime);
    RingP zx = to_zp(P.X.ring, opt.prime);
    int c = P.X.codim(opt.budget);
    int m = P.F.degree();

    std::vector<std::vector<QPoly>> mat;
    mat.push_back(likelihood_row(P, b));
    for (auto& r : embed_jacobian(P.X, b)) mat.push_back(r);
    std::vector<QPoly> sys = minors(mat, c + 1);
    for (auto& g : P.X.gens) sys.push_back(b.embed_x(g));
    std::vector<ZpPoly> raw;
    for (auto& g : sys) raw.push_back(reduce_poly(g, zbi));

    std::vector<std::vector<ZpPoly>> avoid_groups;
    ZpPoly fg = reduce_poly(P.F.num * P.F.den, zx);
    if (!fg.is_constant()) avoid_groups.push_back({fg});
    std::vector<ZpPoly> grp;
    for (auto& s : minors(jacobian(P.X), c)) {
        if (s.is_zero() || s.is_constant()) continue;
        ZpPoly sz = reduce_poly(s, zx);
        if (!sz.is_zero()) grp.push_back(sz);
    }
    if (!grp.empty()) avoid_groups.push_back(grp);

    Rng seeder(opt.seed ^ 0x51a5ULL);
    std::pair<long, long> agreed{-2, -2};
    for (int t = 0; t < opt.trials; ++t) {
        Rng rng(seeder.next());
        std::vector<ZpPoly> images;
        for (int i = 0; i < b.nx; ++i) images.push_back(ZpPoly::var(zx, i));
        std::vector<Zp> uval;
        for (int i = 0; i < b.ny; ++i) {
            uval.push_back(Zp(rng.below(opt.prime), opt.prime));
            images.push_back(ZpPoly::konst(zx, uval.back()));
        }
        std::vector<ZpPoly> gens;
        for (auto& g : raw) {
            ZpPoly sg = substitute(g, zx, images);
            if (!sg.is_zero()) gens.push_back(sg);
        }
        Rng rng2 = rng;
        long n1 = sliced_count_once(zx, gens, {}, {}, avoid_groups, rng, opt.budget);
        ZpPoly slice = ZpPoly::zero(zx, grevlex_order());
        for (int i = 0; i < b.nx; ++i)
            slice = slice + ZpPoly::var(zx, i).scaled(uval[i] * Zp::of_long(zx->pairw[i], opt.prime));
        slice = slice - ZpPoly::constant(zx, m);
        gens.push_back(slice);
        long n2 = sliced_count_once(zx, gens, {}, {}, avoid_groups, rng2, opt.budget);
        if (n1 < 0 || n2 < 0)
            throw Error(ErrKind::disagreement, "affine critical system was not zero-dimensional");
        if (t == 0)
            agreed = {n1, n2};
        else if (agreed != std::make_pair(n1, n2))
            throw Error(ErrKind::disagreement, "affine trial counts disagree");
    }
    return agreed;
}

MLDReport mld_polar_formula(const MLProblem& P, const CountOptions& opt, bool probe_generality) {
    MLDReport rep;
    rep.method = "polar-formula";
    rep.prime = opt.prime;
    rep.trials = opt.trials;
    auto pd = polar_degrees(P.X, P.dual, opt);
    auto mu = gradient_multidegrees(P.F, P.dual, opt);
    rep.polar = pd.entries;
    rep.mu = mu.entries;
    rep.seeds = pd.seeds;
    long acc = 0;
    for (size_t i = 0; i < pd.entries.size(); ++i) acc += pd.entries[i] * mu.entries[i];
    rep.value = acc;
    if (probe_generality)
        rep.f_general = f_general_emptiness_modp(P.X, P.F, P.dual, opt) ? "empty" : "not-empty";
    return rep;
}

static QPoly cross_entry(const std::vector<QPoly>& a, const std::vector<QPoly>& b, int i, int j) {
    return a[i] * b[j] - a[j] * b[i];
}

GaussPlaneResult gauss_adjoined_plane(const MLProblem& P, const CountOptions& opt) {
    const RingP& r = P.X.ring;
    if (r->nvars() != 3) input_error("adjoined Gauss map implemented for plane curves only");
    auto gb = buchberger(P.X.gens, grevlex_order(), opt.budget);
    if (gb.basis.size() != 1) input_error("plane curve must be a hypersurface in the plane");
    QPoly g = primitive_part(gb.basis[0]);
    if (g.deg() < 2) input_error("adjoined Gauss map degenerates for a line");

    auto dg = plain_gradient(g);
    auto dF = gradient_row(P.F);
    std::vector<QPoly> cross = {cross_entry(dg, dF, 1, 2), cross_entry(dg, dF, 2, 0),
                                cross_entry(dg, dF, 0, 1)};
    bool all_zero = true;
    for (auto& ce : cross) all_zero &= normal_form(ce, gb, opt.budget).is_zero();
    if (all_zero) input_error("adjoined Gauss map is undefined along the curve");

    GaussPlaneResult out;
    out.image_ring = make_ring({"a0", "a1", "a2"});
    RingP big = concat_rings(out.image_ring, r);
    auto ext = with_aux(big, "scale");
    std::vector<QPoly> gens;
    for (int i = 0; i < 3; ++i)
        gens.push_back(QPoly::var(ext.ring, i) -
                       QPoly::var(ext.ring, ext.aux) * embed(cross[i], ext.ring, 3));
    for (auto& h : P.X.gens) gens.push_back(embed(h, ext.ring, 3));
    std::vector<int> drop = {3, 4, 5, ext.aux};
    auto elim = eliminate(gens, ext.ring, drop, opt.budget);
    std::vector<int> back(ext.ring->nvars(), -1);
    for (int i = 0; i < 3; ++i) back[i] = i;
    for (auto& h : elim) out.image_ideal.push_back(primitive_part(map_vars(h, out.image_ring, back)));
    if (out.image_ideal.empty()) input_error("Gauss image has no defining equation");
    auto igb = buchberger(out.image_ideal, grevlex_order(), opt.budget);
    if (igb.basis.size() != 1) input_error("Gauss image is not a hypersurface in the plane");
    out.image_degree = igb.basis[0].deg();

    // pull a random line back through the map: counts map_degree * image_degree
    RingP zx = to_zp(r, opt.prime);
    std::vector<ZpPoly> zcross;
    for (auto& ce : cross) {
        ZpPoly cz = reduce_poly(ce, zx);
        if (!cz.is_zero()) zcross.push_back(cz);
    }
    std::vector<ZpPoly> base;
    for (auto& h : P.X.gens) base.push_back(reduce_poly(h, zx));
    Rng seeder(opt.seed ^ 0xabcdULL);
    long agreed = -2;
    for (int t = 0; t < opt.trials; ++t) {
        uint64_t s = seeder.next();
        out.seeds.push_back(s);
        Rng rng(s);
        ZpPoly combo = ZpPoly::zero(zx, grevlex_order());
        for (auto& cz : zcross) combo = combo + cz.scaled(Zp(1 + rng.below(opt.prime - 1), opt.prime));
        std::vector<ZpPoly> gens_t = base;
        gens_t.push_back(combo);
        std::vector<int> all = {0, 1, 2};
        long c = sliced_count_once(zx, gens_t, {}, {all}, {zcross}, rng, opt.budget);
        if (c < 0)
            throw Error(ErrKind::disagreement, "pullback slice not generic; rerun with another seed");
        if (t == 0)
            agreed = c;
        else if (c != agreed)
            throw Error(ErrKind::disagreement, "pullback counts disagree; rerun with another seed");
    }
    if (agreed == 0 || agreed % out.image_degree != 0)
        throw Error(ErrKind::disagreement, "pullback count not divisible by the image degree");
    out.map_degree = agreed / out.image_degree;
    return out;
}

ProductCheck product_formula_check(const MLProblem& P, const CountOptions& opt) {
    ProductCheck pc;
    pc.gauss = gauss_adjoined_plane(P, opt);
    pc.product = pc.gauss.image_degree * pc.gauss.map_degree;
    pc.mld = mld_compute(P, opt).value;
    pc.holds = pc.product == pc.mld;
    return pc;
}

// ---- rational point extraction for the alpha search ------------------------

static std::vector<mpz_class> divisors_of(const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    if (n > mpz_class("1000000000000")) input_error("alpha search: coefficients too large");
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    return out;
}

static std::vector<Rat> univ_rational_roots(const QPoly& p0, int v) {
    QPoly p = primitive_part(p0);
    std::vector<Rat> roots;
    int minexp = 1 << 20;
    for (auto& [m, c] : p.t) minexp = std::min(minexp, (int)m.e[v]);
    if (minexp > 0) {
        roots.push_back(Rat(0));
        QPoly q(p.ring, p.ord);
        for (auto& [m, c] : p.t) {
            Expvec nm = m;
            nm.e[v] -= (uint16_t)minexp;
            nm.deg -= minexp;
            q.t.push_back({nm, c});
        }
        q.normalize();
        p = q;
    }
    int d = 0;
    for (auto& [m, c] : p.t) d = std::max(d, (int)m.e[v]);
    if (d == 0) return roots;
    std::map<int, Rat> coef;
    for (auto& [m, c] : p.t) {
        if (m.deg != m.e[v]) input_error("root extraction expects a univariate polynomial");
        coef[(int)m.e[v]] = c;
    }
    mpz_class c0 = coef.count(0) ? coef[0].num() : mpz_class(0);
    mpz_class cd = coef[d].num();
    auto value_at = [&](const Rat& x) {
        Rat acc(0), pw(1);
        for (int k = 0; k <= d; ++k) {
            if (coef.count(k)) acc = acc + coef[k] * pw;
            pw = pw * x;
        }
        return acc;
    };
    for (auto& pnum : divisors_of(c0))
        for (auto& qden : divisors_of(cd))
            for (int sign = -1; sign <= 1; sign += 2) {
                Rat cand(mpz_class(sign) * pnum, qden);
                if (value_at(cand).is_zero()) {
                    bool seen = false;
                    for (auto& rr : roots) seen |= rr == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

// projective rational points of a homogeneous form in the two variables va, vb
static std::vector<std::pair<Rat, Rat>> binary_form_points(const QPoly& h, int va, int vb) {
    std::vector<std::pair<Rat, Rat>> pts;
    RingP r = h.ring;
    std::vector<QPoly> images;
    for (int i = 0; i < r->nvars(); ++i)
        images.push_back(i == va ? QPoly::constant(r, 1) : QPoly::var(r, i));
    QPoly dehom = substitute(h, r, images);
    if (dehom.is_zero()) return pts;
    for (auto& root : univ_rational_roots(dehom, vb)) pts.push_back({Rat(1), root});
    std::vector<Rat> at_inf(r->nvars(), Rat(0));
    at_inf[vb] = Rat(1);
    if (poly_eval(h, at_inf).is_zero()) pts.push_back({Rat(0), Rat(1)});
    return pts;
}

static std::vector<std::vector<Rat>> candidate_points_3var(const std::vector<QPoly>& J,
                                                           const RingP& r, Budget* budget) {
    auto nonzero_gen = [&](const std::vector<QPoly>& gens) -> QPoly {
        for (auto& g : gens)
            if (!g.is_zero()) return g;
        return QPoly::zero(r);
    };
    QPoly h01 = nonzero_gen(eliminate(J, r, {2}, budget));
    QPoly h02 = nonzero_gen(eliminate(J, r, {1}, budget));
    QPoly h12 = nonzero_gen(eliminate(J, r, {0}, budget));
    std::vector<std::vector<Rat>> cands;
    auto push = [&](const std::vector<Rat>& p) {
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) return;
        for (auto& q : cands)
            if (p[0] * q[1] == p[1] * q[0] && p[0] * q[2] == p[2] * q[0] && p[1] * q[2] == p[2] * q[1])
                return;
        cands.push_back(p);
    };
    if (!h01.is_zero() && !h02.is_zero())
        for (auto& [a0, a1] : binary_form_points(h01, 0, 1))
            for (auto& [b0, b2] : binary_form_points(h02, 0, 2)) {
                if (a0.is_zero() && b0.is_zero())
                    push({Rat(0), a1, b2});
                else if (!a0.is_zero() && !b0.is_zero())
                    push({Rat(1), a1 / a0, b2 / b0});
            }
    if (!h12.is_zero())
        for (auto& [c1, c2] : binary_form_points(h12, 1, 2)) push({Rat(0), c1, c2});
    std::vector<std::vector<Rat>> out;
    for (auto& p : cands) {
        bool ok = true;
        for (auto& g : J) ok &= poly_eval(g, p).is_zero();
        if (ok) out.push_back(p);
    }
    return out;
}

// ---- the curve classifier ---------------------------------------------------

// Rational kernel basis of the coefficient matrix of linear forms,
// reduced-echelon so every basis vector owns a free coordinate.
static std::vector<std::vector<Rat>> kernel_basis(const std::vector<QPoly>& linear,
                                                  const RingP& ring) {
    int n = ring->nvars();
    int s = (int)linear.size();
    std::vector<std::vector<Rat>> m(s, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < s; ++i)
        for (auto& [mon, c] : linear[i].t)
            for (int j = 0; j < n; ++j)
                if (mon.e[j]) m[i][j] = c;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < s; ++col) {
        int pr = -1;
        for (int i = row; i < s; ++i)
            if (!m[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Rat inv = m[row][col].inv();
        for (int j = 0; j < n; ++j) m[row][j] = m[row][j] * inv;
        for (int i = 0; i < s; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (int j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<char> is_pivot(n, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free] = Rat(1);
        for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        basis.push_back(v);
    }
    return basis;
}

ClassifyResult classify_curve_mld1(const VarietySpec& X, const QPoly& F,
                                   const std::optional<QPoly>& alpha_opt, const RingP& dual,
                                   const CountOptions& opt) {
    ClassifyResult res;
    if (F.deg() < 1 || !F.is_homogeneous()) input_error("F must be homogeneous of positive degree");
    long k = F.deg();
    Budget* budget = opt.budget;

    if (ideal_dimension(X.gens, X.ring, budget) != 2) {
        res.reason = "X is not a curve";
        return res;
    }

    auto gb = buchberger(X.gens, grevlex_order(), budget);
    std::vector<QPoly> linear;
    for (auto& g : gb.basis)
        if (g.deg() == 1) linear.push_back(g);
    int n = X.ring->nvars();
    if (n - (int)linear.size() != 3) {
        res.reason = "linear span of X is not a plane";
        return res;
    }

    RingP pring = make_ring({"v0", "v1", "v2"});
    RingP pdual = make_ring({"t0", "t1", "t2"});
    std::vector<std::vector<Rat>> w;
    if (linear.empty()) {
        for (int i = 0; i < 3; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = Rat(1);
            w.push_back(e);
        }
    } else {
        w = kernel_basis(linear, X.ring);
    }
    std::vector<QPoly> images;  // x_j -> sum_i w_i[j] v_i
    for (int j = 0; j < n; ++j) {
        QPoly im = QPoly::zero(pring);
        for (int i = 0; i < 3; ++i)
            if (!w[i][j].is_zero()) im = im + QPoly::var(pring, i).scaled(w[i][j]);
        images.push_back(im);
    }
    std::vector<QPoly> pgens;
    for (auto& g : X.gens) {
        QPoly pg = substitute_linear(g, pring, images);
        if (!pg.is_zero()) pgens.push_back(pg);
    }
    VarietySpec Xp = make_variety(pring, pgens);
    QPoly Fp = substitute_linear(F, pring, images);
    if (Fp.is_zero()) input_error("F vanishes identically on the span of X");

    auto pgb = buchberger(Xp.gens, grevlex_order(), budget);
    if (pgb.basis.size() != 1 || pgb.basis[0].deg() < 2) {
        res.reason = "X is not a nonlinear plane curve inside its span";
        return res;
    }

    auto dv = dual_variety(Xp, pdual, budget);
    if (dv.size() != 1) {
        res.reason = "dual variety is not a hypersurface";
        return res;
    }
    QPoly gdual = primitive_part(dv[0]);
    long d = gdual.deg();
    res.dual_gen = gdual;
    res.dual_degree = d;

    auto alpha_coeffs = [&](const QPoly& a_planar) {
        std::vector<Rat> c(3, Rat(0));
        for (auto& [m, co] : a_planar.t)
            for (int i = 0; i < 3; ++i)
                if (m.e[i]) c[i] = co;
        return c;
    };
    auto test_candidate = [&](const QPoly& a_planar, std::string* why) -> bool {
        if (a_planar.is_zero() || a_planar.deg() != 1) {
            if (why) *why = "alpha does not restrict to a linear form on the span";
            return false;
        }
        auto a = alpha_coeffs(a_planar);
        long mult = multiplicity_at_point(gdual, a);
        res.multiplicity = mult;
        if (mult != d - 1) {
            if (why)
                *why = "multiplicity of [alpha] on the dual curve is " + std::to_string(mult) +
                       ", expected " + std::to_string(d - 1);
            return false;
        }
        QPoly diff = Fp - poly_pow(a_planar, k);
        if (!normal_form(diff, pgb, budget).is_zero()) {
            if (why) *why = "F - alpha^deg(F) does not lie in I(X)";
            return false;
        }
        return true;
    };

    QPoly alpha_planar = QPoly::zero(pring);
    std::string why;
    if (alpha_opt) {
        alpha_planar = substitute_linear(*alpha_opt, pring, images);
        if (!test_candidate(alpha_planar, &why)) {
            res.reason = why;
            return res;
        }
        res.alpha = *alpha_opt;
    } else if (d >= 3) {
        // multiplicity d-1 locus = common zeros of all order-(d-2) partials
        std::vector<QPoly> J = {gdual};
        for (long step = 0; step < d - 2; ++step) {
            std::vector<QPoly> next;
            for (auto& h : J)
                for (int v = 0; v < 3; ++v) {
                    QPoly dh = deriv(h, v);
                    if (!dh.is_zero()) next.push_back(dh);
                }
            J = next;
        }
        bool found = false;
        for (auto& pt : candidate_points_3var(J, pdual, budget)) {
            QPoly cand = QPoly::zero(pring);
            for (int i = 0; i < 3; ++i)
                if (!pt[i].is_zero()) cand = cand + QPoly::var(pring, i).scaled(pt[i]);
            if (cand.is_zero()) continue;
            // the point fixes alpha only up to scale; F - (c alpha)^k in I(X)
            // determines c as a rational k-th root
            QPoly nfF = normal_form(Fp, pgb, budget);
            QPoly nfA = normal_form(poly_pow(cand, k), pgb, budget);
            if (nfA.is_zero()) continue;
            Rat t = nfF.reorder(grevlex_order()).lc() / nfA.reorder(grevlex_order()).lc();
            if (!(nfF == nfA.scaled(t)) || t.is_zero()) continue;
            mpz_class rn, rd;
            if (!mpz_root(rn.get_mpz_t(), mpz_class(t.num()).get_mpz_t(), (unsigned long)k))
                continue;
            if (!mpz_root(rd.get_mpz_t(), mpz_class(t.den()).get_mpz_t(), (unsigned long)k))
                continue;
            if (k % 2 == 0 && t.num() < 0) continue;
            cand = cand.scaled(Rat(rn, rd));
            if (test_candidate(cand, &why)) {
                alpha_planar = cand;
                found = true;
                break;
            }
        }
        if (!found) {
            res.reason = "no rational linear form satisfies the certificate conditions";
            return res;
        }
        auto a = alpha_coeffs(alpha_planar);
        QPoly lift = QPoly::zero(X.ring);
        for (int i = 0; i < 3; ++i) {
            // each reduced-echelon kernel vector owns a coordinate with entry 1
            for (int j = 0; j < n; ++j) {
                bool only = !w[i][j].is_zero() && w[i][j].is_one();
                for (int i2 = 0; only && i2 < 3; ++i2)
                    if (i2 != i && !w[i2][j].is_zero()) only = false;
                if (only) {
                    if (!a[i].is_zero()) lift = lift + QPoly::var(X.ring, j).scaled(a[i]);
                    break;
                }
            }
        }
        res.alpha = lift;
    } else {
        // d == 2: every dual point has multiplicity 1, so the search space is
        // a whole conic; decide by the computed degree
        MLProblem P = make_ml_problem(X, ratfn_of(F), dual, budget);
        long val = mld_compute(P, opt).value;
        res.reason = "no alpha supplied; computed ML degree is " + std::to_string(val);
        if (val == 1) res.reason += " (rational MLE exists; supply alpha to certify)";
        return res;
    }

    // Phi over the span dual, extended to the ambient dual by t_i -> u(w_i)
    QPoly num = QPoly::zero(pdual);
    auto a = alpha_coeffs(alpha_planar);
    for (int i = 0; i < 3; ++i)
        if (!a[i].is_zero()) num = num + deriv(gdual, i).scaled(a[i]);
    RatFn phi_pl = ratfn_pow(make_ratfn(num, gdual), k);
    mpz_class kk = 1;
    for (long i = 0; i < k; ++i) kk *= k;
    phi_pl.num = phi_pl.num.scaled(Rat(kk, mpz_class(1)));

    std::vector<QPoly> dual_images;
    for (int i = 0; i < 3; ++i) {
        QPoly im = QPoly::zero(dual);
        for (int j = 0; j < n; ++j)
            if (!w[i][j].is_zero())
                im = im + QPoly::var(dual, j).scaled(w[i][j] * Rat(dual->pairw[j]));
        dual_images.push_back(im);
    }
    res.phi = make_ratfn(substitute_linear(phi_pl.num, dual, dual_images),
                         substitute_linear(phi_pl.den, dual, dual_images));
    res.verdict = true;
    res.reason = "certified";
    return res;
}

S2Family s2_family(const std::vector<std::vector<Rat>>& A) {
    if (A.size() != 2 || A[0].size() != 2 || A[1].size() != 2)
        input_error("rank-one family needs a 2x2 symmetric matrix");
    if (!(A[0][1] == A[1][0])) input_error("matrix is not symmetric");
    bool zero = A[0][0].is_zero() && A[0][1].is_zero() && A[1][1].is_zero();
    if (zero || !rat_mat_det(A).is_zero()) input_error("matrix must have rank exactly 1");

    S2Family fam;
    fam.space = make_symspace(2);
    QPoly det = sym_det(fam.space.primal);
    QPoly tr = trace_pair(fam.space.primal, A);
    fam.X = make_variety(fam.space.primal, {det - tr * tr});
    fam.F = det;
    auto adjA = rat_mat_adjugate(A);
    QPoly trs = trace_pair(fam.space.dual, adjA);
    QPoly dets = sym_det(fam.space.dual);
    RatFn phi = ratfn_pow(make_ratfn(trs, dets + trs * trs), 2);
    phi.num = phi.num.scaled(Rat(4));
    fam.phi = phi;
    return fam;
}

}  // namespace gmld
