#include "multideg.hpp"

namespace gmld {

static ZpPoly random_linear(const RingP& r, const std::vector<int>& block, Rng& rng) {
    ZpPoly f(r, grevlex_order());
    for (int v : block) {
        uint64_t c = rng.below(r->p);
        if (c) f.t.push_back({Expvec::var(v), Zp(c, r->p)});
    }
    f.normalize();
    return f;
}

static ZpPoly random_combo(const std::vector<ZpPoly>& group, const RingP& r, Rng& rng) {
    ZpPoly f = ZpPoly::zero(r, grevlex_order());
    for (auto& g : group) f = f + g.scaled(Zp(1 + rng.below(r->p - 1), r->p));
    return f;
}

long sliced_count_once(const RingP& zp_ring, const std::vector<ZpPoly>& gens,
                       const std::vector<std::pair<std::vector<int>, int>>& slice_blocks,
                       const std::vector<std::vector<int>>& chart_blocks,
                       const std::vector<std::vector<ZpPoly>>& avoid_groups, Rng& rng,
                       Budget* budget) {
    RingP work = zp_ring;
    std::vector<std::string> aux_names;
    for (size_t k = 0; k < avoid_groups.size(); ++k) aux_names.push_back("~r" + std::to_string(k));
    if (!aux_names.empty()) work = extend_ring(zp_ring, aux_names);
    int base = zp_ring->nvars();

    std::vector<ZpPoly> sys;
    for (auto& g : gens) sys.push_back(embed(g, work, 0));
    for (auto& [block, count] : slice_blocks)
        for (int k = 0; k < count; ++k) {
            auto f = random_linear(zp_ring, block, rng);
            if (f.is_zero()) return -1;
            sys.push_back(embed(f, work, 0));
        }
    for (auto& block : chart_blocks) {
        auto f = random_linear(zp_ring, block, rng);
        if (f.is_zero()) return -1;
        sys.push_back(embed(f, work, 0) - ZpPoly::constant(work, 1));
    }
    for (size_t k = 0; k < avoid_groups.size(); ++k) {
        auto combo = random_combo(avoid_groups[k], zp_ring, rng);
        if (combo.is_zero()) return -1;
        sys.push_back(ZpPoly::var(work, base + (int)k) * embed(combo, work, 0) -
                      ZpPoly::constant(work, 1));
    }
    auto gb = buchberger(sys, grevlex_order(), budget);
    if (gb.is_unit()) return 0;
    if (!is_zero_dimensional(gb, work->nvars())) return -1;
    return count_standard_monomials(gb, work->nvars());
}

long sliced_count(const RingP& zp_ring, const std::vector<ZpPoly>& gens,
                  const std::vector<std::pair<std::vector<int>, int>>& slice_blocks,
                  const std::vector<std::vector<int>>& chart_blocks,
                  const std::vector<std::vector<ZpPoly>>& avoid_groups, const CountOptions& opt,
                  std::vector<uint64_t>* seeds_out) {
    Rng seeder(opt.seed);
    long agreed = -2;
    for (int t = 0; t < opt.trials; ++t) {
        uint64_t s = seeder.next();
        if (seeds_out) seeds_out->push_back(s);
        Rng rng(s);
        long c = sliced_count_once(zp_ring, gens, slice_blocks, chart_blocks, avoid_groups, rng,
                                   opt.budget);
        if (c < 0)
            throw Error(ErrKind::disagreement,
                        "slice was not generic (positive-dimensional); rerun with another seed "
                        "(tried seed " +
                            std::to_string(s) + ")");
        if (t == 0)
            agreed = c;
        else if (c != agreed)
            throw Error(ErrKind::disagreement,
                        "trial counts disagree (" + std::to_string(agreed) + " vs " +
                            std::to_string(c) + "); rerun with another seed");
    }
    return agreed;
}

MultidegreeVector polar_degrees(const VarietySpec& X, const RingP& dual, const CountOptions& opt) {
    BiRing b = make_biring(X.ring, dual);
    RingP zp = to_zp(b.ring, opt.prime);
    std::vector<ZpPoly> gens;
    for (auto& g : conormal_raw(X, b, opt.budget)) gens.push_back(reduce_poly(g, zp));

    int c = X.codim(opt.budget);
    std::vector<ZpPoly> avoid;
    for (auto& s : minors(jacobian(X), c))
        if (!s.is_zero()) avoid.push_back(reduce_poly(embed(s, b.ring, 0), zp));
    std::vector<std::vector<ZpPoly>> avoid_groups;
    if (!avoid.empty()) avoid_groups.push_back(avoid);

    int n = X.nproj();
    MultidegreeVector out;
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<std::vector<int>, int>> slices = {{b.x_indices(), i},
                                                                {b.y_indices(), n - 1 - i}};
        std::vector<std::vector<int>> charts = {b.x_indices(), b.y_indices()};
        std::vector<uint64_t> seeds;
        CountOptions o = opt;
        o.seed = opt.seed + 7919 * (uint64_t)(i + 1);
        long d = sliced_count(zp, gens, slices, charts, avoid_groups, o, &seeds);
        out.entries.push_back(d);
        if (out.seeds.empty()) out.seeds = seeds;
    }
    return out;
}

MultidegreeVector gradient_multidegrees(const RatFn& F, const RingP& dual, const CountOptions& opt) {
    if (F.degree() == 0) input_error("F must have nonzero degree");
    BiRing b = make_biring(F.ring(), dual);
    RingP zp = to_zp(b.ring, opt.prime);
    std::vector<ZpPoly> gens;
    for (auto& g : gradient_graph_raw(F, b)) gens.push_back(reduce_poly(g, zp));

    std::vector<ZpPoly> avoid;
    for (auto& e : gradient_row(F))
        if (!e.is_zero()) avoid.push_back(reduce_poly(embed(e, b.ring, 0), zp));
    std::vector<std::vector<ZpPoly>> avoid_groups = {avoid};

    int n = F.ring()->nvars() - 1;
    MultidegreeVector out;
    for (int j = 0; j <= n; ++j) {
        std::vector<std::pair<std::vector<int>, int>> slices = {{b.x_indices(), n - j},
                                                                {b.y_indices(), j}};
        std::vector<std::vector<int>> charts = {b.x_indices(), b.y_indices()};
        std::vector<uint64_t> seeds;
        CountOptions o = opt;
        o.seed = opt.seed + 104729 * (uint64_t)(j + 1);
        long d = sliced_count(zp, gens, slices, charts, avoid_groups, o, &seeds);
        out.entries.push_back(d);
        if (out.seeds.empty()) out.seeds = seeds;
    }
    return out;
}

bool f_general_emptiness_modp(const VarietySpec& X, const RatFn& F, const RingP& dual,
                              const CountOptions& opt) {
    BiRing b = make_biring(X.ring, dual);
    RingP zp = to_zp(b.ring, opt.prime);
    std::vector<ZpPoly> gens;
    for (auto& g : conormal_raw(X, b, opt.budget)) gens.push_back(reduce_poly(g, zp));
    for (auto& g : gradient_graph_raw(F, b)) gens.push_back(reduce_poly(g, zp));

    std::vector<std::vector<ZpPoly>> avoid_groups;
    int c = X.codim(opt.budget);
    std::vector<ZpPoly> avoid_x;
    for (auto& s : minors(jacobian(X), c))
        if (!s.is_zero()) avoid_x.push_back(reduce_poly(embed(s, b.ring, 0), zp));
    if (!avoid_x.empty()) avoid_groups.push_back(avoid_x);
    std::vector<ZpPoly> avoid_g;
    for (auto& e : gradient_row(F))
        if (!e.is_zero()) avoid_g.push_back(reduce_poly(embed(e, b.ring, 0), zp));
    avoid_groups.push_back(avoid_g);

    Rng seeder(opt.seed ^ 0xf00dULL);
    for (int t = 0; t < opt.trials; ++t) {
        Rng rng(seeder.next());
        std::vector<std::vector<int>> charts = {b.x_indices(), b.y_indices()};
        long cnt = sliced_count_once(zp, gens, {}, charts, avoid_groups, rng, opt.budget);
        if (cnt != 0) return false;
    }
    return true;
}

}  // namespace gmld
