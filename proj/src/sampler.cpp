#include "lislab/sampler.hpp"

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "lislab/rng.hpp"

namespace lislab {

namespace {

// Substream region tags.  Regions 1-9 make up the bulk and are sampled first,
// in tag order; regions 10-15 carry the Sigma boundary rows.  The tie-break
// streams resolve continuous-coordinate collisions (bulk collisions must be
// resolved without consulting anything boundary-related, or the coupling
// breaks).
enum Region : uint64_t {
    kBulkContCont = 1,
    kContStrict = 2,
    kContWeak = 3,
    kStrictCont = 4,
    kWeakCont = 5,
    kStrictStrict = 6,
    kStrictWeak = 7,
    kWeakStrict = 8,
    kWeakWeak = 9,
    kSigmaCont = 10,
    kSigmaStrict = 11,
    kSigmaWeak = 12,
    kContSigma = 13,
    kStrictSigma = 14,
    kWeakSigma = 15,
    kTieBulk = 16,
    kTieBoundary = 17,
};

struct DoubleBits {
    std::size_t operator()(double d) const { return std::hash<double>{}(d); }
};

// Re-draw duplicated continuous coordinates on one axis.  Points are visited
// in generation order; `boundary_pass` selects which points may be touched.
// Bulk values are registered in both passes so a boundary coordinate can
// never shadow a bulk one.
void resolve_collisions(PointMultiset& ms, bool x_axis, bool boundary_pass, uint64_t seed) {
    std::unordered_set<double, DoubleBits> seen;
    auto is_boundary = [](const WeightedPoint& p) {
        return p.x.kind == CoordKind::kSigma || p.y.kind == CoordKind::kSigma;
    };
    if (boundary_pass) {
        for (const auto& p : ms.points) {
            const Coordinate& c = x_axis ? p.x : p.y;
            if (c.kind == CoordKind::kCont && !is_boundary(p)) seen.insert(c.u);
        }
    }
    CounterRng tie = substream(seed, boundary_pass ? kTieBoundary : kTieBulk, x_axis ? 0 : 1);
    for (auto& p : ms.points) {
        Coordinate& c = x_axis ? p.x : p.y;
        if (c.kind != CoordKind::kCont) continue;
        if (is_boundary(p) != boundary_pass) continue;
        while (!seen.insert(c.u).second) c.u = tie.next_unit();
    }
}

}  // namespace

PointMultiset sample_extended(const ExtendedParams& xp, uint64_t seed) {
    const ParameterSet& pp = xp.p_plus;
    const ParameterSet& pm = xp.p_minus;
    PointMultiset ms;
    ms.params = xp;
    ms.seed = seed;
    ms.extended = xp.alpha_plus > 0.0 || xp.alpha_minus > 0.0;

    auto add = [&](Coordinate x, Coordinate y, int64_t m) {
        if (m > 0) ms.points.push_back(WeightedPoint{x, y, m});
    };
    auto poisson_cell = [&](uint64_t region, uint64_t i, uint64_t j, double rate, auto make_point) {
        CounterRng rng = substream(seed, region, i, j);
        int64_t n = rng.poisson(rate);
        for (int64_t k = 0; k < n; ++k) make_point(rng);
    };

    // --- bulk regions (tags 1-9, fixed order) ---
    poisson_cell(kBulkContCont, 0, 0, pp.t * pm.t, [&](CounterRng& rng) {
        double ux = rng.next_unit();
        double uy = rng.next_unit();
        add(Coordinate::cont(ux), Coordinate::cont(uy), 1);
    });
    for (std::size_t j = 0; j < pm.q.size(); ++j)
        poisson_cell(kContStrict, 0, j + 1, pp.t * pm.q[j], [&](CounterRng& rng) {
            add(Coordinate::cont(rng.next_unit()), Coordinate::strict(j + 1), 1);
        });
    for (std::size_t j = 0; j < pm.r.size(); ++j)
        poisson_cell(kContWeak, 0, j + 1, pp.t * pm.r[j], [&](CounterRng& rng) {
            add(Coordinate::cont(rng.next_unit()), Coordinate::weak(j + 1), 1);
        });
    for (std::size_t i = 0; i < pp.q.size(); ++i)
        poisson_cell(kStrictCont, i + 1, 0, pp.q[i] * pm.t, [&](CounterRng& rng) {
            add(Coordinate::strict(i + 1), Coordinate::cont(rng.next_unit()), 1);
        });
    for (std::size_t i = 0; i < pp.r.size(); ++i)
        poisson_cell(kWeakCont, i + 1, 0, pp.r[i] * pm.t, [&](CounterRng& rng) {
            add(Coordinate::weak(i + 1), Coordinate::cont(rng.next_unit()), 1);
        });
    for (std::size_t i = 0; i < pp.q.size(); ++i)
        for (std::size_t j = 0; j < pm.q.size(); ++j) {
            CounterRng rng = substream(seed, kStrictStrict, i + 1, j + 1);
            add(Coordinate::strict(i + 1), Coordinate::strict(j + 1),
                rng.geometric(pp.q[i] * pm.q[j]));
        }
    for (std::size_t i = 0; i < pp.q.size(); ++i)
        for (std::size_t j = 0; j < pm.r.size(); ++j) {
            CounterRng rng = substream(seed, kStrictWeak, i + 1, j + 1);
            add(Coordinate::strict(i + 1), Coordinate::weak(j + 1),
                rng.bernoulli_ratio(pp.q[i] * pm.r[j]));
        }
    for (std::size_t i = 0; i < pp.r.size(); ++i)
        for (std::size_t j = 0; j < pm.q.size(); ++j) {
            CounterRng rng = substream(seed, kWeakStrict, i + 1, j + 1);
            add(Coordinate::weak(i + 1), Coordinate::strict(j + 1),
                rng.bernoulli_ratio(pp.r[i] * pm.q[j]));
        }
    for (std::size_t i = 0; i < pp.r.size(); ++i)
        for (std::size_t j = 0; j < pm.r.size(); ++j) {
            CounterRng rng = substream(seed, kWeakWeak, i + 1, j + 1);
            add(Coordinate::weak(i + 1), Coordinate::weak(j + 1),
                rng.geometric(pp.r[i] * pm.r[j]));
        }
    resolve_collisions(ms, true, false, seed);
    resolve_collisions(ms, false, false, seed);

    // --- Sigma boundary regions (tags 10-15); the (Sigma, Sigma) cell is empty ---
    if (xp.alpha_plus > 0.0) {
        poisson_cell(kSigmaCont, 0, 0, xp.alpha_plus * pm.t, [&](CounterRng& rng) {
            add(Coordinate::sigma(), Coordinate::cont(rng.next_unit()), 1);
        });
        for (std::size_t j = 0; j < pm.q.size(); ++j) {
            CounterRng rng = substream(seed, kSigmaStrict, 0, j + 1);
            add(Coordinate::sigma(), Coordinate::strict(j + 1),
                rng.bernoulli_ratio(xp.alpha_plus * pm.q[j]));
        }
        for (std::size_t j = 0; j < pm.r.size(); ++j) {
            CounterRng rng = substream(seed, kSigmaWeak, 0, j + 1);
            add(Coordinate::sigma(), Coordinate::weak(j + 1),
                rng.geometric(xp.alpha_plus * pm.r[j]));
        }
    }
    if (xp.alpha_minus > 0.0) {
        poisson_cell(kContSigma, 0, 0, pp.t * xp.alpha_minus, [&](CounterRng& rng) {
            add(Coordinate::cont(rng.next_unit()), Coordinate::sigma(), 1);
        });
        for (std::size_t i = 0; i < pp.q.size(); ++i) {
            CounterRng rng = substream(seed, kStrictSigma, i + 1, 0);
            add(Coordinate::strict(i + 1), Coordinate::sigma(),
                rng.bernoulli_ratio(pp.q[i] * xp.alpha_minus));
        }
        for (std::size_t i = 0; i < pp.r.size(); ++i) {
            CounterRng rng = substream(seed, kWeakSigma, i + 1, 0);
            add(Coordinate::weak(i + 1), Coordinate::sigma(),
                rng.geometric(pp.r[i] * xp.alpha_minus));
        }
    }
    resolve_collisions(ms, true, true, seed);
    resolve_collisions(ms, false, true, seed);
    return ms;
}

PointMultiset sample_multiset(const ParameterSet& p_plus, const ParameterSet& p_minus,
                              uint64_t seed) {
    return sample_extended(make_extended(p_plus, p_minus, 0.0, 0.0), seed);
}

}  // namespace lislab
