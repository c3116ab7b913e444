#include "lislab/lis.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lislab {

namespace {

// Does equality in this coordinate block chaining?  Only strict rows do
// (unless the negative-control switch is on).
bool equality_blocks(const Coordinate& c, const ChainRules& rules) {
    return c.kind == CoordKind::kStrict && !rules.treat_strict_as_weak;
}

// Fenwick tree over y-ranks holding prefix maxima of chain lengths.
class PrefixMax {
  public:
    explicit PrefixMax(std::size_t n) : tree_(n + 1, 0) {}

    // Max over ranks [0, rank]; -1 queries an empty prefix.
    int64_t query(int64_t rank) const {
        int64_t best = 0;
        for (int64_t i = rank + 1; i > 0; i -= i & -i) best = std::max(best, tree_[i]);
        return best;
    }

    void update(int64_t rank, int64_t value) {
        for (std::size_t i = rank + 1; i < tree_.size(); i += i & (-static_cast<int64_t>(i)))
            tree_[i] = std::max(tree_[i], value);
    }

  private:
    std::vector<int64_t> tree_;
};

}  // namespace

bool precedes(const WeightedPoint& a, const WeightedPoint& b, const ChainRules& rules) {
    int cx = compare(a.x, b.x, rules.order);
    int cy = compare(a.y, b.y, rules.order);
    if (cx > 0 || cy > 0) return false;
    if (cx == 0 && equality_blocks(a.x, rules)) return false;
    if (cy == 0 && equality_blocks(a.y, rules)) return false;
    return true;
}

int64_t lis_length(const PointMultiset& ms, const ChainRules& rules) {
    if (ms.points.empty()) return 0;

    std::vector<const WeightedPoint*> pts;
    pts.reserve(ms.points.size());
    for (const auto& p : ms.points) pts.push_back(&p);
    auto coord_less = [&](const Coordinate& a, const Coordinate& b) {
        return compare(a, b, rules.order) < 0;
    };
    std::sort(pts.begin(), pts.end(), [&](const WeightedPoint* a, const WeightedPoint* b) {
        int cx = compare(a->x, b->x, rules.order);
        if (cx != 0) return cx < 0;
        return compare(a->y, b->y, rules.order) < 0;
    });

    // Rank the distinct y coordinates under the chosen order.
    std::vector<Coordinate> ys;
    ys.reserve(pts.size());
    for (const auto* p : pts) ys.push_back(p->y);
    std::sort(ys.begin(), ys.end(), coord_less);
    ys.erase(std::unique(ys.begin(), ys.end(),
                         [&](const Coordinate& a, const Coordinate& b) {
                             return compare(a, b, rules.order) == 0;
                         }),
             ys.end());
    auto y_rank = [&](const Coordinate& c) -> int64_t {
        return std::lower_bound(ys.begin(), ys.end(), c, coord_less) - ys.begin();
    };

    PrefixMax state(ys.size());
    int64_t best = 0;

    // Sweep x-groups in increasing order.  Within a group whose x blocks
    // equality, every point is scored against the pre-group state; otherwise
    // points chain within the group in y order, with equal blocking-y runs
    // batched so they cannot stack.
    std::size_t gi = 0;
    while (gi < pts.size()) {
        std::size_t ge = gi;
        while (ge < pts.size() && compare(pts[ge]->x, pts[gi]->x, rules.order) == 0) ++ge;

        if (equality_blocks(pts[gi]->x, rules)) {
            std::vector<std::pair<int64_t, int64_t>> staged;  // (rank, value)
            staged.reserve(ge - gi);
            for (std::size_t k = gi; k < ge; ++k) {
                int64_t rank = y_rank(pts[k]->y);
                int64_t prev = equality_blocks(pts[k]->y, rules) ? state.query(rank - 1)
                                                                 : state.query(rank);
                staged.emplace_back(rank, prev + 1);
            }
            for (auto [rank, value] : staged) {
                state.update(rank, value);
                best = std::max(best, value);
            }
        } else {
            std::size_t k = gi;
            while (k < ge) {
                int64_t rank = y_rank(pts[k]->y);
                if (equality_blocks(pts[k]->y, rules)) {
                    // Run of points sharing this strict y: at most one copy of
                    // the whole run can sit in a chain.
                    int64_t value = state.query(rank - 1) + 1;
                    while (k < ge && compare(pts[k]->y, ys[rank], rules.order) == 0) ++k;
                    state.update(rank, value);
                    best = std::max(best, value);
                } else {
                    int64_t value = state.query(rank) + pts[k]->m;
                    state.update(rank, value);
                    best = std::max(best, value);
                    ++k;
                }
            }
        }
        gi = ge;
    }
    return best;
}

int64_t lis_length_oracle(const PointMultiset& ms, const ChainRules& rules, std::size_t cap) {
    std::vector<WeightedPoint> copies;
    for (const auto& p : ms.points) {
        for (int64_t c = 0; c < p.m; ++c) {
            if (copies.size() >= cap)
                throw std::length_error("lis_length_oracle: expansion exceeds cap");
            copies.push_back(WeightedPoint{p.x, p.y, 1});
        }
    }
    std::sort(copies.begin(), copies.end(), [&](const WeightedPoint& a, const WeightedPoint& b) {
        int cx = compare(a.x, b.x, rules.order);
        if (cx != 0) return cx < 0;
        return compare(a.y, b.y, rules.order) < 0;
    });
    int64_t best = 0;
    std::vector<int64_t> len(copies.size(), 0);
    for (std::size_t i = 0; i < copies.size(); ++i) {
        len[i] = 1;
        for (std::size_t j = 0; j < i; ++j)
            if (precedes(copies[j], copies[i], rules)) len[i] = std::max(len[i], len[j] + 1);
        best = std::max(best, len[i]);
    }
    return best;
}

}  // namespace lislab
