#include "itmlab/interval_set.hpp"

#include <algorithm>

#include "itmlab/errors.hpp"

namespace itmlab {

IntervalSet IntervalSet::unit() { return single(Scalar(0), Scalar(1)); }

IntervalSet IntervalSet::single(Scalar lo, Scalar hi) {
    return from_pieces({{std::move(lo), std::move(hi)}});
}

IntervalSet IntervalSet::from_pieces(std::vector<Piece> pieces) {
    std::erase_if(pieces, [](const Piece& p) { return p.first >= p.second; });
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.first < b.first; });
    IntervalSet s;
    for (auto& p : pieces) {
        if (!s.ivals_.empty() && p.first <= s.ivals_.back().second) {
            if (p.second > s.ivals_.back().second) s.ivals_.back().second = std::move(p.second);
        } else {
            s.ivals_.push_back(std::move(p));
        }
    }
    return s;
}

Scalar IntervalSet::total_measure() const {
    Scalar m(0);
    for (const auto& [lo, hi] : ivals_) m = m + (hi - lo);
    return m;
}

bool IntervalSet::contains_point(const Scalar& x) const {
    for (const auto& [lo, hi] : ivals_) {
        if (x < lo) return false;
        if (x < hi) return true;
    }
    return false;
}

IntervalSet IntervalSet::intersect(const Scalar& lo, const Scalar& hi) const {
    std::vector<Piece> out;
    for (const auto& [a, b] : ivals_) {
        Scalar l = a < lo ? lo : a;
        Scalar h = b < hi ? b : hi;
        if (l < h) out.emplace_back(std::move(l), std::move(h));
    }
    return from_pieces(std::move(out));
}

bool IntervalSet::equals(const IntervalSet& o) const {
    if (ivals_.size() != o.ivals_.size()) return false;
    for (std::size_t i = 0; i < ivals_.size(); ++i)
        if (ivals_[i].first != o.ivals_[i].first || ivals_[i].second != o.ivals_[i].second)
            return false;
    return true;
}

bool IntervalSet::subset_of(const IntervalSet& o) const {
    std::size_t j = 0;
    for (const auto& [lo, hi] : ivals_) {
        while (j < o.ivals_.size() && o.ivals_[j].second <= lo) ++j;
        if (j >= o.ivals_.size()) return false;
        if (!(o.ivals_[j].first <= lo && hi <= o.ivals_[j].second)) return false;
    }
    return true;
}

}  // namespace itmlab
