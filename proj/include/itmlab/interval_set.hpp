#ifndef ITMLAB_INTERVAL_SET_HPP
#define ITMLAB_INTERVAL_SET_HPP

#include <utility>
#include <vector>

#include "itmlab/scalar.hpp"

namespace itmlab {

// Finite union of disjoint half-open intervals [lo, hi) of [0,1), kept
// sorted and canonical: abutting intervals are merged on construction, so
// set equality is a structural comparison.
class IntervalSet {
public:
    using Piece = std::pair<Scalar, Scalar>;

    IntervalSet() = default;

    static IntervalSet unit();  // [0,1)
    static IntervalSet single(Scalar lo, Scalar hi);
    static IntervalSet from_pieces(std::vector<Piece> pieces);

    const std::vector<Piece>& intervals() const { return ivals_; }
    std::size_t components() const { return ivals_.size(); }
    bool empty() const { return ivals_.empty(); }
    Scalar total_measure() const;

    bool contains_point(const Scalar& x) const;
    IntervalSet intersect(const Scalar& lo, const Scalar& hi) const;

    bool equals(const IntervalSet& o) const;
    bool subset_of(const IntervalSet& o) const;

private:
    std::vector<Piece> ivals_;
};

}  // namespace itmlab

#endif
