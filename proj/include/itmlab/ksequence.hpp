#ifndef ITMLAB_KSEQUENCE_HPP
#define ITMLAB_KSEQUENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace itmlab {

// Finite prefix of a Gauss-map symbol sequence (k_0, k_1, ...), k_i >= 1.
// Membership of the full sequence in the admissible set (no parity class
// eventually all 1s) is an asymptotic property; kappa_valid_prefix only
// records violations a generator declares for its tail.
struct KSequence {
    enum class Source { FromParams, UserSupplied };

    std::vector<long long> symbols;
    Source source = Source::UserSupplied;
    bool kappa_valid_prefix = true;

    std::size_t size() const { return symbols.size(); }
    long long at(std::size_t i) const { return symbols.at(i); }
    KSequence truncated(std::size_t n) const;
    KSequence appended(long long k) const;
};

// Closed-form tail descriptions.  Unique-ergodicity certification needs the
// whole tail, which a finite prefix can never witness; these are the tail
// shapes the decision rules understand.
//   constant:c            k_i = c
//   arith:a,b             k_i = a*i + b
//   geom:a,r              k_i = a * r^i
//   pairgeom:ae,re,ao,ro  k_{2i} = ae * re^i,  k_{2i-1} = ao * ro^i
//   list:v0,v1,...        finite, no tail claim
//   padded:m:v0,v1,...    the listed prefix, then 2s forever (at least m)
class KGenerator {
public:
    enum class Kind { Constant, Arithmetic, Geometric, PairedGeometric, List, Padded };

    static KGenerator constant(long long c);
    static KGenerator arithmetic(long long a, long long b);
    static KGenerator geometric(long long a, long long r);
    static KGenerator paired_geometric(long long ae, long long re, long long ao, long long ro);
    static KGenerator list(std::vector<long long> values);
    static KGenerator padded(std::vector<long long> prefix, std::size_t m);
    static KGenerator parse(const std::string& text);

    Kind kind() const { return kind_; }
    const std::string& describe() const { return describe_; }
    bool finite() const { return kind_ == Kind::List; }
    std::size_t list_size() const { return values_.size(); }
    long long param(int i) const { return params_.at(static_cast<std::size_t>(i)); }
    std::size_t pad_count() const { return pad_; }

    long long at(std::size_t i) const;  // throws on overflow / past a finite list
    KSequence prefix(std::size_t n) const;

    // declared-tail diagnostics: does some parity class consist of 1s from
    // some point on?
    bool tail_eventually_all_ones(int parity) const;
    bool kappa_valid() const;

private:
    KGenerator() = default;

    Kind kind_ = Kind::List;
    std::vector<long long> params_;
    std::vector<long long> values_;
    std::size_t pad_ = 0;
    std::string describe_;
};

}  // namespace itmlab

#endif
