#include "itmlab/ksequence.hpp"

#include <sstream>

#include "itmlab/errors.hpp"

namespace itmlab {

namespace {

constexpr long long kSymbolCap = 1LL << 62;

long long checked_mul(long long a, long long b) {
    const __int128 p = static_cast<__int128>(a) * b;
    if (p > kSymbolCap) throw std::overflow_error("k-sequence symbol exceeds 2^62");
    return static_cast<long long>(p);
}

long long checked_pow(long long base, std::size_t e) {
    long long r = 1;
    for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::vector<long long> parse_csv(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw error("KGenerator: empty list entry");
        out.push_back(std::stoll(tok));
    }
    return out;
}

}  // namespace

KSequence KSequence::truncated(std::size_t n) const {
    KSequence out = *this;
    if (out.symbols.size() > n) out.symbols.resize(n);
    return out;
}

KSequence KSequence::appended(long long k) const {
    KSequence out = *this;
    out.symbols.push_back(k);
    return out;
}

KGenerator KGenerator::constant(long long c) {
    if (c < 1) throw error("KGenerator: symbols must be >= 1");
    KGenerator g;
    g.kind_ = Kind::Constant;
    g.params_ = {c};
    g.describe_ = "constant:" + std::to_string(c);
    return g;
}

KGenerator KGenerator::arithmetic(long long a, long long b) {
    if (a < 0 || b < 1) throw error("KGenerator: arithmetic needs a >= 0, b >= 1");
    KGenerator g;
    g.kind_ = Kind::Arithmetic;
    g.params_ = {a, b};
    g.describe_ = "arith:" + std::to_string(a) + "," + std::to_string(b);
    return g;
}

KGenerator KGenerator::geometric(long long a, long long r) {
    if (a < 1 || r < 1) throw error("KGenerator: geometric needs a >= 1, r >= 1");
    KGenerator g;
    g.kind_ = Kind::Geometric;
    g.params_ = {a, r};
    g.describe_ = "geom:" + std::to_string(a) + "," + std::to_string(r);
    return g;
}

KGenerator KGenerator::paired_geometric(long long ae, long long re, long long ao, long long ro) {
    if (ae < 1 || re < 1 || ao < 1 || ro < 1)
        throw error("KGenerator: pairgeom parameters must be >= 1");
    KGenerator g;
    g.kind_ = Kind::PairedGeometric;
    g.params_ = {ae, re, ao, ro};
    g.describe_ = "pairgeom:" + std::to_string(ae) + "," + std::to_string(re) + "," +
                  std::to_string(ao) + "," + std::to_string(ro);
    return g;
}

KGenerator KGenerator::list(std::vector<long long> values) {
    for (long long v : values)
        if (v < 1) throw error("KGenerator: symbols must be >= 1");
    KGenerator g;
    g.kind_ = Kind::List;
    g.values_ = std::move(values);
    g.describe_ = "list(" + std::to_string(g.values_.size()) + " symbols)";
    return g;
}

KGenerator KGenerator::padded(std::vector<long long> prefix, std::size_t m) {
    for (long long v : prefix)
        if (v < 1) throw error("KGenerator: symbols must be >= 1");
    KGenerator g;
    g.kind_ = Kind::Padded;
    g.values_ = std::move(prefix);
    g.pad_ = m;
    g.describe_ = "padded:" + std::to_string(m) + " after " + std::to_string(g.values_.size()) +
                  " symbols";
    return g;
}

KGenerator KGenerator::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw error("KGenerator: missing ':' in \"" + text + "\"");
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (head == "constant") return constant(std::stoll(rest));
    if (head == "arith") {
        auto v = parse_csv(rest);
        if (v.size() != 2) throw error("KGenerator: arith:a,b");
        return arithmetic(v[0], v[1]);
    }
    if (head == "geom") {
        auto v = parse_csv(rest);
        if (v.size() != 2) throw error("KGenerator: geom:a,r");
        return geometric(v[0], v[1]);
    }
    if (head == "pairgeom") {
        auto v = parse_csv(rest);
        if (v.size() != 4) throw error("KGenerator: pairgeom:ae,re,ao,ro");
        return paired_geometric(v[0], v[1], v[2], v[3]);
    }
    if (head == "list") return list(parse_csv(rest));
    if (head == "padded") {
        const auto colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw error("KGenerator: padded:m:v0,v1,...");
        const std::size_t m = static_cast<std::size_t>(std::stoull(rest.substr(0, colon2)));
        return padded(parse_csv(rest.substr(colon2 + 1)), m);
    }
    throw error("KGenerator: unknown generator kind \"" + head + "\"");
}

long long KGenerator::at(std::size_t i) const {
    switch (kind_) {
        case Kind::Constant: return params_[0];
        case Kind::Arithmetic: {
            const __int128 v = static_cast<__int128>(params_[0]) * static_cast<__int128>(i) +
                               params_[1];
            if (v > kSymbolCap) throw std::overflow_error("k-sequence symbol exceeds 2^62");
            return static_cast<long long>(v);
        }
        case Kind::Geometric: return checked_mul(params_[0], checked_pow(params_[1], i));
        case Kind::PairedGeometric:
            if (i % 2 == 0) return checked_mul(params_[0], checked_pow(params_[1], i / 2));
            return checked_mul(params_[2], checked_pow(params_[3], (i + 1) / 2));
        case Kind::List:
            if (i >= values_.size()) throw error("KGenerator: index past the end of a finite list");
            return values_[i];
        case Kind::Padded: return i < values_.size() ? values_[i] : 2;
    }
    throw error("KGenerator: bad kind");
}

KSequence KGenerator::prefix(std::size_t n) const {
    KSequence s;
    s.source = KSequence::Source::UserSupplied;
    s.symbols.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.symbols.push_back(at(i));
    s.kappa_valid_prefix = kappa_valid();
    return s;
}

bool KGenerator::tail_eventually_all_ones(int parity) const {
    switch (kind_) {
        case Kind::Constant: return params_[0] == 1;
        case Kind::Arithmetic: return params_[0] == 0 && params_[1] == 1;
        case Kind::Geometric: return params_[0] == 1 && params_[1] == 1;
        case Kind::PairedGeometric:
            if (parity == 0) return params_[0] == 1 && params_[1] == 1;
            return params_[2] == 1 && params_[3] == 1;
        case Kind::List: return false;  // no tail claim
        case Kind::Padded: return false;
    }
    return false;
}

bool KGenerator::kappa_valid() const {
    return !tail_eventually_all_ones(0) && !tail_eventually_all_ones(1);
}

}  // namespace itmlab
