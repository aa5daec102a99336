#include "itmlab/serialize.hpp"

#include <sstream>

namespace itmlab {

json to_json(const Scalar& s) {
    json j;
    j["value"] = s.to_double();
    switch (s.kind()) {
        case ScalarKind::Rational:
            j["kind"] = "rational";
            j["exact"] = s.rational().get_str();
            break;
        case ScalarKind::Algebraic: {
            j["kind"] = "algebraic";
            j["field_k"] = s.field()->k();
            j["coeffs"] = {s.coeffs()[0].get_str(), s.coeffs()[1].get_str(),
                           s.coeffs()[2].get_str()};
            break;
        }
        case ScalarKind::Float:
            j["kind"] = "float";
            j["lo"] = s.interval().lo_double();
            j["hi"] = s.interval().hi_double();
            break;
    }
    return j;
}

json to_json(const KSequence& ks) {
    json j;
    j["symbols"] = ks.symbols;
    j["source"] = ks.source == KSequence::Source::FromParams ? "from_params" : "user_supplied";
    j["kappa_valid_prefix"] = ks.kappa_valid_prefix;
    return j;
}

json to_json(const Classification& c) {
    json j;
    switch (c.verdict) {
        case Classification::Verdict::FiniteType:
            j["verdict"] = "finite_type";
            j["steps"] = c.steps;
            j["exit"] = c.exit == ExitKind::HitL ? "hit_L" : "hit_boundary";
            break;
        case Classification::Verdict::InfiniteCertified:
            j["verdict"] = "infinite_certified";
            j["reason"] = c.reason == Classification::InfiniteReason::PeriodicCode
                              ? "periodic_code"
                              : "explicit_k_sequence";
            j["period"] = c.period;
            break;
        case Classification::Verdict::Inconclusive:
            j["verdict"] = "inconclusive";
            j["budget"] = c.budget;
            break;
    }
    j["k_prefix"] = to_json(c.k_prefix);
    if (c.indeterminate_at) j["indeterminate_at"] = *c.indeterminate_at;
    return j;
}

json to_json(const AttractorReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"components", row.components},
                        {"measure", row.measure.to_double()}});
    }
    json j;
    j["rows"] = rows;
    if (r.stabilized_at)
        j["stabilized_at"] = *r.stabilized_at;
    else
        j["stabilized_at"] = nullptr;
    j["hit_component_cap"] = r.hit_component_cap;
    json comps = json::array();
    for (const auto& [lo, hi] : r.final_set.intervals())
        comps.push_back({{"lo", lo.to_double()}, {"hi", hi.to_double()}});
    j["final_set"] = comps;
    return j;
}

json to_json(const Orbit& o) {
    json pts = json::array();
    for (const auto& x : o.points) pts.push_back(x.to_double());
    json j;
    j["points"] = pts;
    j["branches"] = o.branches;
    if (o.cycle) {
        j["preperiod"] = o.cycle->first;
        j["period"] = o.cycle->second;
    }
    if (o.indeterminate_at) j["indeterminate_at"] = *o.indeterminate_at;
    return j;
}

json to_json(const DimensionReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"depth", row.depth},
                        {"sum_l", row.sum_l.get_str()},
                        {"log_pi", row.log_pi},
                        {"quotient", row.quotient()}});
    }
    json j;
    j["rows"] = rows;
    j["limsup_estimate"] = r.limsup_estimate;
    j["final_bound"] = r.final_bound;
    j["final_bound_hi"] = r.final_bound_hi;
    j["method"] = r.method;
    return j;
}

json to_json(const Hd0Result& r) {
    return json{{"holds", r.holds},
                {"lhs", r.lhs},
                {"slack", r.slack},
                {"term1", r.term1},
                {"term2", r.term2}};
}

json to_json(const UEReport& r) {
    json j;
    switch (r.verdict) {
        case UEReport::Verdict::UECertified: j["verdict"] = "ue_certified"; break;
        case UEReport::Verdict::NUECertified: j["verdict"] = "nue_certified"; break;
        case UEReport::Verdict::NumericalUELike: j["verdict"] = "numerical_ue_like"; break;
        case UEReport::Verdict::NumericalNUELike: j["verdict"] = "numerical_nue_like"; break;
        case UEReport::Verdict::Unknown: j["verdict"] = "unknown"; break;
    }
    if (r.condition)
        j["condition"] = *r.condition == UEReport::UECondition::SumDiverges ? "sum_diverges"
                                                                            : "product_vanishes";
    if (r.condition_parity) j["condition_parity"] = *r.condition_parity == 0 ? "even" : "odd";
    j["sum_partials_even"] = r.sum_even.partials;
    j["sum_partials_odd"] = r.sum_odd.partials;
    j["product_partials_even"] = r.prod_even.partials;
    j["product_partials_odd"] = r.prod_odd.partials;
    j["series_truncated"] = r.sum_even.truncated_lookahead || r.sum_odd.truncated_lookahead ||
                            r.prod_even.truncated_lookahead || r.prod_odd.truncated_lookahead;
    if (r.nue_lambda) j["nue_lambda"] = *r.nue_lambda;
    j["nue_prefix_limited"] = r.nue_prefix_limited;
    j["z_diameters"] = r.z_diameters;
    j["source"] = r.source_description;
    j["kappa_valid"] = r.kappa_valid;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json to_json(const AbelianProduct& p) {
    json m = json::array();
    for (const auto& row : p.matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        m.push_back(r);
    }
    json counts = json::array();
    for (const auto& v : p.counts) counts.push_back(v.get_str());
    return json{{"matrix", m}, {"counts", counts}};
}

std::string dimension_csv(const DimensionReport& r) {
    std::ostringstream out;
    out << "depth,sum_l,log_pi,quotient\n";
    for (const auto& row : r.rows)
        out << row.depth << "," << row.sum_l.get_str() << "," << row.log_pi << ","
            << row.quotient() << "\n";
    return out.str();
}

std::string diameters_csv(const std::vector<double>& d) {
    std::ostringstream out;
    out << "depth,diameter\n";
    for (std::size_t i = 0; i < d.size(); ++i) out << (i + 1) << "," << d[i] << "\n";
    return out.str();
}

}  // namespace itmlab
