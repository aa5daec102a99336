// itmlab: interval translation map laboratory.
// Subcommands wrap the library: classify, render-a, survey, dimension, hd0,
// ue, code, attractor, orbit.  JSON to stdout (or --out); PGM for renders.
// Exit codes: 0 success/finite, 2 infinite-certified, 3 inconclusive,
// 64 usage, 74 I/O.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "itmlab/cubic.hpp"
#include "itmlab/errors.hpp"
#include "itmlab/rng.hpp"
#include "itmlab/serialize.hpp"
#include "itmlab/substitution.hpp"

using namespace itmlab;

namespace {

struct ModeOptions {
    std::string mode = "exact";
    long bits = 0;  // 0: take ITMLAB_PRECISION_BITS or 128
};

long effective_bits(const ModeOptions& m) {
    if (m.bits > 0) return m.bits;
    if (const char* env = std::getenv("ITMLAB_PRECISION_BITS")) {
        const long b = std::atol(env);
        if (b >= 8) return b;
    }
    return 128;
}

Scalar parse_param(const std::string& text, const ModeOptions& m) {
    if (m.mode == "float")
        return Scalar::floating(
            FloatInterval::from_string(text, static_cast<mpfr_prec_t>(effective_bits(m))));
    return Scalar(parse_rational(text));  // decimal strings stay exact: d/10^n
}

void add_mode_flags(CLI::App* cmd, ModeOptions& m) {
    cmd->add_option("--mode", m.mode, "arithmetic mode: exact (default) or float")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--bits", m.bits, "float-mode precision bits (default env ITMLAB_PRECISION_BITS or 128)");
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << data;
    if (!out) throw io_error("write failed: " + path);
}

int classification_exit(const Classification& c) {
    switch (c.verdict) {
        case Classification::Verdict::FiniteType: return 0;
        case Classification::Verdict::InfiniteCertified: return 2;
        case Classification::Verdict::Inconclusive: return 3;
    }
    return 3;
}

ItmParams params_from(const std::string& alpha, const std::string& beta, const ModeOptions& m,
                      long fixed_point_k) {
    if (fixed_point_k > 0) {
        if (m.mode == "float") {
            const long bits = effective_bits(m);
            mpq_class tol(1, 1);
            tol >>= static_cast<unsigned>(bits + 16);
            const PkRoots roots = pk_roots(fixed_point_k, tol);
            const Scalar a =
                Scalar::floating(roots.middle.to_interval(static_cast<mpfr_prec_t>(bits)));
            return ItmParams::make(a, a * a);
        }
        const Scalar r = middle_root(fixed_point_k);
        return ItmParams::make(r, r * r);
    }
    return ItmParams::make(parse_param(alpha, m), parse_param(beta, m));
}

unsigned pick_threads(long requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : std::min(hw, 8u);
}

// ---- render ----

struct RenderConfig {
    long width = 400, height = 400;
    std::string mode = "escape";  // escape | ifs
    long budget = 60;
    long ifs_depth = 6;
    long ifs_kmax = 24;
    std::string region = "0,1,0,1";
    long threads = 0;
    std::string out;
};

struct Region {
    mpq_class x0, x1, y0, y1;
};

Region parse_region(const std::string& s) {
    std::array<mpq_class, 4> v;
    std::stringstream ss(s);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 4) throw error("region: need exactly four comma-separated numbers");
        v[i++] = parse_rational(tok);
    }
    if (i != 4) throw error("region: need exactly four comma-separated numbers");
    if (!(v[0] < v[1] && v[2] < v[3])) throw error("region: empty rectangle");
    return Region{v[0], v[1], v[2], v[3]};
}

unsigned char escape_gray(const Classification& c, long budget) {
    if (c.verdict != Classification::Verdict::FiniteType) return 0;  // never escaped: black
    const long s = static_cast<long>(c.steps);
    const long g = 255 - (255 * s) / std::max<long>(budget, 1);
    return static_cast<unsigned char>(std::max<long>(1, g));
}

std::string render_escape(const RenderConfig& cfg, const Region& reg) {
    const long w = cfg.width, h = cfg.height;
    std::string pixels(static_cast<std::size_t>(w * h), '\0');
    const mpq_class dx = (reg.x1 - reg.x0), dy = (reg.y1 - reg.y0);
    const unsigned nthreads = pick_threads(cfg.threads);
    std::vector<std::thread> pool;
    std::atomic<long> next_row{0};
    auto worker = [&]() {
        for (;;) {
            const long j = next_row.fetch_add(1);
            if (j >= h) return;
            for (long i = 0; i < w; ++i) {
                // pixel centers; row 0 is the top of the image (largest beta)
                mpq_class a = reg.x0 + dx * mpq_class(2 * i + 1, 2 * w);
                mpq_class b = reg.y1 - dy * mpq_class(2 * j + 1, 2 * h);
                a.canonicalize();
                b.canonicalize();
                unsigned char g = 255;
                if (b <= a && b >= 0 && a <= 1) {
                    const Classification c =
                        classify(ItmParams::make(Scalar(a), Scalar(b)), static_cast<std::size_t>(cfg.budget));
                    g = escape_gray(c, cfg.budget);
                }
                pixels[static_cast<std::size_t>(j * w + i)] = static_cast<char>(g);
            }
        }
    };
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return pixels;
}

struct Raster {
    long w, h;
    Region reg;
    std::string* pixels;

    void fill_convex(const std::vector<std::pair<mpq_class, mpq_class>>& poly) {
        mpq_class ax = poly[0].first, bx = ax, ay = poly[0].second, by = ay;
        for (const auto& [x, y] : poly) {
            ax = std::min(ax, x);
            bx = std::max(bx, x);
            ay = std::min(ay, y);
            by = std::max(by, y);
        }
        const mpq_class dx = reg.x1 - reg.x0, dy = reg.y1 - reg.y0;
        auto col_of = [&](const mpq_class& x) {
            return static_cast<long>(mpz_class((x - reg.x0) * w / dx).get_si());
        };
        auto row_of = [&](const mpq_class& y) {
            return static_cast<long>(mpz_class((reg.y1 - y) * h / dy).get_si());
        };
        long i0 = std::max<long>(0, col_of(ax));
        long i1 = std::min<long>(w - 1, col_of(bx));
        long j0 = std::max<long>(0, row_of(by));
        long j1 = std::min<long>(h - 1, row_of(ay));
        for (long j = j0; j <= j1; ++j)
            for (long i = i0; i <= i1; ++i) {
                mpq_class cx = reg.x0 + dx * mpq_class(2 * i + 1, 2 * w);
                mpq_class cy = reg.y1 - dy * mpq_class(2 * j + 1, 2 * h);
                if (inside(poly, cx, cy) || (i0 == i1 && j0 == j1))
                    (*pixels)[static_cast<std::size_t>(j * w + i)] = '\0';
            }
    }

    static bool inside(const std::vector<std::pair<mpq_class, mpq_class>>& poly,
                       const mpq_class& x, const mpq_class& y) {
        int want = 0;
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = poly[i];
            const auto& q = poly[(i + 1) % n];
            const mpq_class cr = (q.first - p.first) * (y - p.second) -
                                 (q.second - p.second) * (x - p.first);
            const int s = sgn(cr);
            if (s == 0) continue;
            if (want == 0)
                want = s;
            else if (s != want)
                return false;
        }
        return true;
    }
};

void ifs_paint(Raster& ras, std::vector<long long>& prefix, long depth_left, long kmax,
               const mpq_class& pixel_size) {
    KSequence ks;
    ks.symbols = prefix;
    std::vector<std::pair<mpq_class, mpq_class>> quad;
    if (!prefix.empty()) {
        const ParamBox box = param_box(ks);
        quad.reserve(4);
        for (const auto& c : box.corners) quad.emplace_back(c.first.rational(), c.second.rational());
        // outside the viewport?
        mpq_class ax = quad[0].first, bx = ax, ay = quad[0].second, by = ay;
        for (const auto& [x, y] : quad) {
            ax = std::min(ax, x);
            bx = std::max(bx, x);
            ay = std::min(ay, y);
            by = std::max(by, y);
        }
        if (bx < ras.reg.x0 || ax > ras.reg.x1 || by < ras.reg.y0 || ay > ras.reg.y1) return;
        if (depth_left == 0 || (bx - ax <= pixel_size && by - ay <= pixel_size)) {
            ras.fill_convex(quad);
            return;
        }
    }
    for (long long k = 1; k <= kmax; ++k) {
        prefix.push_back(k);
        ifs_paint(ras, prefix, depth_left - 1, kmax, pixel_size);
        prefix.pop_back();
    }
    // the remaining branches accumulate in the image of the small-alpha wedge
    // {alpha <= 1/(kmax+1), beta <= alpha}; paint its image once
    std::vector<std::pair<Scalar, Scalar>> wedge = {
        {Scalar(0), Scalar(0)},
        {Scalar(mpq_class(1, kmax + 1)), Scalar(0)},
        {Scalar(mpq_class(1, kmax + 1)), Scalar(mpq_class(1, kmax + 1))}};
    for (std::size_t i = prefix.size(); i-- > 0;) {
        for (auto& corner : wedge) {
            GaussPoint pre = inverse_branch(prefix[i], corner.first, corner.second);
            corner = {std::move(pre.alpha), std::move(pre.beta)};
        }
    }
    std::vector<std::pair<mpq_class, mpq_class>> tri;
    tri.reserve(3);
    for (const auto& c : wedge) tri.emplace_back(c.first.rational(), c.second.rational());
    ras.fill_convex(tri);
}

std::string render_ifs(const RenderConfig& cfg, const Region& reg) {
    const long w = cfg.width, h = cfg.height;
    std::string pixels(static_cast<std::size_t>(w * h), static_cast<char>(255));
    Raster ras{w, h, reg, &pixels};
    std::vector<long long> prefix;
    const mpq_class pixel_size = (reg.x1 - reg.x0) / mpq_class(2 * w);
    ifs_paint(ras, prefix, cfg.ifs_depth, cfg.ifs_kmax, pixel_size);
    return pixels;
}

std::string pgm_bytes(long w, long h, const std::string& pixels) {
    std::string out = "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out += pixels;
    return out;
}

// ---- survey ----

json run_survey(std::size_t samples, std::size_t budget, std::uint64_t seed, unsigned nthreads) {
    std::vector<std::uint32_t> escape_step(samples, 0);
    std::vector<std::uint8_t> outcome(samples, 0);  // 0 finite, 1 infinite, 2 inconclusive
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= samples) return;
            SplitMix64 rng(seed + 0x6a09e667f3bcc909ULL * (i + 1));
            mpq_class a(mpz_class(static_cast<unsigned long>(rng.next() >> 11)));
            mpq_class b(mpz_class(static_cast<unsigned long>(rng.next() >> 11)));
            a /= mpz_class(1) << 53;
            b /= mpz_class(1) << 53;
            if (b > a) swap(a, b);
            a.canonicalize();
            b.canonicalize();
            const Classification c = classify(ItmParams::make(Scalar(a), Scalar(b)), budget);
            switch (c.verdict) {
                case Classification::Verdict::FiniteType:
                    outcome[i] = 0;
                    escape_step[i] = static_cast<std::uint32_t>(c.steps);
                    break;
                case Classification::Verdict::InfiniteCertified: outcome[i] = 1; break;
                case Classification::Verdict::Inconclusive: outcome[i] = 2; break;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::size_t finite = 0, infinite = 0, inconclusive = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        if (outcome[i] == 0) ++finite;
        else if (outcome[i] == 1) ++infinite;
        else ++inconclusive;
    }
    // histogram: steps 0..31 singly, then doubling buckets
    json hist = json::array();
    auto bucket_count = [&](std::size_t lo, std::size_t hi) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < samples; ++i)
            if (outcome[i] == 0 && escape_step[i] >= lo && escape_step[i] <= hi) ++n;
        return n;
    };
    for (std::size_t s = 0; s <= 31 && s <= budget; ++s) {
        const std::size_t n = bucket_count(s, s);
        if (n) hist.push_back({{"step_lo", s}, {"step_hi", s}, {"count", n}});
    }
    for (std::size_t lo = 32; lo <= budget; lo *= 2) {
        const std::size_t hi = std::min(budget, lo * 2 - 1);
        const std::size_t n = bucket_count(lo, hi);
        if (n) hist.push_back({{"step_lo", lo}, {"step_hi", hi}, {"count", n}});
    }
    json j;
    j["samples"] = samples;
    j["budget"] = budget;
    j["seed"] = seed;
    j["fraction_finite"] = static_cast<double>(finite) / static_cast<double>(samples);
    j["count_finite"] = finite;
    j["count_infinite_certified"] = infinite;
    j["count_inconclusive"] = inconclusive;
    j["escape_step_histogram"] = hist;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval translation map laboratory"};
    app.require_subcommand(1);

    // classify
    auto* c_classify = app.add_subcommand("classify", "finite/infinite type of (alpha, beta)");
    std::string arg_alpha, arg_beta;
    long arg_fixed_k = 0;
    std::size_t arg_budget = 10000;
    ModeOptions mode;
    std::string arg_out;
    c_classify->add_option("alpha", arg_alpha, "alpha as p/q or decimal");
    c_classify->add_option("beta", arg_beta, "beta as p/q or decimal");
    c_classify->add_option("--fixed-point", arg_fixed_k, "use the cell-k fixed point (r_k, r_k^2)");
    std::string arg_gen;
    c_classify->add_option("--generator", arg_gen,
                           "declare the full k-sequence instead of classifying an orbit");
    c_classify->add_option("--budget", arg_budget, "max induction steps");
    add_mode_flags(c_classify, mode);
    c_classify->add_option("--out", arg_out, "output path (default stdout)");

    // render-a
    auto* c_render = app.add_subcommand("render-a", "PGM picture of the infinite-type parameter set");
    RenderConfig rcfg;
    c_render->add_option("--width", rcfg.width)->check(CLI::PositiveNumber);
    c_render->add_option("--height", rcfg.height)->check(CLI::PositiveNumber);
    c_render->add_option("--render-mode", rcfg.mode, "escape | ifs")
        ->check(CLI::IsMember({"escape", "ifs"}));
    c_render->add_option("--budget", rcfg.budget, "escape-time budget");
    c_render->add_option("--ifs-depth", rcfg.ifs_depth);
    c_render->add_option("--ifs-kmax", rcfg.ifs_kmax);
    c_render->add_option("--region", rcfg.region, "x0,x1,y0,y1 (alpha range, beta range)");
    c_render->add_option("--threads", rcfg.threads);
    c_render->add_option("--out", rcfg.out, "output PGM path")->required();

    // survey
    auto* c_survey = app.add_subcommand("survey", "sample U uniformly and classify");
    std::size_t s_samples = 10000, s_budget = 10000;
    std::uint64_t s_seed = 1;
    long s_threads = 0;
    std::string s_out;
    c_survey->add_option("--samples", s_samples)->check(CLI::PositiveNumber);
    c_survey->add_option("--budget", s_budget)->check(CLI::PositiveNumber);
    c_survey->add_option("--seed", s_seed);
    c_survey->add_option("--threads", s_threads);
    c_survey->add_option("--out", s_out);

    // dimension
    auto* c_dim = app.add_subcommand("dimension", "box-dimension upper bounds");
    long d_k = 0;
    std::size_t d_depth = 200;
    std::string d_alpha, d_beta, d_out, d_csv;
    double d_tol = 1e-9;
    ModeOptions d_mode;
    c_dim->add_option("--constant-k", d_k, "constant symbol k at its fixed point");
    c_dim->add_option("--alpha", d_alpha);
    c_dim->add_option("--beta", d_beta);
    c_dim->add_option("--depth", d_depth);
    c_dim->add_option("--tol", d_tol, "tolerance for the fixed-point dimension value");
    add_mode_flags(c_dim, d_mode);
    c_dim->add_option("--out", d_out);
    c_dim->add_option("--csv", d_csv, "also write depth,sum_l,log_pi,quotient rows");

    // hd0
    auto* c_hd0 = app.add_subcommand("hd0", "dimension-zero cover inequality checker");
    long h_k = 3;
    unsigned h_i = 5;
    std::string h_eps = "1e-12", h_epsp = "1e-24", h_n = "100", h_pi = "1/1000", h_out;
    c_hd0->add_option("--k", h_k);
    c_hd0->add_option("--depth-i", h_i);
    c_hd0->add_option("--eps", h_eps);
    c_hd0->add_option("--eps-prime", h_epsp);
    c_hd0->add_option("--n-covers", h_n);
    c_hd0->add_option("--pi", h_pi, "current cover scale");
    c_hd0->add_option("--out", h_out);

    // ue
    auto* c_ue = app.add_subcommand("ue", "unique-ergodicity decision for a k-sequence");
    std::string u_gen, u_out, u_csv;
    std::size_t u_depth = 60;
    c_ue->add_option("--generator", u_gen,
                     "constant:k | arith:a,b | geom:a,r | pairgeom:ae,re,ao,ro | list:... | padded:m:...")
        ->required();
    c_ue->add_option("--depth", u_depth);
    c_ue->add_option("--out", u_out);
    c_ue->add_option("--csv", u_csv, "per-depth triangle diameters");

    // code
    auto* c_code = app.add_subcommand("code", "symbolic itinerary words");
    std::string w_gen, w_alpha, w_beta, w_out;
    long w_fixed_k = 0;
    std::size_t w_len = 100;
    bool w_numeric = false, w_check = false;
    ModeOptions w_mode;
    c_code->add_option("--generator", w_gen);
    c_code->add_option("--fixed-point", w_fixed_k);
    c_code->add_option("--alpha", w_alpha);
    c_code->add_option("--beta", w_beta);
    c_code->add_option("--length", w_len);
    c_code->add_flag("--numeric", w_numeric, "orbit coding instead of the substitution word");
    c_code->add_flag("--check", w_check, "cross-validate substitution word against the orbit coding");
    bool w_abelian = false;
    c_code->add_flag("--abelian", w_abelian, "include the letter-count matrix product and frequencies");
    add_mode_flags(c_code, w_mode);
    c_code->add_option("--out", w_out);

    // attractor
    auto* c_att = app.add_subcommand("attractor", "iterate Omega_n = T(Omega_{n-1})");
    std::string a_alpha, a_beta, a_out;
    long a_fixed_k = 0;
    std::size_t a_steps = 30, a_cap = 1000000;
    ModeOptions a_mode;
    c_att->add_option("--alpha", a_alpha);
    c_att->add_option("--beta", a_beta);
    c_att->add_option("--fixed-point", a_fixed_k);
    c_att->add_option("--steps", a_steps);
    c_att->add_option("--cap", a_cap, "component cap");
    add_mode_flags(c_att, a_mode);
    c_att->add_option("--out", a_out);

    // orbit
    auto* c_orb = app.add_subcommand("orbit", "forward orbit of a point");
    std::string o_alpha, o_beta, o_x0 = "0", o_out;
    long o_fixed_k = 0;
    std::size_t o_steps = 100;
    ModeOptions o_mode;
    c_orb->add_option("--alpha", o_alpha);
    c_orb->add_option("--beta", o_beta);
    c_orb->add_option("--fixed-point", o_fixed_k);
    c_orb->add_option("--x0", o_x0);
    c_orb->add_option("--steps", o_steps);
    add_mode_flags(c_orb, o_mode);
    c_orb->add_option("--out", o_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (c_classify->parsed()) {
            if (!arg_gen.empty()) {
                const Classification c =
                    classify_declared(KGenerator::parse(arg_gen), std::min<std::size_t>(arg_budget, 64));
                write_output(arg_out, to_json(c).dump(2));
                return classification_exit(c);
            }
            if (arg_fixed_k == 0 && (arg_alpha.empty() || arg_beta.empty()))
                throw error("classify: give alpha and beta, or --fixed-point k, or --generator");
            const ItmParams p = params_from(arg_alpha, arg_beta, mode, arg_fixed_k);
            const Classification c = classify(p, arg_budget);
            write_output(arg_out, to_json(c).dump(2));
            return classification_exit(c);
        }
        if (c_render->parsed()) {
            const Region reg = parse_region(rcfg.region);
            const std::string pixels =
                rcfg.mode == "escape" ? render_escape(rcfg, reg) : render_ifs(rcfg, reg);
            write_output(rcfg.out, pgm_bytes(rcfg.width, rcfg.height, pixels));
            return 0;
        }
        if (c_survey->parsed()) {
            write_output(s_out, run_survey(s_samples, s_budget, s_seed,
                                           pick_threads(s_threads))
                                    .dump(2));
            return 0;
        }
        if (c_dim->parsed()) {
            json j;
            if (d_k >= 2) {
                const Scalar fp = fixed_point_dimension(d_k, d_tol);
                j["fixed_point_dimension"] = fp.to_double();
                j["fixed_point_dimension_lo"] = fp.interval().lo_double();
                j["fixed_point_dimension_hi"] = fp.interval().hi_double();
                const DimensionReport rep = box_dim_constant_k(d_k, d_depth);
                j["cover"] = to_json(rep);
                if (!d_csv.empty()) write_output(d_csv, dimension_csv(rep));
            } else {
                if (d_alpha.empty() || d_beta.empty())
                    throw error("dimension: give --constant-k or --alpha/--beta");
                const ItmParams p = ItmParams::make(parse_param(d_alpha, d_mode),
                                                    parse_param(d_beta, d_mode));
                Classification c = classify(p, d_depth);
                std::vector<long long> ks;
                std::vector<Scalar> alphas;
                GaussPoint g = GaussPoint::make(p.alpha, p.beta);
                while (g.location == GaussLocation::InteriorU && ks.size() < d_depth) {
                    auto r = gauss_step(g);
                    ks.push_back(r.k);
                    alphas.push_back(g.alpha);
                    g = std::move(r.next);
                }
                j["classification"] = to_json(c);
                if (ks.empty()) throw error("dimension: orbit left U immediately; no cover data");
                const DimensionReport rep = box_dim_upper_bound(ks, alphas);
                j["cover"] = to_json(rep);
                if (!d_csv.empty()) write_output(d_csv, dimension_csv(rep));
            }
            write_output(d_out, j.dump(2));
            return 0;
        }
        if (c_hd0->parsed()) {
            const Hd0Preset preset =
                hd0_recipe(h_k, Scalar(parse_rational(h_eps)), Scalar(parse_rational(h_epsp)));
            const Hd0Result r =
                hd0_inequality_check(mpz_class(parse_rational(h_n).get_num()),
                                     Scalar(parse_rational(h_pi)), preset.alpha, preset.beta,
                                     preset.beta_next, h_i);
            json j = to_json(r);
            j["alpha"] = preset.alpha.to_double();
            j["beta"] = preset.beta.to_double();
            j["beta_next"] = preset.beta_next.to_double();
            write_output(h_out, j.dump(2));
            return 0;
        }
        if (c_ue->parsed()) {
            const KGenerator gen = KGenerator::parse(u_gen);
            const UEReport rep = decide_unique_ergodicity(gen, u_depth);
            if (!u_csv.empty()) write_output(u_csv, diameters_csv(rep.z_diameters));
            write_output(u_out, to_json(rep).dump(2));
            return 0;
        }
        if (c_code->parsed()) {
            json j;
            std::string word;
            if (w_numeric || w_check) {
                const ItmParams p = params_from(w_alpha, w_beta, w_mode, w_fixed_k);
                const Itinerary num = itinerary(p, w_len);
                if (num.indeterminate_at) j["indeterminate_at"] = *num.indeterminate_at;
                if (w_numeric) word = num.word;
                if (w_check) {
                    KSequence ks;
                    if (!w_gen.empty())
                        ks = KGenerator::parse(w_gen).prefix(2 * w_len);
                    else if (w_fixed_k > 0)
                        ks = KGenerator::constant(w_fixed_k).prefix(128);
                    else
                        throw error("code --check: needs --generator or --fixed-point");
                    const ChainPrefix cp = chain_prefix(ks, w_len);
                    const std::string sub = cp.word.substr(0, w_len);
                    j["match"] = sub == num.word.substr(0, std::min(w_len, num.word.size())) &&
                                 !num.indeterminate_at;
                    if (word.empty()) word = sub;
                }
            } else {
                KSequence ks;
                if (!w_gen.empty())
                    ks = KGenerator::parse(w_gen).prefix(2 * w_len + 8);
                else if (w_fixed_k > 0)
                    ks = KGenerator::constant(w_fixed_k).prefix(128);
                else if (!w_alpha.empty() && !w_beta.empty()) {
                    const ItmParams p = params_from(w_alpha, w_beta, w_mode, 0);
                    const Classification c = classify(p, 4096);
                    ks = c.k_prefix;
                    j["classification"] = to_json(c);
                } else {
                    throw error("code: give --generator, --fixed-point, or --alpha/--beta");
                }
                const ChainPrefix cp = chain_prefix(ks, w_len);
                j["symbols_used"] = cp.symbols_used;
                word = cp.word.substr(0, w_len);
                if (w_abelian) {
                    const KSequence used = ks.truncated(cp.symbols_used);
                    j["abelian"] = to_json(abelian_product(used));
                    const auto freq = letter_frequencies(used);
                    j["frequencies"] = {freq[0].get_d(), freq[1].get_d(), freq[2].get_d()};
                    j["frequencies_exact"] = {freq[0].get_str(), freq[1].get_str(),
                                              freq[2].get_str()};
                }
            }
            j["word"] = word;
            j["length"] = word.size();
            write_output(w_out, j.dump(2));
            return 0;
        }
        if (c_att->parsed()) {
            const ItmParams p = params_from(a_alpha, a_beta, a_mode, a_fixed_k);
            write_output(a_out, to_json(attractor_iterate(p, a_steps, a_cap)).dump(2));
            return 0;
        }
        if (c_orb->parsed()) {
            const ItmParams p = params_from(o_alpha, o_beta, o_mode, o_fixed_k);
            write_output(o_out, to_json(orbit(p, parse_param(o_x0, o_mode), o_steps)).dump(2));
            return 0;
        }
    } catch (const io_error& e) {
        std::cerr << "itmlab: " << e.what() << "\n";
        return 74;
    } catch (const CLI::Error& e) {
        std::cerr << "itmlab: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "itmlab: " << e.what() << "\n";
        return 64;
    }
    return 64;
}
