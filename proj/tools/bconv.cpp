#include "bconv/asymptotics.hpp"
#include "bconv/field.hpp"
#include "bconv/measure.hpp"
#include "bconv/oddm.hpp"
#include "bconv/sineprod.hpp"
#include "bconv/tree.hpp"
#include "bconv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace bconv;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitCheckFailure = 2;

int default_precision() {
    if (const char* p = std::getenv("BCONV_PRECISION")) {
        int v = std::atoi(p);
        if (v >= 1 && v <= 1000) return v;
    }
    return 12;
}

// Truncated decimal expansion of a positive rational.
std::string rat_decimal(const Rat& r, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int scaled = (r.get_num() * scale) / r.get_den();
    std::string s = scaled.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    return s;
}

std::string rat_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

json measure_to_json(const SignedMeasure& mu, int m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = m;
    j["level"] = mu.level();
    json atoms = json::array();
    for (const auto& at : mu.atoms()) {
        json a;
        json coeffs = json::array();
        for (const auto& c : at.pos.coeffs()) coeffs.push_back(c.get_si());
        a["coeffs"] = coeffs;
        a["numerator"] = at.num.get_si();
        atoms.push_back(a);
    }
    j["atoms"] = atoms;
    return j;
}

int cmd_table(int m, int max_n, int precision, const std::string& format,
              const std::string& out) {
    auto rec = recurrence(m, max_n);
    auto lam = solve_real_root(m, precision + 4);
    Rat mid = (lam.lo + lam.hi) / 2;
    std::ostringstream os;
    if (format == "csv") {
        os << "n,a_n,a_n_over_2n,a_n_lambda_minus_n\n";
        Rat pw = 1;
        for (int n = 0; n <= max_n; ++n) {
            Int two_n = 1;
            mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), n);
            Rat frac(rec.values[n], two_n);
            frac.canonicalize();
            Rat ratio = Rat(rec.values[n]) / pw;
            os << n << "," << rec.values[n].get_str() << "," << rat_string(frac)
               << "," << rat_decimal(ratio, precision) << "\n";
            pw *= mid;
        }
    } else {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["m"] = m;
        json rows = json::array();
        Rat pw = 1;
        for (int n = 0; n <= max_n; ++n) {
            Int two_n = 1;
            mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), n);
            Rat frac(rec.values[n], two_n);
            frac.canonicalize();
            json row;
            row["n"] = n;
            row["a_n"] = rec.values[n].get_str();
            row["a_n_over_2n"] = rat_string(frac);
            row["a_n_lambda_minus_n"] = rat_decimal(Rat(rec.values[n]) / pw, precision);
            rows.push_back(row);
            pw *= mid;
        }
        j["rows"] = rows;
        os << j.dump(2) << "\n";
    }
    emit(out, os.str());
    return 0;
}

int cmd_roots(int m, int precision, const std::string& out) {
    auto lam = solve_real_root(m, precision + 4);
    auto rep = solve_all_roots(m);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = m;
    j["lambda"] = rat_decimal((lam.lo + lam.hi) / 2, precision);
    j["lambda_half"] = rat_decimal((lam.lo + lam.hi) / 4, precision);
    j["lambda_enclosure"] = {rat_string(lam.lo), rat_string(lam.hi)};
    j["square_free"] = rep.square_free;
    json roots = json::array();
    for (size_t i = 0; i < rep.complex_roots.size(); ++i) {
        json r;
        r["re"] = rep.complex_roots[i].real();
        r["im"] = rep.complex_roots[i].imag();
        r["modulus"] = std::abs(rep.complex_roots[i]);
        r["residual"] = rep.residuals[i];
        roots.push_back(r);
    }
    j["complex_roots"] = roots;
    j["max_complex_modulus"] = rep.max_complex_modulus;
    j["dominant"] = rep.dominant;
    j["below_three_halves"] = rep.below_three_halves;
    j["interval_check"] = rep.interval_check;
    emit(out, j.dump(2) + "\n");
    return rep.dominant && rep.square_free ? 0 : kExitCheckFailure;
}

int cmd_gf(int m, int max_n, const std::string& out) {
    auto coeffs = generating_function_coeffs(m, max_n);
    std::ostringstream os;
    os << "n,coeff\n";
    for (int n = 0; n <= max_n; ++n) os << n << "," << coeffs[n].get_str() << "\n";
    emit(out, os.str());
    return 0;
}

int cmd_verify(int m, int depth, int brute_depth, unsigned long seed,
               const std::string& out) {
    auto res = run_verify_suite(m, depth, brute_depth, seed);
    emit(out, res.report);
    return res.pass ? 0 : kExitCheckFailure;
}

int cmd_sineprod(int m, int n, double xi_max, long samples, long emit_points,
                 const std::string& format, const std::string& out) {
    FieldSpec spec(m);
    if (xi_max <= 0) xi_max = default_xi_max(spec, n);
    Rat bound;
    if (m % 2 == 0) {
        auto rec = recurrence(m, n);
        Int two_n = 1;
        mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), n);
        bound = Rat(rec.values[n], two_n);
        bound.canonicalize();
    } else {
        bound = 1;
    }
    auto sc = scan(spec, n, xi_max, samples, bound);
    std::ostringstream os;
    if (format == "csv") {
        os << "xi,F_n\n";
        long pts = emit_points > 0 ? emit_points : 1000;
        for (long i = 0; i < pts; ++i) {
            double xi = xi_max * static_cast<double>(i) / static_cast<double>(pts - 1);
            os << xi << "," << eval_sine_product(spec, n, xi) << "\n";
        }
    } else {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["m"] = m;
        j["n"] = n;
        j["xi_max"] = sc.xi_max;
        j["samples"] = sc.samples;
        j["max_abs"] = sc.max_abs;
        j["argmax_xi"] = sc.argmax_xi;
        j["bound"] = rat_string(sc.bound);
        j["refined"] = sc.refined;
        j["bound_ok"] = sc.bound_ok;
        os << j.dump(2) << "\n";
    }
    emit(out, os.str());
    return sc.bound_ok ? 0 : kExitCheckFailure;
}

int cmd_oddm(int m, int max_n, const std::string& out) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = m;
    j["n_max"] = max_n;
    auto w = search_witness(m, max_n);
    if (w) {
        json eta = json::array();
        for (int8_t e : w->eta) eta.push_back(static_cast<int>(e));
        j["witness"] = {{"n", w->n}, {"eta", eta}};
    } else {
        j["witness"] = nullptr;
    }
    bool ok = true;
    if (m % 2 == 1) {
        auto nd = verify_no_decay(m, std::min(max_n, 12));
        j["no_decay_verified"] = nd.pass;
        j["max_n_checked"] = nd.max_n_checked;
        ok = nd.pass && !w.has_value();
    } else {
        j["no_decay_verified"] = false;
        j["max_n_checked"] = 0;
        ok = w.has_value();  // even m must cancel at n = m+1
    }
    emit(out, j.dump(2) + "\n");
    return ok ? 0 : kExitCheckFailure;
}

int cmd_dump(int m, int n, bool unsigned_measure, const std::string& out) {
    FieldSpec spec(m);
    SignedMeasure mu = SignedMeasure::dirac_zero(spec);
    for (int i = 0; i < n; ++i)
        mu = unsigned_measure ? mu.unsigned_step(spec) : mu.signed_step(spec);
    emit(out, measure_to_json(mu, m).dump(2) + "\n");
    return 0;
}

int cmd_dump_tree(int m, int depth, bool dot, const std::string& out) {
    FieldSpec spec(m);
    TreeBuild tb = build_tree(spec, depth);
    if (dot) {
        emit(out, tree_to_dot(tb.levels, depth));
    } else {
        std::ostringstream os;
        for (int n = 0; n <= depth; ++n)
            for (const auto& w : tb.levels[n].survivors)
                os << n << " " << word_to_string(w) << "\n";
        emit(out, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for signed Bernoulli convolutions scaled by multinacci numbers"};
    app.require_subcommand(1);

    int m = 2, max_n = 10, depth = 12, brute_depth = -1, n = 10;
    int precision = default_precision();
    unsigned long seed = 1;
    int jobs = 1;
    long samples = 200000, emit_points = 0;
    double xi_max = 0;
    std::string format = "csv", out;
    bool dot = false, unsigned_measure = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", out, "Output path (default stdout)");
        c->add_option("--jobs", jobs, "Worker cap; output is identical for any value")
            ->check(CLI::Range(1, 256));
    };

    auto* t = app.add_subcommand("table", "Recurrence table a_n as CSV/JSON");
    t->add_option("--m", m, "Even multinacci degree")->required();
    t->add_option("--max-n", max_n, "Last index N")->required();
    t->add_option("--precision", precision, "Decimal digits");
    t->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    add_common(t);

    auto* v = app.add_subcommand("verify", "Run the lemma-check suite");
    v->add_option("--m", m, "Multinacci degree")->required();
    v->add_option("--depth", depth, "Pruned-tree depth");
    v->add_option("--brute-depth", brute_depth, "Brute-force depth (default min(depth,12))");
    v->add_option("--seed", seed, "Seed for sampled checks");
    add_common(v);

    auto* r = app.add_subcommand("roots", "Characteristic roots as JSON");
    r->add_option("--m", m, "Even multinacci degree")->required();
    r->add_option("--precision", precision, "Decimal digits for lambda");
    add_common(r);

    auto* g = app.add_subcommand("gf", "Generating-function coefficients as CSV");
    g->add_option("--m", m, "Even multinacci degree")->required();
    g->add_option("--max-n", max_n, "Last index N")->required();
    add_common(g);

    auto* sp = app.add_subcommand("sineprod", "Sine-product scan");
    sp->add_option("--m", m, "Multinacci degree")->required();
    sp->add_option("--n", n, "Product length")->required();
    sp->add_option("--xi-max", xi_max, "Scan window (default 10*beta^n capped at 1e4)");
    sp->add_option("--samples", samples, "Grid samples");
    sp->add_option("--emit-points", emit_points, "CSV rows to emit");
    sp->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    add_common(sp);

    auto* od = app.add_subcommand("oddm", "Witness search and odd-m no-decay report");
    od->add_option("--m", m, "Multinacci degree")->required();
    od->add_option("--max-n", max_n, "Witness search depth")->required();
    add_common(od);

    auto* d = app.add_subcommand("dump", "Serialize a measure to JSON");
    d->add_option("--m", m, "Multinacci degree")->required();
    d->add_option("--n", n, "Level")->required();
    d->add_flag("--unsigned", unsigned_measure, "Dump mu instead of nu");
    add_common(d);

    auto* dt = app.add_subcommand("dump-tree", "Emit pruned-tree levels");
    dt->add_option("--m", m, "Even multinacci degree")->required();
    dt->add_option("--depth", depth, "Levels to emit")->required();
    dt->add_flag("--dot", dot, "DOT format");
    add_common(dt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (t->parsed()) return cmd_table(m, max_n, precision, format, out);
        if (v->parsed()) {
            if (brute_depth < 0) brute_depth = std::min(depth, 12);
            return cmd_verify(m, depth, brute_depth, seed, out);
        }
        if (r->parsed()) return cmd_roots(m, precision, out);
        if (g->parsed()) return cmd_gf(m, max_n, out);
        if (sp->parsed())
            return cmd_sineprod(m, n, xi_max, samples, emit_points, format, out);
        if (od->parsed()) return cmd_oddm(m, max_n, out);
        if (d->parsed()) return cmd_dump(m, n, unsigned_measure, out);
        if (dt->parsed()) return cmd_dump_tree(m, depth, dot, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return 0;
}
