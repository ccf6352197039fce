#include "jackkerov/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "jackkerov/cumulants.hpp"
#include "jackkerov/errors.hpp"
#include "jackkerov/jack.hpp"
#include "jackkerov/kerov.hpp"
#include "jackkerov/plancherel.hpp"

namespace jackkerov {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::string format = "text";
    int jack_cap = 10;
    int kerov_cap = 8;
    int exact_cap = 30;
    int float_cap = 60;
    double grid_step = 1e-3;
    std::uint64_t seed = 1;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

struct Symbolic {};
using Alpha = std::variant<Symbolic, Rational, double>;

Alpha parse_alpha(const std::string& s)
{
    if (s == "t") return Symbolic{};
    if (s.find_first_of(".eE") != std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad alpha: " + s);
        if (!(v > 0)) throw std::invalid_argument("alpha must be positive");
        return v;
    }
    Rational q = parse_rational(s);
    if (q <= 0) throw std::invalid_argument("alpha must be positive");
    return q;
}

double alpha_double(const Alpha& a)
{
    if (std::holds_alternative<double>(a)) return std::get<double>(a);
    if (std::holds_alternative<Rational>(a)) return std::get<Rational>(a).get_d();
    throw std::invalid_argument("sampling needs a numeric alpha");
}

void write_symfun(std::ostream& out, const std::string& fmt, const std::string& key, const std::string& label, const SymFun& f)
{
    if (fmt == "json") {
        Json terms = Json::object();
        for (const auto& [rho, c] : f.coeffs()) terms[rho.to_string()] = c.to_string();
        out << Json{{key, label}, {"basis", std::string(1, basis_letter(f.basis()))}, {"coeffs", terms}}.dump() << '\n';
    } else if (fmt == "csv") {
        out << "partition,coefficient\n";
        for (const auto& [rho, c] : f.coeffs()) out << '"' << rho.to_string() << "\"," << c.to_string() << '\n';
    } else {
        out << f.to_string() << '\n';
    }
}

void write_scalar(std::ostream& out, const std::string& fmt, Json fields, const std::string& value)
{
    if (fmt == "json") {
        fields["value"] = value;
        out << fields.dump() << '\n';
    } else if (fmt == "csv") {
        std::string header, row;
        for (const auto& [k, v] : fields.items()) {
            header += k + ",";
            row += '"' + v.get<std::string>() + "\",";
        }
        out << header << "value\n" << row << value << '\n';
    } else {
        out << value << '\n';
    }
}

Json degree_json(const std::vector<DegreeRecord>& records)
{
    Json a = Json::array();
    for (const auto& r : records)
        a.push_back({{"basis", std::string(1, kerov_letter(r.basis))},
                     {"rho", r.rho.to_string()},
                     {"degree", r.degree},
                     {"bound", r.bound},
                     {"parity_ok", r.parity_ok},
                     {"within_bound", r.within_bound}});
    return a;
}

FieldElement evaluate_observable(const std::string& observable, const Partition& lambda)
{
    const auto colon = observable.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--expect takes KIND:PARTITION, e.g. Ch:1,1");
    const std::string kind = observable.substr(0, colon);
    const Partition p = Partition::parse(observable.substr(colon + 1));
    if (kind == "Ch") return ch(p, lambda);
    if (kind == "theta") return p.size() == lambda.size() ? theta(lambda, p) : FieldElement();
    if (kind == "M" || kind == "R") {
        const int order = std::max(2, p.empty() ? 2 : p.part(0));
        FieldElement v(1L);
        for (int part : p.parts())
            v *= kind == "M" ? cached_moments(lambda, order)[part] : cached_cumulants(lambda, order)[part];
        return v;
    }
    throw std::invalid_argument("unknown observable " + kind + " (use Ch, theta, M or R)");
}

template <typename S>
void write_dist(std::ostream& out, const std::string& fmt, const std::string& alpha, const PlancherelDist<S>& d,
                const std::function<std::string(const S&)>& show)
{
    if (fmt == "json") {
        Json probs = Json::object();
        for (const auto& [lambda, p] : d.probs) probs[lambda.to_string()] = show(p);
        out << Json{{"n", d.n}, {"alpha", alpha}, {"probs", probs}}.dump() << '\n';
    } else if (fmt == "csv") {
        out << "lambda,probability\n";
        for (const auto& [lambda, p] : d.probs) out << '"' << lambda.to_string() << "\"," << show(p) << '\n';
    } else {
        for (const auto& [lambda, p] : d.probs) out << lambda.to_string() << ": " << show(p) << '\n';
    }
}

std::string show_double(const double& v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

struct VerifyOutcome {
    Partition mu;
    bool degree = false, top = false, golden = false;
    std::string detail;
};

VerifyOutcome verify_mu(const Partition& mu, const KerovOptions& opts)
{
    VerifyOutcome v;
    v.mu = mu;
    const auto l = compute_L(mu, opts);
    const auto k = moments_to_cumulants(l);
    v.degree = verify_degree_bounds(l, k).passed();
    v.top = top_term_check(k).passed;
    const int d = mu.size() + mu.length();
    v.golden = true;
    for (const auto& lambda : enumerate_partitions(d + 1))
        if (!(evaluate(k, cached_cumulants(lambda, d).values) == ch(mu, lambda))) {
            v.golden = false;
            v.detail = "K[" + mu.to_string() + "] disagrees with Ch at lambda = " + lambda.to_string();
            break;
        }
    return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Jack characters, Kerov polynomials and Jack-Plancherel statistics", "jackkerov"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jack-cap", cfg.jack_cap, "Largest Jack degree")->check(CLI::PositiveNumber);
    app.add_option("--kerov-cap", cfg.kerov_cap, "Largest |mu| + l(mu) for Kerov polynomials")->check(CLI::PositiveNumber);
    app.add_option("--exact-cap", cfg.exact_cap, "Largest n for exact enumeration")->check(CLI::PositiveNumber);
    app.add_option("--float-cap", cfg.float_cap, "Largest n for floating enumeration")->check(CLI::PositiveNumber);
    app.add_option("--grid-step", cfg.grid_step, "Grid step for sup distances")->check(CLI::Range(1e-9, 0.1));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string lambda_s, rho_s, mu_s, basis_s = "p", kbasis_s = "R", alpha_s = "t", mode_s = "exact", expect_s;
    int order = 6, n = 0, samples = 100;
    bool report = false, all = false;
    std::vector<std::string> verify_mus;

    auto* jack_cmd = app.add_subcommand("jack", "Jack polynomial J_lambda");
    jack_cmd->add_option("lambda", lambda_s, "Partition, e.g. 2,1")->required();
    jack_cmd->add_option("--basis", basis_s, "m, p, h or e")->check(CLI::IsMember({"m", "p", "h", "e"}));

    auto* theta_cmd = app.add_subcommand("theta", "Coefficient of p_rho in J_lambda");
    theta_cmd->add_option("lambda", lambda_s)->required();
    theta_cmd->add_option("rho", rho_s)->required();

    auto* ch_cmd = app.add_subcommand("ch", "Jack character Ch_mu(lambda)");
    ch_cmd->add_option("mu", mu_s)->required();
    ch_cmd->add_option("lambda", lambda_s)->required();

    auto* moments_cmd = app.add_subcommand("moments", "Anisotropic moments and free cumulants");
    moments_cmd->add_option("lambda", lambda_s)->required();
    moments_cmd->add_option("--order", order, "Highest k")->check(CLI::Range(1, 64));

    auto* kerov_cmd = app.add_subcommand("kerov", "Kerov polynomial K_mu (basis R) or L_mu (basis M)");
    kerov_cmd->add_option("mu", mu_s)->required();
    kerov_cmd->add_option("--basis", kbasis_s)->check(CLI::IsMember({"R", "M"}));
    kerov_cmd->add_flag("--report", report, "Also print the degree report");

    auto* verify_cmd = app.add_subcommand("verify", "Degree bounds, top term and out-of-sample identity");
    verify_cmd->add_option("mu", verify_mus);
    verify_cmd->add_flag("--all", all, "Every mu within the Kerov cap");

    auto* pl_cmd = app.add_subcommand("plancherel", "Jack-Plancherel measure");
    pl_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    pl_cmd->add_option("--alpha", alpha_s, "t, p/q or a decimal");
    pl_cmd->add_option("--mode", mode_s)->check(CLI::IsMember({"exact", "sample"}));
    pl_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    pl_cmd->add_option("--expect", expect_s, "Observable KIND:PARTITION with KIND in Ch, theta, M, R");

    auto* ls_cmd = app.add_subcommand("limitshape", "Limit-shape statistics of grown partitions");
    ls_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    ls_cmd->add_option("--alpha", alpha_s);
    ls_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    const std::string& fmt = cfg.format;
    try {
        JackCache::global().set_degree_cap(cfg.jack_cap);
        const KerovOptions kopts{cfg.kerov_cap, 3};
        const EnumerationCaps caps{cfg.exact_cap, cfg.float_cap};

        if (*jack_cmd) {
            const Partition lambda = Partition::parse(lambda_s);
            const auto& j = jack(lambda);
            const Basis b = parse_basis(basis_s);
            write_symfun(out, fmt, "lambda", lambda.to_string(), b == Basis::m ? j.in_m : convert(j.in_p, b));
        } else if (*theta_cmd) {
            const Partition lambda = Partition::parse(lambda_s), rho = Partition::parse(rho_s);
            write_scalar(out, fmt, {{"lambda", lambda.to_string()}, {"rho", rho.to_string()}}, theta(lambda, rho).to_string());
        } else if (*ch_cmd) {
            const Partition mu = Partition::parse(mu_s), lambda = Partition::parse(lambda_s);
            write_scalar(out, fmt, {{"mu", mu.to_string()}, {"lambda", lambda.to_string()}}, ch(mu, lambda).to_string());
        } else if (*moments_cmd) {
            const Partition lambda = Partition::parse(lambda_s);
            const auto mr = anisotropic_MR(lambda, order);
            if (fmt == "csv") {
                out << moments_csv(mr);
            } else if (fmt == "json") {
                Json m = Json::array(), r = Json::array();
                for (int k = 1; k <= order; ++k) {
                    m.push_back(mr.moments[k].to_string());
                    r.push_back(mr.cumulants[k].to_string());
                }
                out << Json{{"lambda", lambda.to_string()}, {"moments", m}, {"cumulants", r}}.dump() << '\n';
            } else {
                for (int k = 1; k <= order; ++k)
                    out << "M" << k << " = " << mr.moments[k].to_string() << "\nR" << k << " = " << mr.cumulants[k].to_string() << '\n';
            }
        } else if (*kerov_cmd) {
            const Partition mu = Partition::parse(mu_s);
            const auto l = compute_L(mu, kopts);
            const auto k = moments_to_cumulants(l);
            const auto degree = verify_degree_bounds(l, k);
            const auto& shown = kbasis_s == "M" ? l : k;
            if (fmt == "json") {
                Json doc = Json::parse(shown.to_json());
                doc["degree_report"] = degree_json(degree_records(shown));
                out << doc.dump() << '\n';
            } else if (fmt == "csv") {
                out << "rho,coefficient\n";
                for (const auto& [key, c] : Json::parse(shown.to_json())["terms"].items())
                    out << '"' << key << "\"," << c.get<std::string>() << '\n';
            } else {
                out << shown.to_string() << '\n';
                if (report) {
                    DegreeReport only{mu, degree_records(shown)};
                    out << only.to_string();
                }
            }
        } else if (*verify_cmd) {
            std::vector<Partition> mus;
            if (all) {
                for (int size = 1; size <= cfg.kerov_cap; ++size)
                    for (auto& mu : enumerate_partitions(size))
                        if (mu.size() + mu.length() <= cfg.kerov_cap) mus.push_back(mu);
            }
            for (const auto& s : verify_mus) mus.push_back(Partition::parse(s));
            if (mus.empty()) throw std::invalid_argument("verify needs a partition or --all");
            bool ok = true;
            Json rows = Json::array();
            if (fmt == "csv") out << "mu,degree_bounds,top_term,out_of_sample\n";
            for (const auto& mu : mus) {
                const auto v = verify_mu(mu, kopts);
                ok = ok && v.degree && v.top && v.golden;
                auto word = [](bool b) { return b ? "ok" : "FAIL"; };
                if (fmt == "json")
                    rows.push_back({{"mu", mu.to_string()}, {"degree_bounds", v.degree}, {"top_term", v.top}, {"out_of_sample", v.golden}});
                else if (fmt == "csv")
                    out << '"' << mu.to_string() << "\"," << word(v.degree) << ',' << word(v.top) << ',' << word(v.golden) << '\n';
                else
                    out << "mu=" << mu.to_string() << " degree-bounds " << word(v.degree) << " top-term " << word(v.top)
                        << " out-of-sample " << word(v.golden) << '\n';
                if (!v.detail.empty()) err << v.detail << '\n';
            }
            if (fmt == "json") out << rows.dump() << '\n';
            return ok ? kOk : kTheorem;
        } else if (*pl_cmd) {
            const Alpha alpha = parse_alpha(alpha_s);
            if (mode_s == "sample") {
                const auto rep = limit_shape_report(std::max(n, 1), alpha_double(alpha), samples, cfg.seed, cfg.threads, cfg.grid_step);
                if (fmt == "json")
                    out << rep.to_json() << '\n';
                else
                    rep.write_csv(out);
            } else if (!expect_s.empty()) {
                if (!std::holds_alternative<Symbolic>(alpha)) throw std::invalid_argument("--expect needs --alpha t");
                const FieldElement e = exact_expectation([&](const Partition& l) { return evaluate_observable(expect_s, l); }, n, caps);
                write_scalar(out, fmt, {{"n", std::to_string(n)}, {"observable", expect_s}}, e.to_string());
            } else if (std::holds_alternative<Symbolic>(alpha)) {
                write_dist<FieldElement>(out, fmt, alpha_s, plancherel_dist_symbolic(n, caps), [](const FieldElement& f) { return f.to_string(); });
            } else if (std::holds_alternative<Rational>(alpha)) {
                write_dist<Rational>(out, fmt, alpha_s, plancherel_dist(n, std::get<Rational>(alpha), caps),
                                     [](const Rational& q) { return to_string(q); });
            } else {
                write_dist<double>(out, fmt, alpha_s, plancherel_dist(n, std::get<double>(alpha), caps), show_double);
            }
        } else if (*ls_cmd) {
            const double a = alpha_double(parse_alpha(alpha_s == "t" ? "1" : alpha_s));
            const auto rep = limit_shape_report(n, a, samples, cfg.seed, cfg.threads, cfg.grid_step);
            if (fmt == "json") {
                out << rep.to_json() << '\n';
            } else if (fmt == "csv") {
                // Profile of the first sample against Omega on the grid.
                const Partition lambda = grow_partition(n, a, substream_seed(cfg.seed, 0));
                const auto prof = profile(stretched_double(lambda, std::sqrt(a / n), 1.0 / std::sqrt(n * a)));
                const auto [lo, hi] = prof.support();
                const double from = std::min(lo, -2.0) - 0.5, to = std::max(hi, 2.0) + 0.5;
                out << "x,profile,omega\n";
                const long steps = std::lround((to - from) / cfg.grid_step);
                for (long i = 0; i <= steps; ++i) {
                    const double x = from + static_cast<double>(i) * cfg.grid_step;
                    out << show_double(x) << ',' << show_double(prof(x)) << ',' << show_double(omega_curve(x)) << '\n';
                }
            } else {
                auto line = [&](const std::string& name, const Summary& s) {
                    out << name << ": mean " << show_double(s.mean) << " median " << show_double(s.median) << " q05 "
                        << show_double(s.q05) << " q95 " << show_double(s.q95) << '\n';
                };
                out << "n=" << n << " alpha=" << show_double(a) << " samples=" << samples << " seed=" << cfg.seed << '\n';
                line("sup_distance", rep.sup_distance);
                for (std::size_t k = 0; k < rep.r.size(); ++k) line("R" + std::to_string(k + 2), rep.r[k]);
                line("rows_scaled", rep.rows_scaled);
                line("cols_scaled", rep.cols_scaled);
            }
        }
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return kTheorem;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace jackkerov
