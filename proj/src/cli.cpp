#include "vrsmooth/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "vrsmooth/bandwidth.hpp"
#include "vrsmooth/csv.hpp"
#include "vrsmooth/functionals.hpp"
#include "vrsmooth/inference.hpp"
#include "vrsmooth/vr_estimator.hpp"

#ifndef VRSMOOTH_VERSION
#define VRSMOOTH_VERSION "dev"
#endif

namespace vrsmooth::cli {
namespace {

using nlohmann::json;
using csv::format_double;

/// Usage or configuration problem: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// Primary output goes to --out when given (plus a sidecar manifest carrying the
// timestamp), otherwise to stdout. The primary bytes never contain the time.
class Output {
public:
    Output(std::ostream& fallback, std::string path) : fallback_(fallback), path_(std::move(path)) {}

    std::ostream& stream() {
        if (path_.empty()) return fallback_;
        if (!file_.is_open()) {
            file_.open(path_, std::ios::binary);
            if (!file_) throw UsageError("cannot open output file '" + path_ + "'");
        }
        return file_;
    }

    void write_manifest(const std::string& command, json config, std::optional<std::uint64_t> seed) {
        if (path_.empty()) return;
        json m;
        m["command"] = command;
        m["config"] = std::move(config);
        m["seed"] = seed ? json(*seed) : json(nullptr);
        m["version"] = VRSMOOTH_VERSION;
        m["timestamp"] = utc_timestamp();
        m["outputs"] = outputs_.empty() ? json::array({path_}) : json(outputs_);
        std::ofstream f(path_ + ".manifest.json", std::ios::binary);
        f << m.dump(2) << '\n';
    }

    void add_output(std::string p) { outputs_.push_back(std::move(p)); }

private:
    std::ostream& fallback_;
    std::string path_;
    std::ofstream file_;
    std::vector<std::string> outputs_;
};

std::vector<double> default_delta_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 60; ++i) g.push_back(i / 10.0);
    return g;
}

// ---------------------------------------------------------------- functionals

struct FunctionalsArgs {
    std::string kernel = "epanechnikov";
    std::vector<double> deltas;
    double r = kOptimalShift;
    std::string out;
};

int cmd_functionals(const FunctionalsArgs& a, std::ostream& stdout_) {
    const Kernel k = Kernel::from_name(a.kernel);
    const auto deltas = a.deltas.empty() ? default_delta_grid() : a.deltas;
    for (double d : deltas)
        if (!(d >= 0.0)) throw UsageError("--delta values must be nonnegative");
    if (!(std::abs(a.r) < 1.0)) throw UsageError("--r must satisfy |r| < 1");

    Output out(stdout_, a.out);
    auto& os = out.stream();
    os << "delta,C,D,nu_tilde02,gamma_q,gamma_a\n";
    for (double d : deltas) {
        os << format_double(d) << ',' << format_double(c_delta(k, d)) << ',' << format_double(d_delta(k, d)) << ','
           << format_double(nu_tilde(k, 2, a.r, d)) << ',' << format_double(gamma_q(k, d)) << ','
           << format_double(gamma_a(k, d)) << '\n';
    }
    out.write_manifest("functionals", {{"kernel", k.name()}, {"deltas", deltas}, {"r", a.r}}, std::nullopt);
    return kOk;
}

// ------------------------------------------------------------- coverage-table

struct CoverageArgs {
    std::vector<std::string> kernels;
    std::vector<double> betas;
    std::vector<double> deltas;
    double r = kOptimalShift;
    std::string out;
};

int cmd_coverage_table(const CoverageArgs& a, std::ostream& stdout_) {
    const auto kernels =
        a.kernels.empty() ? std::vector<std::string>{"uniform", "epanechnikov", "normal"} : a.kernels;
    const auto betas = a.betas.empty() ? std::vector<double>{0.95, 0.9, 0.85, 0.8} : a.betas;
    const auto deltas = a.deltas.empty() ? std::vector<double>{0.6, 0.8, 1.0, 1.2, 1.6, 2.0} : a.deltas;
    for (double b : betas)
        if (!(b > 0.0 && b < 1.0)) throw UsageError("--beta values must lie in (0, 1)");
    for (double d : deltas)
        if (!(d >= 0.0)) throw UsageError("--delta values must be nonnegative");
    if (!(std::abs(a.r) < 1.0)) throw UsageError("--r must satisfy |r| < 1");
    std::vector<Kernel> ks;
    for (const auto& name : kernels) ks.push_back(Kernel::from_name(name));

    Output out(stdout_, a.out);
    auto& os = out.stream();
    os << "kernel,beta";
    for (double d : deltas) os << ",delta=" << format_double(d);
    os << '\n';
    for (const auto& k : ks) {
        for (double b : betas) {
            os << k.name() << ',' << format_double(b);
            for (double d : deltas) os << ',' << format_double(d == 0.0 ? 1.0 : coverage_ratio(k, d, a.r, b));
            os << '\n';
        }
    }
    out.write_manifest("coverage-table", {{"kernels", kernels}, {"betas", betas}, {"deltas", deltas}, {"r", a.r}},
                       std::nullopt);
    return kOk;
}

// ------------------------------------------------------------------------ fit

struct FitArgs {
    std::string data;
    std::string kernel = "epanechnikov";
    std::optional<double> h;
    std::vector<double> h_oracle;  // m2, f, sigma2
    std::string variant = "avg";
    double delta = 1.0;
    double r = kOptimalShift;
    std::size_t grid_size = 401;
    std::optional<double> beta;
    bool ridge = false;
    std::string out;
};

int cmd_fit(const FitArgs& a, std::ostream& stdout_, std::ostream& err) {
    std::ifstream in(a.data);
    if (!in) throw UsageError("cannot open data file '" + a.data + "'");
    Dataset data = [&] {
        try {
            return csv::read_xy(in);
        } catch (const std::invalid_argument& e) {
            throw UsageError(a.data + ": " + e.what());
        }
    }();

    const Kernel k = Kernel::from_name(a.kernel);
    CombinerSpec spec;
    try {
        switch (variant_from_string(a.variant)) {
            case Variant::LocalLinear: spec = CombinerSpec::local_linear(); break;
            case Variant::Q: spec = CombinerSpec::q(a.r, a.delta); break;
            case Variant::Plus: spec = CombinerSpec::plus(a.delta); break;
            case Variant::Minus: spec = CombinerSpec::minus(a.delta); break;
            case Variant::Average: spec = CombinerSpec::average(a.delta); break;
        }
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (!(a.delta >= 0.0)) throw UsageError("--delta must be nonnegative");
    if (a.grid_size < 1) throw UsageError("--grid-size must be positive");
    if (a.beta && !(*a.beta > 0.0 && *a.beta < 1.0)) throw UsageError("--beta must lie in (0, 1)");

    double h = 0.0;
    if (a.h && !a.h_oracle.empty()) throw UsageError("give either --h or --h-oracle, not both");
    if (a.h) {
        h = *a.h;
    } else if (a.h_oracle.size() == 3) {
        const LocalOracle o{a.h_oracle[0], a.h_oracle[1], a.h_oracle[2], static_cast<double>(data.size())};
        try {
            h = adjust_h(h0_local(o, k), k, spec);
        } catch (const std::domain_error& e) {
            throw UsageError(std::string("--h-oracle: ") + e.what());
        }
    } else {
        throw UsageError("a bandwidth is required: --h <value> or --h-oracle m2,f,sigma2");
    }
    if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("bandwidth must be positive");

    const SmootherConfig cfg{k, h, a.ridge};
    const auto grid = unit_grid(a.grid_size);
    const auto fit = fit_curve(data, cfg, spec, grid);

    Output out(stdout_, a.out);
    auto& os = out.stream();
    os << "x,estimate,effective_delta";
    if (a.beta) os << ",lower_cb";
    os << '\n';
    std::size_t failures = 0;
    for (const auto& p : fit) {
        os << format_double(p.x) << ',';
        if (p.estimate) {
            os << format_double(p.estimate->value) << ',' << format_double(p.estimate->effective_delta);
        } else {
            ++failures;
            os << "NA,NA";
        }
        if (a.beta) {
            os << ',';
            if (p.estimate) {
                try {
                    os << format_double(interval(data, cfg, p.x, *a.beta, spec).lower);
                } catch (const std::exception&) {
                    ++failures;
                    os << "NA";
                }
            } else {
                os << "NA";
            }
        }
        os << '\n';
    }
    if (failures > 0) err << "warning: " << failures << " grid point(s) could not be estimated (NA)\n";
    json cfg_json = {{"data", a.data},           {"kernel", k.name()},         {"h", h},
                     {"variant", a.variant},      {"delta", a.delta},           {"r", spec.shift()},
                     {"grid_size", a.grid_size},  {"ridge", a.ridge},           {"beta", a.beta ? json(*a.beta) : json()}};
    out.write_manifest("fit", std::move(cfg_json), std::nullopt);
    return kOk;
}

// ------------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::string out;
};

std::string rows_csv(const std::vector<SimReport>& reports) {
    std::ostringstream os;
    os << "n,estimator,h,mise,isb,iv,mise_se,replications_used,replications_dropped,failed_points\n";
    for (const auto& rep : reports)
        for (const auto& r : rep.rows)
            os << rep.config.n << ',' << r.estimator << ',' << format_double(r.h) << ',' << format_double(r.mise)
               << ',' << format_double(r.isb) << ',' << format_double(r.iv) << ',' << format_double(r.mise_se)
               << ',' << r.replications_used << ',' << r.replications_dropped << ',' << r.failed_points << '\n';
    return os.str();
}

int cmd_simulate(const SimulateArgs& a, std::ostream& stdout_, std::ostream& err) {
    std::ifstream in(a.config);
    if (!in) throw UsageError("cannot open config file '" + a.config + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(a.config + ": " + e.what());
    }
    StudyConfig study;
    try {
        study = parse_study_config(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (const char* env = std::getenv("VRSMOOTH_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            study.base.seed = std::stoull(env, &used);
            if (env[used] != '\0') throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw UsageError("VRSMOOTH_SEED must be an unsigned integer");
        }
    }
    if (a.seed) study.base.seed = *a.seed;
    if (a.threads) study.base.threads = *a.threads;

    std::vector<SimReport> reports;
    for (std::size_t n : study.ns) {
        SimConfig cfg = study.base;
        cfg.n = n;
        reports.push_back(run_study(cfg));
        for (const auto& line : reports.back().log) err << "n=" << n << ": " << line << '\n';
    }

    json doc;
    doc["config"] = to_json(study.base);
    doc["config"]["n"] = study.ns;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r));
    if (!study.base.baseline.empty()) {
        json eff = json::array();
        for (const auto& row : efficiency_table(reports)) {
            eff.push_back({{"regression", to_string(row.regression)},
                           {"design", to_string(row.design)},
                           {"noise_k", row.noise_k},
                           {"n", row.n},
                           {"estimator", row.estimator},
                           {"variant", to_string(row.variant)},
                           {"delta", row.delta},
                           {"efficiency", row.efficiency}});
        }
        doc["efficiency"] = eff;
    }
    const std::string report_text = doc.dump(2) + "\n";
    const std::string csv_text = rows_csv(reports);

    if (a.out.empty()) {
        stdout_ << report_text;
        return kOk;
    }
    const std::string csv_path = a.out + ".csv";
    const std::string json_path = a.out + ".json";
    {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file '" + csv_path + "'");
        f << csv_text;
    }
    {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw UsageError("cannot open output file '" + json_path + "'");
        f << report_text;
    }
    Output manifest(stdout_, a.out);
    manifest.add_output(csv_path);
    manifest.add_output(json_path);
    manifest.write_manifest("simulate", doc["config"], study.base.seed);
    return kOk;
}

// ------------------------------------------------------------ config parsing

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed,
                const std::set<std::string>& required, std::vector<std::string>& problems) {
    if (!obj.is_object()) {
        problems.push_back(where + ": expected an object");
        return;
    }
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) problems.push_back(where + "." + key + ": unknown key");
    for (const auto& key : required)
        if (!obj.contains(key)) problems.push_back(where + "." + key + ": missing required key");
}

template <class T>
std::optional<T> get_as(const json& obj, const std::string& key, const std::string& where,
                        std::vector<std::string>& problems) {
    if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
    try {
        const auto& v = obj.at(key);
        if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) throw std::invalid_argument("expected a string");
        } else if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) throw std::invalid_argument("expected a boolean");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) throw std::invalid_argument("expected a number");
        } else {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                throw std::invalid_argument("expected a nonnegative integer");
        }
        return v.get<T>();
    } catch (const std::exception& e) {
        problems.push_back(where + "." + key + ": " + e.what());
        return std::nullopt;
    }
}

}  // namespace

StudyConfig parse_study_config(const json& j) {
    std::vector<std::string> problems;
    check_keys(j, "config",
               {"scenario", "n", "replications", "seed", "kernel", "bandwidths", "grid_size", "estimators",
                "baseline", "threads", "max_failed_fraction"},
               {"scenario", "n", "estimators"}, problems);
    StudyConfig out;
    SimConfig& c = out.base;
    c.bandwidths = geometric_bandwidths();

    if (j.is_object() && j.contains("scenario")) {
        const auto& s = j["scenario"];
        check_keys(s, "config.scenario", {"regression", "design", "noise_k"}, {"regression"}, problems);
        if (auto v = get_as<std::string>(s, "regression", "config.scenario", problems)) {
            try {
                c.scenario.regression = regression_from_string(*v);
            } catch (const std::exception& e) {
                problems.push_back(std::string("config.scenario.regression: ") + e.what());
            }
        }
        if (auto v = get_as<std::string>(s, "design", "config.scenario", problems)) {
            try {
                c.scenario.design = design_from_string(*v);
            } catch (const std::exception& e) {
                problems.push_back(std::string("config.scenario.design: ") + e.what());
            }
        }
        if (auto v = get_as<double>(s, "noise_k", "config.scenario", problems)) c.scenario.noise_k = *v;
    }

    if (j.is_object() && j.contains("n")) {
        const auto& n = j["n"];
        auto take = [&](const json& v) {
            if (v.is_number_integer() && v.get<long long>() >= 2)
                out.ns.push_back(v.get<std::size_t>());
            else
                problems.push_back("config.n: sample sizes must be integers >= 2");
        };
        if (n.is_array()) {
            if (n.empty()) problems.push_back("config.n: empty list");
            for (const auto& v : n) take(v);
        } else {
            take(n);
        }
    }
    if (auto v = get_as<std::size_t>(j, "replications", "config", problems)) c.replications = *v;
    if (auto v = get_as<std::uint64_t>(j, "seed", "config", problems)) c.seed = *v;
    if (auto v = get_as<std::string>(j, "kernel", "config", problems)) {
        try {
            c.kernel = Kernel::from_name(*v);
        } catch (const std::exception& e) {
            problems.push_back(std::string("config.kernel: ") + e.what());
        }
    }
    if (auto v = get_as<std::size_t>(j, "grid_size", "config", problems)) c.grid_size = *v;
    if (auto v = get_as<std::string>(j, "baseline", "config", problems)) c.baseline = *v;
    if (auto v = get_as<std::size_t>(j, "threads", "config", problems)) c.threads = static_cast<unsigned>(*v);
    if (auto v = get_as<double>(j, "max_failed_fraction", "config", problems)) c.max_failed_fraction = *v;

    if (j.is_object() && j.contains("bandwidths")) {
        const auto& b = j["bandwidths"];
        if (b.is_array()) {
            c.bandwidths.clear();
            for (const auto& v : b) {
                if (v.is_number())
                    c.bandwidths.push_back(v.get<double>());
                else
                    problems.push_back("config.bandwidths: entries must be numbers");
            }
        } else if (b.is_object()) {
            check_keys(b, "config.bandwidths", {"start", "ratio", "count"}, {}, problems);
            double start = 0.008, ratio = 1.1;
            std::size_t count = 41;
            if (auto v = get_as<double>(b, "start", "config.bandwidths", problems)) start = *v;
            if (auto v = get_as<double>(b, "ratio", "config.bandwidths", problems)) ratio = *v;
            if (auto v = get_as<std::size_t>(b, "count", "config.bandwidths", problems)) count = *v;
            c.bandwidths = geometric_bandwidths(start, ratio, count);
        } else {
            problems.push_back("config.bandwidths: expected a list or {start, ratio, count}");
        }
    }

    if (j.is_object() && j.contains("estimators")) {
        const auto& es = j["estimators"];
        if (!es.is_array()) problems.push_back("config.estimators: expected a list");
        std::size_t idx = 0;
        for (const auto& e : es.is_array() ? es : json::array()) {
            const std::string where = "config.estimators[" + std::to_string(idx++) + "]";
            check_keys(e, where, {"name", "variant", "delta", "r", "ridge"}, {"variant"}, problems);
            EstimatorEntry entry;
            double delta = 1.0;
            double r = kOptimalShift;
            if (auto v = get_as<double>(e, "delta", where, problems)) delta = *v;
            if (auto v = get_as<double>(e, "r", where, problems)) r = *v;
            if (auto v = get_as<bool>(e, "ridge", where, problems)) entry.ridge = *v;
            if (auto v = get_as<std::string>(e, "variant", where, problems)) {
                try {
                    switch (variant_from_string(*v)) {
                        case Variant::LocalLinear: entry.spec = CombinerSpec::local_linear(); break;
                        case Variant::Q: entry.spec = CombinerSpec::q(r, delta); break;
                        case Variant::Plus: entry.spec = CombinerSpec::plus(delta); break;
                        case Variant::Minus: entry.spec = CombinerSpec::minus(delta); break;
                        case Variant::Average: entry.spec = CombinerSpec::average(delta); break;
                    }
                } catch (const std::exception& ex) {
                    problems.push_back(where + ".variant: " + ex.what());
                }
            }
            if (auto v = get_as<std::string>(e, "name", where, problems)) {
                entry.name = *v;
            } else {
                std::ostringstream os;
                os << to_string(entry.spec.variant);
                if (entry.spec.variant != Variant::LocalLinear) os << "_d" << format_double(entry.spec.delta);
                entry.name = os.str();
            }
            c.estimators.push_back(std::move(entry));
        }
    }

    if (problems.empty() && !out.ns.empty()) {
        SimConfig probe = c;
        probe.n = out.ns.front();
        try {
            validate(probe);
        } catch (const std::invalid_argument& e) {
            problems.push_back(e.what());
        }
    }
    if (!problems.empty()) {
        std::ostringstream os;
        os << "config errors:";
        for (const auto& p : problems) os << "\n  " << p;
        throw std::invalid_argument(os.str());
    }
    return out;
}

json to_json(const SimConfig& c) {
    json est = json::array();
    for (const auto& e : c.estimators)
        est.push_back({{"name", e.name},
                       {"variant", to_string(e.spec.variant)},
                       {"delta", e.spec.delta},
                       {"r", e.spec.shift()},
                       {"ridge", e.ridge}});
    return {{"scenario",
             {{"regression", to_string(c.scenario.regression)},
              {"design", to_string(c.scenario.design)},
              {"noise_k", c.scenario.noise_k},
              {"sigma", c.scenario.sigma()}}},
            {"n", c.n},
            {"replications", c.replications},
            {"seed", c.seed},
            {"kernel", c.kernel.name()},
            {"bandwidths", c.bandwidths},
            {"grid_size", c.grid_size},
            {"estimators", est},
            {"baseline", c.baseline},
            {"max_failed_fraction", c.max_failed_fraction}};
}

json to_json(const SimReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"estimator", row.estimator},
                        {"h", row.h},
                        {"mise", row.mise},
                        {"isb", row.isb},
                        {"iv", row.iv},
                        {"mise_se", row.mise_se},
                        {"replications_used", row.replications_used},
                        {"replications_dropped", row.replications_dropped},
                        {"failed_points", row.failed_points}});
    json sums = json::array();
    for (const auto& s : r.summaries)
        sums.push_back({{"estimator", s.estimator},
                        {"min_mise", s.min_mise},
                        {"argmin_h", s.argmin_h},
                        {"efficiency", s.efficiency}});
    return {{"n", r.config.n}, {"rows", rows}, {"summaries", sums}, {"log", r.log}};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variance-reduced local linear smoothing toolkit", "vrsmooth"};
    app.require_subcommand(1);
    app.set_version_flag("--version", VRSMOOTH_VERSION);

    FunctionalsArgs fa;
    auto* functionals = app.add_subcommand("functionals", "Kernel functionals and efficiencies over a delta grid");
    functionals->add_option("--kernel", fa.kernel, "uniform | epanechnikov | normal")->capture_default_str();
    functionals->add_option("--delta", fa.deltas, "Bin widths (default 0, 0.1, ..., 6)")->delimiter(',');
    functionals->add_option("--r", fa.r, "Shift used for nu_tilde02")->capture_default_str();
    functionals->add_option("--out", fa.out, "Output CSV path (default stdout)");

    CoverageArgs ca;
    auto* coverage = app.add_subcommand("coverage-table", "Coverage accuracy ratios per kernel, beta and delta");
    coverage->add_option("--kernel", ca.kernels, "Kernels (default all three)")->delimiter(',');
    coverage->add_option("--beta", ca.betas, "Confidence levels")->delimiter(',');
    coverage->add_option("--delta", ca.deltas, "Bin widths")->delimiter(',');
    coverage->add_option("--r", ca.r, "Shift parameter")->capture_default_str();
    coverage->add_option("--out", ca.out, "Output CSV path (default stdout)");

    FitArgs ta;
    auto* fit = app.add_subcommand("fit", "Fit a curve to two-column x,y data");
    fit->set_help_flag("--help", "Print this help message and exit");
    fit->add_option("data", ta.data, "Headerless CSV with x in [0, 1]")->required();
    fit->add_option("--kernel", ta.kernel)->capture_default_str();
    fit->add_option("--h", ta.h, "Bandwidth");
    fit->add_option("--h-oracle", ta.h_oracle, "m2,f,sigma2: oracle AMSE bandwidth adjusted for the variant")
        ->delimiter(',')
        ->expected(3);
    fit->add_option("--variant", ta.variant, "ll | q | plus | minus | avg")->capture_default_str();
    fit->add_option("--delta", ta.delta)->capture_default_str();
    fit->add_option("--r", ta.r, "Shift for --variant q")->capture_default_str();
    fit->add_option("--grid-size", ta.grid_size)->capture_default_str();
    fit->add_option("--beta", ta.beta, "Add a one-sided lower confidence bound at this level");
    fit->add_flag("--ridge", ta.ridge, "Stabilise the denominator with n^-2");
    fit->add_option("--out", ta.out, "Output CSV path (default stdout)");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo MISE study from a JSON config");
    simulate->add_option("config", sa.config, "JSON config file")->required();
    simulate->add_option("--seed", sa.seed, "Overrides the config seed and VRSMOOTH_SEED");
    simulate->add_option("--threads", sa.threads, "Worker threads (default: all cores)");
    simulate->add_option("--out", sa.out, "Output prefix: writes <prefix>.csv, <prefix>.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*functionals) return cmd_functionals(fa, out);
        if (*coverage) return cmd_coverage_table(ca, out);
        if (*fit) return cmd_fit(ta, out, err);
        if (*simulate) return cmd_simulate(sa, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}

}  // namespace vrsmooth::cli
