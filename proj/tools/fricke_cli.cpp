// fricke: zeros, bound certificates, valence audits and spaces of modular
// forms for Gamma_0^*(p), p = 1, 2, 3.
//
// Exit codes: 0 pass, 2 check failure, 3 numerical indeterminacy, 64 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fricke/fricke.hpp"

namespace {

using fricke::Json;

constexpr int kPass = 0;
constexpr int kCheckFailure = 2;
constexpr int kIndeterminate = 3;
constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int level = 2;
    std::optional<int> weight;
    std::optional<std::string> weights;
    double tol = 1e-10;
    long max_norm = 40000;
    int truncation = 50;
    int precision = 15;
    std::optional<std::string> format;
    std::string out;

    std::vector<int> weight_list;

    Json to_json() const {
        return {{"command", command},
                {"level", level},
                {"weights", weight_list},
                {"tol", tol},
                {"max_norm", max_norm},
                {"truncation", truncation},
                {"precision", precision},
                {"format", *format}};
    }

    fricke::LatticeSumConfig lattice() const { return {max_norm, std::max(precision, 15)}; }
};

/// Combined outcome of a run: the worst exit code seen plus messages.
struct Outcome {
    int code = kPass;
    std::vector<std::string> messages;

    void fail(int c, const std::string& msg) {
        // a failed check outranks an indeterminate evaluation
        if (code == kPass || (c == kCheckFailure && code == kIndeterminate)) {
            code = c;
        }
        messages.push_back(msg);
    }
};

std::vector<int> parse_weights(const RunConfig& cfg, int minimum) {
    if (cfg.weight.has_value() == cfg.weights.has_value()) {
        throw UsageError("give exactly one of --weight or --weights a..b");
    }
    std::vector<int> out;
    if (cfg.weight) {
        out.push_back(*cfg.weight);
    } else {
        static const std::regex range(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
        std::smatch m;
        if (!std::regex_match(*cfg.weights, m, range)) {
            throw UsageError("--weights expects a..b, got '" + *cfg.weights + "'");
        }
        const int a = std::stoi(m[1]);
        const int b = std::stoi(m[2]);
        if (a > b || a % 2 != 0 || b % 2 != 0) {
            throw UsageError("--weights needs even a <= b");
        }
        for (int k = a; k <= b; k += 2) {
            out.push_back(k);
        }
    }
    for (int k : out) {
        if (k % 2 != 0) {
            throw UsageError("weight must be even, got " + std::to_string(k));
        }
        if (k < minimum) {
            throw UsageError("weight must be >= " + std::to_string(minimum) + ", got " + std::to_string(k));
        }
    }
    return out;
}

void validate(RunConfig& cfg) {
    if (cfg.tol < 1e-12 || cfg.tol > 1e-4) {
        throw UsageError("--tol must lie in [1e-12, 1e-4]");
    }
    if (cfg.max_norm < 2) {
        throw UsageError("--max-norm must be >= 2");
    }
    if (cfg.truncation < 2) {
        throw UsageError("--truncation must be >= 2");
    }
    if (cfg.precision < 15 || cfg.precision > 50) {
        throw UsageError("--precision must lie in [15, 50]");
    }
    const bool plot = cfg.command == "plot";
    if (!cfg.format) {
        cfg.format = plot ? "csv" : "json";
    }
    if (*cfg.format != "json" && *cfg.format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    if (plot != (*cfg.format == "csv")) {
        throw UsageError(plot ? "plot emits CSV only" : "CSV output is only available for plot");
    }
    if (cfg.command == "spaces" && cfg.level == 1) {
        throw UsageError("spaces covers levels 2 and 3");
    }
    cfg.weight_list = parse_weights(cfg, cfg.command == "spaces" ? 0 : 4);
    if (plot && cfg.weight_list.size() != 1) {
        throw UsageError("plot takes a single --weight");
    }
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json document(const RunConfig& cfg, Json results, Json certificates, const Outcome& outcome) {
    Json messages = Json::array();
    for (const auto& m : outcome.messages) {
        messages.push_back(m);
    }
    return {{"config", cfg.to_json()},
            {"results", std::move(results)},
            {"certificates", std::move(certificates)},
            {"verdict", {{"pass", outcome.code == kPass}, {"exit_code", outcome.code}, {"messages", messages}}}};
}

// ---------------------------------------------------------------------------

template <typename Real>
Json zeros_for(const RunConfig& cfg, int k, Outcome& outcome) {
    const fricke::Weight w(k);
    const fricke::Level p(cfg.level);
    Json entry = {{"k", k}, {"m_expected", fricke::m_count(w, p)}};
    const auto [s, t] = fricke::expected_elliptic_orders(w, p);
    entry["expected_orders"] = {{"i", s}, {"rho", t}};
    try {
        const fricke::FrickeEvaluator<Real> ev(w, p, cfg.lattice(), cfg.truncation);
        entry["arc_path"] = fricke::to_string(ev.arc_path());
        const auto zeros = fricke::locate_zeros(ev, fricke::LocateOptions{cfg.tol, false});
        entry["zeros"] = fricke::to_json(zeros);
        const int vi = fricke::order_at_point(ev, fricke::HalfPlanePoint<Real>(fricke::elliptic_point_i<Real>(p)));
        const int vr = fricke::order_at_point(ev, fricke::HalfPlanePoint<Real>(fricke::elliptic_point_rho<Real>(p)));
        entry["orders"] = {{"i", vi}, {"rho", vr}};
        const bool ok = vi == s && vr == t;
        entry["pass"] = ok;
        if (!ok) {
            outcome.fail(kCheckFailure, "k=" + std::to_string(k) + ": elliptic orders (" + std::to_string(vi) + ", " +
                                            std::to_string(vr) + ") differ from congruences (" + std::to_string(s) +
                                            ", " + std::to_string(t) + ")");
        }
    } catch (const fricke::CheckFailure& e) {
        entry["pass"] = false;
        entry["error"] = e.what();
        outcome.fail(kCheckFailure, std::string("zero-count: ") + e.what());
    } catch (const fricke::NumericalError& e) {
        entry["pass"] = false;
        entry["error"] = e.what();
        outcome.fail(kIndeterminate, std::string(fricke::to_string(e.kind())) + ": " + e.what());
    }
    return entry;
}

template <typename Real>
Json cmd_zeros(const RunConfig& cfg, Outcome& outcome) {
    Json results = Json::array();
    for (int k : cfg.weight_list) {
        results.push_back(zeros_for<Real>(cfg, k, outcome));
    }
    return document(cfg, results, Json::array(), outcome);
}

template <typename Real>
Json cmd_bounds(const RunConfig& cfg, Outcome& outcome) {
    std::vector<fricke::BoundCertificate> certs;
    const fricke::Level p(cfg.level);
    for (int k : cfg.weight_list) {
        try {
            for (auto& c : fricke::certificates_for<Real>(k, p, cfg.lattice())) {
                certs.push_back(std::move(c));
            }
        } catch (const fricke::NumericalError& e) {
            outcome.fail(kIndeterminate, "k=" + std::to_string(k) + ": " + fricke::to_string(e.kind()) + ": " + e.what());
        }
    }
    if (p.value() == 1 && cfg.weight_list.back() >= 8) {
        certs.push_back(fricke::r1_lt_2_for_k_ge_8());
    }
    fricke::sort_certificates(certs);
    int informational = 0;
    for (const auto& c : certs) {
        informational += c.informational ? 1 : 0;
        if (!c.pass && !c.informational) {
            outcome.fail(kCheckFailure, "failed certificate " + c.name + " at k=" + std::to_string(c.k) +
                                            ": lhs " + fmt17(c.lhs_max) + " " + fricke::to_string(c.relation) +
                                            " rhs " + fmt17(c.rhs));
        }
    }
    const Json results = {{"count", certs.size()}, {"informational", informational}};
    return document(cfg, results, fricke::to_json(certs), outcome);
}

template <typename Real>
Json cmd_valence(const RunConfig& cfg, Outcome& outcome) {
    Json results = Json::array();
    for (int k : cfg.weight_list) {
        try {
            const auto r =
                fricke::valence_audit<Real>(fricke::Weight(k), fricke::Level(cfg.level), cfg.tol, cfg.lattice(), cfg.truncation);
            results.push_back(fricke::to_json(r));
            if (!r.pass()) {
                std::string failed;
                for (const auto& c : r.checks) {
                    if (!c.pass) {
                        failed += " " + c.name;
                    }
                }
                outcome.fail(kCheckFailure, "k=" + std::to_string(k) + ": residual " + fricke::to_string(r.residual()) +
                                                (failed.empty() ? "" : ", failed:" + failed));
            }
        } catch (const fricke::CheckFailure& e) {
            results.push_back({{"k", k}, {"error", e.what()}});
            outcome.fail(kCheckFailure, e.what());
        } catch (const fricke::NumericalError& e) {
            results.push_back({{"k", k}, {"error", e.what()}});
            outcome.fail(kIndeterminate, std::string(fricke::to_string(e.kind())) + ": " + e.what());
        }
    }
    return document(cfg, results, Json::array(), outcome);
}

Json cmd_spaces(const RunConfig& cfg, Outcome& outcome) {
    const fricke::Level p(cfg.level);
    Json results = Json::array();
    std::vector<fricke::BoundCertificate> certs;
    for (int k : cfg.weight_list) {
        try {
            const auto space = fricke::build_basis(k, p, cfg.truncation);
            results.push_back(fricke::to_json(space));
            if (k >= 4) {
                certs.push_back(fricke::min_order_bound_check(fricke::Weight(k), p, cfg.truncation, cfg.lattice()));
            }
        } catch (const fricke::CheckFailure& e) {
            results.push_back({{"k", k}, {"error", e.what()}});
            outcome.fail(kCheckFailure, e.what());
        } catch (const fricke::NumericalError& e) {
            results.push_back({{"k", k}, {"error", e.what()}});
            outcome.fail(kIndeterminate, std::string(fricke::to_string(e.kind())) + ": " + e.what());
        }
    }
    if (p.value() == 3) {
        try {
            for (auto& c : fricke::verify_appendix_table(cfg.truncation, cfg.lattice())) {
                certs.push_back(std::move(c));
            }
        } catch (const fricke::NumericalError& e) {
            outcome.fail(kIndeterminate, std::string("appendix table: ") + e.what());
        }
    }
    fricke::sort_certificates(certs);
    for (const auto& c : certs) {
        if (!c.pass && !c.informational) {
            outcome.fail(kCheckFailure, "failed " + c.name + " at k=" + std::to_string(c.k) + ": " + c.detail);
        }
    }
    return document(cfg, results, fricke::to_json(certs), outcome);
}

template <typename Real>
std::string cmd_plot(const RunConfig& cfg, Outcome& outcome) {
    const fricke::Weight w(cfg.weight_list.front());
    const fricke::Level p(cfg.level);
    const fricke::FrickeEvaluator<Real> ev(w, p, cfg.lattice(), cfg.truncation);
    const Real lo = fricke::pi<Real>() / 2;
    const Real hi = fricke::arc_theta_max<Real>(p);
    constexpr int points = 2000;
    std::ostringstream os;
    os << "theta,f_value\n";
    for (int j = 0; j < points; ++j) {
        const Real theta = j == points - 1 ? hi : lo + (hi - lo) * Real(j) / Real(points - 1);
        const auto v = ev.restricted(theta);
        if (!(fricke::to_double(v.error) < 1e-6)) {
            throw fricke::NumericalError(fricke::NumericalError::Kind::tail_bound_exceeded,
                                         "evaluation error " + fmt17(fricke::to_double(v.error)) + " at theta = " +
                                             fmt17(fricke::to_double(theta)));
        }
        os << fmt17(fricke::to_double(theta)) << "," << fmt17(fricke::to_double(v.value)) << "\n";
    }
    os << "\nzero_index,theta,theta_lo,theta_hi\n";
    try {
        const auto zeros = fricke::locate_zeros(ev, fricke::LocateOptions{cfg.tol, false});
        for (std::size_t i = 0; i < zeros.size(); ++i) {
            os << i + 1 << "," << fmt17(fricke::to_double(zeros[i].theta)) << ","
               << fmt17(fricke::to_double(zeros[i].theta_lo)) << "," << fmt17(fricke::to_double(zeros[i].theta_hi))
               << "\n";
        }
    } catch (const fricke::CheckFailure& e) {
        outcome.fail(kCheckFailure, std::string("zero-count: ") + e.what());
    }
    return os.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + cfg.out);
    }
    f << text;
}

int run(RunConfig& cfg) {
    validate(cfg);
    Outcome outcome;
    std::string text;
    if (cfg.command == "spaces") {
        text = cmd_spaces(cfg, outcome).dump(2) + "\n";
    } else {
        text = fricke::with_precision(cfg.precision, [&](auto real) -> std::string {
            using Real = decltype(real);
            if (cfg.command == "zeros") return cmd_zeros<Real>(cfg, outcome).dump(2) + "\n";
            if (cfg.command == "bounds") return cmd_bounds<Real>(cfg, outcome).dump(2) + "\n";
            if (cfg.command == "valence") return cmd_valence<Real>(cfg, outcome).dump(2) + "\n";
            return cmd_plot<Real>(cfg, outcome);
        });
    }
    emit(cfg, text);
    for (const auto& m : outcome.messages) {
        std::cerr << m << "\n";
    }
    return outcome.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeros of Eisenstein series for the Fricke groups Gamma_0^*(2), Gamma_0^*(3)"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--level", cfg.level, "group level p (1, 2 or 3)")->check(CLI::Range(1, 3));
        sub->add_option("--weight", cfg.weight, "a single even weight k");
        sub->add_option("--weights", cfg.weights, "inclusive weight range a..b, step 2");
        sub->add_option("--tol", cfg.tol, "bisection tolerance in radians, [1e-12, 1e-4]");
        sub->add_option("--max-norm", cfg.max_norm, "lattice truncation c^2 + d^2 <= max-norm");
        sub->add_option("--truncation", cfg.truncation, "q-series truncation N");
        sub->add_option("--precision", cfg.precision, "working decimal digits: 15 double, 16-18 long double, 19-50 multiprecision");
        sub->add_option("--format", cfg.format, "json or csv (csv for plot only)");
        sub->add_option("--out", cfg.out, "output file (default standard output)");
        sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
    };
    add_common(app.add_subcommand("zeros", "locate arc zeros and elliptic orders"));
    add_common(app.add_subcommand("bounds", "run the bound certificate suite"));
    add_common(app.add_subcommand("valence", "exact valence-formula audit"));
    add_common(app.add_subcommand("spaces", "dimensions, bases and the order table"));
    add_common(app.add_subcommand("plot", "CSV samples of F*(theta) over the arc"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const fricke::CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailure;
    } catch (const fricke::NumericalError& e) {
        std::cerr << fricke::to_string(e.kind()) << ": " << e.what() << "\n";
        return kIndeterminate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
