#include "polyhodge/analytic/monodromy.hpp"
#include "polyhodge/analytic/path.hpp"
#include "polyhodge/analytic/polylog.hpp"
#include "polyhodge/analytic/transport.hpp"
#include "polyhodge/combinat/arnold.hpp"
#include "polyhodge/combinat/paving.hpp"
#include "polyhodge/combinat/poset_homology.hpp"
#include "polyhodge/combinat/postnikov.hpp"
#include "polyhodge/derham/forms.hpp"
#include "polyhodge/derham/quadrature.hpp"
#include "polyhodge/errors.hpp"
#include "polyhodge/exact/polynomial.hpp"
#include "polyhodge/hodge/filtration.hpp"
#include "polyhodge/hodge/flatness.hpp"
#include "polyhodge/hodge/kummer.hpp"
#include "polyhodge/report/path_json.hpp"
#include "polyhodge/report/report.hpp"
#include "polyhodge/report/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <string>

namespace {

using namespace polyhodge;
using analytic::Complex;
using report::Json;
using report::RunReport;

constexpr int kExitSuiteFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Flags {
    int n = -1;
    std::optional<int> k;
    std::string z;
    double tol = 1e-12;
    unsigned precision = kDefaultPrecisionBits;
    std::string loop = "loop0";
    long long samples = 100000;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::optional<long long> max_den;
    bool timing = false;
    bool full = false;
};

// Validated inputs shared by the command bodies.
struct Inputs {
    Flags flags;
    std::optional<Complex> z;
    std::optional<analytic::PathSpec> path;
};

bool is_decimal(const std::string& s) {
    static const std::regex pattern(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    return std::regex_match(s, pattern);
}

Complex parse_z(const std::string& text) {
    const auto comma = text.find(',');
    const std::string re = text.substr(0, comma);
    const std::string im = comma == std::string::npos ? "0" : text.substr(comma + 1);
    if (!is_decimal(re) || !is_decimal(im)) throw UsageError("--z must be \"re\" or \"re,im\" with decimal parts");
    Complex z{Real(re), Real(im)};
    if (!z.is_finite()) throw UsageError("--z is not finite");
    return z;
}

Real real_part_in_unit_interval(const Inputs& in) {
    const Complex& z = *in.z;
    if (z.imag() != 0 || !(z.real() > 0 && z.real() < 1)) throw DomainError("z must be real with 0 < z < 1");
    return z.real();
}

void require_range(const char* name, int value, int lo, int hi) {
    if (value < lo || value > hi)
        throw DomainError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + std::to_string(value));
}

struct CommandSpec {
    std::string name;
    std::string help;
    bool uses_n = false;
    int n_min = 0, n_max = 0;
    bool uses_k = false, k_required = false;
    bool uses_z = false, z_required = false;
    std::string z_default;
    bool uses_tol = false;
    bool uses_loop = false;
    bool uses_max_den = false;
    bool uses_samples = false;
    bool uses_seed = false;
    std::function<void(const Inputs&, RunReport&)> run;
};

Json z_param(const Inputs& in) { return report::encode(*in.z); }

void cmd_li(const Inputs& in, RunReport& r) {
    r.params["z"] = z_param(in);
    r.result["value"] = report::encode(analytic::li_series(in.flags.n, *in.z, in.flags.tol));
    r.verdict = "ok";
}

void cmd_lambda(const Inputs& in, RunReport& r) {
    const Real z = real_part_in_unit_interval(in);
    r.params["z"] = z_param(in);
    const auto lambda = analytic::principal_lambda(in.flags.n, z, in.flags.tol);
    r.result["branch"] = lambda.branch;
    r.result["matrix"] = report::encode(lambda.entries);
    r.verdict = "ok";
}

void cmd_transport(const Inputs& in, RunReport& r) {
    const auto& path = *in.path;
    r.params["path"] = report::path_to_json(path);
    const auto start = analytic::lambda_at_base(in.flags.n, path, in.flags.tol);
    const auto end = analytic::transport(in.flags.n, path, start, in.flags.tol);
    const auto [w0, w1] = analytic::winding_numbers(path);
    r.result["winding_numbers"] = {w0, w1};
    r.result["arclength"] = report::short_decimal(analytic::arclength(path));
    r.result["start"] = report::encode(start.entries);
    r.result["end"] = report::encode(end.entries);
    r.result["branch"] = end.branch;
    r.verdict = "ok";
}

void cmd_monodromy(const Inputs& in, RunReport& r) {
    const auto& path = *in.path;
    r.params["path"] = report::path_to_json(path);
    analytic::MonodromyOptions options;
    options.tol = in.flags.tol;
    if (in.flags.max_den) options.max_denominator = exact::BigInt(*in.flags.max_den);
    const auto m = analytic::monodromy(in.flags.n, path, options);
    const auto index = exact::nilpotency_index(m);
    const auto [w0, w1] = analytic::winding_numbers(path);
    r.result["winding_numbers"] = {w0, w1};
    r.result["matrix"] = report::encode(m);
    r.result["nilpotency_index"] = index ? Json(*index) : Json(nullptr);
    const bool unipotent = m.is_upper_triangular() && index && *index <= in.flags.n + 1;
    r.result["unipotent"] = unipotent;
    r.verdict = unipotent ? "pass" : "fail";
}

void cmd_flatness(const Inputs& in, RunReport& r) {
    const Real z = real_part_in_unit_interval(in);
    r.params["z"] = z_param(in);
    r.params["h"] = "1e-6";
    const Real residual = hodge::flatness_residual(in.flags.n, z, Real("1e-6"), in.flags.tol);
    r.result["residual"] = report::short_decimal(residual);
    r.result["threshold"] = "1e-4";
    r.verdict = residual <= Real("1e-4") ? "pass" : "fail";
}

void cmd_filtration(const Inputs& in, RunReport& r) {
    const Real z = real_part_in_unit_interval(in);
    r.params["z"] = z_param(in);
    const hodge::FilteredFiber fiber(analytic::principal_lambda(in.flags.n, z, in.flags.tol));
    Json graded = Json::array();
    for (const auto& [weight, dim] : hodge::graded_dimensions(fiber)) graded.push_back({{"weight", weight}, {"dimension", dim}});
    Json hodge_dims = Json::array();
    for (int k = 0; k <= in.flags.n; ++k) hodge_dims.push_back({{"k", k}, {"dimension", hodge::span_rank(fiber.hodge_step(k))}});
    const auto check = hodge::hodge_transversality_check(fiber);
    r.result["graded_weight_dimensions"] = graded;
    r.result["hodge_dimensions"] = hodge_dims;
    r.result["pure_tate"] = check.pure;
    r.result["failing_step"] = check.failing_step < 0 ? Json(nullptr) : Json(check.failing_step);
    r.result["detail"] = check.detail;
    r.verdict = check.pure ? "pass" : "fail";
}

void cmd_kummer(const Inputs& in, RunReport& r) {
    const Real z = real_part_in_unit_interval(in);
    r.params["z"] = z_param(in);
    const auto check = hodge::kummer_block_check(in.flags.n, z, in.flags.tol);
    r.result["block"] = report::encode(hodge::twisted_kummer_block(in.flags.n, z));
    r.result["max_deviation"] = report::short_decimal(check.max_deviation);
    r.result["offending_entry"] = check.ok ? Json(nullptr) : Json::array({check.row, check.col});
    r.verdict = check.ok ? "pass" : "fail";
}

void cmd_omega(const Inputs& in, RunReport& r) {
    const int k = *in.flags.k;
    require_range("--k", k, 0, in.flags.n);
    r.params["k"] = k;
    const auto form = derham::omega(in.flags.n, k);
    r.result["form"] = form.to_string();
    if (k > 0) r.result["numerator_in_x"] = derham::omega_numerator_in_x(in.flags.n, k).to_string("x");
    r.verdict = "ok";
}

void cmd_integrate(const Inputs& in, RunReport& r) {
    const int k = *in.flags.k;
    require_range("--k", k, 0, in.flags.n);
    r.params["k"] = k;
    r.params["z"] = z_param(in);
    const auto value = derham::integrate_cube_detailed(in.flags.n, k, *in.z, in.flags.tol);
    const Complex v(Real(value.value.real()), Real(value.value.imag()));
    r.result["value"] = report::encode(v);
    r.result["order"] = value.order;
    r.result["last_difference"] = report::short_decimal(Real(value.last_difference));
    if (k == 0 || in.z->abs() <= Real(analytic::kSeriesRadius)) {
        const Complex reference = k == 0 ? Complex(1) : analytic::li_series(k, *in.z, 1e-20);
        const Real dev = (v - reference).abs();
        r.result["reference"] = report::encode(reference);
        r.result["deviation"] = report::short_decimal(dev);
        r.verdict = dev <= Real(k == 0 ? "1e-10" : "1e-6") ? "pass" : "fail";
    } else {
        r.result["reference"] = nullptr;
        r.verdict = "ok";
    }
}

void cmd_gauge(const Inputs&, RunReport& r) {
    const auto check = derham::gauge_exactness_check();
    r.result["nu"] = derham::gauge_form().to_string({"z", "t"});
    r.result["exact"] = check.exact;
    r.result["boundary"] = check.boundary;
    r.verdict = check.ok() ? "pass" : "fail";
}

void cmd_recurrence(const Inputs& in, RunReport& r) {
    int lo = 2, hi = in.flags.n;
    if (in.flags.k) {
        require_range("--k", *in.flags.k, 2, in.flags.n);
        lo = hi = *in.flags.k;
        r.params["k"] = *in.flags.k;
    }
    Json rows = Json::array();
    bool all = true;
    for (int k = lo; k <= hi; ++k) {
        const bool ok = derham::form_recurrence_check(in.flags.n, k);
        rows.push_back({{"k", k}, {"holds", ok}});
        all = all && ok;
    }
    r.result["checks"] = rows;
    r.verdict = all ? "pass" : "fail";
}

void cmd_arnold(const Inputs& in, RunReport& r) {
    const combinat::ArnoldModule module(in.flags.n);
    r.result["dimension"] = module.dimension();
    r.result["monomials"] = module.monomial_count();
    r.result["relation_rank"] = module.relation_rank();
    const bool ok = exact::BigInt(module.dimension()) == exact::factorial(in.flags.n - 1);
    r.result["equals_factorial"] = ok;
    r.verdict = ok ? "pass" : "fail";
}

void cmd_poset(const Inputs& in, RunReport& r) {
    Json rows = Json::array();
    bool concentrated = true;
    const exact::BigInt expected = exact::factorial(in.flags.n - 1);
    for (const auto& [degree, dim] : combinat::poset_homology(in.flags.n)) {
        rows.push_back({{"degree", degree}, {"dimension", dim}});
        concentrated = concentrated && (degree == in.flags.n - 3 ? exact::BigInt(dim) == expected : dim == 0);
    }
    r.result["reduced_homology"] = rows;
    r.result["concentrated_in_top_degree"] = concentrated;
    r.verdict = concentrated ? "pass" : "fail";
}

std::string class_label(const combinat::CycleType& type) {
    std::string s;
    for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
    return "(" + s + ")";
}

Json class_values(const combinat::ClassFunction& f) {
    Json out = Json::array();
    for (const auto& v : f.values) out.push_back(report::encode(v));
    return out;
}

void cmd_characters(const Inputs& in, RunReport& r) {
    const int n = in.flags.n;
    Json classes = Json::array();
    for (const auto& type : combinat::conjugacy_classes(n))
        classes.push_back({{"cycle_type", class_label(type)}, {"size", combinat::class_size(type).str()}});
    const auto arnold = combinat::arnold_character(n);
    r.result["classes"] = classes;
    r.result["arnold"] = class_values(arnold);
    r.result["sign"] = class_values(combinat::sign_character(n));
    r.result["self_inner_product"] = report::encode(combinat::inner_product(arnold, arnold));
    const auto multiplicity = combinat::sign_multiplicity(n);
    r.result["sign_multiplicity"] = multiplicity.str();
    if (n >= 2) {
        const auto check = combinat::induced_character_check(n);
        r.result["sign_twisted_induced"] = class_values(check.twisted_induced);
        r.result["induced_matches"] = check.matches;
        r.verdict = check.matches && multiplicity == 0 ? "pass" : "fail";
    } else {
        r.verdict = "ok";
    }
}

void cmd_postnikov(const Inputs& in, RunReport& r) {
    const auto check = combinat::postnikov_graded_check(in.flags.n);
    Json rows = Json::array();
    exact::BigInt total = 0;
    for (const auto& row : check.rows) {
        rows.push_back({{"k", row.k},
                        {"graded_dimension", row.graded_dimension.str()},
                        {"stirling", row.stirling.str()},
                        {"cross_checked", row.cross_checked}});
        total += row.stirling;
    }
    r.result["rows"] = rows;
    r.result["stirling_sum"] = total.str();
    r.result["stirling_sum_is_factorial"] = total == exact::factorial(in.flags.n);
    r.verdict = check.ok ? "pass" : "fail";
}

void cmd_paving(const Inputs& in, RunReport& r) {
    const Real z = real_part_in_unit_interval(in);
    r.params["z"] = z_param(in);
    r.params["samples"] = in.flags.samples;
    r.params["seed"] = in.flags.seed;
    const auto check = combinat::paving_check(in.flags.n, z.convert_to<double>(), in.flags.samples, in.flags.seed);
    r.result["samples"] = check.samples;
    r.result["redraws"] = check.redraws;
    r.result["uncovered"] = check.uncovered;
    r.result["overcovered"] = check.overcovered;
    r.result["volume_identity"] = check.volume_identity;
    r.verdict = check.ok() ? "pass" : "fail";
}

void cmd_suite(const Inputs& in, RunReport& r) {
    report::SuiteOptions options;
    options.tol = in.flags.tol;
    options.seed = in.flags.seed;
    options.samples = in.flags.samples;
    options.include_n7 = in.flags.full;
    r.params["samples"] = in.flags.samples;
    r.params["seed"] = in.flags.seed;
    r.params["full"] = in.flags.full;
    const auto results = report::run_suite(options);
    bool all = true;
    for (const auto& c : results) all = all && c.pass;
    r.result["criteria"] = report::to_json(results);
    r.verdict = all ? "pass" : "fail";
}

std::vector<CommandSpec> command_table() {
    auto spec = [](std::string name, std::string help, auto run) {
        CommandSpec c;
        c.name = std::move(name);
        c.help = std::move(help);
        c.run = run;
        return c;
    };
    std::vector<CommandSpec> out;
    auto with_n = [](CommandSpec c, int lo, int hi) {
        c.uses_n = true;
        c.n_min = lo;
        c.n_max = hi;
        return c;
    };
    auto with_z = [](CommandSpec c, std::string fallback = "") {
        c.uses_z = true;
        c.z_required = fallback.empty();
        c.z_default = std::move(fallback);
        return c;
    };
    auto with_tol = [](CommandSpec c) {
        c.uses_tol = true;
        return c;
    };

    out.push_back(with_tol(with_z(with_n(spec("li", "Li_n(z) by its power series, |z| <= 0.75", cmd_li), 1, 64))));
    out.push_back(with_tol(with_z(with_n(spec("lambda", "principal period matrix at real 0 < z < 1", cmd_lambda), 0, 12))));
    {
        auto c = with_tol(with_n(spec("transport", "continue Lambda_n along a path from its base point", cmd_transport), 1, 8));
        c.uses_loop = true;
        out.push_back(c);
        auto m = with_tol(with_n(spec("monodromy", "exact monodromy matrix of a closed path", cmd_monodromy), 1, 8));
        m.uses_loop = true;
        m.uses_max_den = true;
        out.push_back(m);
    }
    out.push_back(with_tol(with_z(with_n(spec("flatness", "finite-difference check of dL = L Omega", cmd_flatness), 1, 8), "0.5")));
    out.push_back(with_tol(with_z(with_n(spec("filtration", "weight and Hodge filtrations at real z", cmd_filtration), 1, 8))));
    out.push_back(with_tol(with_z(with_n(spec("kummer-block", "lower-right block versus twisted Sym^(n-1) of the Kummer matrix", cmd_kummer), 1, 8))));
    {
        auto c = with_n(spec("omega", "de Rham form omega_n^(k)", cmd_omega), 0, 8);
        c.uses_k = c.k_required = true;
        out.push_back(c);
        auto i = with_tol(with_z(with_n(spec("integrate", "integral of omega_n^(k) over the unit cube", cmd_integrate), 1, 4)));
        i.uses_k = i.k_required = true;
        out.push_back(i);
    }
    out.push_back(spec("gauge-check", "exactness of the k = 1 relation in cohomology", cmd_gauge));
    {
        auto c = with_n(spec("recurrence-check", "d/dz omega_n^(k) = omega_n^(k-1)/z", cmd_recurrence), 2, 8);
        c.uses_k = true;
        out.push_back(c);
    }
    out.push_back(with_n(spec("arnold", "dimension of the Arnol'd module A_N", cmd_arnold), 1, 7));
    out.push_back(with_n(spec("poset-homology", "reduced homology of the proper partition lattice", cmd_poset), 3, 7));
    out.push_back(with_n(spec("characters", "S_n characters of A_N, sign and induced comparison", cmd_characters), 1, 6));
    out.push_back(with_n(spec("postnikov", "graded dimensions against Stirling numbers", cmd_postnikov), 1, 8));
    {
        auto c = with_z(with_n(spec("paving", "sampled paving of the cube by ordered simplices", cmd_paving), 1, 6), "0.5");
        c.uses_samples = c.uses_seed = true;
        out.push_back(c);
        auto s = with_tol(spec("suite", "run the acceptance battery", cmd_suite));
        s.uses_samples = s.uses_seed = true;
        out.push_back(s);
    }
    return out;
}

Inputs validate(const CommandSpec& c, const Flags& flags) {
    Inputs in;
    in.flags = flags;
    if (!(std::isfinite(flags.tol) && flags.tol > 0 && flags.tol < 1)) throw UsageError("--tol must lie in (0, 1)");
    if (flags.precision < 64 || flags.precision > 4096) throw UsageError("--precision must lie in [64, 4096]");
    if (flags.samples < 1 || flags.samples > 100000000) throw UsageError("--samples must lie in [1, 1e8]");
    if (flags.max_den && *flags.max_den < 1) throw UsageError("--max-den must be positive");
    if (c.uses_k && c.k_required && !flags.k) throw UsageError("--k is required");
    if (c.uses_z) {
        if (c.z_required && flags.z.empty()) throw UsageError("--z is required");
        in.z = parse_z(flags.z.empty() ? c.z_default : flags.z);
    }
    if (c.uses_loop) {
        try {
            in.path = report::load_path(flags.loop);
        } catch (const DomainError& e) {
            throw UsageError(std::string("--loop: ") + e.what());
        }
    }
    if (c.uses_n) require_range("--n", flags.n, c.n_min, c.n_max);
    return in;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polylogarithm periods, monodromy, de Rham forms and partition combinatorics"};
    app.require_subcommand(1);
    Flags flags;
    const auto commands = command_table();
    std::map<CLI::App*, const CommandSpec*> lookup;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        lookup[sub] = &c;
        if (c.uses_n) sub->add_option("--n", flags.n, "weight / ground set size")->required();
        if (c.uses_k) sub->add_option("--k", flags.k, "form index");
        if (c.uses_z) sub->add_option("--z", flags.z, "complex point \"re[,im]\"");
        if (c.uses_tol) sub->add_option("--tol", flags.tol, "target tolerance")->capture_default_str();
        if (c.uses_loop) sub->add_option("--loop", flags.loop, "loop0, loop1 or a PathSpec JSON file")->capture_default_str();
        if (c.uses_max_den) sub->add_option("--max-den", flags.max_den, "largest denominator for reconstruction");
        if (c.uses_samples) sub->add_option("--samples", flags.samples, "sample count")->capture_default_str();
        if (c.uses_seed) sub->add_option("--seed", flags.seed, "random seed")->capture_default_str();
        if (c.name == "suite") sub->add_flag("--full", flags.full, "include n = 7 in the Arnol'd/poset criterion");
        sub->add_option("--precision", flags.precision, "working precision in bits")->capture_default_str();
        sub->add_option("--format", flags.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_flag("--timing", flags.timing, "report wall time in elapsed_ms");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const CommandSpec* command = nullptr;
    for (auto* sub : app.get_subcommands()) command = lookup.at(sub);

    try {
        WorkingPrecision precision(flags.precision < 64 ? 64 : flags.precision);
        const Inputs in = validate(*command, flags);

        RunReport r;
        r.command = command->name;
        if (command->uses_n) r.params["n"] = flags.n;
        if (command->uses_tol) r.params["tol"] = report::short_decimal(Real(flags.tol));
        if (command->uses_loop) r.params["loop"] = flags.loop;
        if (flags.max_den) r.params["max_den"] = *flags.max_den;
        r.params["precision_bits"] = flags.precision;

        const auto start = std::chrono::steady_clock::now();
        command->run(in, r);
        if (flags.timing)
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        std::cout << (flags.format == "csv" ? report::render_csv(r) : report::render_json(r));
        if (command->name == "suite" && r.verdict != "pass") return kExitSuiteFailure;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const IntegrationError& e) {
        std::cerr << "integration error at arclength " << e.arclength() << ": " << e.what() << "\n";
        return kExitNumerical;
    } catch (const ReconstructionError& e) {
        std::cerr << "reconstruction error at entry (" << e.row() << ", " << e.col() << "): " << e.what() << "\n";
        return kExitNumerical;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
