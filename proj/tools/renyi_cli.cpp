// Command-line front end: measures, error-probability bounds, reference
// tables, figure data, channel exponents and the random-coding ensemble.
//
// Exit codes: 0 ok, 1 check failure, 2 I/O or malformed input, 3 domain
// error, 4 enumeration budget exceeded.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renyi/decision.hpp"
#include "renyi/ensemble.hpp"
#include "renyi/entropy_bounds.hpp"
#include "renyi/error_bounds.hpp"
#include "renyi/exponents.hpp"
#include "renyi/ht_bounds.hpp"
#include "renyi/io.hpp"
#include "renyi/measures.hpp"

namespace {

using namespace renyi;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;

const double kLn2 = std::log(2.0);

Order parse_order(const std::string& token) {
    if (token == "inf" || token == "+inf" || token == "Inf") return Order::pos_inf();
    if (token == "-inf" || token == "-Inf") return Order::neg_inf();
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || (end && *end))
        throw IoError("cannot parse order \"" + token + "\"");
    return Order::of(v);
}

std::vector<Order> parse_order_list(const std::string& csv) {
    std::vector<Order> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) out.push_back(parse_order(token));
    }
    if (out.empty()) throw IoError("empty order list");
    return out;
}

JointPMF example_joint_1() {
    return JointPMF::from_matrix({{8, 1, 6}, {3, 5, 7}, {4, 9, 2}}, true);
}

JointPMF example_joint_fig2() {
    return JointPMF::from_matrix({{0.1906, 0.3737}, {0.4319, 0.0038}}, true);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    return out;
}

// ---------------------------------------------------------------- measure --

int run_measure(const std::string& input, const std::string& alpha_csv, bool nats) {
    auto joint = load_joint(input);
    auto orders = parse_order_list(alpha_csv);
    double scale = nats ? 1.0 : 1.0 / kLn2;
    const char* unit = nats ? "nats" : "bits";

    double eps = map_error(joint);
    double h_inf = arimoto_conditional(joint, Order::pos_inf()).nats;
    double identity = 1.0 - std::exp(-h_inf);
    std::printf("eps_map = %s\n", format_fixed(eps, 6).c_str());
    std::printf("identity check 1 - exp(-H_inf(X|Y)) = %s  (|diff| = %.1e)\n",
                format_fixed(identity, 6).c_str(), std::fabs(identity - eps));
    std::printf("\n%-10s %12s %12s\n", "alpha", ("H(X) [" + std::string(unit) + "]").c_str(),
                ("H(X|Y) [" + std::string(unit) + "]").c_str());
    auto prior = joint.prior();
    for (const auto& order : orders) {
        double hx = renyi_entropy(prior, order).nats * scale;
        double hxy = arimoto_conditional(joint, order).nats * scale;
        std::printf("%-10s %12s %12s\n", order.str().c_str(), format_fixed(hx, 4).c_str(),
                    format_fixed(hxy, 4).c_str());
    }
    return kExitOk;
}

// ----------------------------------------------------------------- bounds --

int run_bounds(const std::string& input, const std::string& alpha_csv) {
    auto joint = load_joint(input);
    auto orders = parse_order_list(alpha_csv);
    double eps = map_error(joint);
    std::size_t m = joint.hypotheses();
    std::printf("eps_map = %s   (M = %zu)\n\n", format_fixed(eps, 6).c_str(), m);

    std::printf("%-10s %12s %12s %12s\n", "alpha", "lb-implicit", "lb-closed", "ub-from-H");
    for (const auto& order : orders) {
        if (!order.positive()) continue;
        auto lb = fano_lb_report(joint, order);
        std::string closed = "-";
        if (order.is_finite() && order.alpha() > 1.0)
            closed = format_fixed(revholder_report(joint, order.alpha()).value, 6);
        auto ub = ub_from_H_report(joint, order);
        std::printf("%-10s %12s %12s %12s\n", order.str().c_str(),
                    format_fixed(lb.value, 6).c_str(), closed.c_str(),
                    format_fixed(ub.value, 6).c_str());
    }

    std::printf("\nexplicit lower bounds: order-1/2 %s, quadratic %s\n",
                format_fixed(lb_error_half(joint), 6).c_str(),
                format_fixed(lb_error_quadratic(joint), 6).c_str());
    if (joint.strictly_positive()) {
        auto neg = lb_error_negative_alpha_optimized(joint);
        std::printf("negative-order lower bound: %s at alpha = %s\n",
                    format_fixed(neg.value, 6).c_str(), format_fixed(*neg.inner_arg, 4).c_str());
    }

    std::printf("\nbinary-test upper bounds:\n");
    auto print_report = [](const BoundReport& r) {
        std::printf("  %-28s %12s%s%s\n", r.name.c_str(), format_fixed(r.value, 6).c_str(),
                    r.domain_note.empty() ? "" : "  note: ", r.domain_note.c_str());
    };
    print_report(generalized_hellman_raviv(joint));
    print_report(pairwise_sum_bound(joint));
    print_report(leang_johnson_bound(joint));
    auto cs = chernoff_sum_bound(joint);
    print_report(cs.pairwise);
    print_report(cs.worst_pair);
    print_report(cs.improved);
    return kExitOk;
}

// ----------------------------------------------------------------- tables --

struct TableOneRow {
    double alpha;
    double implicit_ref;
    double closed_ref;
};
struct TableTwoRow {
    double alpha;
    double lower_ref;
    double eps_ref;
    double upper_ref;
};

const std::vector<TableOneRow> kTableOneRefs = {
    {2, 0.4247, 0.3508},  {4, 0.4480, 0.4406},  {6, 0.4573, 0.4562},
    {8, 0.4620, 0.4613},  {10, 0.4640, 0.4635}, {50, 0.4667, 0.4667},
};
const std::vector<TableTwoRow> kTableTwoRefs = {
    {1, 0.4013, 0.4667, 0.6061},
    {10, 0.4640, 0.4667, 0.4994},
    {100, 0.4667, 0.4667, 0.4699},
};

int run_tables(bool check) {
    auto joint = example_joint_1();
    std::size_t m = joint.hypotheses();
    double eps = map_error(joint);
    int mismatches = 0;
    const double tol = 5e-5;
    auto verdict = [&](double got, double ref) {
        if (std::fabs(got - ref) > tol) {
            ++mismatches;
            return " *";
        }
        return "";
    };

    std::printf("table 1: lower bounds on the MAP error (built-in example, M = %zu)\n", m);
    std::printf("%8s %12s %12s\n", "alpha", "implicit", "closed-form");
    for (const auto& row : kTableOneRefs) {
        Order order = Order::of(row.alpha);
        double h = arimoto_conditional(joint, order).nats;
        double implicit = fano_lb_error(h, m, order);
        double closed = lb_error_revholder(joint, row.alpha);
        std::printf("%8s %12s %12s", format_fixed(row.alpha, 0).c_str(),
                    format_fixed(implicit, 4).c_str(), format_fixed(closed, 4).c_str());
        if (check)
            std::printf("%s%s", verdict(implicit, row.implicit_ref), verdict(closed, row.closed_ref));
        std::printf("\n");
    }

    std::printf("\ntable 2: two-sided bounds on the MAP error (same example)\n");
    std::printf("%8s %12s %12s %12s\n", "alpha", "lower", "exact", "upper");
    for (const auto& row : kTableTwoRefs) {
        Order order = Order::of(row.alpha);
        double h = arimoto_conditional(joint, order).nats;
        double lower = fano_lb_error(h, m, order);
        double upper = ub_error_from_H(h, order);
        std::printf("%8s %12s %12s %12s", format_fixed(row.alpha, 0).c_str(),
                    format_fixed(lower, 4).c_str(), format_fixed(eps, 4).c_str(),
                    format_fixed(upper, 4).c_str());
        if (check)
            std::printf("%s%s%s", verdict(lower, row.lower_ref), verdict(eps, row.eps_ref),
                        verdict(upper, row.upper_ref));
        std::printf("\n");
    }

    if (check) {
        std::printf("\ncheck: %d value(s) beyond %.0e of the reference\n", mismatches, tol);
        return mismatches == 0 ? kExitOk : kExitCheckFailed;
    }
    return kExitOk;
}

// -------------------------------------------------------------------- fig --

int run_fig(int which, const std::string& output) {
    auto out = open_output(output);
    if (which == 1) {
        // two-sided entropy bounds against the error probability, M = 8
        const std::size_t m = 8;
        out << "eps,u_alpha_0.25,l_alpha_0.25,u_alpha_4,l_alpha_4\n";
        for (int i = 0; i <= 175; ++i) {
            double eps = 0.005 * i;  // up to 1 - 1/M = 0.875
            Order q = Order::of(0.25), f = Order::of(4.0);
            out << format_full(eps) << ',' << format_full(fano_upper_H(eps, m, q).nats) << ','
                << format_full(lb_H_from_error(eps, q).nats) << ','
                << format_full(fano_upper_H(eps, m, f).nats) << ','
                << format_full(lb_H_from_error(eps, f).nats) << '\n';
        }
        return kExitOk;
    }
    if (which == 2) {
        auto joint = example_joint_fig2();
        std::size_t m = joint.hypotheses();
        double eps = map_error(joint);
        out << "alpha,lower,upper,eps\n";
        // log-spaced orders covering [1.1, 100]
        const double lo = 1.1, hi = 100.0;
        const int points = 60;
        for (int i = 0; i <= points; ++i) {
            double a = lo * std::pow(hi / lo, static_cast<double>(i) / points);
            Order order = Order::of(a);
            double h = arimoto_conditional(joint, order).nats;
            out << format_full(a) << ',' << format_full(fano_lb_error(h, m, order)) << ','
                << format_full(ub_error_from_H(h, order)) << ',' << format_full(eps) << '\n';
        }
        return kExitOk;
    }
    if (which == 3) {
        const double delta = 0.110;
        out << "alpha,R_alpha_bits\n";
        for (int i = 1; i <= 199; ++i) {
            double a = 0.005 * i;
            out << format_full(a) << ',' << format_full(r_alpha_bsc(delta, a).bits()) << '\n';
        }
        return kExitOk;
    }
    throw IoError("fig: figure index must be 1, 2 or 3");
}

// -------------------------------------------------------------- exponents --

int run_exponents(std::optional<double> bsc_delta, const std::string& channel_path,
                  const std::string& alpha_csv, const std::string& output) {
    std::vector<Order> orders;
    if (!alpha_csv.empty()) orders = parse_order_list(alpha_csv);

    if (bsc_delta) {
        auto rates = bsc_rates(*bsc_delta);
        std::printf("R_0 = %s bits\n", format_fixed(rates.cutoff_bits, 4).c_str());
        std::printf("R_c = %s bits\n", format_fixed(rates.critical_bits, 4).c_str());
        std::printf("C   = %s bits\n", format_fixed(rates.capacity_bits, 4).c_str());
        std::printf("alpha_c = %s\n",
                    format_fixed(rates.critical_bits / rates.cutoff_bits, 4).c_str());
        if (!orders.empty()) {
            std::printf("\n%8s %14s\n", "alpha", "R_alpha [bits]");
            for (const auto& order : orders) {
                if (!order.is_finite()) continue;
                std::printf("%8s %14s\n", order.str().c_str(),
                            format_fixed(r_alpha_bsc(*bsc_delta, order.alpha()).bits(), 4).c_str());
            }
        }
        if (!output.empty()) {
            auto out = open_output(output);
            out << "rate_bits,Er_bits,Esp_bits\n";
            auto prior = ProbVector::uniform(2);
            auto channel = Channel::bsc(*bsc_delta);
            for (int i = 1; i < 100; ++i) {
                double r = rates.capacity_bits * i / 100.0;
                RateNats rate = RateNats::from_bits(r);
                out << format_full(r) << ','
                    << format_full(random_coding_exponent(rate, prior, channel).value / kLn2)
                    << ',' << format_full(bsc_sphere_packing(rate, *bsc_delta) / kLn2) << '\n';
            }
        }
        return kExitOk;
    }

    if (channel_path.empty()) throw IoError("exponents: need --bsc or --channel");
    auto channel = load_channel(channel_path);
    auto prior = ProbVector::uniform(channel.inputs());
    double mi = alpha_mutual_information(prior, channel, Order::one());
    std::printf("I(uniform, W) = %s bits\n", format_fixed(mi / kLn2, 4).c_str());
    if (!orders.empty()) {
        std::printf("\n%8s %14s\n", "alpha", "R_alpha [bits]");
        for (const auto& order : orders) {
            if (!order.is_finite()) continue;
            std::printf("%8s %14s\n", order.str().c_str(),
                        format_fixed(r_alpha(prior, channel, order.alpha()).bits(), 4).c_str());
        }
    }
    return kExitOk;
}

// --------------------------------------------------------------- ensemble --

int run_ensemble(const std::string& config_path, const std::string& output) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("ensemble config: invalid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw IoError("ensemble config: expected a JSON object");

    EnsembleConfig base{.blocklength = 1,
                        .codebook_size = 2,
                        .channel = parse_channel_json(cfg.value("channel", nlohmann::json::object()).dump()),
                        .prior = ProbVector::uniform(2),
                        .orders = {},
                        .trials = cfg.value("trials", 1),
                        .seed = cfg.value("seed", std::uint64_t{0})};
    if (cfg.contains("prior")) {
        std::vector<double> p = cfg["prior"].get<std::vector<double>>();
        base.prior = ProbVector::from_masses(std::move(p));
    } else {
        base.prior = ProbVector::uniform(base.channel.inputs());
    }
    if (!cfg.contains("alphas")) throw IoError("ensemble config: missing \"alphas\"");
    for (const auto& a : cfg["alphas"]) {
        if (a.is_string())
            base.orders.push_back(parse_order(a.get<std::string>()));
        else
            base.orders.push_back(Order::of(a.get<double>()));
    }

    auto out = open_output(output);
    out << "n,alpha,mean,stderr,bound_upper,bound_lower\n";

    if (cfg.contains("blocklengths")) {
        std::vector<int> ns = cfg["blocklengths"].get<std::vector<int>>();
        if (!cfg.contains("rate_bits")) throw IoError("ensemble config: sweep needs \"rate_bits\"");
        RateNats rate = RateNats::from_bits(cfg["rate_bits"].get<double>());
        for (const auto& order : base.orders) {
            auto fit = exponent_fit(base, ns, rate, order);
            for (const auto& pt : fit.points) {
                out << pt.blocklength << ',' << order.str() << ',' << format_full(pt.mean) << ','
                    << format_full(pt.standard_error) << ',' << format_full(fit.ceiling_nats)
                    << ',' << format_full(fit.floor_nats) << '\n';
            }
            std::printf("alpha=%s slope_nats=%s stderr=%s floor_nats=%s ceiling_nats=%s%s\n",
                        order.str().c_str(), format_fixed(fit.slope_nats, 6).c_str(),
                        format_fixed(fit.slope_standard_error, 6).c_str(),
                        format_fixed(fit.floor_nats, 6).c_str(),
                        format_fixed(fit.ceiling_nats, 6).c_str(),
                        fit.saturated ? " saturated" : "");
        }
        return kExitOk;
    }

    if (!cfg.contains("n") || !cfg.contains("M"))
        throw IoError("ensemble config: need \"blocklengths\"+\"rate_bits\" or \"n\"+\"M\"");
    base.blocklength = cfg["n"].get<int>();
    base.codebook_size = cfg["M"].get<int>();
    auto result = ensemble_average(base);
    double rate_eff = std::log(static_cast<double>(base.codebook_size)) / base.blocklength;
    RateNats rate(rate_eff);
    double esp = sphere_packing_exponent(rate, base.channel);
    double er = random_coding_exponent(rate, base.prior, base.channel).value;
    for (const auto& mom : result.per_order) {
        double floor_ref = er;
        if (mom.order.is_finite() && mom.order.alpha() < 1.0 && mom.order.alpha() > 0.0)
            floor_ref = mom.order.alpha() * er - (1.0 - mom.order.alpha()) * rate_eff;
        out << base.blocklength << ',' << mom.order.str() << ',' << format_full(mom.mean) << ','
            << format_full(mom.standard_error) << ',' << format_full(esp) << ','
            << format_full(floor_ref) << '\n';
    }
    std::printf("mean_map_error=%s\n", format_fixed(result.mean_map_error, 6).c_str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Renyi information measures and Bayesian error-probability bounds"};
    app.require_subcommand(1);

    std::string input, alpha_csv = "0.5,1,2,inf", exp_alpha_csv, output, channel_path, config_path;
    bool nats = false, check = false;
    int fig_index = 1;
    std::optional<double> bsc_delta;

    auto* measure = app.add_subcommand("measure", "entropies and the exact MAP error of a joint pmf");
    measure->add_option("--input", input, "joint pmf file (JSON or CSV)")->required();
    measure->add_option("--alpha", alpha_csv, "comma-separated orders (default 0.5,1,2,inf)");
    measure->add_flag("--nats", nats, "report in nats instead of bits");

    auto* bounds = app.add_subcommand("bounds", "lower/upper bounds on the MAP error");
    bounds->add_option("--input", input, "joint pmf file (JSON or CSV)")->required();
    bounds->add_option("--alpha", alpha_csv, "comma-separated orders");

    auto* tables = app.add_subcommand("tables", "reference bound tables for the built-in example");
    tables->add_flag("--check", check, "compare against the reference values (exit 1 on mismatch)");

    auto* fig = app.add_subcommand("fig", "figure data as CSV");
    fig->add_option("index", fig_index, "figure index (1, 2 or 3)")->required();
    fig->add_option("--output", output, "output CSV path")->required();

    auto* exponents = app.add_subcommand("exponents", "channel rates and error exponents");
    exponents->add_option("--bsc", bsc_delta, "BSC crossover probability");
    exponents->add_option("--channel", channel_path, "channel spec JSON");
    exponents->add_option("--alpha", exp_alpha_csv, "orders for the R_alpha table");
    exponents->add_option("--output", output, "optional exponent CSV");

    auto* ensemble = app.add_subcommand("ensemble", "random-coding ensemble simulation");
    ensemble->add_option("--config", config_path, "ensemble config JSON")->required();
    ensemble->add_option("--output", output, "output CSV path")->required();

    try {
        app.parse(argc, argv);
        if (*measure) return run_measure(input, alpha_csv, nats);
        if (*bounds) return run_bounds(input, alpha_csv);
        if (*tables) return run_tables(check);
        if (*fig) return run_fig(fig_index, output);
        if (*exponents) return run_exponents(bsc_delta, channel_path, exp_alpha_csv, output);
        if (*ensemble) return run_ensemble(config_path, output);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
