#include "radixecon/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "radixecon/numeral.hpp"
#include "radixecon/tree.hpp"

namespace radixecon::cli {

namespace {

constexpr long long kMaxCliRadix = 4096;

std::string format_root(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r);
    return buf;
}

std::string format_sig9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

bool is_integer_literal(const std::string& s, bool allow_sign) {
    std::size_t start = allow_sign && !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start)
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

// Positional integer values may be arbitrarily large, so they are parsed as
// strings and validated here; conversion to BigInt happens after parsing.
const CLI::Validator SignedIntegerLiteral(
    [](std::string& s) -> std::string {
        if (!is_integer_literal(s, true))
            return "'" + s + "' is not an integer";
        return {};
    },
    "INT");

const CLI::Validator UnsignedIntegerLiteral(
    [](std::string& s) -> std::string {
        if (!is_integer_literal(s, false))
            return "'" + s + "' is not a non-negative integer";
        return {};
    },
    "UINT");

std::string check_radix_token(const std::string& s) {
    if (!is_integer_literal(s, true))
        return "'" + s + "' is not an integer radix";
    // Values below 2 pass through and are rejected by the library as domain
    // errors; the CLI only enforces its own rendering cap.
    if (is_integer_literal(s, false) && (s.size() > 4 || std::stoll(s) > kMaxCliRadix))
        return "radix is capped at " + std::to_string(kMaxCliRadix);
    return {};
}

const CLI::Validator RadixToken(
    [](std::string& s) -> std::string { return check_radix_token(s); },
    "RADIX");

const CLI::Validator RadixOrBtToken(
    [](std::string& s) -> std::string {
        if (s == "bt")
            return {};
        return check_radix_token(s);
    },
    "RADIX|bt");

// Upper bound C: a real number, or the literal "e".
const CLI::Validator UpperBoundToken(
    [](std::string& s) -> std::string {
        if (s == "e")
            return {};
        try {
            std::size_t pos = 0;
            (void)std::stod(s, &pos);
            if (pos == s.size())
                return {};
        } catch (const std::exception&) {
        }
        return "'" + s + "' is not a real number or 'e'";
    },
    "C");

double parse_upper(const std::string& s) {
    return s == "e" ? std::numbers::e : std::stod(s);
}

CostModel parse_cost(const std::string& s) {
    return s == "e1" ? CostModel::e1 : CostModel::e2;
}

void write_csv(const std::vector<EconomySample>& samples, std::ostream& out) {
    out << "r,cost\n";
    for (const EconomySample& sample : samples)
        out << format_sig9(sample.r) << ',' << format_sig9(sample.cost) << '\n';
}

struct ConvertArgs {
    std::string value;
    std::string to;
};

struct WidthArgs {
    std::string value;
    std::string radix;
};

struct MaxvalArgs {
    std::string radix;
    unsigned width = 0;
};

struct TreeArgs {
    std::string node_size;
    unsigned depth = 0;
    std::string fit_total;
    bool include_root = false;
};

struct CurveArgs {
    std::string cost;
    std::string upper;
    double r_min = 1.2;
    double r_max = 6.0;
    int steps = 480;
    std::string out_path;
};

struct OptimizeArgs {
    std::string cost;
    std::string upper;
    double tolerance = 1e-10;
};

}  // namespace

void emit_table(std::ostream& out) {
    struct Row {
        const char* label;
        double upper;
    };
    static constexpr Row rows[] = {
        {"e", std::numbers::e}, {"10", 10.0},   {"50", 50.0},
        {"200", 200.0},         {"500", 500.0}, {"1000", 1000.0},
    };
    char line[64];
    std::snprintf(line, sizeof line, "%-8s%s\n", "C", "r");
    out << line;
    for (const Row& row : rows) {
        RootResult result = e2_optimal_radix(row.upper, 1e-10);
        if (!result.converged)
            throw std::runtime_error(std::string("root finder did not converge for C = ") + row.label);
        std::snprintf(line, sizeof line, "%-8s%s\n", row.label, format_root(result.r).c_str());
        out << line;
    }
}

void emit_curve(CostModel model, double upper_bound, double r_min, double r_max,
                int steps, std::ostream& out) {
    write_csv(cost_curve(model, upper_bound, r_min, r_max, steps), out);
}

void emit_curve(CostModel model, double upper_bound, double r_min, double r_max,
                int steps, const std::filesystem::path& destination) {
    // Sample first so a domain error never leaves a file behind, then write
    // to a side file and rename into place.
    std::vector<EconomySample> samples = cost_curve(model, upper_bound, r_min, r_max, steps);
    std::filesystem::path tmp = destination;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file)
            throw std::runtime_error("cannot write " + destination.string());
        write_csv(samples, file);
        file.flush();
        if (!file) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("failed while writing " + destination.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, destination, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot move curve into place at " + destination.string() +
                                 ": " + ec.message());
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positional numeral systems and radix-economy analysis", "radixecon"};
    app.require_subcommand(1);

    ConvertArgs convert_args;
    CLI::App* convert = app.add_subcommand("convert", "Rewrite an integer in another radix or balanced ternary");
    convert->add_option("value", convert_args.value, "Integer to convert (any size)")
        ->required()
        ->check(SignedIntegerLiteral);
    convert->add_option("--to", convert_args.to, "Target radix (2-4096) or 'bt' for balanced ternary")
        ->required()
        ->check(RadixOrBtToken);

    WidthArgs width_args;
    CLI::App* width = app.add_subcommand("width", "Digit count of a value in a given radix");
    width->add_option("value", width_args.value, "Non-negative integer")
        ->required()
        ->check(SignedIntegerLiteral);
    width->add_option("--to", width_args.radix, "Radix (2-4096)")
        ->required()
        ->check(RadixToken);

    MaxvalArgs maxval_args;
    CLI::App* maxval = app.add_subcommand("maxval", "Largest value of a fixed-width word: radix^(width+1) - 1");
    maxval->add_option("radix", maxval_args.radix, "Radix (2-4096)")
        ->required()
        ->check(RadixToken);
    maxval->add_option("width", maxval_args.width, "Highest power index w; the word has w+1 digits")
        ->required();

    std::string balanced_value;
    CLI::App* balanced = app.add_subcommand("balanced", "Write a signed integer in balanced ternary");
    balanced->add_option("value", balanced_value, "Integer to convert (any size, any sign)")
        ->required()
        ->check(SignedIntegerLiteral);

    TreeArgs tree_args;
    CLI::App* tree = app.add_subcommand("tree", "Packed-tree capacity and minimal depth");
    tree->add_option("node-size", tree_args.node_size, "Items per node (>= 2)")
        ->required()
        ->check(SignedIntegerLiteral);
    CLI::Option* tree_depth =
        tree->add_option("depth", tree_args.depth, "Tree depth; prints the item capacity");
    CLI::Option* tree_fit =
        tree->add_option("--fit", tree_args.fit_total, "Total item count (root included); prints the minimal depth")
            ->check(SignedIntegerLiteral);
    tree_fit->excludes(tree_depth);
    tree->add_flag("--include-root", tree_args.include_root, "Count the root item in the capacity");

    CurveArgs curve_args;
    CLI::App* curve = app.add_subcommand("curve", "Sample a cost curve and emit CSV");
    curve->add_option("--cost", curve_args.cost, "Cost model: e1 (product) or e2 (sum)")
        ->required()
        ->check(CLI::IsMember({"e1", "e2"}));
    curve->add_option("--upper", curve_args.upper, "Upper bound C (> 1), or 'e'")
        ->required()
        ->check(UpperBoundToken);
    curve->add_option("--rmin", curve_args.r_min, "Smallest radix sampled (> 1)")->capture_default_str();
    curve->add_option("--rmax", curve_args.r_max, "Largest radix sampled")->capture_default_str();
    curve->add_option("--steps", curve_args.steps, "Number of grid steps (samples = steps + 1)")->capture_default_str();
    curve->add_option("--out", curve_args.out_path, "Write CSV here instead of standard output");

    OptimizeArgs optimize_args;
    CLI::App* optimize = app.add_subcommand("optimize", "Optimal radix under a cost model");
    optimize->add_option("--cost", optimize_args.cost, "Cost model: e1 (product) or e2 (sum)")
        ->required()
        ->check(CLI::IsMember({"e1", "e2"}));
    CLI::Option* optimize_upper =
        optimize->add_option("--upper", optimize_args.upper, "Upper bound C (> 1), or 'e'; required for e2")
            ->check(UpperBoundToken);
    optimize->add_option("--tol", optimize_args.tolerance, "Residual tolerance for the e2 root")->capture_default_str();

    CLI::App* table = app.add_subcommand("table", "E2-optimal radix for C in {e, 10, 50, 200, 500, 1000}");

    int compare_trits = 0;
    CLI::App* compare = app.add_subcommand("compare", "Ternary word range, bit equivalence and 4-state efficiency");
    compare->add_option("trits", compare_trits, "Word size in ternary digits (>= 1)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << "run 'radixecon --help' for usage\n";
        return 2;
    }

    try {
        if (*convert) {
            BigInt value(convert_args.value);
            if (convert_args.to == "bt")
                out << render(encode_balanced_ternary(value)) << '\n';
            else
                out << render(encode(value, BigInt(convert_args.to))) << '\n';
        } else if (*width) {
            out << width_for(BigInt(width_args.value), BigInt(width_args.radix)) << '\n';
        } else if (*maxval) {
            out << max_value(BigInt(maxval_args.radix), maxval_args.width) << '\n';
        } else if (*balanced) {
            out << render(encode_balanced_ternary(BigInt(balanced_value))) << '\n';
        } else if (*tree) {
            if (tree_fit->count() > 0) {
                out << depth_for(BigInt(tree_args.fit_total), BigInt(tree_args.node_size)) << '\n';
            } else if (tree_depth->count() > 0) {
                TreeSpec spec{BigInt(tree_args.node_size), tree_args.depth};
                out << capacity(spec, tree_args.include_root) << '\n';
            } else {
                err << "error: tree needs either a depth or --fit <total>\n";
                err << "run 'radixecon tree --help' for usage\n";
                return 2;
            }
        } else if (*curve) {
            CostModel model = parse_cost(curve_args.cost);
            double upper = parse_upper(curve_args.upper);
            if (curve_args.out_path.empty())
                emit_curve(model, upper, curve_args.r_min, curve_args.r_max, curve_args.steps, out);
            else
                emit_curve(model, upper, curve_args.r_min, curve_args.r_max, curve_args.steps,
                           std::filesystem::path(curve_args.out_path));
        } else if (*optimize) {
            if (parse_cost(optimize_args.cost) == CostModel::e1) {
                out << "r = " << format_root(e1_optimal_radix()) << '\n';
            } else {
                if (optimize_upper->count() == 0) {
                    err << "error: optimize --cost e2 needs --upper <C>\n";
                    err << "run 'radixecon optimize --help' for usage\n";
                    return 2;
                }
                RootResult result = e2_optimal_radix(parse_upper(optimize_args.upper),
                                                     optimize_args.tolerance);
                if (!result.converged) {
                    err << "error: root finder did not converge (residual "
                        << format_sig9(result.residual) << " after " << result.iterations
                        << " iterations)\n";
                    return 1;
                }
                out << "r = " << format_root(result.r) << '\n';
            }
        } else if (*table) {
            emit_table(out);
        } else if (*compare) {
            char line[96];
            std::snprintf(line, sizeof line, "%-20s%d\n", "trits:", compare_trits);
            out << line;
            out << "integer range:      " << ternary_range(compare_trits) << '\n';
            std::snprintf(line, sizeof line, "%-20s%.3f\n", "equivalent bits:",
                          trit_bit_equivalence(compare_trits));
            out << line;
            std::snprintf(line, sizeof line, "%-20s%.2f\n", "4-state efficiency:",
                          device_state_efficiency(4, 3));
            out << line;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("radixecon");
    for (const std::string& arg : args)
        argv.push_back(arg.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace radixecon::cli
