// cochar: exact multiplicities in the mixed trace cocharacter sequence of
// two generic 3x3 matrices.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
// 3 I/O error. Data goes to stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cochar/cochar.hpp"
#include "cochar/json_io.hpp"

namespace {

using namespace cochar;
using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string decimal_approx(const BigRational& q, int digits = 6) {
    const bool neg = q < 0;
    const BigRational a = neg ? BigRational(-q) : q;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const BigInt rounded =
        (numerator(a) * scale * 2 + denominator(a)) / (2 * denominator(a));
    std::string frac = BigInt(rounded % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    return (neg ? "-" : "") + BigInt(rounded / scale).str() + "." + frac;
}

enum class Method { closed, oracle, series };

Method parse_method(const std::string& s) {
    if (s == "closed") {
        return Method::closed;
    }
    if (s == "oracle") {
        return Method::oracle;
    }
    if (s == "series") {
        return Method::series;
    }
    throw UsageError("unknown method '" + s +
                     "' (expected closed, oracle, or series)");
}

BigInt compute_multiplicity(const Partition2& lambda, Method method) {
    switch (method) {
        case Method::closed:
            return multiplicity(lambda);
        case Method::oracle:
            return oracle_multiplicity(lambda);
        case Method::series: {
            const BigRational c = mseries_coeff(
                t2_multiplicity_series(),
                static_cast<int>(lambda.part_difference()),
                static_cast<int>(lambda.l2));
            return to_integer(c);
        }
    }
    throw UsageError("unknown method");
}

int cmd_mult(long long l1, long long l2, const std::string& method_name,
             const std::string& format) {
    const Method method = parse_method(method_name);
    const Partition2 lambda(l1, l2);
    const BigInt m = compute_multiplicity(lambda, method);
    if (format == "json") {
        const json rec = {{"lambda1", l1},
                          {"lambda2", l2},
                          {"multiplicity", json_integer(m)},
                          {"method", method_name}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << m.str() << "\n";
    }
    return kExitOk;
}

int cmd_table(int degree, const std::string& method_name,
              const std::string& format, const std::string& out_path) {
    if (degree < 0) {
        throw UsageError("degree must be non-negative");
    }
    const Method method = parse_method(method_name);
    if (format != "csv" && format != "json") {
        throw UsageError("unknown table format '" + format + "'");
    }

    // Rows sorted by (l1 + l2, l1).
    std::vector<std::pair<Partition2, BigInt>> rows;
    if (method == Method::oracle) {
        const auto table = oracle_multiplicities_up_to(degree);
        for (long long w = 0; w <= degree; ++w) {
            for (long long l1 = (w + 1) / 2; l1 <= w; ++l1) {
                rows.emplace_back(Partition2(l1, w - l1),
                                  table.at({l1, w - l1}));
            }
        }
    } else if (method == Method::series) {
        const TruncSeries2 s =
            expand(t2_multiplicity_series().value(), degree);
        for (long long w = 0; w <= degree; ++w) {
            for (long long l1 = (w + 1) / 2; l1 <= w; ++l1) {
                const Partition2 lambda(l1, w - l1);
                rows.emplace_back(
                    lambda, to_integer(s.coeff(
                                static_cast<int>(lambda.part_difference()),
                                static_cast<int>(lambda.l2))));
            }
        }
    } else {
        for (long long w = 0; w <= degree; ++w) {
            for (long long l1 = (w + 1) / 2; l1 <= w; ++l1) {
                const Partition2 lambda(l1, w - l1);
                rows.emplace_back(lambda, multiplicity(lambda));
            }
        }
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            throw IoError("cannot open '" + out_path + "' for writing");
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;

    if (format == "csv") {
        os << "lambda1,lambda2,multiplicity\n";
        for (const auto& [lambda, m] : rows) {
            os << lambda.l1 << "," << lambda.l2 << "," << m.str() << "\n";
        }
    } else {
        json arr = json::array();
        for (const auto& [lambda, m] : rows) {
            arr.push_back({{"lambda1", lambda.l1},
                           {"lambda2", lambda.l2},
                           {"multiplicity", json_integer(m)}});
        }
        os << arr.dump(2) << "\n";
    }
    os.flush();
    if (!os) {
        throw IoError("write failed" +
                      (out_path.empty() ? "" : " for '" + out_path + "'"));
    }
    return kExitOk;
}

int cmd_verify(int degree) {
    const std::vector<CheckResult> results = run_verification(degree);
    bool all_pass = true;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "[PASS] " << r.name << "\n";
        } else {
            all_pass = false;
            std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << (all_pass ? "all checks passed\n" : "verification failed\n");
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_asym(long long l1, long long l2, const std::string& format) {
    const Partition2 lambda(l1, l2);
    const BigInt m = multiplicity(lambda);
    const BigRational main = asymptotic_main_term(lambda);
    const BigRational diff = BigRational(m) - main;
    const bool has_ratio = lambda.weight() > 0;
    BigRational ratio = 0;
    if (has_ratio) {
        BigRational w6 = 1;
        for (int i = 0; i < 6; ++i) {
            w6 *= lambda.weight();
        }
        ratio = diff / w6;
    }
    if (format == "json") {
        json rec = {{"lambda1", l1},
                    {"lambda2", l2},
                    {"multiplicity", json_integer(m)},
                    {"main_term", to_string(main)},
                    {"difference", to_string(diff)}};
        if (has_ratio) {
            rec["ratio_to_weight6"] = to_string(ratio);
            rec["ratio_to_weight6_approx"] = decimal_approx(ratio);
        }
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << "multiplicity   = " << m.str() << "\n";
        std::cout << "main term      = " << to_string(main) << " (approx "
                  << decimal_approx(main) << ")\n";
        std::cout << "difference     = " << to_string(diff) << "\n";
        if (has_ratio) {
            std::cout << "diff/(l1+l2)^6 = " << to_string(ratio)
                      << " (approx " << decimal_approx(ratio) << ")\n";
        }
    }
    return kExitOk;
}

int cmd_ordinary(const std::vector<long long>& mu,
                 const std::string& format) {
    std::array<long long, 9> m{};
    std::copy(mu.begin(), mu.end(), m.begin());
    const BigInt value = ordinary_multiplicity(m);
    if (format == "json") {
        const json rec = {{"mu", mu}, {"multiplicity", json_integer(value)}};
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return kExitOk;
}

int cmd_forms(const std::string& format) {
    const MSeriesForm closed = t2_multiplicity_series();
    const PartialFractionT elementary = t2_elementary_form();
    const MultiplicityConstants k = multiplicity_constants();
    if (format == "json") {
        const json out = {
            {"hilbert_series", to_json(hilbert_series_t2())},
            {"multiplicity_series", to_json(closed.value())},
            {"elementary_form", to_json(elementary)},
            {"coefficient_polynomials",
             {{"a_plus", to_json(k.a_plus)},
              {"a_minus", to_json(k.a_minus)},
              {"b_plus", to_json(k.b_plus)},
              {"b_minus", to_json(k.b_minus)},
              {"c_plus", to_json(k.c_plus)},
              {"c_minus", to_json(k.c_minus)}}}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "Hilbert series of the mixed trace algebra (x, y):\n  "
              << to_string(hilbert_series_t2()) << "\n\n";
    std::cout << "Multiplicity series, closed form (t, v):\n  "
              << to_string(closed.value()) << "\n\n";
    std::cout << "Multiplicity series, elementary fractions:\n";
    for (const auto& term : elementary.terms()) {
        std::cout << "  [" << to_string(term.factor) << "]^" << term.power
                  << " with numerator " << to_string(term.numerator) << "\n";
    }
    std::cout << "\nCoefficient polynomial families:\n";
    std::cout << "  a+(p,q) = " << to_string(k.a_plus) << "\n";
    std::cout << "  a-(p,q) = " << to_string(k.a_minus) << "\n";
    std::cout << "  b+(q)   = " << to_string(k.b_plus) << "\n";
    std::cout << "  b-(q)   = " << to_string(k.b_minus) << "\n";
    std::cout << "  c+(s)   = " << to_string(k.c_plus) << "\n";
    std::cout << "  c-(s)   = " << to_string(k.c_minus) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicities in the mixed trace cocharacter "
                 "sequence of two generic 3x3 matrices"};
    app.require_subcommand(1);

    long long l1 = 0;
    long long l2 = 0;
    std::string method = "closed";
    std::string format = "text";
    std::string table_format = "csv";
    std::string out_path;
    int degree = 40;
    std::vector<long long> mu;

    CLI::App* mult = app.add_subcommand(
        "mult", "Multiplicity of one partition (lambda1, lambda2)");
    mult->add_option("lambda1", l1, "first part")->required();
    mult->add_option("lambda2", l2, "second part")->required();
    mult->add_option("--method", method, "closed | oracle | series");
    mult->add_option("--format", format, "text | json");

    CLI::App* table = app.add_subcommand(
        "table", "All multiplicities with lambda1 + lambda2 <= degree");
    table->add_option("--degree", degree, "maximal weight")->required();
    table->add_option("--method", method, "closed | oracle | series");
    table->add_option("--format", table_format, "csv | json");
    table->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the full identity verification suite");
    verify->add_option("--degree", degree,
                       "degree of the exhaustive series checks");

    CLI::App* asym = app.add_subcommand(
        "asym", "Exact multiplicity against its asymptotic main term");
    asym->add_option("lambda1", l1, "first part")->required();
    asym->add_option("lambda2", l2, "second part")->required();
    asym->add_option("--format", format, "text | json");

    CLI::App* ordinary = app.add_subcommand(
        "ordinary",
        "Cocharacter multiplicity of 3x3 matrix identities at mu with "
        "mu3 = ... = mu9 >= 2");
    ordinary->add_option("mu", mu, "nine non-increasing parts")
        ->expected(9)
        ->required();
    ordinary->add_option("--format", format, "text | json");

    CLI::App* forms = app.add_subcommand(
        "forms", "Print the fixed closed forms and constants exactly");
    forms->add_option("--format", format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mult->parsed()) {
            return cmd_mult(l1, l2, method, format);
        }
        if (table->parsed()) {
            return cmd_table(degree, method, table_format, out_path);
        }
        if (verify->parsed()) {
            return cmd_verify(degree);
        }
        if (asym->parsed()) {
            return cmd_asym(l1, l2, format);
        }
        if (ordinary->parsed()) {
            return cmd_ordinary(mu, format);
        }
        if (forms->parsed()) {
            return cmd_forms(format);
        }
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitUsage;
    }
}
