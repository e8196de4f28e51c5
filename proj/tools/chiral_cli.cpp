// Command-line surface: count, check, enumerate, sample, plotdata, oeis.
// Exit codes: 0 = yes/success, 1 = no/empty, 2 = usage or parse error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chiral/chiral.hpp"

namespace {

using namespace chiral;

double log2_big(const BigInt& x) {
    const unsigned b = boost::multiprecision::msb(x);  // x >= 1
    if (b <= 52) return std::log2(x.convert_to<double>());
    const BigInt top = x >> (b - 52);
    return static_cast<double>(b - 52) + std::log2(top.convert_to<double>());
}

std::string json_field(const std::string& key, const BigInt& value) {
    return "\"" + key + "\":" + value.str();
}

struct CountFlags {
    bool by_valuation = false;
    bool self_conjugate = false;
    bool odd = false;
    bool hooks = false;
    bool perm = false;
    bool partition_function = false;
    bool plain = false;
};

int run_count(long long n, const CountFlags& flags) {
    if (flags.perm && n < 3) {
        std::cerr << "count: --perm requires n >= 3\n";
        return 2;
    }
    CountReport report;
    report.n = n;
    const bool specific = flags.self_conjugate || flags.odd || flags.hooks || flags.perm ||
                          flags.partition_function;
    if (!specific || flags.by_valuation) report.b = count_chiral(n);
    if (flags.by_valuation) {
        const auto d = binary_decomposition(n);
        const long long top = d.degenerate() ? 0 : d.k1();
        for (long long v = 0; v <= top; ++v)
            report.b_by_valuation[v] = count_chiral_by_valuation(n, v);
    }
    if (flags.odd) report.a = count_odd(n);
    if (flags.self_conjugate) report.self_conjugate = count_self_conjugate_chiral(n);
    if (flags.hooks) report.hooks = chiral_hook_count(n);
    if (flags.perm) report.perm = count_perm_chiral(n);
    if (flags.partition_function) report.partition_function = partition_count(n);

    if (flags.plain) {
        if (report.b) std::cout << *report.b << "\n";
        for (const auto& [v, c] : report.b_by_valuation) std::cout << v << " " << c << "\n";
        if (report.a) std::cout << *report.a << "\n";
        if (report.self_conjugate) std::cout << *report.self_conjugate << "\n";
        if (report.hooks) std::cout << *report.hooks << "\n";
        if (report.perm) std::cout << *report.perm << "\n";
        if (report.partition_function) std::cout << *report.partition_function << "\n";
        return 0;
    }

    std::string json = "{\"n\":" + std::to_string(n);
    if (report.b) json += "," + json_field("b", *report.b);
    if (!report.b_by_valuation.empty()) {
        json += ",\"b_by_valuation\":{";
        bool first = true;
        for (const auto& [v, c] : report.b_by_valuation) {
            if (!first) json += ",";
            first = false;
            json += "\"" + std::to_string(v) + "\":" + c.str();
        }
        json += "}";
    }
    if (report.a) json += "," + json_field("a", *report.a);
    if (report.self_conjugate) json += "," + json_field("self_conjugate", *report.self_conjugate);
    if (report.hooks) json += "," + json_field("hooks", *report.hooks);
    if (report.perm) json += "," + json_field("c", *report.perm);
    if (report.partition_function) json += "," + json_field("p", *report.partition_function);
    json += "}";
    std::cout << json << "\n";
    return 0;
}

int run_check(const std::string& literal, bool perm, bool explain) {
    Partition la;
    try {
        la = parse_partition(literal);
    } catch (const std::invalid_argument& e) {
        std::cerr << "check: " << e.what() << "\n";
        return 2;
    }
    bool chiral_result;
    if (perm) {
        chiral_result = perm_is_chiral(la);
        if (explain) {
            long long odd = 0;
            for (long long p : la) odd += p % 2;
            std::cout << "n: " << la.size() << "\n";
            std::cout << "odd_parts: " << odd << "\n";
        }
    } else {
        chiral_result = is_chiral(la);
        if (explain) {
            const CoreTower t = tower_of(la);
            std::cout << "n: " << la.size() << "\n";
            std::cout << "tower:\n" << render_tower(t);
            std::cout << "weights:";
            for (long long w : row_weights(t)) std::cout << " " << w;
            std::cout << "\n";
            if (!la.empty()) std::cout << "v2_dimension: " << deviation(la) << "\n";
            const auto cls = classify_chiral_tower(la);
            if (cls)
                std::cout << "tower_case: " << cls->case_id << " (valuation " << cls->valuation
                          << ")\n";
            else
                std::cout << "tower_case: none\n";
        }
    }
    std::cout << (chiral_result ? "chiral" : "not chiral") << "\n";
    return chiral_result ? 0 : 1;
}

int run_enumerate(long long n, std::optional<long long> valuation, bool self_conj,
                  long long limit, bool frob) {
    auto emit = [&](const Partition& la) {
        std::cout << (frob ? to_string(frobenius(la)) : to_string(la)) << "\n";
    };
    long long produced = 0;
    if (self_conj) {
        const BigInt total = count_self_conjugate_chiral(n);
        for (BigInt i = 0; i < total; ++i) {
            if (limit > 0 && produced >= limit) break;
            emit(self_conjugate_chiral_at(n, i));
            ++produced;
        }
        return 0;
    }
    ChiralEnumerator e(n, valuation);
    while (!e.done()) {
        if (limit > 0 && produced >= limit) break;
        emit(e.next());
        ++produced;
    }
    return 0;
}

int run_sample(long long n, std::optional<long long> valuation, std::uint64_t seed,
               long long count, bool frob) {
    std::mt19937_64 rng(seed);
    try {
        for (long long i = 0; i < count; ++i) {
            const Partition la = sample_chiral(n, valuation, rng);
            std::cout << (frob ? to_string(frobenius(la)) : to_string(la)) << "\n";
        }
    } catch (const std::domain_error& e) {
        std::cerr << "sample: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_plotdata(long long n_max, bool log2_cols) {
    std::cout << "n,a_n,b_n_plus_2";
    if (log2_cols) std::cout << ",log2_a_n,log2_b_n_plus_2";
    std::cout << "\n";
    for (long long n = 1; n <= n_max; ++n) {
        const BigInt a = count_odd(n);
        const BigInt b = count_chiral(n + 2);
        std::cout << n << "," << a << "," << b;
        if (log2_cols) {
            char buf[64];
            std::snprintf(buf, sizeof buf, ",%.6f,%.6f", log2_big(a), log2_big(b));
            std::cout << buf;
        }
        std::cout << "\n";
    }
    return 0;
}

int run_oeis(long long n_max) {
    const auto p = partition_count_table(n_max);
    std::cout << "n,b_n,p_minus_b\n";
    for (long long n = 1; n <= n_max; ++n) {
        const BigInt b = count_chiral(n);
        std::cout << n << "," << b << "," << (p[static_cast<std::size_t>(n)] - b) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chiral partitions of the symmetric group: count, check, enumerate, sample"};
    app.require_subcommand(1);
    int rc = 0;

    long long count_n = 0;
    CountFlags count_flags;
    auto* count = app.add_subcommand("count", "closed-form counts");
    count->add_option("n", count_n, "size of the partitions")->required()->check(CLI::PositiveNumber);
    count->add_flag("--by-valuation", count_flags.by_valuation,
                    "refine b(n) by the 2-adic valuation of the dimension");
    count->add_flag("--self-conjugate", count_flags.self_conjugate,
                    "count self-conjugate chiral partitions");
    count->add_flag("--odd", count_flags.odd, "count partitions of odd dimension");
    count->add_flag("--hooks", count_flags.hooks, "count chiral hooks");
    count->add_flag("--perm", count_flags.perm, "count chiral permutation representations");
    count->add_flag("--partition-function", count_flags.partition_function, "include p(n)");
    count->add_flag("--plain", count_flags.plain, "bare numbers instead of JSON");
    count->callback([&] { rc = run_count(count_n, count_flags); });

    std::string check_literal;
    bool check_perm = false, check_explain = false;
    auto* check = app.add_subcommand("check", "decide chirality of one partition");
    check->add_option("partition", check_literal, "partition literal, e.g. [5,4,2,2,1,1]")
        ->required();
    check->add_flag("--perm", check_perm, "check the permutation representation instead");
    check->add_flag("--explain", check_explain, "print the 2-core tower analysis");
    check->callback([&] { rc = run_check(check_literal, check_perm, check_explain); });

    long long enum_n = 0, enum_limit = 0;
    long long enum_valuation = -1;
    bool enum_self = false, enum_frob = false;
    auto* enumerate = app.add_subcommand("enumerate", "list chiral partitions, one per line");
    enumerate->add_option("n", enum_n, "size of the partitions")->required()->check(CLI::PositiveNumber);
    auto* enum_val_opt =
        enumerate->add_option("--valuation", enum_valuation, "restrict to v2(dimension) = v")
            ->check(CLI::NonNegativeNumber);
    enumerate->add_flag("--self-conjugate", enum_self, "self-conjugate chiral partitions only")
        ->excludes(enum_val_opt);
    enumerate->add_option("--limit", enum_limit, "stop after this many lines")
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--frobenius", enum_frob, "print Frobenius coordinates");
    enumerate->callback([&] {
        rc = run_enumerate(enum_n,
                           enum_val_opt->count() ? std::optional<long long>(enum_valuation)
                                                 : std::nullopt,
                           enum_self, enum_limit, enum_frob);
    });

    long long sample_n = 0, sample_count = 1;
    long long sample_valuation = -1;
    std::uint64_t sample_seed = 0;
    bool sample_frob = false;
    auto* sample = app.add_subcommand("sample", "draw uniform random chiral partitions");
    sample->add_option("n", sample_n, "size of the partitions")->required()->check(CLI::PositiveNumber);
    auto* sample_val_opt =
        sample->add_option("--valuation", sample_valuation, "restrict to v2(dimension) = v")
            ->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", sample_seed, "seed for the deterministic generator");
    sample->add_option("--count", sample_count, "number of draws")->check(CLI::PositiveNumber);
    sample->add_flag("--frobenius", sample_frob, "print Frobenius coordinates");
    sample->callback([&] {
        rc = run_sample(sample_n,
                        sample_val_opt->count() ? std::optional<long long>(sample_valuation)
                                                : std::nullopt,
                        sample_seed, sample_count, sample_frob);
    });

    long long plot_n_max = 0;
    bool plot_log2 = false;
    auto* plotdata = app.add_subcommand("plotdata", "CSV of a(n) against b(n+2)");
    plotdata->add_option("n_max", plot_n_max, "largest n")->required()->check(CLI::PositiveNumber);
    plotdata->add_flag("--log2", plot_log2, "append base-2 logarithm columns");
    plotdata->callback([&] { rc = run_plotdata(plot_n_max, plot_log2); });

    long long oeis_n_max = 0;
    auto* oeis = app.add_subcommand("oeis", "CSV of b(n) and p(n) - b(n)");
    oeis->add_option("n_max", oeis_n_max, "largest n")->required()->check(CLI::PositiveNumber);
    oeis->callback([&] { rc = run_oeis(oeis_n_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
