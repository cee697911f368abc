#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "kbox/commands.hpp"
#include "kbox/verify.hpp"

namespace {

int run(int argc, char** argv)
{
    CLI::App app{"Box paths: counts, tables, enumeration, bijections and verification"};
    app.require_subcommand(1);

    long k = 1;
    long n = 1;
    std::string stat = "none";
    std::optional<long> j;
    auto* count = app.add_subcommand("count", "Count k-box paths of size n, optionally by a statistic");
    count->add_option("--k", k, "box width k >= 0")->required();
    count->add_option("--n", n, "size n >= 1")->required();
    count->add_option("--stat", stat, "none, returns or long-ascents");
    count->add_option("--j", j, "statistic value; omit for the whole row");

    long rows = 8;
    auto* table = app.add_subcommand("table", "Print a triangle of counts by returns or long ascents");
    table->add_option("--stat", stat, "returns or long-ascents")->required();
    table->add_option("--k", k, "box width k >= 0")->required();
    table->add_option("--rows", rows, "number of rows");

    std::string family = "box";
    std::string format = "words";
    auto* enumerate = app.add_subcommand("enumerate", "List every object of a family in lexicographic order");
    enumerate->add_option("--family", family, "skew, dyck, box, tailed, augmented or trees");
    enumerate->add_option("--k", k, "box width, or tree arity");
    enumerate->add_option("--n", n, "size (semilength for skew and dyck)")->required();
    enumerate->add_option("--format", format, "words or compositions");

    std::string to;
    std::string path;
    std::string composition;
    std::string image;
    bool inverse = false;
    auto* biject = app.add_subcommand("biject", "Map a k-box path to an equinumerous family, or back");
    biject->add_option("--to", to, "trees, ktdyck, threshold, decomposition or composition")->required();
    biject->add_option("--k", k, "box width k >= 0")->required();
    auto* path_opt = biject->add_option("--path", path, "k-box path word over U, D, L");
    auto* comp_opt = biject->add_option("--composition", composition, "composition a1,a2,...");
    auto* image_opt = biject->add_option("--image", image, "image text, used with --inverse");
    biject->add_flag("--inverse", inverse, "map an image back to its path");
    path_opt->excludes(comp_opt)->excludes(image_opt);
    comp_opt->excludes(image_opt);

    std::string suite = "all";
    int max_k = 2;
    int max_n = 4;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Check formulas, bijections and series against brute force");
    verify->add_option("--suite", suite, "all, formulas, bijections or series");
    verify->add_option("--max-k", max_k, "largest k for exhaustive checks");
    verify->add_option("--max-n", max_n, "largest n for exhaustive checks");
    verify->add_flag("--inject-fault", inject_fault)->group("");

    std::string sequence;
    long terms = 0;
    auto* bfile = app.add_subcommand("bfile", "Write an OEIS-style b-file");
    bfile->add_option("--sequence", sequence, "box-counts, tailed-counts, returns, long-ascents or returns-diagonal")
        ->required();
    bfile->add_option("--k", k, "box width k >= 0")->required();
    bfile->add_option("--count", terms, "number of terms")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count) {
            std::cout << kbox::cmd_count(k, n, kbox::parse_stat(stat), j);
        } else if (*table) {
            std::cout << kbox::cmd_table(kbox::parse_stat(stat), k, rows);
        } else if (*enumerate) {
            std::cout << kbox::cmd_enumerate(kbox::parse_family(family), k, n, kbox::parse_format(format));
        } else if (*biject) {
            const kbox::Target target = kbox::parse_target(to);
            if (inverse) {
                if (!*image_opt) {
                    throw kbox::UsageError("--inverse needs --image");
                }
                std::cout << kbox::cmd_biject(target, k, image, false, true);
            } else if (*comp_opt) {
                std::cout << kbox::cmd_biject(target, k, composition, true, false);
            } else if (*path_opt) {
                std::cout << kbox::cmd_biject(target, k, path, false, false);
            } else {
                throw kbox::UsageError("biject needs --path or --composition");
            }
        } else if (*verify) {
            kbox::Suite s;
            try {
                s = kbox::parse_suite(suite);
            } catch (const std::invalid_argument& e) {
                throw kbox::UsageError(e.what());
            }
            if (max_k < 0 || max_n < 1) {
                throw kbox::UsageError("--max-k must be >= 0 and --max-n >= 1");
            }
            const auto report = kbox::run_verification(
                s, max_k, max_n, inject_fault ? kbox::faulty_formulas() : kbox::default_formulas());
            std::cout << report.to_text();
            return report.passed() ? 0 : 1;
        } else if (*bfile) {
            std::cout << kbox::cmd_bfile(kbox::parse_sequence(sequence), k, terms);
        }
    } catch (const kbox::UsageError& e) {
        std::cerr << "kbox: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // Malformed paths, compositions and out-of-domain parameters.
        std::cerr << "kbox: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kbox: internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
